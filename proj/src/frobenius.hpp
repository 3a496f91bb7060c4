#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "betti_vector.hpp"
#include "complexes.hpp"
#include "extension.hpp"
#include "field.hpp"
#include "monoid.hpp"

namespace frobcx {

/// Reduced Betti numbers of the Frobenius complex at a grade: the formal
/// (-2)-sphere at grade 0, otherwise the homology of the order complex of
/// the open interval below the grade. The -2 entry comes only from the
/// grade-0 branch, never from the homology engine.
BettiVector frobenius_betti(const AffineMonoid& m, const Element& grade, const Field& field);
BettiVector frobenius_betti(const ExtMonoid& e, const ExtElement& grade, const Field& field);

/// Tor-indexed Betti numbers: beta_i = reduced beta_{i-2}, i >= 0.
BettiVector tor_betti(const AffineMonoid& m, const Element& grade, const Field& field);
BettiVector tor_betti(const ExtMonoid& e, const ExtElement& grade, const Field& field);

/// Tor-indexed Betti vectors for every grade in a box, in deterministic
/// grade order. Grades whose vector is zero keep their (empty) row.
template <typename G>
struct BettiTableOf {
    std::vector<std::pair<G, BettiVector>> rows;

    const BettiVector* find(const G& grade) const {
        for (const auto& [g, v] : rows)
            if (g == grade) return &v;
        return nullptr;
    }
};

using BettiTable = BettiTableOf<Element>;
using ExtBettiTable = BettiTableOf<ExtElement>;

BettiTable betti_table(const AffineMonoid& m, const Element& cap, const Field& field);
ExtBettiTable betti_table(const ExtMonoid& e, const Element& lambda_cap, const Field& field);

/// The wedge-decomposition prediction for an extension grade (lambda, k):
/// zero (contractible) for k >= 2; otherwise the sum over l from 0 to
/// ell_rho(lambda) of the base vector at lambda - l*rho suspended 2l + k
/// times, where the grade-0 base vector is the formal (-2)-sphere.
BettiVector predicted_ext_betti(const ExtMonoid& e, const ExtElement& grade, const Field& field);

struct VerificationEntry {
    ExtElement grade;
    BettiVector direct;
    BettiVector predicted;
    std::int64_t euler;  // reduced Euler characteristic of the direct complex
    bool equal;
};

struct VerificationReport {
    Element cap;
    std::string field;
    std::size_t grades_checked = 0;
    std::size_t mismatches = 0;
    bool pass = false;
    std::vector<VerificationEntry> entries;
};

/// Sweeps every extension grade with base component under the cap and
/// compares direct homology against the wedge prediction, full vectors,
/// exact equality. A mismatch never aborts the sweep.
VerificationReport verify_extension(const ExtMonoid& e, const Element& lambda_cap,
                                    const Field& field);

struct SuspensionEntry {
    Element lambda;
    BettiVector upper;  // direct vector at (lambda, 1)
    BettiVector lower;  // direct vector at (lambda, 0)
    std::int64_t euler_upper;  // reduced Euler characteristics of the two
    std::int64_t euler_lower;  // complexes; 0 on the formal grade-0 branch
    bool equal;                // upper == lower shifted up by one
};

struct SuspensionReport {
    Element cap;
    std::string field;
    std::size_t grades_checked = 0;
    std::size_t mismatches = 0;
    bool pass = false;
    std::vector<SuspensionEntry> entries;
};

/// For an extension with r = 2: checks that the vector at (lambda, 1) is the
/// once-suspended vector at (lambda, 0), for every lambda under the cap.
SuspensionReport check_suspension_prop(const ExtMonoid& e, const Element& lambda_cap,
                                       const Field& field);

}  // namespace frobcx
