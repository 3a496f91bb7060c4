#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "monoid.hpp"

namespace frobcx {

/// An element of the extension monoid, written through the bijection with
/// base x {0..r-1}: the pair (lambda, k) stands for lambda plus k r-th
/// parts of rho.
struct ExtElement {
    Element lambda;
    std::int64_t k = 0;

    std::string str() const;

    friend bool operator==(const ExtElement&, const ExtElement&) = default;
    friend auto operator<=>(const ExtElement&, const ExtElement&) = default;
};

using ExtInterval = IntervalOf<ExtElement>;

struct NumericalRealization;

/// The monoid obtained from a base submonoid of N^d by adjoining an r-th
/// part of a reducible element rho. Elements are (lambda, k) pairs with
/// lambda in the base and 0 <= k < r; carrying one part past r rolls a rho
/// into the base component:
///   (a, j) + (b, k) = (a + b + floor((j+k)/r) * rho, (j+k) mod r).
/// The order is concrete:
///   (a, j) <= (b, k)  <=>  a <= b        in the base, when j <= k,
///                          a + rho <= b  in the base, when j > k.
class ExtMonoid {
public:
    /// rho must be a reducible member of the base and r >= 2.
    ExtMonoid(AffineMonoid base, Element rho, std::int64_t r);

    const AffineMonoid& base() const { return base_; }
    const Element& rho() const { return rho_; }
    std::int64_t r() const { return r_; }

    /// Validated element constructor.
    ExtElement make(Element lambda, std::int64_t k) const;
    ExtElement zero() const { return {Element::zero(base_.dim()), 0}; }

    bool contains(const ExtElement& x) const;
    ExtElement add(const ExtElement& x, const ExtElement& y) const;
    bool leq(const ExtElement& x, const ExtElement& y) const;

    /// All (lambda, k) with lambda <= lambda_cap componentwise, sorted by
    /// (lambda, k).
    std::vector<ExtElement> elements_up_to(const Element& lambda_cap) const;

    /// The open interval between zero and x, with the induced order.
    /// x must be valid and nonzero.
    ExtInterval open_interval(const ExtElement& x) const;

    /// The numerical-semigroup form, when it exists: for a base inside <r>
    /// with rho = r*b and gcd(r, b) = 1, the extension is isomorphic to the
    /// base with b adjoined, via (lambda, k) -> lambda + k*b. Absent when
    /// any hypothesis fails.
    std::optional<NumericalRealization> numerical_realization() const;

private:
    AffineMonoid base_;
    Element rho_;
    std::int64_t r_;

    void require_member(const ExtElement& x, const char* what) const;
};

/// Free-function spelling of the constructor.
ExtMonoid adjoin(AffineMonoid base, Element rho, std::int64_t r);

struct NumericalRealization {
    AffineMonoid monoid;  // <a_1, ..., a_g, b>
    std::int64_t b;

    Element grade(const ExtElement& x) const {
        return Element::scalar(x.lambda[0] + x.k * b);
    }
};

}  // namespace frobcx
