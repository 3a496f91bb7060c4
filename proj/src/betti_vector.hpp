#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace frobcx {

/// A finitely supported vector of reduced Betti numbers, indexed from -2.
///
/// Index -1 carries the empty-complex convention (the empty complex is the
/// (-1)-sphere) and index -2 the formal (-2)-sphere attached to grade 0.
/// Homology computations never emit index -2 themselves; only the grade-0
/// branch of the Frobenius-complex code sets it.
class BettiVector {
public:
    BettiVector() = default;

    /// The vector with a single 1 at index i.
    static BettiVector delta(int i);

    std::int64_t at(int i) const;
    void add(int i, std::int64_t count);

    /// Suspension-style index shift: entry i moves to i + s.
    BettiVector shifted(int s) const;

    void accumulate(const BettiVector& other, int shift = 0);

    bool zero() const { return entries_.empty(); }
    const std::map<int, std::int64_t>& entries() const { return entries_; }

    /// "{-1:1}" / "{0:2, 1:1}" / "0"
    std::string str() const;

    friend bool operator==(const BettiVector&, const BettiVector&) = default;

private:
    std::map<int, std::int64_t> entries_;  // zero entries are never stored
};

}  // namespace frobcx
