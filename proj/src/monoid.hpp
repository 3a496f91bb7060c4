#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "element.hpp"

namespace frobcx {

/// A finite poset fragment: elements in deterministic (lexicographic) order
/// together with the restriction of the divisibility order, stored as an
/// explicit comparability matrix. leq[i][j] holds iff elements[i] precedes
/// or equals elements[j].
template <typename T>
struct IntervalOf {
    std::vector<T> elements;
    std::vector<std::vector<bool>> leq;

    std::size_t size() const { return elements.size(); }
    bool empty() const { return elements.empty(); }
};

using Interval = IntervalOf<Element>;

/// A finitely generated submonoid of N^d with the divisibility order
/// lambda <= mu  <=>  mu - lambda lies in the monoid.
///
/// Submonoids of N^d are automatically cancellative and have no nonzero
/// invertible element, so differences are unique and the order is well
/// defined; neither property needs a runtime check.
///
/// Membership is decided by dynamic programming over the componentwise box
/// [0, mu] (reachability from 0 by adding generators); verdicts are memoized
/// per instance behind a mutex, so distinct queries may run concurrently.
class AffineMonoid {
public:
    AffineMonoid(std::size_t dim, std::vector<Element> generators);

    /// d = 1 convenience: the numerical semigroup generated by `generators`.
    static AffineMonoid numerical(const std::vector<std::int64_t>& generators);

    /// The monoid of all nonnegative integers, <1>.
    static AffineMonoid naturals();

    std::size_t dim() const { return dim_; }
    const std::vector<Element>& generators() const { return generators_; }

    /// True iff mu is a nonnegative integer combination of the generators.
    bool contains(const Element& mu) const;

    /// mu - lambda in the monoid order: present iff the componentwise
    /// difference is nonnegative and itself a member. Success defines
    /// lambda <= mu. Both arguments must be members.
    std::optional<Element> subtract(const Element& mu, const Element& lambda) const;

    /// lambda <= mu in the divisibility order. Does not validate that its
    /// arguments are members; callers enumerating members use this directly.
    bool leq(const Element& lambda, const Element& mu) const;

    /// All members mu with mu <= cap componentwise, sorted lexicographically.
    /// Always contains 0.
    std::vector<Element> elements_up_to(const Element& cap) const;

    /// The open interval (0, lambda): members strictly between 0 and lambda
    /// in the divisibility order, with the induced comparability matrix.
    /// lambda must be a nonzero member.
    Interval open_interval(const Element& lambda) const;

    /// max { l in N : l * rho <= lambda } for a nonzero member rho.
    std::int64_t ell_rho(const Element& rho, const Element& lambda) const;

    /// True iff rho = sigma + tau for some nonzero members sigma, tau.
    /// The search box [0, rho] suffices, since any such sigma divides rho.
    bool is_reducible(const Element& rho) const;

    /// The monoid p*Lambda; lambda -> p*lambda is an order isomorphism.
    AffineMonoid scaled(std::int64_t p) const;

private:
    std::size_t dim_;
    std::vector<Element> generators_;

    struct Memo {
        std::mutex mutex;
        std::unordered_map<Element, bool, ElementHash> verdicts;
    };
    // shared across copies; the answers are pure so sharing is sound
    std::shared_ptr<Memo> memo_;

    void require_member(const Element& e, const char* what) const;
    // Runs the box DP over [0, cap] and commits every verdict in the box.
    // Returns the members of the box in lexicographic order.
    std::vector<Element> box_members(const Element& cap) const;
};

/// Builds the comparability matrix of `elements` under `leq`.
template <typename T, typename Leq>
std::vector<std::vector<bool>> comparability_matrix(const std::vector<T>& elements,
                                                    Leq&& leq) {
    const std::size_t n = elements.size();
    std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m[i][j] = leq(elements[i], elements[j]);
    return m;
}

}  // namespace frobcx
