#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "betti_vector.hpp"
#include "field.hpp"
#include "monoid.hpp"

namespace frobcx {

/// A finite abstract simplicial complex over integer-indexed vertices.
///
/// Simplices are grouped by dimension. Each simplex is a strictly increasing
/// vertex tuple, and every per-dimension list is sorted lexicographically,
/// which makes face lookups binary searches.
class SimplicialComplex {
public:
    SimplicialComplex() = default;  // the empty complex

    /// Direct construction; tuples must be strictly increasing. Lists are
    /// sorted and deduplicated; face closure is the caller's business (see
    /// faces_closed).
    static SimplicialComplex from_simplices(
        std::size_t vertex_count,
        std::vector<std::vector<std::vector<std::uint32_t>>> simplices_by_dim);

    std::size_t vertex_count() const { return vertex_count_; }
    bool empty() const { return flat_.empty(); }
    int top_dimension() const { return static_cast<int>(flat_.size()) - 1; }
    std::size_t simplex_count(int dim) const;
    std::size_t total_simplex_count() const;
    std::span<const std::uint32_t> simplex(int dim, std::size_t index) const;

    /// Index of the given tuple among the dim-simplices, or -1 if absent.
    std::int64_t find(int dim, std::span<const std::uint32_t> vertices) const;

    /// True iff every face of every stored simplex is stored.
    bool faces_closed() const;

private:
    friend SimplicialComplex order_complex(const std::vector<std::vector<bool>>&);
    std::size_t vertex_count_ = 0;
    std::vector<std::vector<std::uint32_t>> flat_;  // [dim] -> flattened tuples
};

/// The order complex of the poset on vertices {0..n-1} described by the
/// comparability matrix `leq`: simplices are the chains, enumerated by
/// depth-first extension. The diagonal of `leq` is ignored; the off-diagonal
/// part must be antisymmetric and transitive.
SimplicialComplex order_complex(const std::vector<std::vector<bool>>& leq);

template <typename T>
SimplicialComplex order_complex(const IntervalOf<T>& interval) {
    return order_complex(interval.leq);
}

/// Reduced Euler characteristic: the alternating sum of simplex counts,
/// minus 1 for the empty simplex; -1 for the empty complex.
std::int64_t euler_characteristic(const SimplicialComplex& complex);

struct HomologySummary {
    BettiVector betti;
    /// boundary_rank[i] = rank of the i-th boundary map for i = 0..top+1,
    /// where index 0 is the augmentation to the field.
    std::vector<std::size_t> boundary_rank;
};

/// Reduced Betti numbers over `field`, by exact rank computation on the
/// boundary matrices of the augmented chain complex. The empty complex
/// yields {-1: 1}.
BettiVector reduced_betti(const SimplicialComplex& complex, const Field& field);

/// As reduced_betti, but also reports the boundary ranks.
HomologySummary reduced_homology(const SimplicialComplex& complex, const Field& field);

}  // namespace frobcx
