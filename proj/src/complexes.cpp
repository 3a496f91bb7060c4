#include "complexes.hpp"

#include <algorithm>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace frobcx {

namespace {

using Rational = boost::multiprecision::cpp_rational;

int compare_tuples(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

}  // namespace

SimplicialComplex SimplicialComplex::from_simplices(
    std::size_t vertex_count,
    std::vector<std::vector<std::vector<std::uint32_t>>> simplices_by_dim) {
    SimplicialComplex k;
    k.vertex_count_ = vertex_count;
    while (!simplices_by_dim.empty() && simplices_by_dim.back().empty())
        simplices_by_dim.pop_back();
    for (std::size_t dim = 0; dim < simplices_by_dim.size(); ++dim) {
        auto& list = simplices_by_dim[dim];
        for (auto& s : list) {
            if (s.size() != dim + 1)
                throw std::invalid_argument("complex: simplex arity does not match dimension");
            for (std::size_t i = 0; i < s.size(); ++i) {
                if (s[i] >= vertex_count)
                    throw std::invalid_argument("complex: vertex index out of range");
                if (i > 0 && s[i - 1] >= s[i])
                    throw std::invalid_argument("complex: simplex vertices must increase strictly");
            }
        }
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        if (list.empty() && dim + 1 < simplices_by_dim.size())
            throw std::invalid_argument("complex: dimension gap in simplex lists");
        std::vector<std::uint32_t> flat;
        flat.reserve(list.size() * (dim + 1));
        for (const auto& s : list) flat.insert(flat.end(), s.begin(), s.end());
        k.flat_.push_back(std::move(flat));
    }
    return k;
}

std::size_t SimplicialComplex::simplex_count(int dim) const {
    if (dim < 0 || dim > top_dimension()) return 0;
    return flat_[static_cast<std::size_t>(dim)].size() / (static_cast<std::size_t>(dim) + 1);
}

std::size_t SimplicialComplex::total_simplex_count() const {
    std::size_t total = 0;
    for (int d = 0; d <= top_dimension(); ++d) total += simplex_count(d);
    return total;
}

std::span<const std::uint32_t> SimplicialComplex::simplex(int dim, std::size_t index) const {
    const auto arity = static_cast<std::size_t>(dim) + 1;
    return {flat_[static_cast<std::size_t>(dim)].data() + index * arity, arity};
}

std::int64_t SimplicialComplex::find(int dim, std::span<const std::uint32_t> vertices) const {
    if (dim < 0 || dim > top_dimension()) return -1;
    std::size_t lo = 0, hi = simplex_count(dim);
    while (lo < hi) {
        std::size_t mid = lo + (hi - lo) / 2;
        int c = compare_tuples(simplex(dim, mid), vertices);
        if (c == 0) return static_cast<std::int64_t>(mid);
        if (c < 0)
            lo = mid + 1;
        else
            hi = mid;
    }
    return -1;
}

bool SimplicialComplex::faces_closed() const {
    std::vector<std::uint32_t> face;
    for (int dim = 1; dim <= top_dimension(); ++dim) {
        for (std::size_t j = 0; j < simplex_count(dim); ++j) {
            auto s = simplex(dim, j);
            for (std::size_t drop = 0; drop < s.size(); ++drop) {
                face.clear();
                for (std::size_t i = 0; i < s.size(); ++i)
                    if (i != drop) face.push_back(s[i]);
                if (find(dim - 1, face) < 0) return false;
            }
        }
    }
    return true;
}

SimplicialComplex order_complex(const std::vector<std::vector<bool>>& leq) {
    const std::size_t n = leq.size();
    for (const auto& row : leq)
        if (row.size() != n)
            throw std::invalid_argument("order complex: relation matrix must be square");

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (leq[i][j] && leq[j][i])
                throw std::invalid_argument("order complex: relation is not antisymmetric");
            if (leq[i][j])
                for (std::size_t k = 0; k < n; ++k)
                    if (k != j && leq[j][k] && !(k == i || leq[i][k]))
                        throw std::invalid_argument("order complex: relation is not transitive");
        }

    SimplicialComplex k;
    k.vertex_count_ = n;
    if (n == 0) return k;

    std::vector<std::vector<std::uint32_t>> succ(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && leq[i][j]) succ[i].push_back(static_cast<std::uint32_t>(j));

    // Depth-first chain extension. Vertices are explored in increasing index
    // order, so each per-dimension list comes out lexicographically sorted.
    std::vector<std::uint32_t> chain;
    auto emit = [&k](const std::vector<std::uint32_t>& c) {
        const std::size_t dim = c.size() - 1;
        if (k.flat_.size() <= dim) k.flat_.resize(dim + 1);
        k.flat_[dim].insert(k.flat_[dim].end(), c.begin(), c.end());
    };
    auto extend = [&](auto&& self, std::uint32_t last) -> void {
        for (std::uint32_t next : succ[last]) {
            chain.push_back(next);
            emit(chain);
            self(self, next);
            chain.pop_back();
        }
    };
    for (std::uint32_t v = 0; v < n; ++v) {
        chain.assign(1, v);
        emit(chain);
        extend(extend, v);
    }
    return k;
}

std::int64_t euler_characteristic(const SimplicialComplex& complex) {
    std::int64_t chi = -1;
    for (int d = 0; d <= complex.top_dimension(); ++d) {
        auto count = static_cast<std::int64_t>(complex.simplex_count(d));
        chi += (d % 2 == 0) ? count : -count;
    }
    return chi;
}

namespace {

// --- sparse column reduction -----------------------------------------------
//
// rank of each boundary matrix via left-to-right column reduction, processing
// dimensions from the top down. A column whose index was a pivot row one
// dimension up necessarily reduces to zero (its column lies in the span of
// earlier ones, since boundaries of boundaries vanish), so it is skipped
// outright ("clearing"). Ranks are exact either way.

struct Gf2Column {
    std::vector<std::uint32_t> rows;  // ascending; pivot is rows.back()
};

// target and owner share the same pivot; replaces target by target + owner.
void eliminate(Gf2Column& target, const Gf2Column& owner) {
    std::vector<std::uint32_t> out;
    out.reserve(target.rows.size() + owner.rows.size());
    std::size_t a = 0, b = 0;
    while (a < target.rows.size() && b < owner.rows.size()) {
        if (target.rows[a] == owner.rows[b]) {
            ++a;
            ++b;
        } else if (target.rows[a] < owner.rows[b]) {
            out.push_back(target.rows[a++]);
        } else {
            out.push_back(owner.rows[b++]);
        }
    }
    out.insert(out.end(), target.rows.begin() + a, target.rows.end());
    out.insert(out.end(), owner.rows.begin() + b, owner.rows.end());
    target.rows = std::move(out);
}

struct GfpArithmetic {
    std::uint64_t p;
    using Value = std::uint64_t;
    Value normalize(std::int64_t signed_unit) const {
        return signed_unit >= 0 ? 1 : p - 1;
    }
    Value neg(Value v) const { return v == 0 ? 0 : p - v; }
    Value mul(Value a, Value b) const { return (a * b) % p; }
    Value sub_mul(Value a, Value f, Value b) const {  // a - f*b
        return (a + mul(f, neg(b))) % p;
    }
    Value inv(Value a) const {
        // extended euclid; p prime, a != 0
        std::int64_t t = 0, nt = 1;
        std::int64_t r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a);
        while (nr != 0) {
            std::int64_t q = r / nr;
            t -= q * nt;
            std::swap(t, nt);
            r -= q * nr;
            std::swap(r, nr);
        }
        if (t < 0) t += static_cast<std::int64_t>(p);
        return static_cast<Value>(t);
    }
    bool is_zero(Value v) const { return v == 0; }
};

struct RationalArithmetic {
    using Value = Rational;
    Value normalize(std::int64_t signed_unit) const { return Rational(signed_unit); }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    Value sub_mul(const Value& a, const Value& f, const Value& b) const { return a - f * b; }
    Value inv(const Value& a) const { return Rational(1) / a; }
    bool is_zero(const Value& v) const { return v == 0; }
};

template <typename Arith>
struct FieldColumn {
    using Value = typename Arith::Value;
    std::vector<std::pair<std::uint32_t, Value>> entries;  // ascending rows
};

template <typename Arith>
void eliminate(FieldColumn<Arith>& target, const FieldColumn<Arith>& owner,
               const Arith& arith) {
    // factor chosen so the shared pivot cancels: target -= factor * owner
    const auto& tp = target.entries.back().second;
    const auto& op = owner.entries.back().second;
    const auto factor = arith.mul(tp, arith.inv(op));
    const typename Arith::Value zero{0};

    std::vector<std::pair<std::uint32_t, typename Arith::Value>> out;
    out.reserve(target.entries.size() + owner.entries.size());
    std::size_t a = 0, b = 0;
    while (a < target.entries.size() && b < owner.entries.size()) {
        if (target.entries[a].first == owner.entries[b].first) {
            auto v = arith.sub_mul(target.entries[a].second, factor, owner.entries[b].second);
            if (!arith.is_zero(v)) out.emplace_back(target.entries[a].first, std::move(v));
            ++a;
            ++b;
        } else if (target.entries[a].first < owner.entries[b].first) {
            out.push_back(target.entries[a++]);
        } else {
            out.emplace_back(owner.entries[b].first,
                             arith.sub_mul(zero, factor, owner.entries[b].second));
            ++b;
        }
    }
    while (a < target.entries.size()) out.push_back(target.entries[a++]);
    while (b < owner.entries.size()) {
        out.emplace_back(owner.entries[b].first,
                         arith.sub_mul(zero, factor, owner.entries[b].second));
        ++b;
    }
    target.entries = std::move(out);
}

// faces of the simplices of `dim`, as (row, sign) pairs sorted by row
void boundary_rows(const SimplicialComplex& k, int dim, std::size_t index,
                   std::vector<std::pair<std::uint32_t, std::int64_t>>& out) {
    out.clear();
    auto s = k.simplex(dim, index);
    std::vector<std::uint32_t> face(s.size() - 1);
    std::int64_t sign = 1;
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
        std::size_t w = 0;
        for (std::size_t i = 0; i < s.size(); ++i)
            if (i != drop) face[w++] = s[i];
        auto row = k.find(dim - 1, face);
        if (row < 0)
            throw std::invalid_argument("homology: complex is not closed under faces");
        out.emplace_back(static_cast<std::uint32_t>(row), sign);
        sign = -sign;
    }
    std::sort(out.begin(), out.end());
}

std::size_t reduce_gf2(const SimplicialComplex& k, int dim,
                       const std::vector<bool>& cleared, std::vector<bool>& pivot_rows) {
    const std::size_t cols = k.simplex_count(dim);
    const std::size_t rows = k.simplex_count(dim - 1);
    pivot_rows.assign(rows, false);
    std::vector<std::int64_t> owner_of_row(rows, -1);
    std::vector<Gf2Column> owned;
    std::vector<std::pair<std::uint32_t, std::int64_t>> faces;
    std::size_t rank = 0;

    for (std::size_t j = 0; j < cols; ++j) {
        if (!cleared.empty() && cleared[j]) continue;
        boundary_rows(k, dim, j, faces);
        Gf2Column col;
        col.rows.reserve(faces.size());
        for (auto& [row, sign] : faces) col.rows.push_back(row);
        while (!col.rows.empty()) {
            std::uint32_t pivot = col.rows.back();
            std::int64_t own = owner_of_row[pivot];
            if (own < 0) {
                owner_of_row[pivot] = static_cast<std::int64_t>(owned.size());
                owned.push_back(std::move(col));
                pivot_rows[pivot] = true;
                ++rank;
                break;
            }
            eliminate(col, owned[static_cast<std::size_t>(own)]);
        }
    }
    return rank;
}

template <typename Arith>
std::size_t reduce_field(const SimplicialComplex& k, int dim,
                         const std::vector<bool>& cleared, std::vector<bool>& pivot_rows,
                         const Arith& arith) {
    const std::size_t cols = k.simplex_count(dim);
    const std::size_t rows = k.simplex_count(dim - 1);
    pivot_rows.assign(rows, false);
    std::vector<std::int64_t> owner_of_row(rows, -1);
    std::vector<FieldColumn<Arith>> owned;
    std::vector<std::pair<std::uint32_t, std::int64_t>> faces;
    std::size_t rank = 0;

    for (std::size_t j = 0; j < cols; ++j) {
        if (!cleared.empty() && cleared[j]) continue;
        boundary_rows(k, dim, j, faces);
        FieldColumn<Arith> col;
        col.entries.reserve(faces.size());
        for (auto& [row, sign] : faces)
            col.entries.emplace_back(row, arith.normalize(sign));
        while (!col.entries.empty()) {
            std::uint32_t pivot = col.entries.back().first;
            std::int64_t own = owner_of_row[pivot];
            if (own < 0) {
                owner_of_row[pivot] = static_cast<std::int64_t>(owned.size());
                owned.push_back(std::move(col));
                pivot_rows[pivot] = true;
                ++rank;
                break;
            }
            eliminate(col, owned[static_cast<std::size_t>(own)], arith);
        }
    }
    return rank;
}

}  // namespace

HomologySummary reduced_homology(const SimplicialComplex& complex, const Field& field) {
    HomologySummary out;
    const int top = complex.top_dimension();
    if (top < 0) {
        out.betti.add(-1, 1);
        return out;
    }

    out.boundary_rank.assign(static_cast<std::size_t>(top) + 2, 0);
    // augmentation: every vertex maps to 1 in the field
    out.boundary_rank[0] = complex.simplex_count(0) > 0 ? 1 : 0;

    std::vector<bool> cleared;  // columns of the current dimension known to die
    std::vector<bool> pivot_rows;
    for (int dim = top; dim >= 1; --dim) {
        std::size_t rank;
        if (field.characteristic() == 2) {
            rank = reduce_gf2(complex, dim, cleared, pivot_rows);
        } else if (!field.is_rational()) {
            GfpArithmetic arith{field.characteristic()};
            rank = reduce_field(complex, dim, cleared, pivot_rows, arith);
        } else {
            RationalArithmetic arith;
            rank = reduce_field(complex, dim, cleared, pivot_rows, arith);
        }
        out.boundary_rank[static_cast<std::size_t>(dim)] = rank;
        cleared = std::move(pivot_rows);
        pivot_rows.clear();
    }

    const std::int64_t isolated = 1 - static_cast<std::int64_t>(out.boundary_rank[0]);
    if (isolated > 0) out.betti.add(-1, isolated);
    for (int dim = 0; dim <= top; ++dim) {
        auto n = static_cast<std::int64_t>(complex.simplex_count(dim));
        auto r = static_cast<std::int64_t>(out.boundary_rank[static_cast<std::size_t>(dim)]);
        auto r_up = static_cast<std::int64_t>(out.boundary_rank[static_cast<std::size_t>(dim) + 1]);
        out.betti.add(dim, n - r - r_up);
    }
    return out;
}

BettiVector reduced_betti(const SimplicialComplex& complex, const Field& field) {
    return reduced_homology(complex, field).betti;
}

}  // namespace frobcx
