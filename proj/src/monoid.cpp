#include "monoid.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace frobcx {

namespace {

// Guards the box DP against absurd enumeration requests.
constexpr std::int64_t kMaxBoxCells = 64 * 1024 * 1024;

// Boxes beyond this many cells are not committed to the memo wholesale.
constexpr std::int64_t kMemoCommitCells = 1 * 1024 * 1024;

std::int64_t box_volume(const Element& cap) {
    std::int64_t vol = 1;
    for (std::size_t i = 0; i < cap.dim(); ++i) {
        std::int64_t side = cap[i] + 1;
        if (vol > kMaxBoxCells / side)
            throw std::invalid_argument("monoid: enumeration box too large");
        vol *= side;
    }
    return vol;
}

}  // namespace

AffineMonoid::AffineMonoid(std::size_t dim, std::vector<Element> generators)
    : dim_(dim), generators_(std::move(generators)), memo_(std::make_shared<Memo>()) {
    if (dim_ == 0)
        throw std::invalid_argument("monoid: dimension must be at least 1");
    if (generators_.empty())
        throw std::invalid_argument("monoid: at least one generator is required");
    for (const auto& g : generators_) {
        if (g.dim() != dim_)
            throw std::invalid_argument("monoid: generator dimension mismatch");
        if (g.is_zero())
            throw std::invalid_argument("monoid: zero generators are not allowed");
    }
}

AffineMonoid AffineMonoid::numerical(const std::vector<std::int64_t>& generators) {
    std::vector<Element> gens;
    gens.reserve(generators.size());
    for (auto v : generators) gens.push_back(Element::scalar(v));
    return AffineMonoid(1, std::move(gens));
}

AffineMonoid AffineMonoid::naturals() {
    return numerical({1});
}

void AffineMonoid::require_member(const Element& e, const char* what) const {
    if (e.dim() != dim_)
        throw std::invalid_argument(std::string("monoid: ") + what +
                                    ": dimension mismatch");
    if (!contains(e))
        throw std::invalid_argument(std::string("monoid: ") + what + ": " + e.str() +
                                    " is not a member");
}

std::vector<Element> AffineMonoid::box_members(const Element& cap) const {
    const std::int64_t volume = box_volume(cap);

    // dp over the box in lexicographic order; each generator points backwards
    std::vector<char> dp(static_cast<std::size_t>(volume), 0);
    std::vector<std::int64_t> stride(dim_, 1);
    for (std::size_t i = dim_; i-- > 1;) stride[i - 1] = stride[i] * (cap[i] + 1);

    // generator offsets in flat indexing, valid only when the componentwise
    // bounds are honored, which the loop below checks per coordinate
    std::vector<std::int64_t> coords(dim_, 0);
    dp[0] = 1;
    std::vector<Element> members;
    members.push_back(Element::zero(dim_));

    for (std::int64_t idx = 1; idx < volume; ++idx) {
        // advance mixed-radix counter
        for (std::size_t i = dim_; i-- > 0;) {
            if (++coords[i] <= cap[i]) break;
            coords[i] = 0;
        }
        bool reachable = false;
        for (const auto& g : generators_) {
            std::int64_t prev = idx;
            bool ok = true;
            for (std::size_t i = 0; i < dim_; ++i) {
                if (coords[i] < g[i]) {
                    ok = false;
                    break;
                }
                prev -= g[i] * stride[i];
            }
            if (ok && dp[static_cast<std::size_t>(prev)]) {
                reachable = true;
                break;
            }
        }
        if (reachable) {
            dp[static_cast<std::size_t>(idx)] = 1;
            members.push_back(Element(coords));
        }
    }

    if (volume <= kMemoCommitCells) {
        std::lock_guard<std::mutex> lock(memo_->mutex);
        std::vector<std::int64_t> c(dim_, 0);
        for (std::int64_t idx = 0; idx < volume; ++idx) {
            if (idx > 0) {
                for (std::size_t i = dim_; i-- > 0;) {
                    if (++c[i] <= cap[i]) break;
                    c[i] = 0;
                }
            }
            memo_->verdicts.emplace(Element(c), dp[static_cast<std::size_t>(idx)] != 0);
        }
    }
    return members;
}

bool AffineMonoid::contains(const Element& mu) const {
    if (mu.dim() != dim_)
        throw std::invalid_argument("monoid: contains: dimension mismatch");
    {
        std::lock_guard<std::mutex> lock(memo_->mutex);
        auto it = memo_->verdicts.find(mu);
        if (it != memo_->verdicts.end()) return it->second;
    }
    // mu is the lexicographically largest cell of [0, mu], so it is a member
    // exactly when it closes the member list.
    auto members = box_members(mu);
    const bool verdict = !members.empty() && members.back() == mu;
    std::lock_guard<std::mutex> lock(memo_->mutex);
    memo_->verdicts.emplace(mu, verdict);
    return verdict;
}

std::optional<Element> AffineMonoid::subtract(const Element& mu,
                                              const Element& lambda) const {
    require_member(mu, "subtract");
    require_member(lambda, "subtract");
    auto diff = mu.minus(lambda);
    if (!diff || !contains(*diff)) return std::nullopt;
    return diff;
}

bool AffineMonoid::leq(const Element& lambda, const Element& mu) const {
    auto diff = mu.minus(lambda);
    return diff && contains(*diff);
}

std::vector<Element> AffineMonoid::elements_up_to(const Element& cap) const {
    if (cap.dim() != dim_)
        throw std::invalid_argument("monoid: elements_up_to: dimension mismatch");
    return box_members(cap);
}

Interval AffineMonoid::open_interval(const Element& lambda) const {
    require_member(lambda, "open_interval");
    if (lambda.is_zero())
        throw std::invalid_argument("monoid: open_interval: grade must be nonzero");

    Interval iv;
    for (const auto& mu : box_members(lambda)) {
        if (mu.is_zero() || mu == lambda) continue;
        if (contains(*lambda.minus(mu)))  // minus exists: mu lies in [0, lambda]
            iv.elements.push_back(mu);
    }
    iv.leq = comparability_matrix(iv.elements, [this](const Element& a, const Element& b) {
        return leq(a, b);
    });
    return iv;
}

std::int64_t AffineMonoid::ell_rho(const Element& rho, const Element& lambda) const {
    require_member(rho, "ell_rho");
    require_member(lambda, "ell_rho");
    if (rho.is_zero())
        throw std::invalid_argument("monoid: ell_rho: rho must be nonzero");

    // l*rho <= lambda is downward closed in l, so the first failure stops.
    std::int64_t ell = 0;
    Element acc = rho;
    while (leq(acc, lambda)) {
        ++ell;
        acc = acc.plus(rho);
    }
    return ell;
}

bool AffineMonoid::is_reducible(const Element& rho) const {
    require_member(rho, "is_reducible");
    if (rho.is_zero()) return false;
    for (const auto& sigma : box_members(rho)) {
        if (sigma.is_zero() || sigma == rho) continue;
        auto tau = rho.minus(sigma);
        if (tau && !tau->is_zero() && contains(*tau)) return true;
    }
    return false;
}

AffineMonoid AffineMonoid::scaled(std::int64_t p) const {
    if (p < 1)
        throw std::invalid_argument("monoid: scale factor must be positive");
    std::vector<Element> gens;
    gens.reserve(generators_.size());
    for (const auto& g : generators_) gens.push_back(g.scaled(p));
    return AffineMonoid(dim_, std::move(gens));
}

}  // namespace frobcx
