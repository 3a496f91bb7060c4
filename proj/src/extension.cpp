#include "extension.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace frobcx {

std::string ExtElement::str() const {
    return "(" + lambda.str() + "," + std::to_string(k) + ")";
}

ExtMonoid::ExtMonoid(AffineMonoid base, Element rho, std::int64_t r)
    : base_(std::move(base)), rho_(std::move(rho)), r_(r) {
    if (r_ < 2)
        throw std::invalid_argument("extension: r must be at least 2");
    if (rho_.dim() != base_.dim() || !base_.contains(rho_))
        throw std::invalid_argument("extension: rho must belong to the base monoid");
    if (!base_.is_reducible(rho_))
        throw std::invalid_argument("extension: rho must be reducible in the base monoid");
}

ExtMonoid adjoin(AffineMonoid base, Element rho, std::int64_t r) {
    return ExtMonoid(std::move(base), std::move(rho), r);
}

void ExtMonoid::require_member(const ExtElement& x, const char* what) const {
    if (!contains(x))
        throw std::invalid_argument(std::string("extension: ") + what + ": " + x.str() +
                                    " is not a member");
}

ExtElement ExtMonoid::make(Element lambda, std::int64_t k) const {
    ExtElement x{std::move(lambda), k};
    require_member(x, "make");
    return x;
}

bool ExtMonoid::contains(const ExtElement& x) const {
    return x.k >= 0 && x.k < r_ && x.lambda.dim() == base_.dim() &&
           base_.contains(x.lambda);
}

ExtElement ExtMonoid::add(const ExtElement& x, const ExtElement& y) const {
    require_member(x, "add");
    require_member(y, "add");
    const std::int64_t k = x.k + y.k;
    Element lambda = x.lambda.plus(y.lambda);
    if (k >= r_) lambda = lambda.plus(rho_);
    return {std::move(lambda), k % r_};
}

bool ExtMonoid::leq(const ExtElement& x, const ExtElement& y) const {
    if (x.k <= y.k) return base_.leq(x.lambda, y.lambda);
    return base_.leq(x.lambda.plus(rho_), y.lambda);
}

std::vector<ExtElement> ExtMonoid::elements_up_to(const Element& lambda_cap) const {
    std::vector<ExtElement> out;
    for (const auto& lambda : base_.elements_up_to(lambda_cap))
        for (std::int64_t k = 0; k < r_; ++k) out.push_back({lambda, k});
    return out;
}

ExtInterval ExtMonoid::open_interval(const ExtElement& x) const {
    require_member(x, "open_interval");
    if (x.lambda.is_zero() && x.k == 0)
        throw std::invalid_argument("extension: open_interval: grade must be nonzero");

    // every y strictly below x has its base component inside [0, x.lambda]
    ExtInterval iv;
    const ExtElement origin = zero();
    for (const auto& y : elements_up_to(x.lambda)) {
        if (y == origin || y == x) continue;
        if (leq(y, x)) iv.elements.push_back(y);
    }
    iv.leq = comparability_matrix(iv.elements, [this](const ExtElement& a, const ExtElement& b) {
        return leq(a, b);
    });
    return iv;
}

std::optional<NumericalRealization> ExtMonoid::numerical_realization() const {
    if (base_.dim() != 1) return std::nullopt;
    // base must lie in <r>, so every generator must be a multiple of r
    for (const auto& g : base_.generators())
        if (g[0] % r_ != 0) return std::nullopt;
    if (rho_[0] % r_ != 0) return std::nullopt;
    const std::int64_t b = rho_[0] / r_;
    if (std::gcd(r_, b) != 1) return std::nullopt;

    std::vector<std::int64_t> gens;
    gens.reserve(base_.generators().size() + 1);
    for (const auto& g : base_.generators()) gens.push_back(g[0]);
    gens.push_back(b);
    return NumericalRealization{AffineMonoid::numerical(gens), b};
}

}  // namespace frobcx
