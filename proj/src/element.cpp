#include "element.hpp"

#include <sstream>
#include <stdexcept>

namespace frobcx {

Element::Element(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {
    if (coords_.empty())
        throw std::invalid_argument("element: dimension must be at least 1");
    for (auto c : coords_)
        if (c < 0)
            throw std::invalid_argument("element: coordinates must be nonnegative");
}

Element Element::zero(std::size_t dim) {
    return Element(std::vector<std::int64_t>(dim, 0));
}

Element Element::scalar(std::int64_t value) {
    return Element(std::vector<std::int64_t>{value});
}

bool Element::is_zero() const {
    for (auto c : coords_)
        if (c != 0) return false;
    return true;
}

Element Element::plus(const Element& other) const {
    if (other.dim() != dim())
        throw std::invalid_argument("element: dimension mismatch");
    std::vector<std::int64_t> out(coords_);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += other.coords_[i];
    return Element(std::move(out));
}

std::optional<Element> Element::minus(const Element& other) const {
    if (other.dim() != dim())
        throw std::invalid_argument("element: dimension mismatch");
    std::vector<std::int64_t> out(coords_);
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] -= other.coords_[i];
        if (out[i] < 0) return std::nullopt;
    }
    return Element(std::move(out));
}

bool Element::within(const Element& cap) const {
    if (cap.dim() != dim())
        throw std::invalid_argument("element: dimension mismatch");
    for (std::size_t i = 0; i < coords_.size(); ++i)
        if (coords_[i] > cap.coords_[i]) return false;
    return true;
}

Element Element::scaled(std::int64_t p) const {
    if (p < 0) throw std::invalid_argument("element: negative scale factor");
    std::vector<std::int64_t> out(coords_);
    for (auto& c : out) c *= p;
    return Element(std::move(out));
}

std::optional<Element> Element::divided(std::int64_t p) const {
    if (p <= 0) throw std::invalid_argument("element: scale factor must be positive");
    std::vector<std::int64_t> out(coords_);
    for (auto& c : out) {
        if (c % p != 0) return std::nullopt;
        c /= p;
    }
    return Element(std::move(out));
}

std::string Element::str() const {
    if (dim() == 1) return std::to_string(coords_[0]);
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) os << ',';
        os << coords_[i];
    }
    os << ')';
    return os.str();
}

std::size_t ElementHash::operator()(const Element& e) const {
    std::size_t h = 1469598103934665603ull;
    for (auto c : e.coords()) {
        h ^= static_cast<std::size_t>(c);
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace frobcx
