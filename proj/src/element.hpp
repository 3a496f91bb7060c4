#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace frobcx {

/// A grade vector in N^d. Coordinates are nonnegative integers; the owning
/// monoid fixes the ambient dimension d >= 1.
class Element {
public:
    Element() = default;
    explicit Element(std::vector<std::int64_t> coords);

    static Element zero(std::size_t dim);
    static Element scalar(std::int64_t value);  // d = 1 shorthand

    std::size_t dim() const { return coords_.size(); }
    std::int64_t operator[](std::size_t i) const { return coords_[i]; }
    const std::vector<std::int64_t>& coords() const { return coords_; }

    bool is_zero() const;

    Element plus(const Element& other) const;

    /// Componentwise difference; absent if any coordinate would go negative.
    std::optional<Element> minus(const Element& other) const;

    /// Componentwise *this <= cap.
    bool within(const Element& cap) const;

    Element scaled(std::int64_t p) const;

    /// Componentwise quotient; absent unless every coordinate is divisible.
    std::optional<Element> divided(std::int64_t p) const;

    /// "6" for d = 1, "(1,2)" for d > 1.
    std::string str() const;

    friend bool operator==(const Element&, const Element&) = default;
    // lexicographic; fixes the deterministic enumeration order everywhere
    friend auto operator<=>(const Element&, const Element&) = default;

private:
    std::vector<std::int64_t> coords_;
};

struct ElementHash {
    std::size_t operator()(const Element& e) const;
};

}  // namespace frobcx
