#include "field.hpp"

#include <stdexcept>

namespace frobcx {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Field Field::gf(std::uint64_t p) {
    if (p >= (1ull << 31))
        throw std::invalid_argument("field: characteristic too large");
    if (!is_prime(p))
        throw std::invalid_argument("field: characteristic must be prime, got " +
                                    std::to_string(p));
    return Field(p);
}

Field Field::rationals() {
    return Field(0);
}

Field Field::parse(const std::string& name) {
    if (name == "rational" || name == "rationals" || name == "q")
        return rationals();
    if (name.size() > 2 && name.compare(0, 2, "gf") == 0) {
        std::uint64_t p = 0;
        for (std::size_t i = 2; i < name.size(); ++i) {
            char c = name[i];
            if (c < '0' || c > '9')
                throw std::invalid_argument("field: unrecognized name '" + name + "'");
            p = p * 10 + static_cast<std::uint64_t>(c - '0');
        }
        return gf(p);
    }
    throw std::invalid_argument("field: unrecognized name '" + name + "'");
}

std::string Field::name() const {
    return is_rational() ? "rational" : "gf" + std::to_string(p_);
}

}  // namespace frobcx
