#pragma once

#include <cstdint>
#include <string>

namespace frobcx {

/// Coefficient field selector: a prime characteristic p (arithmetic mod p)
/// or the rationals (exact arbitrary-precision arithmetic).
class Field {
public:
    static Field gf(std::uint64_t p);
    static Field rationals();

    /// Accepts "gf2", "gf3", "gf5", "gf<p>" for any prime p, and "rational".
    static Field parse(const std::string& name);

    bool is_rational() const { return p_ == 0; }
    std::uint64_t characteristic() const { return p_; }
    std::string name() const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    explicit Field(std::uint64_t p) : p_(p) {}
    std::uint64_t p_;  // 0 encodes the rationals
};

bool is_prime(std::uint64_t n);

}  // namespace frobcx
