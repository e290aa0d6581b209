#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ainf {

// Arbitrary-precision signed integer (sign + base-2^32 magnitude).
// Covers exactly what exact chain arithmetic needs: add, subtract,
// multiply, compare, parity, decimal printing. No division beyond the
// small-divisor helper used for printing.
class Integer {
public:
    Integer() = default;
    Integer(long long v);

    bool is_zero() const { return sign_ == 0; }
    bool is_even() const;
    int sign() const { return sign_; }

    // Mod-2 reduction view: residue in {0, 1}.
    int mod2() const { return is_even() ? 0 : 1; }

    Integer operator-() const;
    Integer& operator+=(const Integer& rhs);
    Integer& operator-=(const Integer& rhs);
    Integer& operator*=(const Integer& rhs);

    friend Integer operator+(Integer a, const Integer& b) { return a += b; }
    friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
    friend Integer operator*(Integer a, const Integer& b) { return a *= b; }

    friend bool operator==(const Integer& a, const Integer& b) = default;
    std::strong_ordering operator<=>(const Integer& rhs) const;

    std::optional<long long> as_int64() const;
    std::string str() const;

private:
    int sign_ = 0;                    // -1, 0, +1
    std::vector<std::uint32_t> mag_;  // little-endian limbs, no leading zeros

    void trim();
    static int cmp_mag(const std::vector<std::uint32_t>& a,
                       const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
};

}  // namespace ainf
