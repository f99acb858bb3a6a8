#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace nsset {

struct BigIntDivMod;

// Arbitrary-precision signed integer with an inline fast path for values
// that fit comfortably in 64 bits (which is nearly everything the homology
// computations touch).
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v) : small_(v) {}  // NOLINT: implicit by design

    bool is_zero() const;
    int sign() const;  // -1, 0, +1
    bool fits_longlong() const;
    long long to_longlong() const;  // throws std::overflow_error when too big
    std::string to_string() const;

    BigInt operator-() const;
    BigInt& operator+=(const BigInt& rhs);
    BigInt& operator-=(const BigInt& rhs);
    BigInt& operator*=(const BigInt& rhs);

    friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
    friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
    friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }

    // Truncated division: quotient rounds toward zero, remainder carries
    // the sign of the dividend.
    friend BigInt operator/(const BigInt& a, const BigInt& b);
    friend BigInt operator%(const BigInt& a, const BigInt& b);

    friend bool operator==(const BigInt& a, const BigInt& b) { return compare(a, b) == 0; }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return compare(a, b) != 0; }
    friend bool operator<(const BigInt& a, const BigInt& b) { return compare(a, b) < 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return compare(a, b) <= 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return compare(a, b) > 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return compare(a, b) >= 0; }

    static int compare(const BigInt& a, const BigInt& b);
    static int compare_abs(const BigInt& a, const BigInt& b);

private:
    static constexpr long long kSmallLimit = 1LL << 62;

    bool is_small() const { return limbs_.empty(); }
    void promote();                    // move small_ into limbs
    void normalize();                  // strip leading zeros, demote if possible
    static std::vector<uint32_t> to_limbs(unsigned long long v);

    static int compare_limbs(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> add_limbs(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> sub_limbs(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> mul_limbs(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);

    friend struct BigIntDivMod;
    friend BigIntDivMod divmod(const BigInt& a, const BigInt& b);

    long long small_ = 0;
    bool negative_ = false;            // sign in big mode
    std::vector<uint32_t> limbs_;      // little-endian magnitude; empty = small mode
};

struct BigIntDivMod {
    BigInt quotient;
    BigInt remainder;
};
BigIntDivMod divmod(const BigInt& a, const BigInt& b);

BigInt abs(const BigInt& v);
BigInt gcd(BigInt a, BigInt b);

}  // namespace nsset
