#include "nsset/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace nsset {

bool BigInt::is_zero() const { return is_small() ? small_ == 0 : false; }

int BigInt::sign() const {
    if (is_small()) return small_ == 0 ? 0 : (small_ < 0 ? -1 : 1);
    return negative_ ? -1 : 1;
}

bool BigInt::fits_longlong() const { return is_small(); }

long long BigInt::to_longlong() const {
    if (!is_small()) throw std::overflow_error("BigInt: value does not fit in long long");
    return small_;
}

std::vector<uint32_t> BigInt::to_limbs(unsigned long long v) {
    std::vector<uint32_t> out;
    while (v) {
        out.push_back(static_cast<uint32_t>(v & 0xffffffffULL));
        v >>= 32;
    }
    return out;
}

void BigInt::promote() {
    if (!is_small()) return;
    unsigned long long mag = small_ < 0 ? ~static_cast<unsigned long long>(small_) + 1ULL
                                        : static_cast<unsigned long long>(small_);
    negative_ = small_ < 0;
    limbs_ = to_limbs(mag);
    if (limbs_.empty()) limbs_.push_back(0);  // keep big mode until normalize
}

void BigInt::normalize() {
    if (is_small()) return;
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) {
        small_ = 0;
        negative_ = false;
        return;
    }
    if (limbs_.size() <= 2) {
        unsigned long long mag = limbs_[0];
        if (limbs_.size() == 2) mag |= static_cast<unsigned long long>(limbs_[1]) << 32;
        if (mag < static_cast<unsigned long long>(kSmallLimit)) {
            small_ = negative_ ? -static_cast<long long>(mag) : static_cast<long long>(mag);
            limbs_.clear();
            negative_ = false;
        }
    }
}

int BigInt::compare_limbs(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

std::vector<uint32_t> BigInt::add_limbs(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> out;
    out.reserve(std::max(a.size(), b.size()) + 1);
    unsigned long long carry = 0;
    for (size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
        unsigned long long sum = carry;
        if (i < a.size()) sum += a[i];
        if (i < b.size()) sum += b[i];
        out.push_back(static_cast<uint32_t>(sum & 0xffffffffULL));
        carry = sum >> 32;
    }
    if (carry) out.push_back(static_cast<uint32_t>(carry));
    return out;
}

std::vector<uint32_t> BigInt::sub_limbs(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    // requires |a| >= |b|
    std::vector<uint32_t> out;
    out.reserve(a.size());
    long long borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        long long diff = static_cast<long long>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
        if (diff < 0) {
            diff += 1LL << 32;
            borrow = 1;
        } else {
            borrow = 0;
        }
        out.push_back(static_cast<uint32_t>(diff));
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::vector<uint32_t> BigInt::mul_limbs(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint32_t> out(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        unsigned long long carry = 0;
        for (size_t j = 0; j < b.size(); ++j) {
            unsigned long long cur = out[i + j] + carry +
                                     static_cast<unsigned long long>(a[i]) * static_cast<unsigned long long>(b[j]);
            out[i + j] = static_cast<uint32_t>(cur & 0xffffffffULL);
            carry = cur >> 32;
        }
        size_t k = i + b.size();
        while (carry) {
            unsigned long long cur = out[k] + carry;
            out[k] = static_cast<uint32_t>(cur & 0xffffffffULL);
            carry = cur >> 32;
            ++k;
        }
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

int BigInt::compare(const BigInt& a, const BigInt& b) {
    if (a.is_small() && b.is_small()) return a.small_ == b.small_ ? 0 : (a.small_ < b.small_ ? -1 : 1);
    int sa = a.sign();
    int sb = b.sign();
    if (sa != sb) return sa < sb ? -1 : 1;
    int mag = compare_abs(a, b);
    return sa >= 0 ? mag : -mag;
}

int BigInt::compare_abs(const BigInt& a, const BigInt& b) {
    if (a.is_small() && b.is_small()) {
        unsigned long long ma = a.small_ < 0 ? -static_cast<unsigned long long>(a.small_)
                                             : static_cast<unsigned long long>(a.small_);
        unsigned long long mb = b.small_ < 0 ? -static_cast<unsigned long long>(b.small_)
                                             : static_cast<unsigned long long>(b.small_);
        return ma == mb ? 0 : (ma < mb ? -1 : 1);
    }
    BigInt ca = a;
    BigInt cb = b;
    ca.promote();
    cb.promote();
    ca.limbs_.erase(std::find_if(ca.limbs_.rbegin(), ca.limbs_.rend(), [](uint32_t v) { return v != 0; }).base(),
                    ca.limbs_.end());
    cb.limbs_.erase(std::find_if(cb.limbs_.rbegin(), cb.limbs_.rend(), [](uint32_t v) { return v != 0; }).base(),
                    cb.limbs_.end());
    return compare_limbs(ca.limbs_, cb.limbs_);
}

BigInt BigInt::operator-() const {
    BigInt out = *this;
    if (out.is_small()) {
        out.small_ = -out.small_;
    } else {
        out.negative_ = !out.negative_;
    }
    return out;
}

BigInt& BigInt::operator+=(const BigInt& rhs) {
    if (is_small() && rhs.is_small()) {
        long long result = 0;
        if (!__builtin_add_overflow(small_, rhs.small_, &result) && result < kSmallLimit &&
            result > -kSmallLimit) {
            small_ = result;
            return *this;
        }
    }
    BigInt a = *this;
    BigInt b = rhs;
    a.promote();
    b.promote();
    if (a.negative_ == b.negative_) {
        limbs_ = add_limbs(a.limbs_, b.limbs_);
        negative_ = a.negative_;
    } else {
        int cmp = compare_limbs(a.limbs_, b.limbs_);
        if (cmp == 0) {
            limbs_.clear();
            small_ = 0;
            negative_ = false;
            return *this;
        }
        if (cmp > 0) {
            limbs_ = sub_limbs(a.limbs_, b.limbs_);
            negative_ = a.negative_;
        } else {
            limbs_ = sub_limbs(b.limbs_, a.limbs_);
            negative_ = b.negative_;
        }
    }
    if (limbs_.empty()) limbs_.push_back(0);
    normalize();
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& rhs) { return *this += -rhs; }

BigInt& BigInt::operator*=(const BigInt& rhs) {
    if (is_small() && rhs.is_small()) {
        long long result = 0;
        if (!__builtin_mul_overflow(small_, rhs.small_, &result) && result < kSmallLimit &&
            result > -kSmallLimit) {
            small_ = result;
            return *this;
        }
    }
    BigInt a = *this;
    BigInt b = rhs;
    a.promote();
    b.promote();
    negative_ = a.negative_ != b.negative_;
    limbs_ = mul_limbs(a.limbs_, b.limbs_);
    if (limbs_.empty()) limbs_.push_back(0);
    normalize();
    return *this;
}

BigIntDivMod divmod(const BigInt& a, const BigInt& b) {
    if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
    if (a.is_small() && b.is_small()) return {BigInt(a.small_ / b.small_), BigInt(a.small_ % b.small_)};

    BigInt ca = a;
    BigInt cb = b;
    ca.promote();
    cb.promote();
    ca.normalize();
    cb.normalize();
    ca.promote();
    cb.promote();
    // binary long division on magnitudes
    std::vector<uint32_t> rem;
    size_t bits = ca.limbs_.size() * 32;
    std::vector<uint32_t> quo(ca.limbs_.size(), 0);
    for (size_t bit = bits; bit-- > 0;) {
        // rem = rem * 2 + bit of |a|
        uint32_t carry = (ca.limbs_[bit / 32] >> (bit % 32)) & 1u;
        for (size_t i = 0; i < rem.size(); ++i) {
            uint32_t next = rem[i] >> 31;
            rem[i] = (rem[i] << 1) | carry;
            carry = next;
        }
        if (carry) rem.push_back(carry);
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
        if (BigInt::compare_limbs(rem, cb.limbs_) >= 0) {
            rem = BigInt::sub_limbs(rem, cb.limbs_);
            quo[bit / 32] |= 1u << (bit % 32);
        }
    }
    BigInt q, r;
    q.small_ = 0;
    q.limbs_ = std::move(quo);
    if (q.limbs_.empty()) q.limbs_.push_back(0);
    q.negative_ = (a.sign() < 0) != (b.sign() < 0);
    q.normalize();
    r.small_ = 0;
    r.limbs_ = std::move(rem);
    if (r.limbs_.empty()) r.limbs_.push_back(0);
    r.negative_ = a.sign() < 0;
    r.normalize();
    if (r.is_zero()) r = BigInt(0);
    if (q.is_zero()) q = BigInt(0);
    return {std::move(q), std::move(r)};
}

std::string BigInt::to_string() const {
    if (is_small()) return std::to_string(small_);
    BigInt cur = *this;
    bool neg = cur.sign() < 0;
    if (neg) cur = -cur;
    std::string digits;
    BigInt base(1000000000LL);
    while (!cur.is_zero()) {
        auto [q, r] = divmod(cur, base);
        long long chunk = r.is_small() ? r.small_ : 0;
        std::string part = std::to_string(chunk);
        if (!q.is_zero()) part = std::string(9 - part.size(), '0') + part;
        digits = part + digits;
        cur = q;
    }
    if (digits.empty()) digits = "0";
    return (neg ? "-" : "") + digits;
}

BigInt operator/(const BigInt& a, const BigInt& b) { return divmod(a, b).quotient; }
BigInt operator%(const BigInt& a, const BigInt& b) { return divmod(a, b).remainder; }

BigInt abs(const BigInt& v) { return v.sign() < 0 ? -v : v; }

BigInt gcd(BigInt a, BigInt b) {
    a = abs(a);
    b = abs(b);
    while (!b.is_zero()) {
        BigInt r = a % b;
        a = b;
        b = abs(r);
    }
    return a;
}

}  // namespace nsset
