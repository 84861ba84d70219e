#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

namespace polyres {

// Sign-magnitude arbitrary-precision integer. Coefficients of natural-system
// elements have no a-priori bound, so the few operations we need (add, negate,
// compare) are done exactly.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v) {
        if (v < 0) {
            neg_ = true;
            // avoid overflow on LLONG_MIN
            unsigned long long m = static_cast<unsigned long long>(-(v + 1)) + 1ull;
            set_magnitude(m);
        } else {
            set_magnitude(static_cast<unsigned long long>(v));
        }
    }

    bool is_zero() const { return limbs_.empty(); }
    int sign() const { return is_zero() ? 0 : (neg_ ? -1 : 1); }

    friend BigInt operator-(const BigInt& a) {
        BigInt r = a;
        if (!r.is_zero())
            r.neg_ = !r.neg_;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.is_zero())
            return b;
        if (b.is_zero())
            return a;
        BigInt r;
        if (a.neg_ == b.neg_) {
            r.limbs_ = add_mag(a.limbs_, b.limbs_);
            r.neg_ = a.neg_;
        } else {
            int c = cmp_mag(a.limbs_, b.limbs_);
            if (c == 0)
                return BigInt();
            if (c > 0) {
                r.limbs_ = sub_mag(a.limbs_, b.limbs_);
                r.neg_ = a.neg_;
            } else {
                r.limbs_ = sub_mag(b.limbs_, a.limbs_);
                r.neg_ = b.neg_;
            }
        }
        return r;
    }

    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }
    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        BigInt r;
        if (a.is_zero() || b.is_zero())
            return r;
        r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
        for (size_t i = 0; i < a.limbs_.size(); ++i) {
            unsigned long long carry = 0;
            for (size_t j = 0; j < b.limbs_.size() || carry; ++j) {
                unsigned long long cur = r.limbs_[i + j] + carry;
                if (j < b.limbs_.size())
                    cur += static_cast<unsigned long long>(a.limbs_[i]) * b.limbs_[j];
                r.limbs_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffull);
                carry = cur >> 32;
            }
        }
        while (!r.limbs_.empty() && r.limbs_.back() == 0)
            r.limbs_.pop_back();
        r.neg_ = a.neg_ != b.neg_;
        if (r.limbs_.empty())
            r.neg_ = false;
        return r;
    }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.neg_ == b.neg_ && a.limbs_ == b.limbs_;
    }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b) {
        if (a.sign() != b.sign())
            return a.sign() < b.sign();
        int c = cmp_mag(a.limbs_, b.limbs_);
        return a.sign() >= 0 ? c < 0 : c > 0;
    }

    // Fits in int64? Used when emitting JSON numbers.
    bool fits_i64() const {
        if (limbs_.size() > 2)
            return false;
        unsigned long long m = magnitude_u64();
        return neg_ ? m <= 0x8000000000000000ull : m < 0x8000000000000000ull;
    }
    long long to_i64() const {
        unsigned long long m = magnitude_u64();
        return neg_ ? -static_cast<long long>(m - 1) - 1 : static_cast<long long>(m);
    }

    std::string to_string() const {
        if (is_zero())
            return "0";
        std::vector<std::uint32_t> tmp = limbs_;
        std::string digits;
        while (!tmp.empty()) {
            unsigned long long rem = 0;
            for (size_t i = tmp.size(); i-- > 0;) {
                unsigned long long cur = (rem << 32) | tmp[i];
                tmp[i] = static_cast<std::uint32_t>(cur / 10);
                rem = cur % 10;
            }
            digits.push_back(static_cast<char>('0' + rem));
            while (!tmp.empty() && tmp.back() == 0)
                tmp.pop_back();
        }
        std::string out;
        if (neg_)
            out.push_back('-');
        out.append(digits.rbegin(), digits.rend());
        return out;
    }

private:
    bool neg_ = false;
    std::vector<std::uint32_t> limbs_;  // little-endian base 2^32, no trailing zeros

    void set_magnitude(unsigned long long m) {
        limbs_.clear();
        while (m) {
            limbs_.push_back(static_cast<std::uint32_t>(m & 0xffffffffull));
            m >>= 32;
        }
        if (limbs_.empty())
            neg_ = false;
    }
    unsigned long long magnitude_u64() const {
        unsigned long long m = 0;
        if (limbs_.size() > 0)
            m = limbs_[0];
        if (limbs_.size() > 1)
            m |= static_cast<unsigned long long>(limbs_[1]) << 32;
        return m;
    }

    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        if (a.size() != b.size())
            return a.size() < b.size() ? -1 : 1;
        for (size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i])
                return a[i] < b[i] ? -1 : 1;
        return 0;
    }
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r;
        unsigned long long carry = 0;
        for (size_t i = 0; i < a.size() || i < b.size() || carry; ++i) {
            unsigned long long s = carry;
            if (i < a.size())
                s += a[i];
            if (i < b.size())
                s += b[i];
            r.push_back(static_cast<std::uint32_t>(s & 0xffffffffull));
            carry = s >> 32;
        }
        return r;
    }
    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r = a;
        long long borrow = 0;
        for (size_t i = 0; i < r.size(); ++i) {
            long long cur = static_cast<long long>(r[i]) - borrow - (i < b.size() ? b[i] : 0);
            borrow = 0;
            if (cur < 0) {
                cur += 1ll << 32;
                borrow = 1;
            }
            r[i] = static_cast<std::uint32_t>(cur);
        }
        while (!r.empty() && r.back() == 0)
            r.pop_back();
        return r;
    }
};

}  // namespace polyres
