#include "zlab/bigint.hpp"

#include <algorithm>

namespace zlab {

int BigInt::cmp_mag(const BigInt& a, const BigInt& b) {
    if (a.d_.size() != b.d_.size()) return a.d_.size() < b.d_.size() ? -1 : 1;
    for (size_t i = a.d_.size(); i-- > 0;)
        if (a.d_[i] != b.d_[i]) return a.d_[i] < b.d_[i] ? -1 : 1;
    return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    const std::vector<uint32_t>&x = a.size() >= b.size() ? a : b;
    const std::vector<uint32_t>&y = a.size() >= b.size() ? b : a;
    std::vector<uint32_t> r(x.size() + 1, 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        uint64_t s = carry + x[i] + (i < y.size() ? y[i] : 0);
        r[i] = (uint32_t)s;
        carry = s >> 32;
    }
    r[x.size()] = (uint32_t)carry;
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r(a.size(), 0);
    int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        int64_t s = (int64_t)a[i] - borrow - (i < b.size() ? b[i] : 0);
        if (s < 0) { s += ((int64_t)1 << 32); borrow = 1; } else borrow = 0;
        r[i] = (uint32_t)s;
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    BigInt r;
    if (a.sign_ == b.sign_) {
        r.sign_ = a.sign_;
        r.d_ = BigInt::add_mag(a.d_, b.d_);
    } else {
        int c = BigInt::cmp_mag(a, b);
        if (c == 0) return BigInt();
        if (c > 0) { r.sign_ = a.sign_; r.d_ = BigInt::sub_mag(a.d_, b.d_); }
        else { r.sign_ = b.sign_; r.d_ = BigInt::sub_mag(b.d_, a.d_); }
    }
    r.trim();
    return r;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
    BigInt r;
    r.sign_ = a.sign_ * b.sign_;
    r.d_.assign(a.d_.size() + b.d_.size(), 0);
    for (size_t i = 0; i < a.d_.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < b.d_.size(); ++j) {
            uint64_t cur = r.d_[i + j] + (uint64_t)a.d_[i] * b.d_[j] + carry;
            r.d_[i + j] = (uint32_t)cur;
            carry = cur >> 32;
        }
        size_t k = i + b.d_.size();
        while (carry) {
            uint64_t cur = r.d_[k] + carry;
            r.d_[k] = (uint32_t)cur;
            carry = cur >> 32;
            ++k;
        }
    }
    r.trim();
    return r;
}

void BigInt::divrem(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.sign_ == 0) throw std::domain_error("BigInt division by zero");
    if (cmp_mag(a, b) < 0) { q = BigInt(); r = a; return; }
    // magnitude long division, bit by bit over limbs (simple and exact)
    BigInt absb = abs(b);
    BigInt rem;
    std::vector<uint32_t> qd(a.d_.size(), 0);
    for (size_t i = a.d_.size(); i-- > 0;) {
        for (int bit = 31; bit >= 0; --bit) {
            // rem = rem*2 + bit_of_a
            uint32_t in = (a.d_[i] >> bit) & 1u;
            uint64_t carry = in;
            for (size_t k = 0; k < rem.d_.size(); ++k) {
                uint64_t cur = ((uint64_t)rem.d_[k] << 1) | carry;
                rem.d_[k] = (uint32_t)cur;
                carry = cur >> 32;
            }
            if (carry) rem.d_.push_back((uint32_t)carry);
            rem.sign_ = rem.d_.empty() ? 0 : 1;
            rem.trim();
            if (cmp_mag(rem, absb) >= 0) {
                rem.d_ = sub_mag(rem.d_, absb.d_);
                rem.trim();
                qd[i] |= (1u << bit);
            }
        }
    }
    q.d_ = std::move(qd);
    q.sign_ = 1;
    q.trim();
    q.sign_ = q.d_.empty() ? 0 : a.sign_ * b.sign_;
    r = rem;
    r.sign_ = r.d_.empty() ? 0 : a.sign_;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a = abs(a); b = abs(b);
    while (!b.is_zero()) {
        BigInt q, r;
        divrem(a, b, q, r);
        a = b;
        b = r;
    }
    return a;
}

BigInt BigInt::from_string(const std::string& s) {
    BigInt r;
    size_t i = 0;
    int sg = 1;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) { sg = s[i] == '-' ? -1 : 1; ++i; }
    if (i >= s.size()) throw std::invalid_argument("BigInt::from_string: empty");
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt::from_string: bad digit");
        r = r * BigInt(10) + BigInt(s[i] - '0');
    }
    if (sg < 0) r = -r;
    return r;
}

std::string BigInt::to_string() const {
    if (sign_ == 0) return "0";
    BigInt a = abs(*this);
    std::string s;
    BigInt ten(1000000000);  // 9 decimal digits per chunk
    while (!a.is_zero()) {
        BigInt q, r;
        divrem(a, ten, q, r);
        long long chunk = r.is_zero() ? 0 : r.to_ll();
        std::string part = std::to_string(chunk);
        if (!q.is_zero()) part = std::string(9 - part.size(), '0') + part;
        s = part + s;
        a = q;
    }
    return sign_ < 0 ? "-" + s : s;
}

Rational Rational::from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(BigInt::from_string(s));
    return Rational(BigInt::from_string(s.substr(0, slash)), BigInt::from_string(s.substr(slash + 1)));
}

}  // namespace zlab
