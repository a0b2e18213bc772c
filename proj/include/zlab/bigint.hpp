#ifndef ZLAB_BIGINT_HPP
#define ZLAB_BIGINT_HPP

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace zlab {

// Arbitrary-precision signed integer, sign-magnitude, base 2^32.
class BigInt {
public:
    BigInt() : sign_(0) {}
    BigInt(long long v) {
        sign_ = (v > 0) - (v < 0);
        unsigned long long a = v < 0 ? -(unsigned long long)v : (unsigned long long)v;
        while (a) { d_.push_back((uint32_t)(a & 0xffffffffu)); a >>= 32; }
    }
    BigInt(int v) : BigInt((long long)v) {}

    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }
    int sign() const { return sign_; }

    static BigInt from_string(const std::string& s);
    std::string to_string() const;

    // Value as long long; throws if out of range.
    long long to_ll() const {
        unsigned long long a = 0;
        if (d_.size() > 2) throw std::overflow_error("BigInt::to_ll");
        for (size_t i = d_.size(); i-- > 0;) a = (a << 32) | d_[i];
        if (sign_ >= 0) {
            if (a > 0x7fffffffffffffffull) throw std::overflow_error("BigInt::to_ll");
            return (long long)a;
        }
        if (a > 0x8000000000000000ull) throw std::overflow_error("BigInt::to_ll");
        return -(long long)(a - 1) - 1;
    }
    bool fits_ll() const {
        if (d_.size() < 2) return true;
        if (d_.size() > 2) return false;
        unsigned long long a = ((unsigned long long)d_[1] << 32) | d_[0];
        return sign_ >= 0 ? a <= 0x7fffffffffffffffull : a <= 0x8000000000000000ull;
    }

    friend BigInt operator-(const BigInt& a) {
        BigInt r = a; r.sign_ = -r.sign_; return r;
    }
    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);
    // Truncated division; remainder has the sign of the dividend.
    static void divrem(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        BigInt q, r; divrem(a, b, q, r); return q;
    }
    friend BigInt operator%(const BigInt& a, const BigInt& b) {
        BigInt q, r; divrem(a, b, q, r); return r;
    }
    BigInt& operator+=(const BigInt& b) { *this = *this + b; return *this; }
    BigInt& operator-=(const BigInt& b) { *this = *this - b; return *this; }
    BigInt& operator*=(const BigInt& b) { *this = *this * b; return *this; }

    // -1 / 0 / +1 as a < b, a == b, a > b.
    static int cmp(const BigInt& a, const BigInt& b) {
        if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
        int c = cmp_mag(a, b);
        return a.sign_ >= 0 ? c : -c;
    }
    friend bool operator==(const BigInt& a, const BigInt& b) { return cmp(a, b) == 0; }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return cmp(a, b) != 0; }
    friend bool operator<(const BigInt& a, const BigInt& b) { return cmp(a, b) < 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return cmp(a, b) <= 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return cmp(a, b) > 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return cmp(a, b) >= 0; }

    static BigInt gcd(BigInt a, BigInt b);
    static BigInt abs(const BigInt& a) { BigInt r = a; if (r.sign_) r.sign_ = 1; return r; }

    double to_double() const {
        double r = 0;
        for (size_t i = d_.size(); i-- > 0;) r = r * 4294967296.0 + d_[i];
        return sign_ < 0 ? -r : r;
    }

private:
    int sign_;
    std::vector<uint32_t> d_;  // little-endian limbs, no trailing zeros

    void trim() {
        while (!d_.empty() && d_.back() == 0) d_.pop_back();
        if (d_.empty()) sign_ = 0;
    }
    static int cmp_mag(const BigInt& a, const BigInt& b);
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    // requires |a| >= |b|
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
};

// Exact rational with BigInt numerator/denominator, denominator > 0, reduced.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}
    Rational(int v) : num_(v), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }
    Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_ == BigInt(1); }
    int sign() const { return num_.sign(); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend Rational operator-(const Rational& a) { return Rational(-a.num_, a.den_); }
    Rational& operator+=(const Rational& b) { *this = *this + b; return *this; }
    Rational& operator-=(const Rational& b) { *this = *this - b; return *this; }
    Rational& operator*=(const Rational& b) { *this = *this * b; return *this; }
    Rational& operator/=(const Rational& b) { *this = *this / b; return *this; }

    static int cmp(const Rational& a, const Rational& b) {
        return BigInt::cmp(a.num_ * b.den_, b.num_ * a.den_);
    }
    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a, b) == 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a, b) != 0; }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a, b) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a, b) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a, b) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a, b) >= 0; }

    double to_double() const { return num_.to_double() / den_.to_double(); }
    std::string to_string() const {
        if (is_integer()) return num_.to_string();
        return num_.to_string() + "/" + den_.to_string();
    }
    static Rational from_string(const std::string& s);

private:
    BigInt num_, den_;
    void normalize() {
        if (den_.is_zero()) throw std::domain_error("Rational with zero denominator");
        if (den_.is_negative()) { num_ = -num_; den_ = -den_; }
        BigInt g = BigInt::gcd(num_, den_);
        if (!g.is_zero() && g != BigInt(1)) { num_ = num_ / g; den_ = den_ / g; }
        if (num_.is_zero()) den_ = BigInt(1);
    }
};

}  // namespace zlab

#endif
