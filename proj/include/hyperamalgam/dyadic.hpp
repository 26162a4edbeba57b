#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <compare>
#include <cstdint>
#include <string>
#include <utility>

#include "hyperamalgam/errors.hpp"

namespace hyperamalgam {

using BigInt = boost::multiprecision::cpp_int;

/*
 * Exact dyadic rational num / 2^exp.
 *
 * Canonical form: exp >= 0, and num is odd whenever exp > 0; zero is
 * (0, 0). Addition, subtraction, multiplication, integer powers and
 * comparisons are closed and exact; there is no division.
 */
class Dyadic {
public:
    Dyadic() : num_(0), exp_(0) {}
    Dyadic(long long n) : num_(n), exp_(0) {}                  // NOLINT(google-explicit-constructor)
    Dyadic(BigInt n, unsigned e) : num_(std::move(n)), exp_(e) { normalize(); }

    // 2^e for any sign of e.
    static Dyadic pow2(long e) {
        if (e >= 0) return Dyadic(BigInt(1) << e, 0);
        return Dyadic(1, static_cast<unsigned>(-e));
    }

    const BigInt& num() const { return num_; }
    unsigned exp() const { return exp_; }

    bool is_zero() const { return num_ == 0; }
    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    Dyadic operator-() const {
        Dyadic r = *this;
        r.num_ = -r.num_;
        return r;
    }

    Dyadic abs() const { return num_ < 0 ? -*this : *this; }

    friend Dyadic operator+(const Dyadic& a, const Dyadic& b) {
        unsigned e = a.exp_ > b.exp_ ? a.exp_ : b.exp_;
        BigInt n = (a.num_ << (e - a.exp_)) + (b.num_ << (e - b.exp_));
        return Dyadic(std::move(n), e);
    }
    friend Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }
    friend Dyadic operator*(const Dyadic& a, const Dyadic& b) {
        return Dyadic(a.num_ * b.num_, a.exp_ + b.exp_);
    }

    Dyadic& operator+=(const Dyadic& o) { return *this = *this + o; }
    Dyadic& operator-=(const Dyadic& o) { return *this = *this - o; }
    Dyadic& operator*=(const Dyadic& o) { return *this = *this * o; }

    Dyadic pow(unsigned k) const {
        Dyadic r(1);
        Dyadic base = *this;
        while (k) {
            if (k & 1u) r *= base;
            base *= base;
            k >>= 1u;
        }
        return r;
    }

    friend bool operator==(const Dyadic& a, const Dyadic& b) {
        return a.exp_ == b.exp_ && a.num_ == b.num_;
    }
    friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
        unsigned e = a.exp_ > b.exp_ ? a.exp_ : b.exp_;
        BigInt l = a.num_ << (e - a.exp_);
        BigInt r = b.num_ << (e - b.exp_);
        if (l < r) return std::strong_ordering::less;
        if (l > r) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    double to_double() const {
        // convert_to rounds the big integer; ldexp applies the scale exactly.
        return std::ldexp(num_.convert_to<double>(), -static_cast<int>(exp_));
    }

    std::string str() const {
        std::string s = num_.str();
        if (exp_ > 0) s += "/2^" + std::to_string(exp_);
        return s;
    }

    // True iff num fits in a 64-bit signed integer (used by serialization).
    bool num_fits_int64() const {
        return num_ >= BigInt(INT64_MIN) && num_ <= BigInt(INT64_MAX);
    }
    std::int64_t num_as_int64() const { return num_.convert_to<std::int64_t>(); }

private:
    void normalize() {
        if (num_ == 0) {
            exp_ = 0;
            return;
        }
        while (exp_ > 0 && (num_ & 1) == 0) {
            num_ >>= 1;
            --exp_;
        }
    }

    BigInt num_;
    unsigned exp_;
};

inline Dyadic abs(const Dyadic& a) { return a.abs(); }
inline Dyadic min(const Dyadic& a, const Dyadic& b) { return a < b ? a : b; }
inline Dyadic max(const Dyadic& a, const Dyadic& b) { return a < b ? b : a; }

} // namespace hyperamalgam
