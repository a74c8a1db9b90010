#ifndef SYMHODGE_BIGINT_HPP
#define SYMHODGE_BIGINT_HPP

#include <stdexcept>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace symhodge {

/// Exact arbitrary-precision integer used for every coefficient and count.
using Int = boost::multiprecision::cpp_int;

inline Int factorial(int n) {
    if (n < 0)
        throw std::invalid_argument("factorial of negative argument");
    Int f = 1;
    for (int i = 2; i <= n; ++i)
        f *= i;
    return f;
}

/// Reduced fraction with positive denominator. Holds the 1/n! and 1/|H|
/// prefactors that are applied once at the end of an aggregate sum.
class RatScalar {
public:
    RatScalar() = default;
    RatScalar(Int numerator) : num_(std::move(numerator)) {}
    RatScalar(Int numerator, Int denominator)
        : num_(std::move(numerator)), den_(std::move(denominator)) {
        if (den_ == 0)
            throw std::invalid_argument("RatScalar: zero denominator");
        reduce();
    }

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }
    bool is_integer() const { return den_ == 1; }

    RatScalar operator*(const RatScalar& o) const {
        return RatScalar(num_ * o.num_, den_ * o.den_);
    }
    RatScalar operator+(const RatScalar& o) const {
        return RatScalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    friend bool operator==(const RatScalar&, const RatScalar&) = default;

private:
    void reduce() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        Int g = boost::multiprecision::gcd(num_, den_);
        num_ /= g;
        den_ /= g;
    }

    Int num_ = 0;
    Int den_ = 1;
};

}  // namespace symhodge

#endif
