#include "symhodge/zseries.hpp"

#include <ostream>
#include <stdexcept>
#include <string>

namespace symhodge {

ZSeries::ZSeries(int order) : order_(order) {
    if (order < 0)
        throw std::invalid_argument("ZSeries: negative truncation order");
    coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

ZSeries::ZSeries(int order, TriPoly constant) : ZSeries(order) {
    coeffs_[0] = std::move(constant);
}

const TriPoly& ZSeries::coeff(int n) const {
    if (n < 0 || n > order_)
        throw std::out_of_range("ZSeries::coeff: index " + std::to_string(n) +
                                " outside [0, " + std::to_string(order_) + "]");
    return coeffs_[static_cast<std::size_t>(n)];
}

void ZSeries::set_coeff(int n, TriPoly c) {
    if (n < 0 || n > order_)
        throw std::out_of_range("ZSeries::set_coeff: index out of range");
    coeffs_[static_cast<std::size_t>(n)] = std::move(c);
}

ZSeries ZSeries::operator*(const ZSeries& o) const {
    if (order_ != o.order_)
        throw std::invalid_argument("ZSeries: order mismatch (" + std::to_string(order_) +
                                    " vs " + std::to_string(o.order_) + ")");
    ZSeries out(order_);
    for (int i = 0; i <= order_; ++i) {
        if (coeffs_[i].is_zero())
            continue;
        for (int j = 0; i + j <= order_; ++j) {
            if (o.coeffs_[j].is_zero())
                continue;
            out.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    return out;
}

void ZSeries::check_unit() const {
    if (coeffs_[0] != TriPoly::one())
        throw std::invalid_argument(
            "ZSeries::int_pow: constant coefficient must equal 1");
}

ZSeries ZSeries::inverse() const {
    // b_0 = 1, b_n = -sum_{i=1..n} a_i b_{n-i}, valid because a_0 = 1.
    ZSeries out = one(order_);
    for (int n = 1; n <= order_; ++n) {
        TriPoly acc;
        for (int i = 1; i <= n; ++i)
            acc += coeffs_[i] * out.coeffs_[n - i];
        out.coeffs_[n] = -acc;
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const ZSeries& s) {
    for (int n = 0; n <= s.order_; ++n) {
        if (n)
            os << " + ";
        os << '(' << s.coeffs_[static_cast<std::size_t>(n)].str() << ")z^" << n;
    }
    return os;
}

ZSeries ZSeries::int_pow(long long e) const {
    check_unit();
    ZSeries base = e < 0 ? inverse() : *this;
    unsigned long long exp =
        e < 0 ? -static_cast<unsigned long long>(e) : static_cast<unsigned long long>(e);
    ZSeries result = one(order_);
    while (exp > 0) {
        if (exp & 1ULL)
            result *= base;
        exp >>= 1ULL;
        if (exp > 0)
            base *= base;
    }
    return result;
}

}  // namespace symhodge
