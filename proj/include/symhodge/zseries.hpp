#ifndef SYMHODGE_ZSERIES_HPP
#define SYMHODGE_ZSERIES_HPP

#include <iosfwd>
#include <vector>

#include "symhodge/tripoly.hpp"

namespace symhodge {

/// Power series in z truncated at a fixed order, with TriPoly coefficients.
///
/// The truncation order is fixed at construction; combining series of
/// different orders is an error rather than an implicit truncation.
class ZSeries {
public:
    /// The zero series modulo z^(order+1).
    explicit ZSeries(int order);
    ZSeries(int order, TriPoly constant);

    static ZSeries one(int order) { return ZSeries(order, TriPoly::one()); }

    int order() const { return order_; }
    const std::vector<TriPoly>& coeffs() const { return coeffs_; }

    /// The z^n coefficient; throws std::out_of_range unless 0 <= n <= order.
    const TriPoly& coeff(int n) const;
    void set_coeff(int n, TriPoly c);

    /// Cauchy product truncated at the shared order.
    /// Throws std::invalid_argument on an order mismatch.
    ZSeries operator*(const ZSeries& o) const;
    ZSeries& operator*=(const ZSeries& o) { return *this = *this * o; }

    /// Integer power in the truncated ring; negative exponents go through
    /// the truncated inverse. The constant coefficient must equal 1.
    ZSeries int_pow(long long e) const;

    friend bool operator==(const ZSeries&, const ZSeries&) = default;

    friend std::ostream& operator<<(std::ostream& os, const ZSeries& s);

private:
    ZSeries inverse() const;
    void check_unit() const;

    int order_;
    std::vector<TriPoly> coeffs_;
};

}  // namespace symhodge

#endif
