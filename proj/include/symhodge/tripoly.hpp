#ifndef SYMHODGE_TRIPOLY_HPP
#define SYMHODGE_TRIPOLY_HPP

#include <compare>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "symhodge/bigint.hpp"

namespace symhodge {

/// Exponent triple of t^k u^p v^q. Ordering is lexicographic on (k, p, q),
/// which fixes the canonical term order used everywhere (printing, JSON,
/// iteration).
struct Monomial {
    int k = 0;  ///< exponent of t (cohomological degree)
    int p = 0;  ///< exponent of u
    int q = 0;  ///< exponent of v

    friend auto operator<=>(const Monomial&, const Monomial&) = default;

    Monomial operator*(const Monomial& o) const { return {k + o.k, p + o.p, q + o.q}; }
    Monomial pow(int e) const { return {k * e, p * e, q * e}; }
};

/// Sparse polynomial in (t, u, v) with exact integer coefficients.
///
/// Zero coefficients are never stored, so equality is exact term-by-term
/// comparison. All operations are pure; values are immutable once built and
/// safe to share across threads.
class TriPoly {
public:
    TriPoly() = default;  ///< the zero polynomial
    TriPoly(int c) : TriPoly(Int(c)) {}
    TriPoly(Int c);
    TriPoly(Int c, const Monomial& m);

    static TriPoly one() { return TriPoly(1); }
    static TriPoly monomial(const Monomial& m) { return TriPoly(1, m); }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Int>& terms() const { return terms_; }
    Int coeff(const Monomial& m) const;

    /// Largest t-exponent, or -1 for the zero polynomial.
    int degree_t() const;

    /// Evaluation at t = u = v = 1 (the sum of all coefficients).
    Int total_at_one() const;

    TriPoly operator-() const;
    TriPoly& operator+=(const TriPoly& o);
    TriPoly& operator-=(const TriPoly& o);
    friend TriPoly operator+(TriPoly a, const TriPoly& b) { return a += b; }
    friend TriPoly operator-(TriPoly a, const TriPoly& b) { return a -= b; }
    TriPoly operator*(const TriPoly& o) const;
    TriPoly& operator*=(const TriPoly& o) { return *this = *this * o; }
    TriPoly operator*(const Int& c) const;

    friend bool operator==(const TriPoly&, const TriPoly&) = default;

    /// Binary powering; pow(0) is 1.
    TriPoly pow(int e) const;

    /// The ring homomorphism t -> -(-t)^j, u -> u^j, v -> v^j for j >= 1.
    /// Each term t^k u^p v^q picks up the sign (-1)^((j+1)k) and exponents
    /// (jk, jp, jq).
    TriPoly substitute_power(int j) const;

    /// Partial evaluation: each slot either keeps its variable (nullopt) or
    /// substitutes the given integer. Surviving variables keep their
    /// exponents.
    TriPoly specialize(std::optional<long long> t_val,
                       std::optional<long long> u_val,
                       std::optional<long long> v_val) const;

    /// Canonical text form: terms in (k, p, q)-lex order, each rendered as
    /// c*t^k*u^p*v^q with unit coefficients and unit exponents omitted.
    std::string str() const;

private:
    void add_term(const Monomial& m, const Int& c);

    std::map<Monomial, Int> terms_;
};

std::ostream& operator<<(std::ostream& os, const TriPoly& p);

/// p / d with every coefficient exactly divisible by d.
/// Throws std::domain_error naming the offending term otherwise.
TriPoly divide_exact(const TriPoly& p, const Int& d);

/// p * r with an exact integer result; throws std::domain_error otherwise.
TriPoly scale_exact(const TriPoly& p, const RatScalar& r);

}  // namespace symhodge

#endif
