#include "symhodge/tripoly.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace symhodge {

TriPoly::TriPoly(Int c) {
    if (c != 0)
        terms_.emplace(Monomial{}, std::move(c));
}

TriPoly::TriPoly(Int c, const Monomial& m) {
    if (m.k < 0 || m.p < 0 || m.q < 0)
        throw std::invalid_argument("TriPoly: negative exponent");
    if (c != 0)
        terms_.emplace(m, std::move(c));
}

Int TriPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Int(0) : it->second;
}

int TriPoly::degree_t() const {
    int deg = -1;
    for (const auto& [m, c] : terms_)
        if (m.k > deg)
            deg = m.k;
    return deg;
}

Int TriPoly::total_at_one() const {
    Int total = 0;
    for (const auto& [m, c] : terms_)
        total += c;
    return total;
}

void TriPoly::add_term(const Monomial& m, const Int& c) {
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

TriPoly TriPoly::operator-() const {
    TriPoly out;
    for (const auto& [m, c] : terms_)
        out.terms_.emplace(m, -c);
    return out;
}

TriPoly& TriPoly::operator+=(const TriPoly& o) {
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

TriPoly& TriPoly::operator-=(const TriPoly& o) {
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

TriPoly TriPoly::operator*(const TriPoly& o) const {
    TriPoly out;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_)
            out.add_term(ma * mb, ca * cb);
    return out;
}

TriPoly TriPoly::operator*(const Int& c) const {
    TriPoly out;
    if (c == 0)
        return out;
    for (const auto& [m, coef] : terms_)
        out.terms_.emplace(m, coef * c);
    return out;
}

TriPoly TriPoly::pow(int e) const {
    if (e < 0)
        throw std::invalid_argument("TriPoly::pow: negative exponent");
    TriPoly result = one();
    TriPoly base = *this;
    while (e > 0) {
        if (e & 1)
            result *= base;
        e >>= 1;
        if (e > 0)
            base *= base;
    }
    return result;
}

TriPoly TriPoly::substitute_power(int j) const {
    if (j < 1)
        throw std::invalid_argument("TriPoly::substitute_power: j must be >= 1");
    TriPoly out;
    for (const auto& [m, c] : terms_) {
        // (-(-t)^j)^k = (-1)^((j+1)k) t^(jk)
        const bool negate = (j % 2 == 0) && (m.k % 2 == 1);
        out.add_term({m.k * j, m.p * j, m.q * j}, negate ? -c : c);
    }
    return out;
}

namespace {

Int int_power(long long base, int exp) {
    Int result = 1;
    Int b = base;
    for (int i = 0; i < exp; ++i)
        result *= b;
    return result;
}

}  // namespace

TriPoly TriPoly::specialize(std::optional<long long> t_val,
                            std::optional<long long> u_val,
                            std::optional<long long> v_val) const {
    TriPoly out;
    for (const auto& [m, c] : terms_) {
        Int coef = c;
        Monomial kept = m;
        if (t_val) {
            coef *= int_power(*t_val, m.k);
            kept.k = 0;
        }
        if (u_val) {
            coef *= int_power(*u_val, m.p);
            kept.p = 0;
        }
        if (v_val) {
            coef *= int_power(*v_val, m.q);
            kept.q = 0;
        }
        out.add_term(kept, coef);
    }
    return out;
}

std::string TriPoly::str() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool negative = c < 0;
        if (first) {
            if (negative)
                os << '-';
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        Int mag = negative ? Int(-c) : c;
        const bool constant = (m.k == 0 && m.p == 0 && m.q == 0);
        bool emitted = false;
        if (mag != 1 || constant) {
            os << mag.str();
            emitted = true;
        }
        auto put_var = [&](char name, int exp) {
            if (exp == 0)
                return;
            if (emitted)
                os << '*';
            os << name;
            if (exp > 1)
                os << '^' << exp;
            emitted = true;
        };
        put_var('t', m.k);
        put_var('u', m.p);
        put_var('v', m.q);
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const TriPoly& p) {
    return os << p.str();
}

TriPoly divide_exact(const TriPoly& p, const Int& d) {
    if (d == 0)
        throw std::invalid_argument("divide_exact: division by zero");
    TriPoly out;
    for (const auto& [m, c] : p.terms()) {
        Int quotient, remainder;
        boost::multiprecision::divide_qr(c, d, quotient, remainder);
        if (remainder != 0)
            throw std::domain_error(
                "divide_exact: coefficient " + c.str() + " of t^" + std::to_string(m.k) +
                "*u^" + std::to_string(m.p) + "*v^" + std::to_string(m.q) +
                " is not divisible by " + d.str());
        out += TriPoly(quotient, m);
    }
    return out;
}

TriPoly scale_exact(const TriPoly& p, const RatScalar& r) {
    return divide_exact(p * r.num(), r.den());
}

}  // namespace symhodge
