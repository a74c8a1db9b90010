#include "symhodge/identities.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "symhodge/symprod.hpp"

namespace symhodge {

IdentityReport compare_series(ZSeries lhs, ZSeries rhs) {
    if (lhs.order() != rhs.order())
        throw std::invalid_argument("compare_series: order mismatch");
    std::optional<std::pair<int, TriPoly>> discrepancy;
    for (int n = 0; n <= lhs.order(); ++n) {
        if (lhs.coeff(n) != rhs.coeff(n)) {
            discrepancy.emplace(n, lhs.coeff(n) - rhs.coeff(n));
            break;
        }
    }
    const bool equal = !discrepancy.has_value();
    return IdentityReport{std::move(lhs), std::move(rhs), equal, std::move(discrepancy)};
}

Int p_odd(int m, int k) {
    if (m < 1)
        throw std::invalid_argument("p_odd: m must be >= 1");
    if (k < 0)
        throw std::invalid_argument("p_odd: k must be >= 0");
    // Enumerate partitions of k into distinct odd parts <= 2m-1 directly.
    Int count = 0;
    auto recurse = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            ++count;
            return;
        }
        int start = std::min(max_part, remaining);
        if (start % 2 == 0)
            --start;
        for (int part = start; part >= 1; part -= 2)
            self(self, remaining - part, part - 2);
    };
    recurse(recurse, k, 2 * m - 1);
    return count;
}

Int subset_count(const std::vector<int>& odd_degrees, int k) {
    if (k < 0)
        throw std::invalid_argument("subset_count: k must be >= 0");
    for (int d : odd_degrees)
        if (d < 1 || d % 2 == 0)
            throw std::invalid_argument("subset_count: degrees must be odd, got " +
                                        std::to_string(d));
    // ways[s] = number of sub-multisets seen so far with element sum s
    std::vector<Int> ways(static_cast<std::size_t>(k) + 1);
    ways[0] = 1;
    for (int d : odd_degrees)
        for (int s = k; s >= d; --s)
            ways[static_cast<std::size_t>(s)] += ways[static_cast<std::size_t>(s - d)];
    return ways[static_cast<std::size_t>(k)];
}

namespace {

long long to_exponent(const Int& value) {
    if (value > Int(std::numeric_limits<long long>::max()))
        throw std::invalid_argument("identity check: exponent too large");
    return value.convert_to<long long>();
}

/// prod_k (1 - base_sign(k) t^k z)^((-1)^(k+1) e_k) truncated at order,
/// where e_k comes from the callback and vanishes beyond max_k.
template <typename ExponentFn>
ZSeries euler_product(int order, int max_k, bool alternate_base_sign, ExponentFn&& exponent) {
    ZSeries product = ZSeries::one(order);
    for (int k = 0; k <= max_k; ++k) {
        const Int e = exponent(k);
        if (e == 0)
            continue;
        // factor (1 - s_k t^k z) with s_k = (-1)^k when alternating, else +1;
        // its z-coefficient is -s_k
        const int coeff_sign = alternate_base_sign ? ((k % 2 == 0) ? -1 : 1) : -1;
        ZSeries factor = ZSeries::one(order);
        if (order >= 1)
            factor.set_coeff(1, TriPoly(Int(coeff_sign), Monomial{k, 0, 0}));
        const long long mag = to_exponent(e);
        product *= factor.int_pow(k % 2 == 0 ? -mag : mag);
    }
    return product;
}

int degree_sum(const std::vector<int>& multiplicities) {
    int total = 0;
    for (std::size_t i = 0; i < multiplicities.size(); ++i)
        total += multiplicities[i] * (2 * static_cast<int>(i) + 1);
    return total;
}

std::vector<int> expanded_degrees(const std::vector<int>& multiplicities) {
    std::vector<int> degrees;
    for (std::size_t i = 0; i < multiplicities.size(); ++i)
        degrees.insert(degrees.end(), static_cast<std::size_t>(multiplicities[i]),
                       2 * static_cast<int>(i) + 1);
    return degrees;
}

}  // namespace

IdentityReport check_betti_identity(const std::vector<int>& multiplicities, int order) {
    const ExteriorPresentation pres = lag_preset(multiplicities);
    ZSeries lhs(order);
    for (int n = 0; n <= order; ++n)
        lhs.set_coeff(n, sym_poincare(pres, n));

    const std::vector<int> degrees = expanded_degrees(multiplicities);
    const int max_k = degree_sum(multiplicities);
    ZSeries rhs = euler_product(order, max_k, /*alternate_base_sign=*/true,
                                [&](int k) { return subset_count(degrees, k); });
    return compare_series(std::move(lhs), std::move(rhs));
}

IdentityReport check_combgl(int m, int order) {
    if (m < 1)
        throw std::invalid_argument("check_combgl: m must be >= 1");
    // LHS coefficient: (1/n!) sum_c |c| prod_i det_eval(c, t^(2i-1), -1),
    // the sign -1 realizing det(I - t^(2i-1) M).
    const ExteriorPresentation pres = gl_preset(m);
    ZSeries lhs(order);
    for (int n = 0; n <= order; ++n) {
        const std::vector<Partition> classes = partitions_of(n);
        TriPoly sum;
        for (const Partition& part : classes) {
            const CycleType c = CycleType::from_partition(part);
            TriPoly product = TriPoly::one();
            for (const GeneratorFamily& f : pres.families())
                product *= det_eval(c, Monomial{f.d, 0, 0}, -1).pow(f.r);
            sum += product * class_size(c);
        }
        lhs.set_coeff(n, scale_exact(sum, RatScalar(1, factorial(n))));
    }

    const int max_k = degree_sum(std::vector<int>(static_cast<std::size_t>(m), 1));
    ZSeries rhs = euler_product(order, max_k, /*alternate_base_sign=*/false,
                                [&](int k) { return p_odd(m, k); });
    return compare_series(std::move(lhs), std::move(rhs));
}

IdentityReport check_cheahfls(const std::vector<int>& multiplicities, int order) {
    const ExteriorPresentation pres = lag_preset(multiplicities);
    // All weights are (i, i), so the single extra variable x is realized by
    // u = x, v = 1.
    ZSeries lhs(order);
    for (int n = 0; n <= order; ++n)
        lhs.set_coeff(n, sym_mhp_det(pres, n).poly.specialize(std::nullopt, std::nullopt, 1));

    ZSeries rhs = ZSeries::one(order);
    const HodgeTable table = hodge_table(pres);
    for (const auto& [mono, h] : table.numbers()) {
        const int base_sign = (mono.k % 2 == 0) ? -1 : 1;
        ZSeries factor = ZSeries::one(order);
        if (order >= 1)
            factor.set_coeff(1, TriPoly(Int(base_sign), Monomial{mono.k, mono.p, 0}));
        const long long mag = to_exponent(h);
        rhs *= factor.int_pow(mono.k % 2 == 0 ? -mag : mag);
    }
    return compare_series(std::move(lhs), std::move(rhs));
}

}  // namespace symhodge
