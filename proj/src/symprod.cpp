#include "symhodge/symprod.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

#include "symhodge/parallel.hpp"

namespace symhodge {

ClassFunction::ClassFunction(int n, std::vector<TriPoly> values)
    : n_(n), classes_(partitions_of(n)), values_(std::move(values)) {
    if (values_.size() != classes_.size())
        throw std::invalid_argument("ClassFunction: need one value per conjugacy class");
}

const TriPoly& ClassFunction::value(const CycleType& c) const {
    const Partition key = c.to_partition();
    for (std::size_t i = 0; i < classes_.size(); ++i)
        if (classes_[i] == key)
            return values_[i];
    throw std::invalid_argument("ClassFunction: cycle type " + c.str() +
                                " is not a class of S_" + std::to_string(n_));
}

const TriPoly& ClassFunction::at_identity() const {
    // partitions_of(n) starts with (n); the identity class (1^n) is last.
    return values_.back();
}

std::string method_name(SymMethod m) {
    switch (m) {
        case SymMethod::det: return "det";
        case SymMethod::partition: return "partition";
        case SymMethod::cheah: return "cheah";
    }
    throw std::logic_error("method_name: unknown method");
}

namespace {

/// prod_i det_eval(c, w_i, sign)^(r_i) over the generator families, with an
/// optional twist of the monomials (weights dropped for the Poincare path,
/// degree dropped for the E-polynomial path).
enum class MonomialShape { full, degree_only, weights_only };

TriPoly class_determinant_product(const ExteriorPresentation& pres, const CycleType& c,
                                  MonomialShape shape, int sign) {
    TriPoly product = TriPoly::one();
    for (const GeneratorFamily& f : pres.families()) {
        Monomial w = f.monomial();
        if (shape == MonomialShape::degree_only)
            w = {f.d, 0, 0};
        else if (shape == MonomialShape::weights_only)
            w = {0, f.p, f.q};
        product *= det_eval(c, w, sign).pow(f.r);
    }
    return product;
}

/// (1/n!) sum over classes of class_size(c) * term(c), evaluated in parallel
/// and reduced in canonical class order. Division by n! is exact or throws.
template <typename TermFn>
TriPoly class_average(int n, TermFn&& term) {
    const std::vector<Partition> classes = partitions_of(n);
    const std::vector<TriPoly> contributions =
        parallel_map(classes.size(), [&](std::size_t i) {
            const CycleType c = CycleType::from_partition(classes[i]);
            return term(c) * class_size(c);
        });
    TriPoly sum;
    for (const TriPoly& piece : contributions)
        sum += piece;
    return scale_exact(sum, RatScalar(1, factorial(n)));
}

void require_dimension_coefficients(const TriPoly& poly, const char* what) {
    for (const auto& [m, c] : poly.terms())
        if (c < 0)
            throw std::domain_error(std::string(what) +
                                    ": negative coefficient " + c.str() + " at t^" +
                                    std::to_string(m.k) + "*u^" + std::to_string(m.p) +
                                    "*v^" + std::to_string(m.q));
}

SymResult make_result(int n, TriPoly poly, SymMethod method) {
    require_dimension_coefficients(poly, "sym evaluation");
    return SymResult{n, std::move(poly), method};
}

}  // namespace

ClassFunction equivariant_class_function(const ExteriorPresentation& pres, int n) {
    if (n < 1)
        throw std::invalid_argument("equivariant_class_function: n must be >= 1");
    const std::vector<Partition> classes = partitions_of(n);
    std::vector<TriPoly> values = parallel_map(classes.size(), [&](std::size_t i) {
        return class_determinant_product(pres, CycleType::from_partition(classes[i]),
                                         MonomialShape::full, 1);
    });
    return ClassFunction(n, std::move(values));
}

TriPoly dimension_check(const ClassFunction& cf, const ExteriorPresentation& pres) {
    const TriPoly& identity_value = cf.at_identity();
    if (identity_value != mhp(pres).pow(cf.n()))
        throw std::domain_error(
            "dimension_check: class function value at the identity does not equal "
            "mhp(pres)^n; the class function was not built from this presentation");
    return identity_value;
}

SymResult sym_mhp_det(const ExteriorPresentation& pres, int n) {
    if (n < 0)
        throw std::invalid_argument("sym_mhp_det: n must be >= 0");
    TriPoly poly = class_average(n, [&](const CycleType& c) {
        return class_determinant_product(pres, c, MonomialShape::full, 1);
    });
    return make_result(n, std::move(poly), SymMethod::det);
}

SymResult sym_mhp_partition(const ExteriorPresentation& pres, int n) {
    if (n < 0)
        throw std::invalid_argument("sym_mhp_partition: n must be >= 0");
    const TriPoly mu = mhp(pres);
    // Substituted powers mu(-(-t)^j, u^j, v^j) are shared across partitions.
    std::vector<TriPoly> substituted(static_cast<std::size_t>(n) + 1);
    for (int j = 1; j <= n; ++j)
        substituted[static_cast<std::size_t>(j)] = mu.substitute_power(j);
    TriPoly poly = class_average(n, [&](const CycleType& c) {
        TriPoly product = TriPoly::one();
        for (const auto& [j, a] : c.mult())
            product *= substituted[static_cast<std::size_t>(j)].pow(a);
        return product;
    });
    return make_result(n, std::move(poly), SymMethod::partition);
}

ZSeries cheah_series(const HodgeTable& table, int order, CheahVariant) {
    if (order < 0)
        throw std::invalid_argument("cheah_series: order must be >= 0");
    ZSeries product = ZSeries::one(order);
    for (const auto& [m, h] : table.numbers()) {
        // factor (1 - (-1)^k u^p v^q t^k z)^((-1)^(k+1) h)
        const int base_sign = (m.k % 2 == 0) ? -1 : 1;
        ZSeries factor = ZSeries::one(order);
        if (order >= 1)
            factor.set_coeff(1, TriPoly(Int(base_sign), m));
        if (h > Int(std::numeric_limits<long long>::max()))
            throw std::invalid_argument("cheah_series: Hodge number too large");
        const long long exponent_mag = h.convert_to<long long>();
        product *= factor.int_pow(m.k % 2 == 0 ? -exponent_mag : exponent_mag);
    }
    return product;
}

SymResult sym_mhp_cheah(const ExteriorPresentation& pres, int n) {
    if (n < 0)
        throw std::invalid_argument("sym_mhp_cheah: n must be >= 0");
    const ZSeries series = cheah_series(hodge_table(pres), n, CheahVariant::ordinary);
    return make_result(n, series.coeff(n), SymMethod::cheah);
}

TriPoly trivial_multiplicity(const ClassFunction& cf) {
    const std::vector<Partition>& classes = cf.classes();
    const std::vector<TriPoly> contributions =
        parallel_map(classes.size(), [&](std::size_t i) {
            return cf.value_at(i) * class_size(CycleType::from_partition(classes[i]));
        });
    TriPoly sum;
    for (const TriPoly& piece : contributions)
        sum += piece;
    return scale_exact(sum, RatScalar(1, factorial(cf.n())));
}

TriPoly isotypic_multiplicity(const ClassFunction& cf, const Partition& lambda) {
    if (lambda.n() != cf.n())
        throw std::invalid_argument("isotypic_multiplicity: |lambda| = " +
                                    std::to_string(lambda.n()) + " but the class function is on S_" +
                                    std::to_string(cf.n()));
    const std::vector<Partition>& classes = cf.classes();
    const std::vector<TriPoly> contributions =
        parallel_map(classes.size(), [&](std::size_t i) {
            const CycleType c = CycleType::from_partition(classes[i]);
            return cf.value_at(i) * (class_size(c) * mn_character(lambda, c));
        });
    TriPoly sum;
    for (const TriPoly& piece : contributions)
        sum += piece;
    TriPoly result = scale_exact(sum, RatScalar(1, factorial(cf.n())));
    require_dimension_coefficients(result, "isotypic_multiplicity");
    return result;
}

TriPoly quotient_by_subgroup(const ExteriorPresentation& pres, int n,
                             const std::vector<PermutationWord>& subgroup) {
    if (subgroup.empty())
        throw std::invalid_argument("quotient_by_subgroup: subgroup list is empty");
    for (const PermutationWord& w : subgroup)
        if (w.n() != n)
            throw std::invalid_argument("quotient_by_subgroup: element " + w.str() +
                                        " is not a permutation of {1.." + std::to_string(n) + "}");
    const std::set<PermutationWord> elements(subgroup.begin(), subgroup.end());
    if (elements.size() != subgroup.size())
        throw std::invalid_argument("quotient_by_subgroup: duplicate element in subgroup list");
    if (elements.find(PermutationWord::identity(n)) == elements.end())
        throw std::invalid_argument("quotient_by_subgroup: identity permutation missing");
    for (const PermutationWord& a : elements)
        for (const PermutationWord& b : elements)
            if (elements.find(a.compose(b)) == elements.end())
                throw std::invalid_argument("quotient_by_subgroup: not closed under composition (" +
                                            a.str() + " * " + b.str() + " is missing)");

    // Burnside-style average; elements sharing a cycle type contribute equal
    // terms, so group them first.
    std::map<Partition, Int> type_counts;
    for (const PermutationWord& w : elements)
        ++type_counts[w.cycle_type().to_partition()];
    std::vector<std::pair<Partition, Int>> grouped(type_counts.begin(), type_counts.end());
    const std::vector<TriPoly> contributions = parallel_map(grouped.size(), [&](std::size_t i) {
        const CycleType c = CycleType::from_partition(grouped[i].first);
        return class_determinant_product(pres, c, MonomialShape::full, 1) * grouped[i].second;
    });
    TriPoly sum;
    for (const TriPoly& piece : contributions)
        sum += piece;
    TriPoly result = scale_exact(sum, RatScalar(1, Int(elements.size())));
    require_dimension_coefficients(result, "quotient_by_subgroup");
    return result;
}

TriPoly sym_poincare(const ExteriorPresentation& pres, int n) {
    if (n < 0)
        throw std::invalid_argument("sym_poincare: n must be >= 0");
    TriPoly poly = class_average(n, [&](const CycleType& c) {
        return class_determinant_product(pres, c, MonomialShape::degree_only, 1);
    });
    require_dimension_coefficients(poly, "sym_poincare");
    return poly;
}

TriPoly sym_epoly(const ExteriorPresentation& pres, int n) {
    if (n < 0)
        throw std::invalid_argument("sym_epoly: n must be >= 0");
    return class_average(n, [&](const CycleType& c) {
        return class_determinant_product(pres, c, MonomialShape::weights_only, -1);
    });
}

}  // namespace symhodge
