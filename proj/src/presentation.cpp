#include "symhodge/presentation.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace symhodge {

ExteriorPresentation::ExteriorPresentation(std::vector<GeneratorFamily> families,
                                           std::string label)
    : label_(std::move(label)) {
    std::map<Monomial, long long> merged;
    for (const GeneratorFamily& f : families) {
        if (f.d < 1 || f.d % 2 == 0)
            throw std::invalid_argument("generator degree must be odd and positive, got d=" +
                                        std::to_string(f.d));
        if (f.p < 0 || f.q < 0)
            throw std::invalid_argument("generator weights must be nonnegative");
        if (f.r < 1)
            throw std::invalid_argument("generator multiplicity must be positive, got r=" +
                                        std::to_string(f.r));
        merged[f.monomial()] += f.r;
    }
    families_.reserve(merged.size());
    for (const auto& [m, r] : merged)
        families_.push_back(GeneratorFamily{m.k, m.p, m.q, static_cast<int>(r)});
}

int ExteriorPresentation::total_generators() const {
    int total = 0;
    for (const GeneratorFamily& f : families_)
        total += f.r;
    return total;
}

bool ExteriorPresentation::weightless() const {
    return std::any_of(families_.begin(), families_.end(),
                       [](const GeneratorFamily& f) { return f.p == 0 && f.q == 0; });
}

HodgeTable::HodgeTable(std::map<Monomial, Int> numbers, std::optional<int> dim)
    : numbers_(std::move(numbers)), dim_(dim) {
    for (auto it = numbers_.begin(); it != numbers_.end();) {
        if (it->second < 0)
            throw std::invalid_argument("HodgeTable: negative entry");
        if (it->second == 0)
            it = numbers_.erase(it);
        else
            ++it;
    }
}

Int HodgeTable::total() const {
    Int sum = 0;
    for (const auto& [m, h] : numbers_)
        sum += h;
    return sum;
}

TriPoly mhp(const ExteriorPresentation& pres) {
    TriPoly product = TriPoly::one();
    for (const GeneratorFamily& f : pres.families())
        product *= (TriPoly::one() + TriPoly::monomial(f.monomial())).pow(f.r);
    return product;
}

HodgeTable hodge_table(const ExteriorPresentation& pres) {
    return HodgeTable(mhp(pres).terms());
}

TriPoly poincare(const ExteriorPresentation& pres) {
    return mhp(pres).specialize(std::nullopt, 1, 1);
}

TriPoly e_poly(const ExteriorPresentation& pres) {
    return mhp(pres).specialize(-1, std::nullopt, std::nullopt);
}

HodgeTable compact_duality(const HodgeTable& table, int dim) {
    std::map<Monomial, Int> dual;
    for (const auto& [m, h] : table.numbers()) {
        const Monomial image{2 * dim - m.k, dim - m.p, dim - m.q};
        if (image.k < 0 || image.p < 0 || image.q < 0)
            throw std::invalid_argument(
                "compact_duality: entry (" + std::to_string(m.k) + ";" + std::to_string(m.p) +
                "," + std::to_string(m.q) + ") is inconsistent with dimension " +
                std::to_string(dim));
        dual[image] += h;
    }
    return HodgeTable(std::move(dual), dim);
}

ExteriorPresentation torus_preset(int d) {
    if (d < 1)
        throw std::invalid_argument("torus preset: dimension must be positive");
    return ExteriorPresentation({GeneratorFamily{1, 1, 0, d}, GeneratorFamily{1, 0, 1, d}},
                                "torus(" + std::to_string(d) + ")");
}

ExteriorPresentation cstar_preset(int r) {
    if (r < 1)
        throw std::invalid_argument("cstar preset: multiplicity must be positive");
    return ExteriorPresentation({GeneratorFamily{1, 1, 1, r}},
                                "cstar(" + std::to_string(r) + ")");
}

ExteriorPresentation gl_preset(int m) {
    if (m < 1)
        throw std::invalid_argument("gl preset: m must be positive");
    std::vector<GeneratorFamily> families;
    families.reserve(static_cast<std::size_t>(m));
    for (int i = 1; i <= m; ++i)
        families.push_back(GeneratorFamily{2 * i - 1, i, i, 1});
    return ExteriorPresentation(std::move(families), "gl(" + std::to_string(m) + ")");
}

ExteriorPresentation lag_preset(const std::vector<int>& multiplicities) {
    if (multiplicities.empty())
        throw std::invalid_argument("lag preset: need at least one multiplicity");
    std::vector<GeneratorFamily> families;
    std::string label = "lag(";
    for (std::size_t i = 0; i < multiplicities.size(); ++i) {
        const int r = multiplicities[i];
        if (r < 1)
            throw std::invalid_argument("lag preset: multiplicities must be positive");
        const int degree = 2 * static_cast<int>(i) + 1;
        families.push_back(GeneratorFamily{degree, static_cast<int>(i) + 1,
                                           static_cast<int>(i) + 1, r});
        if (i)
            label += ',';
        label += std::to_string(r);
    }
    label += ')';
    return ExteriorPresentation(std::move(families), std::move(label));
}

ExteriorPresentation lie_preset(const std::vector<std::pair<int, int>>& degree_mult) {
    if (degree_mult.empty())
        throw std::invalid_argument("lie preset: need at least one generator family");
    std::vector<GeneratorFamily> families;
    std::string label = "lie(";
    for (std::size_t i = 0; i < degree_mult.size(); ++i) {
        const auto& [d, r] = degree_mult[i];
        families.push_back(GeneratorFamily{d, 0, 0, r});
        if (i)
            label += ',';
        label += std::to_string(d) + ":" + std::to_string(r);
    }
    label += ')';
    return ExteriorPresentation(std::move(families), std::move(label));
}

}  // namespace symhodge
