#ifndef SYMHODGE_PRESENTATION_HPP
#define SYMHODGE_PRESENTATION_HPP

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symhodge/tripoly.hpp"

namespace symhodge {

/// A family of r exterior-algebra generators sharing the signature
/// (degree d; weights p, q). The degree must be odd: even-degree generators
/// commute instead of anticommute and fall outside this model.
struct GeneratorFamily {
    int d = 1;
    int p = 0;
    int q = 0;
    int r = 1;

    Monomial monomial() const { return {d, p, q}; }
    friend auto operator<=>(const GeneratorFamily&, const GeneratorFamily&) = default;
};

/// Cohomology presented as an exterior algebra on odd-degree generators.
/// Families are kept sorted by (d, p, q) with duplicate signatures merged,
/// so equal presentations compare equal.
class ExteriorPresentation {
public:
    ExteriorPresentation() = default;  ///< no generators: a point
    explicit ExteriorPresentation(std::vector<GeneratorFamily> families,
                                  std::string label = {});

    const std::vector<GeneratorFamily>& families() const { return families_; }
    const std::string& label() const { return label_; }
    int total_generators() const;

    /// True when some family has weights (0, 0); the u, v grading of such a
    /// presentation is formal and only the Poincare specialization is
    /// meaningful.
    bool weightless() const;

    friend bool operator==(const ExteriorPresentation&, const ExteriorPresentation&) = default;

private:
    std::vector<GeneratorFamily> families_;
    std::string label_;
};

/// Table of Hodge numbers (k, p, q) -> h. Only nonzero entries are stored.
class HodgeTable {
public:
    HodgeTable() = default;
    explicit HodgeTable(std::map<Monomial, Int> numbers, std::optional<int> dim = {});

    const std::map<Monomial, Int>& numbers() const { return numbers_; }
    std::optional<int> dim() const { return dim_; }
    Int total() const;

    friend bool operator==(const HodgeTable&, const HodgeTable&) = default;

private:
    std::map<Monomial, Int> numbers_;
    std::optional<int> dim_;
};

/// Mixed Hodge polynomial of the presentation:
/// prod_i (1 + t^d u^p v^q)^r over the generator families.
TriPoly mhp(const ExteriorPresentation& pres);

/// Expands mhp(pres) into the table (k, p, q) -> h^{k;p,q}.
HodgeTable hodge_table(const ExteriorPresentation& pres);

/// Poincare polynomial: mhp at u = v = 1.
TriPoly poincare(const ExteriorPresentation& pres);

/// E-polynomial: mhp at t = -1.
TriPoly e_poly(const ExteriorPresentation& pres);

/// Compactly supported table under Poincare duality for X smooth (or an
/// orbifold) of complex dimension d: h_c^{2d-k; d-p, d-q} = h^{k;p,q}.
/// This index map is an involution; applying it twice with the same d
/// returns the original table. Throws if any resulting index is negative.
HodgeTable compact_duality(const HodgeTable& table, int dim);

// Named presets ------------------------------------------------------------

/// Complex torus of dimension d: d generators of signature (1; 1, 0) and d
/// of signature (1; 0, 1).
ExteriorPresentation torus_preset(int d);

/// (C*)^r: r generators of signature (1; 1, 1).
ExteriorPresentation cstar_preset(int r);

/// GL(m, C): one generator (2i-1; i, i) for each i = 1..m.
ExteriorPresentation gl_preset(int m);

/// Linear algebraic group data: r_i generators of signature (2i-1; i, i).
ExteriorPresentation lag_preset(const std::vector<int>& multiplicities);

/// Topological Lie group data: r_i generators of odd degree d_i with formal
/// weights (0, 0); meaningful through the Poincare specialization.
ExteriorPresentation lie_preset(const std::vector<std::pair<int, int>>& degree_mult);

}  // namespace symhodge

#endif
