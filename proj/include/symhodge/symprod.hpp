#ifndef SYMHODGE_SYMPROD_HPP
#define SYMHODGE_SYMPROD_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "symhodge/presentation.hpp"
#include "symhodge/symgroup.hpp"
#include "symhodge/zseries.hpp"

namespace symhodge {

/// Class function on S_n with TriPoly values: one value per conjugacy class,
/// keyed by the canonical partition list of partitions_of(n).
class ClassFunction {
public:
    ClassFunction(int n, std::vector<TriPoly> values);

    int n() const { return n_; }
    std::size_t class_count() const { return classes_.size(); }
    const std::vector<Partition>& classes() const { return classes_; }
    const TriPoly& value_at(std::size_t index) const { return values_[index]; }
    const TriPoly& value(const CycleType& c) const;
    const TriPoly& at_identity() const;

private:
    int n_;
    std::vector<Partition> classes_;
    std::vector<TriPoly> values_;
};

enum class SymMethod { det, partition, cheah };
std::string method_name(SymMethod m);

/// A Sym^n evaluation together with the formula path that produced it.
/// Coefficients are dimensions, so construction rejects negative entries.
struct SymResult {
    int n = 0;
    TriPoly poly;
    SymMethod method = SymMethod::det;
};

/// Character of the triply-graded S_n-module on the cohomology of X^n:
/// value at cycle type c is prod_i det_eval(c, w_i, +1)^(r_i) over the
/// generator families w_i = t^(d_i) u^(p_i) v^(q_i). Requires n >= 1.
ClassFunction equivariant_class_function(const ExteriorPresentation& pres, int n);

/// Returns cf at the identity class after asserting it equals mhp(pres)^n
/// (the Kunneth power); throws std::domain_error on mismatch.
TriPoly dimension_check(const ClassFunction& cf, const ExteriorPresentation& pres);

/// Sym^n mixed Hodge polynomial via the conjugacy-class determinant sum:
/// (1/n!) sum_c |c| prod_i det_eval(c, w_i, +1)^(r_i). The n!-term sum over
/// permutations collapses to p(n) classes because det_eval depends only on
/// the cycle type. Division by n! is asserted exact, termwise.
SymResult sym_mhp_det(const ExteriorPresentation& pres, int n);

/// Sym^n via the partition-substitution sum: expands mu_X = mhp(pres) once
/// and evaluates sum over partitions of prod_j mu_X(-(-t)^j, u^j, v^j)^(a_j)
/// with weight 1/(a_j! j^(a_j)). Never touches det_eval; this is an
/// independent code path from sym_mhp_det.
SymResult sym_mhp_partition(const ExteriorPresentation& pres, int n);

enum class CheahVariant { ordinary, compactly_supported };

/// Generating series sum_n mu_{Sym^n X} z^n as a product over table entries
/// of (1 - (-1)^k u^p v^q t^k z)^((-1)^(k+1) h), truncated at the given
/// order. Both variants share this product; the variant records whether the
/// caller supplied ordinary or compactly supported Hodge numbers.
ZSeries cheah_series(const HodgeTable& table, int order,
                     CheahVariant variant = CheahVariant::ordinary);

/// Sym^n as the z^n coefficient of cheah_series over hodge_table(pres).
SymResult sym_mhp_cheah(const ExteriorPresentation& pres, int n);

/// Multiplicity of the trivial representation: (1/n!) sum_c |c| cf(c).
TriPoly trivial_multiplicity(const ClassFunction& cf);

/// Multiplicity of the irreducible chi_lambda:
/// (1/n!) sum_c |c| chi_lambda(c) cf(c). Coefficients must come out as
/// nonnegative integers; anything else signals a character bug and throws.
TriPoly isotypic_multiplicity(const ClassFunction& cf, const Partition& lambda);

/// Mixed Hodge polynomial of X^n / H for an explicit subgroup H of S_n,
/// as the average (1/|H|) sum_{h in H} prod_i det_eval(type(h), w_i)^(r_i).
/// H must contain the identity, be closed under composition, and hold no
/// duplicates; all three are verified.
TriPoly quotient_by_subgroup(const ExteriorPresentation& pres, int n,
                             const std::vector<PermutationWord>& subgroup);

/// Poincare polynomial of Sym^n X, running the determinant sum with the
/// weights dropped (monomials t^(d_i)) rather than specializing the full
/// mixed Hodge polynomial; agrees with sym_mhp_det at u = v = 1.
TriPoly sym_poincare(const ExteriorPresentation& pres, int n);

/// E-polynomial of Sym^n X: t = -1 turns each odd-degree monomial
/// t^(d_i) u^(p_i) v^(q_i) into -u^(p_i) v^(q_i), so the determinant sum
/// runs with sign -1; agrees with sym_mhp_det at t = -1.
TriPoly sym_epoly(const ExteriorPresentation& pres, int n);

}  // namespace symhodge

#endif
