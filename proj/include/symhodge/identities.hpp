#ifndef SYMHODGE_IDENTITIES_HPP
#define SYMHODGE_IDENTITIES_HPP

#include <optional>
#include <utility>
#include <vector>

#include "symhodge/zseries.hpp"

namespace symhodge {

/// Outcome of comparing two series built by independent routes.
struct IdentityReport {
    ZSeries lhs;
    ZSeries rhs;
    bool equal = false;
    /// Lowest z-power where the sides differ, with lhs - rhs at that power.
    std::optional<std::pair<int, TriPoly>> first_discrepancy;
};

/// Coefficientwise comparison up to the shared order; the sides must have
/// equal orders.
IdentityReport compare_series(ZSeries lhs, ZSeries rhs);

/// Number of partitions of k into distinct odd parts, each at most 2m-1,
/// counted by direct enumeration; equals the t^k coefficient of
/// prod_{i=1..m} (1 + t^(2i-1)) and the k-th Betti number of GL(m, C).
Int p_odd(int m, int k);

/// Number of sub-multisets of the given odd degrees with element sum k,
/// i.e. the t^k coefficient of prod (1 + t^d) over the multiset.
/// Throws on an even degree.
Int subset_count(const std::vector<int>& odd_degrees, int k);

/// Checks, up to z^order, that the exponential sum of Poincare determinant
/// averages over lag(multiplicities) equals the Euler-product side with
/// Betti-number exponents:
///   sum_n z^n/n! sum_sigma prod_i det(I + t^(2i-1) M_sigma)^(r_i)
///     = prod_k (1 - (-1)^k t^k z)^((-1)^(k+1) b_k).
IdentityReport check_betti_identity(const std::vector<int>& multiplicities, int order);

/// Checks, up to z^order, the GL(m) variant with sign -1 determinants:
///   sum_n z^n/n! sum_sigma prod_i det(I - t^(2i-1) M_sigma)
///     = prod_k (1 - t^k z)^((-1)^(k+1) p_odd(m, k)).
IdentityReport check_combgl(int m, int order);

/// Checks, up to z^order, the two-variable refinement over lag weights
/// (i, i), realized by substituting u = x, v = 1:
///   sum_n z^n/n! sum_sigma prod_i det(I + t^(2i-1) x^i M_sigma)^(r_i)
///     = prod_{p,k} (1 - (-1)^k x^p t^k z)^((-1)^(k+1) h^{k;p,p}).
IdentityReport check_cheahfls(const std::vector<int>& multiplicities, int order);

}  // namespace symhodge

#endif
