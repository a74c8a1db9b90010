#ifndef SYMHODGE_SYMGROUP_HPP
#define SYMHODGE_SYMGROUP_HPP

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "symhodge/tripoly.hpp"

namespace symhodge {

/// Integer partition: weakly decreasing positive parts.
class Partition {
public:
    Partition() = default;  ///< the empty partition of 0
    explicit Partition(std::vector<int> parts);

    /// Parses "3,1,1"; the empty string yields the empty partition.
    static Partition parse(const std::string& text);

    int n() const { return n_; }
    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    std::string str() const;

    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
    int n_ = 0;
};

/// Cycle type of a permutation, stored as multiplicities j -> a_j
/// (number of j-cycles). Converts bijectively to and from Partition.
class CycleType {
public:
    CycleType() = default;  ///< type of the empty permutation (n = 0)
    static CycleType from_partition(const Partition& p);

    Partition to_partition() const;
    int n() const { return n_; }
    /// Multiplicities keyed by cycle length, longest first.
    const std::map<int, int, std::greater<int>>& mult() const { return mult_; }
    int count(int j) const;
    int fixed_points() const { return count(1); }

    /// Renders as "j^a" factors, e.g. "2^1 1^1".
    std::string str() const;

    friend bool operator==(const CycleType&, const CycleType&) = default;

private:
    std::map<int, int, std::greater<int>> mult_;
    int n_ = 0;
};

/// Permutation of {1..n} in one-line notation.
class PermutationWord {
public:
    /// Validates that images is a bijection of {1..n}; throws otherwise.
    explicit PermutationWord(std::vector<int> images);

    static PermutationWord identity(int n);
    /// Parses one-line bracket notation "[2,3,1]".
    static PermutationWord parse(const std::string& text);

    int n() const { return static_cast<int>(images_.size()); }
    const std::vector<int>& images() const { return images_; }
    int image(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }

    /// Composition (this after other): i -> this(other(i)).
    PermutationWord compose(const PermutationWord& other) const;
    CycleType cycle_type() const;
    std::string str() const;

    friend auto operator<=>(const PermutationWord&, const PermutationWord&) = default;

private:
    PermutationWord() = default;
    std::vector<int> images_;
};

/// All partitions of n, each exactly once, in reverse lexicographic order:
/// (n) first, (1^n) last. partitions_of(0) is the single empty partition.
std::vector<Partition> partitions_of(int n);

/// Number of permutations in S_n with the given cycle type:
/// n! / prod_j (j^(a_j) a_j!).
Int class_size(const CycleType& c);

/// det(I + sign*w*M) for any permutation matrix M of cycle type c, evaluated
/// as prod_j (1 - (-sign*w)^j)^(a_j). Depends only on the cycle type.
/// sign must be +1 or -1.
TriPoly det_eval(const CycleType& c, const Monomial& w, int sign = 1);

/// Coefficients e_0..e_n of x^k in prod_j (1 - (-x)^j)^(a_j); e_k is the
/// character of the k-th exterior power of the permutation representation
/// at class c.
std::vector<Int> elementary_symmetric_profile(const CycleType& c);

/// Character of the k-th exterior power of the standard representation at
/// class c, recovered as the alternating sum sum_{i<=k} (-1)^(k-i) e_i(c).
/// Rejects k outside [0, n-1]: the exterior power vanishes at k >= n, and a
/// silent zero would mask off-by-one errors in callers.
Int exterior_std_character(int k, const CycleType& c);

/// Value of the irreducible character chi_lambda of S_n at class c, by
/// recursive border-strip removal with sign (-1)^height. Memoized per
/// thread. Throws if |lambda| != c.n().
Int mn_character(const Partition& lambda, const CycleType& c);

}  // namespace symhodge

#endif
