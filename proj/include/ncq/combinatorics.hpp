#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ncq/bigint.hpp"
#include "ncq/rational.hpp"

namespace ncq {

// Domain errors (bad subsets, mismatched ground sets, ...) throw this; the
// CLI maps it to exit code 1.
class domain_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Block = std::vector<int>;  // elements, strictly ascending

// ---------------------------------------------------------------------------
// Core objects

struct Composition {
    std::vector<int> parts;
    int size() const;
    int length() const { return static_cast<int>(parts.size()); }
    bool is_odd() const;  // every part odd
    friend auto operator<=>(const Composition&, const Composition&) = default;
};

// Subset of a range attached to an ambient degree n. Depending on the role the
// elements live in [n-1] (descent sets, odd sets) or {2,...,n-1} (peak sets).
struct Subset {
    std::vector<int> elems;  // strictly ascending
    int n = 0;
    int size() const { return static_cast<int>(elems.size()); }
    bool contains(int x) const;
    friend auto operator<=>(const Subset&, const Subset&) = default;
};

struct Permutation {
    std::vector<int> img;  // one-line notation, images of 1..n
    int n() const { return static_cast<int>(img.size()); }
    int operator()(int i) const { return img[i - 1]; }
    Permutation inverse() const;
    static Permutation identity(int n);
    friend auto operator<=>(const Permutation&, const Permutation&) = default;
};

struct SetComposition {
    std::vector<Block> blocks;  // nonempty, disjoint, each ascending; union = [n]
    int degree() const;
    int length() const { return static_cast<int>(blocks.size()); }
    bool is_odd() const;  // every block of odd size
    friend bool operator==(const SetComposition&, const SetComposition&) = default;
};

struct SetPartition {
    std::vector<Block> blocks;  // canonical: sorted by minimum element
    int degree() const;
    int length() const { return static_cast<int>(blocks.size()); }
    bool is_odd() const;
    Composition block_sizes() const;  // lambda(pi), weakly decreasing
    friend bool operator==(const SetPartition&, const SetPartition&) = default;
};

// Canonical total orders used for deterministic enumeration/serialization:
// (length, then the block sequence compared lexicographically).
bool setcomp_less(const SetComposition& a, const SetComposition& b);
bool setpartition_less(const SetPartition& a, const SetPartition& b);

struct SetCompLess {
    bool operator()(const SetComposition& a, const SetComposition& b) const { return setcomp_less(a, b); }
};
struct SetPartLess {
    bool operator()(const SetPartition& a, const SetPartition& b) const { return setpartition_less(a, b); }
};

// Validating constructors.
SetComposition make_set_composition(std::vector<Block> blocks);
SetPartition make_set_partition(std::vector<Block> blocks);
Subset make_subset(std::vector<int> elems, int n);
Permutation make_permutation(std::vector<int> img);

struct StandardPair {
    Subset A;       // subset of [n-1]
    Permutation sigma;  // Des(sigma) subseteq A
};

struct EnrichedStandardPair {
    Subset B;       // peak set in {2,...,n-1}
    Permutation sigma;  // Des(sigma) subseteq Odd(B)
};

// ---------------------------------------------------------------------------
// Bijections of subsets, compositions, peak sets

// Comp(A) = (a1, a2-a1, ..., n-ak) for A subseteq [n-1].
Composition comp_of_subset(const Subset& A);
Subset subset_of_comp(const Composition& alpha);

bool is_peak_set(const Subset& B);  // B subseteq {2..n-1}, no two consecutive
bool is_odd_set(const Subset& A);   // consecutive differences odd, incl. n - max

// Odd(B) = [n-1] \ (B u (B-1)); inverse reconstructs the peak set.
Subset odd_of_peak(const Subset& B);
Subset peak_of_odd(const Subset& A);
Composition comp_odd(const Subset& B);  // Comp(Odd(B))

Subset descent_set(const Permutation& sigma);
Subset peak_set(const Permutation& sigma);

// ODiff(A) = {a_i : a_i - a_{i-1} odd}, defined when n - max(A) is odd (max of
// the empty set is 0, so for A empty this means n odd).
Subset odiff(const Subset& A);

// ---------------------------------------------------------------------------
// Set compositions and standard pairs

// Splits the one-line sigma at the positions of A.
SetComposition set_comp(const Subset& A, const Permutation& sigma);

StandardPair std_pair(const Subset& A, const Permutation& sigma);
EnrichedStandardPair estd_pair(const Subset& B, const Permutation& sigma);
bool is_standard(const Subset& A, const Permutation& sigma);
bool is_enriched_standard(const Subset& B, const Permutation& sigma);

// Inverse of set_comp restricted to standard pairs.
StandardPair pair_of_setcomp(const SetComposition& phi);

// SetCompOdd(B, sigma) = SetComp(Odd(B), sigma); bijection from enriched
// standard pairs onto odd set compositions, with inverse below.
SetComposition setcomp_odd(const Subset& B, const Permutation& sigma);
EnrichedStandardPair pair_of_odd_setcomp(const SetComposition& phi);

// ---------------------------------------------------------------------------
// Refinement order, meet, Odd(phi), underlying partition

// true iff psi <= phi: each block of psi is a union of consecutive blocks of phi.
bool refines(const SetComposition& psi, const SetComposition& phi);

// Blocks phi_i n psi_j in lexicographic (i,j) order, empties removed.
SetComposition meet(const SetComposition& phi, const SetComposition& psi);

// Odd(phi): union each maximal run of block sizes (even,...,even,odd).
// Defined exactly when the last block has odd size.
SetComposition odd_merge(const SetComposition& phi);

SetPartition underlying_partition(const SetComposition& phi);
SetPartition shifted_concat(const SetPartition& pi, const SetPartition& tau);

// All coarsenings psi <= phi (merge consecutive blocks), canonical order.
std::vector<SetComposition> coarsenings(const SetComposition& phi);

// ---------------------------------------------------------------------------
// Enumeration (exhaustive, deterministic canonical order, cached per n)

const std::vector<SetComposition>& set_compositions(int n);
const std::vector<SetComposition>& odd_set_compositions(int n);
const std::vector<SetPartition>& set_partitions(int n);
const std::vector<SetPartition>& odd_set_partitions(int n);
std::vector<Composition> compositions(int n);
std::vector<Composition> odd_compositions(int n);
std::vector<Subset> subsets(int n);    // subsets of [n-1]
std::vector<Subset> peak_sets(int n);  // peak sets in {2..n-1}
std::vector<Permutation> permutations(int n);

BigInt count_objects(const std::string& kind, int n);

// ---------------------------------------------------------------------------
// Partition lattice and its Moebius function

// partition_leq(pi, tau): every block of tau is contained in a block of pi,
// i.e. tau refines pi. Minimum is the single block, maximum the singletons.
bool partition_leq(const SetPartition& pi, const SetPartition& tau);

// Moebius function of the interval [pi, tau]; requires partition_leq(pi, tau).
BigInt mobius_partition(const SetPartition& pi, const SetPartition& tau);

// prod_i (-1)^(lambda_i - 1) (lambda_i - 1)! over the block sizes; equals
// mobius_partition(pi, singletons).
BigInt mobius_zerohat(const SetPartition& pi);

SetPartition singletons_partition(int n);
SetPartition single_block_partition(int n);

// ---------------------------------------------------------------------------
// The odd sub-poset of set compositions

// Moebius function of the interval [psi, phi] inside the poset of odd set
// compositions; requires both odd and refines(psi, phi).
BigInt mobius_odd(const SetComposition& psi, const SetComposition& phi);

// Same quantity at composition level (the interval only depends on shapes).
BigInt mobius_odd_comp(const Composition& beta, const Composition& alpha);

// mu_1 = 1, mu_l = 0 for odd l > 1, mu_l = (-1)^(l/2-1) Cat_(l/2-1) for even l;
// equals the sum of mobius_odd(psi, phi) over odd psi <= phi with l(phi) = l.
BigInt mu_ell(int l);

BigInt catalan(int k);
BigInt eulerian(int n, int k);
BigInt ordered_bell(int n);
BigInt bell(int n);
BigInt multinomial(const Composition& alpha);

// ---------------------------------------------------------------------------
// Section-9 machinery: the sets C and D and the coefficients C_phi'^{phi psi}

// C: block reorderings xi of phi with meet(psi, xi) = phi. Requires psi <= phi.
std::vector<SetComposition> script_C(const SetComposition& phi, const SetComposition& psi);

// D: odd chi lying below some member of C (equivalently meet(psi,chi) <= phi).
std::vector<SetComposition> script_D(const SetComposition& phi, const SetComposition& psi);

// All coefficients C_chi^{phi psi} for odd admissible chi, solved from the
// defining triangular recursion (finest first, C = 1 on members of script_C).
std::map<SetComposition, Rational, SetCompLess> coeff_C_table(const SetComposition& phi,
                                                              const SetComposition& psi);

Rational coeff_C(const SetComposition& phi, const SetComposition& psi, const SetComposition& phiprime);

// Independent route: inclusion-exclusion over the odd interval,
// C = (-1)^(p(phi')+p(phi)) sum_zeta mu(phi',zeta) 2^(l(psi^zeta)-l(zeta)).
Rational coeff_C_mobius(const SetComposition& phi, const SetComposition& psi,
                        const SetComposition& phiprime);

// The product formula from the remark after the conjectures; stated in the
// source material without proof, so callers treat disagreement as a report,
// not an error.
Rational coeff_C_product_formula(const SetComposition& phi, const SetComposition& psi,
                                 const SetComposition& phiprime);

// p(phi) = (n - l(phi))/2 for odd phi.
int p_of(const SetComposition& phi);

// ---------------------------------------------------------------------------
// Small helpers shared across modules

SetComposition standardize_to_initial_segment(const std::vector<Block>& blocks);
int max_or_zero(const Subset& A);

}  // namespace ncq
