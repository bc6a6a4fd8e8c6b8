#pragma once

#include <optional>

#include "ncq/element.hpp"

namespace ncq {

// The peak algebra NCPi inside NCQSym. Canonical K/Eta keys are odd set
// compositions (via SetCompOdd). eta is invariant under estd normalization;
// the K-function of a pair that is not enriched standard genuinely depends on
// sigma and is exposed separately as K_function_M.

class NotInPeakAlgebra : public domain_error {
public:
    using domain_error::domain_error;
};

Elem K_of(const SetComposition& odd_phi);
Elem eta_of(const SetComposition& odd_phi);

// K_(B,sigma) = sum over A with B <= A u (A+1) of 2^(|A|+1) M_(A,sigma),
// for an arbitrary pair (B peak set, sigma any permutation).
Elem K_function_M(const Subset& B, const Permutation& sigma);

// eta_(B,sigma) = (-1)^|B| sum over A <= Odd(B) of 2^(|A|+1) M_(A,sigma).
Elem eta_function_M(const Subset& B, const Permutation& sigma);

// Basis-element expansions into M (keys normalized through estd_pair).
Elem K_to_M(const Elem& k_elem);
Elem eta_to_M(const Elem& eta_elem);

// eta_phi = (-1)^p(phi) sum over psi <= phi of 2^l(psi) M_psi.
Elem eta_odd_M(const SetComposition& odd_phi);

// Inclusion-exclusion between the K and eta bases (both directions).
Elem eta_K_convert(const Elem& elem);

// Greedy triangular elimination from finest to coarsest odd keys; empty
// optional when the element is not in NCPi.
std::optional<Elem> try_to_eta_basis(const Elem& m_elem);
Elem to_eta_basis(const Elem& m_elem);  // throws NotInPeakAlgebra
Elem to_K_basis(const Elem& m_elem);

bool in_peak_algebra(const Elem& m_elem);

BigInt dim_ncpeak(int n);

}  // namespace ncq
