#pragma once

#include "ncq/element.hpp"

namespace ncq {

// The Hopf algebra NCQSym. Canonical M and F keys are set compositions: a
// standard pair (A, sigma) and SetComp(A, sigma) carry the same data, and
// pair-indexed constructors normalize through std_pair. An F-function of a
// pair that is not standard is a different element; it still expands as
// F_(A,sigma) = sum over A <= C of M_(C,sigma) with standardized M keys.

Elem M_of(const SetComposition& phi);
Elem F_of(const SetComposition& phi);

// M_(A,sigma) for an arbitrary pair (key standardized through std_pair).
Elem M_of_pair(const Subset& A, const Permutation& sigma);

// The element F_(A,sigma) for an arbitrary pair, expanded in the M basis.
Elem F_function_M(const Subset& A, const Permutation& sigma);

// Basis changes restricted to canonical keys.
Elem F_to_M(const Elem& f_elem);
Elem M_to_F(const Elem& m_elem);

// Quasi-shuffle product on M keys: blocks of the result are blocks of phi,
// shifted blocks of psi, or unions of one of each, preserving both orders.
Elem product_M(const SetComposition& phi, const SetComposition& psi);
Elem product(const Elem& a, const Elem& b);  // via M expansions

// Graded coproduct: cut the block sequence, renumber each side.
TensorElem coproduct_M(const SetComposition& phi);
TensorElem coproduct(const Elem& a);

// Internal coproduct: sum of M_psi (x) M_phi' over meet(psi, phi') = phi,
// restricted to psi <= phi.
TensorElem internal_coproduct_M(const SetComposition& phi);
TensorElem internal_coproduct(const Elem& a);

// Commutation map rho: M_(A,sigma) -> QSymM_A, F -> QSymF_A.
Elem rho(const Elem& a);

// Converts any supported basis tag to the M basis (QSym tags excluded).
Elem to_M(const Elem& a);

BigInt dim_ncqsym(int n);

}  // namespace ncq
