#pragma once

#include <vector>

#include "ncq/element.hpp"

namespace ncq {

// The labelled descent-to-peak map Theta: NCQSym -> NCPi, defined on the F
// basis by F_(A,sigma) -> K_(A \ ((A+1) u {1}), sigma) and extended linearly;
// everything else (the closed form on M, the NCSym consequences) is derived
// and theorem-checked against this definition.

// Theta of the F-function of an arbitrary pair, as an M-basis element.
Elem theta_F_function_M(const Subset& A, const Permutation& sigma);

// Theta of a single F basis element, expressed in the K basis.
Elem theta_F(const SetComposition& phi);

// Closed form on an M key: (-1)^(n-1-|B|-|A|) eta_(B,sigma) when n - max(A)
// is odd (B the peak set with Odd(B) = ODiff(A)), zero otherwise. Returned in
// the Eta basis (empty element for the zero case).
Elem theta_M_closed(const SetComposition& phi);

// Linear extension to any element with an M expansion; result in the M basis
// (it always lies in NCPi).
Elem theta(const Elem& elem);
Elem theta_eta(const Elem& elem);  // same, re-expressed in the Eta basis

// ---------------------------------------------------------------------------
// Commutative shadow: QSym, its peak subalgebra, and Theta_QSym.

Elem qsym_M_of(const Subset& A);
Elem qsym_F_of(const Subset& A);
Elem qsym_F_to_M(const Subset& A);
Elem qsym_M_to_F(const Subset& A);
Elem qsym_K_to_M(const Subset& B);    // K_B = sum 2^(|A|+1) M_A over B <= A u (A+1)
Elem qsym_eta_to_M(const Subset& B);  // eta_B = (-1)^|B| sum over A <= Odd(B)
Elem theta_qsym(const Elem& qsym_elem);  // via the F route
Elem qsym_to_M(const Elem& qsym_elem);

BigInt dim_qsym_peak(int n);  // Fibonacci: odd compositions of n

// Checks rho . Theta == Theta_QSym . rho on every M key of degree n; returns
// the list of counterexample keys (empty expected).
std::vector<SetComposition> check_diagram(int n);

}  // namespace ncq
