#pragma once

#include <optional>

#include "ncq/element.hpp"

namespace ncq {

// Symmetric functions in noncommuting variables (NCSym) and the Schur
// Q-function layer NCOmega = NCSym n NCPi.
//
// Order conventions, pinned by worked values against the power series:
//   p_pi = sum of m_tau over coarsenings tau of pi,
//   e_pi = sum of mobius_zerohat(tau) p_tau over refinements tau of pi,
//   h_pi likewise with |mobius_zerohat(tau)|.

class NotSymmetric : public domain_error {
public:
    using domain_error::domain_error;
};

Elem m_of(const SetPartition& pi);
Elem p_of_partition(const SetPartition& pi);
Elem e_of(const SetPartition& pi);
Elem h_of(const SetPartition& pi);

Elem m_to_M(const SetPartition& pi);   // sum of M over block orderings
Elem p_to_m(const SetPartition& pi);
Elem e_to_p(const SetPartition& pi);
Elem h_to_p(const SetPartition& pi);

std::vector<SetPartition> partition_coarsenings(const SetPartition& pi);
std::vector<SetPartition> partition_refinements(const SetPartition& pi);

// omega: h <-> e, p -> (-1)^(n - l(pi)) p. Involution; input must be tagged
// p, h or e.
Elem omega(const Elem& elem);

// Expansion of a p/h/e/m/q/n tagged element into the M basis.
Elem ncsym_to_M(const Elem& elem);

// m expansion of an M-tagged element; empty optional when some coefficient is
// not constant on a fiber of underlying_partition.
std::optional<Elem> try_to_m_basis(const Elem& m_elem);
Elem membership_ncsym(const Elem& m_elem);  // throws NotSymmetric

// p expansion of an NCSym element given in the m basis (greedy, coarsest keys
// eliminated by triangularity).
Elem m_basis_to_p(const Elem& m_tagged);

// q_pi = Theta(h_pi) as an M-basis element; theorem-checked against
// Theta(e_pi) by the test suite.
Elem q_elem(const SetPartition& pi);
Elem q_to_M(const SetPartition& pi);

// n_pi = (-1)^((n - l(pi))/2) sum of eta_phi over orderings phi of pi's
// blocks; returned in the Eta basis.
Elem n_elem(const SetPartition& pi);

// Theta(p_pi) computed through the theta module and re-expressed in p.
Elem theta_p(const SetPartition& pi);

// A set partition is connected when it is not a shifted concatenation of two
// nonempty partitions.
bool is_connected_partition(const SetPartition& pi);

BigInt dim_ncsym(int n);
BigInt dim_ncomega(int n);

}  // namespace ncq
