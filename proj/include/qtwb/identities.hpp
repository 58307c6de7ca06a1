#pragma once

#include "qtwb/macdonald.hpp"

#include <vector>

namespace qtwb {

// S = set of corner indices, 1-based, nonempty, sorted ascending
using CornerSet = std::vector<int>;

// Phi_mu = sum_j [prod_{s != j} 1/(1 - T_j/T_s)] tilde_H of the j-th
// predecessor; a symmetric function of degree |mu| - 1 (Schur basis)
SymFunc phi_mu(const Partition& mu);

// Phi^(k) = (-nabla)^{m-k} Phi_mu, 1 <= k <= m
SymFunc phi_k(const Partition& mu, int k);

// Phi^{superset of S}, computed by one of four routes:
//   0: e-weighted sum of the Phi^(k) over the complement corner weights
//   1: operator product prod_{i not in S} (1 - nabla/T_i) applied to Phi_mu
//   2: divided differences of the predecessor tilde_H's over S
//   3: Lagrange-style interpolation sum over S only
SymFunc phi_superset(const Partition& mu, const CornerSet& S, int route);
// all four routes; throws logic_error if any two disagree
SymFunc phi_superset_checked(const Partition& mu, const CornerSet& S);

// each predecessor expansion: tilde_H_{alpha^(i)} as an e-weighted sum of
// the Phi^(k); returns false (with msg) on any mismatch
bool verify_predecessor_expansion(const Partition& mu, std::string* msg = nullptr);

// the two nabla summation identities tying the Phi^(k) to nabla Phi^(1)
// and nabla^{-1} Phi_mu
bool verify_nabla_phi_sums(const Partition& mu, std::string* msg = nullptr);

// down_arrow(Phi^(k)) = Phi^(m+1-k) / (T_1 ... T_m)
bool verify_phi_down_arrow(const Partition& mu, std::string* msg = nullptr);

// two-column split for a dominance covering pair mu <| nu of the same size:
// Phi = (T_nu tilde_H_mu - T_mu tilde_H_nu) / (T_nu - T_mu)
SymFunc butler_split(const Partition& mu, const Partition& nu);

struct ButlerCheck {
    bool reconstruct_mu = false; // tilde_H_mu = Phi + T_mu down_arrow(Phi)
    bool reconstruct_nu = false;
    bool psi_flip = false;       // Psi_lambda(q,t) = Phi_{lambda'}(1/q,1/t)
    bool ok() const { return reconstruct_mu && reconstruct_nu && psi_flip; }
};
ButlerCheck butler_check(const Partition& mu, const Partition& nu);

// corner-weight form of del_p1 tilde_H_mu (sum over predecessors)
SymFunc pieri_del_p1(const Partition& mu);
// same quantity through the Phi^(k) and e-differences of the x/u weights
SymFunc pieri_phi_expansion(const Partition& mu);

// B^(k)_mu = (e_k[x_0..x_m] - e_k[u_0..u_m]) / M, M = (1-1/t)(1-1/q)
QTRat b_mu_k(const Partition& mu, int k);

// elementary symmetric value e_j of a finite list of scalars
QTRat e_sym(const std::vector<QTRat>& xs, int j);

// q->1 limit of the Hilbert-series specialization of Phi^{superset S} at
// t=1; conjecturally n!/|S| for mu of size n+1
Rat sf_dimension_limit(const Partition& mu, const CornerSet& S);

// elementary partial-fraction limit: (1-q) sum_s [prod_{r != s}
// q^{y_s}/(q^{y_s}-q^{y_r})] y_s/(1-q^{y_s}) -> 1/k as q -> 1
Rat partial_fraction_limit_check(const std::vector<long>& ys);

struct AuditViolation {
    Partition mu;
    int k = 0;          // which Phi^(k), or 0 for a superset check
    CornerSet S;        // which S, empty for a plain Phi^(k) check
    std::string what;   // description including the witness term
};

// Schur-positivity-and-integrality sweep over all mu of size n+1: every
// Phi^(k) and every Phi^{superset S} for nonempty S
std::vector<AuditViolation> positivity_audit(int n);

} // namespace qtwb
