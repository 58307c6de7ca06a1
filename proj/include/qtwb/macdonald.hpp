#pragma once

#include "qtwb/symfunc.hpp"

namespace qtwb {

struct checksum_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// monic Macdonald polynomial P_mu (m-basis leading term m_mu)
SymFunc macd_P(const Partition& mu);
// integral form J_mu = h_mu(q,t) P_mu
SymFunc macd_J(const Partition& mu);
// modified Macdonald basis element, in the Schur basis
SymFunc tilde_H(const Partition& mu);
// Schur coefficient of tilde_H(mu)
QTRat ktilde(const Partition& lambda, const Partition& mu);

// conversions that know about the Ht basis on top of the classical ones
SymFunc to_schur_full(const SymFunc& f);
SymFunc to_Ht(const SymFunc& f);
SymFunc to_basis_full(const SymFunc& f, Basis b);

// diagonal operator in the tilde_H eigenbasis: tilde_H_lam -> g(lam) tilde_H_lam
SymFunc apply_eigen_op(const SymFunc& f,
                       const std::function<QTRat(const Partition&)>& g);
// nabla^k (k may be negative)
SymFunc nabla(const SymFunc& f, long k = 1);

// specialization at t=1: prod_i (q)_{beta_i} h_{beta_i}[X/(1-q)]
SymFunc specialize_t1(const Partition& beta);

// the difference operator Delta: f -> f[X] - f[X + M/z] Omega[-zX] | z^0,
// with M = (1-t)(1-q)
SymFunc delta_diff(const SymFunc& f);

// q,t -> 1/q,1/t applied to every coefficient (no omega)
QTRat qtrat_invert_t(const QTRat& r);

// persisted tilde_H tables
std::string table_build(int n);                 // JSON text
void table_save(int n, const std::string& dir); // writes htilde_n<N>.json
void table_load(const std::string& path);       // verifies hash, warms cache

} // namespace qtwb
