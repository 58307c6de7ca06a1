#pragma once

#include "qtwb/partition.hpp"

#include <functional>
#include <map>

namespace qtwb {

enum class Basis { m, e, h, p, s, Ht };

std::string basis_name(Basis b);
Basis basis_from_name(const std::string& s);

// homogeneous symmetric function of fixed degree, coefficients in Q(q,t)
struct SymFunc {
    int degree = 0;
    Basis basis = Basis::p;
    std::map<Partition, QTRat> coeffs; // zero entries never stored

    void add(const Partition& mu, const QTRat& c);
    QTRat coeff(const Partition& mu) const;
    bool is_zero() const { return coeffs.empty(); }
    bool operator==(const SymFunc& o) const;
    std::string str() const;
};

// cached per-degree data: partition list (ascending lex, a linear extension
// of dominance), z_rho, character table, basis transition matrices to/from
// the power-sum pivot
struct BasisTables {
    int n;
    std::vector<Partition> parts;
    std::map<Partition, int> index;
    std::vector<Int> zrho;
    std::vector<std::vector<Int>> chi; // chi[lambda][rho]
    // X2P[i][j] = coefficient of p_{parts[j]} in X_{parts[i]}
    std::vector<std::vector<Rat>> m2p, e2p, h2p, s2p;
    std::vector<std::vector<Rat>> p2m, p2e, p2h, p2s;
};

const BasisTables& tables(int n);

Int z_of(const Partition& rho);
Int factorial(int n);
// number of standard tableaux of shape lambda
Int f_lambda(const Partition& lambda);

SymFunc sf_elem(Basis b, const Partition& mu); // the basis element itself
SymFunc sf_zero(int degree, Basis b);
SymFunc to_basis(const SymFunc& f, Basis b); // b in {m,e,h,p,s}

SymFunc operator+(const SymFunc& a, const SymFunc& b);
SymFunc operator-(const SymFunc& a, const SymFunc& b);
SymFunc operator*(const QTRat& c, const SymFunc& f);
SymFunc sf_mul(const SymFunc& a, const SymFunc& b);

QTRat hall_inner(const SymFunc& a, const SymFunc& b);
// Macdonald q,t inner product: <p_rho,p_rho> = z_rho prod (1-q^r)/(1-t^r)
QTRat qt_inner(const SymFunc& a, const SymFunc& b);

SymFunc omega(const SymFunc& f);
// omega followed by q,t -> 1/q,1/t in the coefficients
SymFunc down_arrow(const SymFunc& f);
// T_mu * down_arrow(f)
SymFunc flip_char(const Partition& mu, const SymFunc& f);
// partial derivative with respect to p_1
SymFunc del_p1(const SymFunc& f);
// graded-dimension series of the module with Frobenius characteristic f:
// sum over the s-expansion of f_lambda times the coefficient
QTRat hilbert_poly(const SymFunc& f);

// plethystic reweighting: p_k -> w(k) * p_k on the p-expansion
SymFunc pleth_reweight(const SymFunc& f, const std::function<QTRat(long)>& w);
// f[rX] for a scalar (rational function) r: p_k picks up r(q^k, t^k)
SymFunc plethysm_scalar(const SymFunc& f, const QTRat& r);

} // namespace qtwb
