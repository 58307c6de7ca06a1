#pragma once

#include "qtwb/macdonald.hpp"

namespace qtwb {

// Monomial in x_1..x_n, y_1..y_n: exponent vector of length 2n, x block
// first. Polynomials are sparse maps with the lex-greatest monomial as
// leading term (begin()).
using Mono = std::vector<int>;
using BiPoly = std::map<Mono, Rat, std::greater<Mono>>;

BiPoly bp_add(const BiPoly& a, const BiPoly& b);
BiPoly bp_scale(const BiPoly& a, const Rat& c);
BiPoly bp_diff(const BiPoly& a, int var); // d/d var, 0-based over 2n slots
// P(d/dx, d/dy) applied to F
BiPoly bp_apply_diffop(const BiPoly& P, const BiPoly& F);
// apolar pairing <a,b> = (a(d)b)(0): diagonal on monomials with weight
// prod_i e_i!
Rat apolar(const BiPoly& a, const BiPoly& b);
// permute the points: x_j -> x_{sigma(j)}, y_j -> y_{sigma(j)} (0-based)
BiPoly bp_permute(const BiPoly& a, const std::vector<int>& sigma);

// bivariate Vandermonde-type determinant det | x_j^p y_j^q | over the cell
// biexponents (row-1, col-1) of mu; expanded over all n! permutations, so
// |mu| <= 6 is enforced
BiPoly delta_mu(const Partition& mu);

// A bihomogeneous subspace of Q[x,y], stored block-by-block in reduced row
// echelon form (canonical: structural equality is space equality).
struct Space {
    int n = 0; // number of (x,y) point pairs
    std::map<std::pair<int, int>, std::vector<BiPoly>> blocks; // (dx,dy) -> RREF rows
};

// span of a list of bihomogeneous polynomials
Space space_of(int n, const std::vector<BiPoly>& gens);
// smallest derivative-closed space containing delta
Space derivative_module(const BiPoly& delta, int n);
Space derivative_module(const Partition& mu);

int space_dim(const Space& v);
bool space_eq(const Space& a, const Space& b);
Space space_intersect(const Space& a, const Space& b);
Space space_join(const Space& a, const Space& b);
// {w in W : <w, v> = 0 for all v in V}
Space ortho_complement_in(const Space& v, const Space& w);
// P -> P(d) delta_mu, applied row by row
Space flip_space(const Space& v, const Partition& mu);

// sum over blocks of t^dx q^dy dim
QTRat bigraded_hilbert(const Space& v);
// bigraded S_n character as a symmetric function (Schur basis); each block
// trace is computed from the RREF pivots, with the residual checked to be
// zero so a non-invariant space is rejected
SymFunc bigraded_frobenius(const Space& v);

// intersection dimensions over the corner predecessors of mu: for every
// nonempty corner subset S, dim of the meet of the predecessor modules is
// n!/|S| (mu of size n+1); for three corners also the two derived counts
// n!/3 and n!/6 from the inclusion-exclusion combinations
bool verify_sf_dimensions(const Partition& mu, std::string* msg = nullptr);

} // namespace qtwb
