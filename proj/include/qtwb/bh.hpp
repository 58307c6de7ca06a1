#pragma once

#include "qtwb/identities.hpp"

#include <set>

namespace qtwb {

// A descriptor is a union of epsilon-words over the m corners: bit j-1 of a
// word set means epsilon_j = 1. It names a direct sum of the basic
// intersection modules, so join/meet are plain set union/intersection.
struct Descriptor {
    int m = 0;
    std::set<unsigned> words;
    bool operator==(const Descriptor& o) const = default;
};

Descriptor desc_empty(int m);
Descriptor desc_predecessor(int m, int i); // all words with eps_i = 1
Descriptor desc_all_nonzero(int m);
Descriptor desc_join(const Descriptor& a, const Descriptor& b);
Descriptor desc_intersect(const Descriptor& a, const Descriptor& b);

// polynomial in z (coefficients QTRat), index = power of z
using ZPoly = std::vector<QTRat>;

ZPoly zpoly_mul(const ZPoly& a, const ZPoly& b);
ZPoly zpoly_add(const ZPoly& a, const ZPoly& b);
ZPoly zpoly_scale(const ZPoly& a, const QTRat& c);
// multiply / exactly divide by (1 - alpha z); division throws if inexact
ZPoly zpoly_mul_lin(const ZPoly& a, const QTRat& alpha);
ZPoly zpoly_div_lin(const ZPoly& a, const QTRat& alpha);
bool zpoly_eq(const ZPoly& a, const ZPoly& b);

// Pi_D(z) = sum_{eps in D} prod_j (-z/T_j)^{1-eps_j}
ZPoly pi_of_descriptor(const Partition& mu, const Descriptor& D);
// Pi(nabla) applied to Phi_mu
SymFunc apply_z_poly(const Partition& mu, const ZPoly& pi);
SymFunc frobenius_of_descriptor(const Partition& mu, const Descriptor& D);

// cell assignments produced by the row-by-row planning algorithm,
// keyed by (row-1, col-1)
std::map<std::pair<int, int>, Descriptor> bh_cell_descriptors(const Partition& mu);

// row polynomial Pi_i for the row holding corner i, from the corner
// recursion (exact division certified at each step)
ZPoly pi_recursion(const Partition& mu, int i);

// closed form for Gamma_i(z) = Pi_i(z T_mu)/prod_j(1 - x_j z), checked
// after clearing denominators
bool verify_gamma_closed_form(const Partition& mu, std::string* msg = nullptr);

// (1/(1-t)) sum_i t^{1+l_{i+1}} (1 - t^{l_i - l_{i+1}}) Pi_i(nabla) Phi_mu,
// with l_{m+1} = -1; conjecturally equals del_p1 tilde_H_mu
SymFunc bh_reassemble(const Partition& mu);

// sum over cells of t^{row-1} q^{col-1} F(cell descriptor)
SymFunc bh_cell_sum(const Partition& mu);

enum class RegionLabel { UPR, INS, MID, OUT };
struct RegionCell {
    int r, s; // 0-based (row, col)
    RegionLabel label;
};
// cell dissection of a two-corner shape b^{lb} a^{la}, with the
// basis-source rule for each region
std::vector<RegionCell> two_corner_regions(const Partition& mu);
std::string region_basis_rule(const Partition& mu, RegionLabel l);

} // namespace qtwb
