#pragma once

#include "qtwb/qtrat.hpp"

#include <vector>

namespace qtwb {

// Partition = weakly decreasing positive parts. Diagrams are drawn in the
// French way: row 1 (length parts[0]) at the bottom, cells (row, col) both
// 1-based.
using Partition = std::vector<int>;

int part_size(const Partition& mu);
int part_len(const Partition& mu);
Partition conjugate(const Partition& mu);
// n(mu) = sum (i-1) mu_i
long n_stat(const Partition& mu);

std::vector<Partition> partitions_of(int n);
// true iff a <= b in dominance order (both partitions of the same n)
bool dominates_leq(const Partition& a, const Partition& b);
// covering pairs (lo, hi) of the dominance order on partitions of n
std::vector<std::pair<Partition, Partition>> minimal_raising_pairs(int n);

// arm, leg, coarm, coleg of a cell (1-based row/col); cell must lie in mu
struct CellHook {
    int arm, leg, coarm, coleg;
};
CellHook arms_legs(const Partition& mu, int row, int col);

// removable corner cells, listed top row first, so coarm a_1 < a_2 < ...
// and coleg l_1 > l_2 > ...
struct Corner {
    int row;   // 1-based row of the removable cell
    int coarm; // a_i
    int coleg; // l_i
};
std::vector<Corner> corners(const Partition& mu);

// mu with the i-th corner cell removed (i is 0-based into corners())
Partition predecessor(const Partition& mu, int i);

// T_mu = q^{n(mu')} t^{n(mu)}
QTRat T_mu(const Partition& mu);
// T_i = T_mu / x_i for corner i (1-based)
QTRat T_corner(const Partition& mu, int i);
// corner weight x_i = t^{l_i} q^{a_i} for 1 <= i <= m; i = 0 gives
// x_0 = 1/(tq)
QTRat x_weight(const Partition& mu, int i);
// u_0 = t^{l_1}/q, u_i = t^{l_{i+1}} q^{a_i} (1<=i<=m-1), u_m = q^{a_m}/t
QTRat u_weight(const Partition& mu, int i);
// B_mu = sum over cells of t^{row-1} q^{col-1}
QTRat B_mu(const Partition& mu);

// hook products: h = prod (1 - q^arm t^{leg+1}), hp = prod (1 - q^{arm+1} t^leg)
struct HookProducts {
    QTRat h, hp;
};
HookProducts hook_products(const Partition& mu);

std::string part_str(const Partition& mu);

} // namespace qtwb
