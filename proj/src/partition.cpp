#include "qtwb/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qtwb {

int part_size(const Partition& mu) {
    return std::accumulate(mu.begin(), mu.end(), 0);
}

int part_len(const Partition& mu) { return (int)mu.size(); }

Partition conjugate(const Partition& mu) {
    Partition r;
    if (mu.empty()) return r;
    for (int c = 1; c <= mu[0]; ++c) {
        int cnt = 0;
        for (int p : mu)
            if (p >= c) ++cnt;
        r.push_back(cnt);
    }
    return r;
}

long n_stat(const Partition& mu) {
    long s = 0;
    for (size_t i = 0; i < mu.size(); ++i) s += (long)i * mu[i];
    return s;
}

static void gen_parts(int n, int maxp, Partition& cur,
                      std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(n, maxp); p >= 1; --p) {
        cur.push_back(p);
        gen_parts(n - p, p, cur, out);
        cur.pop_back();
    }
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    Partition cur;
    gen_parts(n, n, cur, out);
    // ascending lex on the part vectors; this refines dominance
    std::sort(out.begin(), out.end());
    return out;
}

bool dominates_leq(const Partition& a, const Partition& b) {
    int sa = 0, sb = 0;
    size_t k = std::max(a.size(), b.size());
    for (size_t i = 0; i < k; ++i) {
        sa += i < a.size() ? a[i] : 0;
        sb += i < b.size() ? b[i] : 0;
        if (sa > sb) return false;
    }
    return sa == sb;
}

std::vector<std::pair<Partition, Partition>> minimal_raising_pairs(int n) {
    auto ps = partitions_of(n);
    std::vector<std::pair<Partition, Partition>> out;
    for (auto& lo : ps)
        for (auto& hi : ps) {
            if (lo == hi || !dominates_leq(lo, hi)) continue;
            bool cover = true;
            for (auto& mid : ps) {
                if (mid == lo || mid == hi) continue;
                if (dominates_leq(lo, mid) && dominates_leq(mid, hi)) {
                    cover = false;
                    break;
                }
            }
            if (cover) out.emplace_back(lo, hi);
        }
    return out;
}

CellHook arms_legs(const Partition& mu, int row, int col) {
    if (row < 1 || row > (int)mu.size() || col < 1 || col > mu[row - 1])
        throw std::out_of_range("arms_legs: cell outside diagram");
    CellHook h;
    h.arm = mu[row - 1] - col;
    h.coarm = col - 1;
    h.coleg = row - 1;
    int leg = 0;
    for (int r = row + 1; r <= (int)mu.size(); ++r)
        if (mu[r - 1] >= col) ++leg;
    h.leg = leg;
    return h;
}

std::vector<Corner> corners(const Partition& mu) {
    std::vector<Corner> out;
    int n = (int)mu.size();
    for (int r = n; r >= 1; --r) {
        int next = r < n ? mu[r] : 0;
        if (mu[r - 1] > next)
            out.push_back({r, mu[r - 1] - 1, r - 1});
    }
    return out;
}

Partition predecessor(const Partition& mu, int i) {
    auto cs = corners(mu);
    if (i < 0 || i >= (int)cs.size())
        throw std::out_of_range("predecessor: bad corner index");
    Partition r = mu;
    r[cs[i].row - 1] -= 1;
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

QTRat T_mu(const Partition& mu) {
    return QTRat::mono(1, n_stat(conjugate(mu)), n_stat(mu));
}

QTRat T_corner(const Partition& mu, int i) {
    return T_mu(mu) / x_weight(mu, i);
}

QTRat x_weight(const Partition& mu, int i) {
    if (i == 0) return QTRat::mono(1, -1, -1); // x_0 = 1/(tq)
    auto cs = corners(mu);
    if (i < 1 || i > (int)cs.size())
        throw std::out_of_range("x_weight: bad corner index");
    return QTRat::mono(1, cs[i - 1].coarm, cs[i - 1].coleg);
}

QTRat u_weight(const Partition& mu, int i) {
    auto cs = corners(mu);
    int m = (int)cs.size();
    if (i < 0 || i > m) throw std::out_of_range("u_weight: bad index");
    if (i == 0) return QTRat::mono(1, -1, cs[0].coleg);
    if (i == m) return QTRat::mono(1, cs[m - 1].coarm, -1);
    return QTRat::mono(1, cs[i - 1].coarm, cs[i].coleg);
}

QTRat B_mu(const Partition& mu) {
    QTPoly p;
    for (int r = 1; r <= (int)mu.size(); ++r)
        for (int c = 1; c <= mu[r - 1]; ++c) p.add_term(c - 1, r - 1, 1);
    return QTRat(p);
}

HookProducts hook_products(const Partition& mu) {
    QTRat h(1), hp(1);
    for (int r = 1; r <= (int)mu.size(); ++r)
        for (int c = 1; c <= mu[r - 1]; ++c) {
            auto al = arms_legs(mu, r, c);
            h *= one_minus(al.arm, al.leg + 1);
            hp *= one_minus(al.arm + 1, al.leg);
        }
    return {h, hp};
}

std::string part_str(const Partition& mu) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < mu.size(); ++i) {
        if (i) os << ",";
        os << mu[i];
    }
    os << ")";
    return os.str();
}

} // namespace qtwb
