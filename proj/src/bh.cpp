#include "qtwb/bh.hpp"

#include <algorithm>
#include <sstream>

namespace qtwb {

Descriptor desc_empty(int m) { return {m, {}}; }

Descriptor desc_predecessor(int m, int i) {
    if (i < 1 || i > m) throw std::out_of_range("desc_predecessor: bad index");
    Descriptor d{m, {}};
    for (unsigned w = 0; w < (1u << m); ++w)
        if (w & (1u << (i - 1))) d.words.insert(w);
    return d;
}

Descriptor desc_all_nonzero(int m) {
    Descriptor d{m, {}};
    for (unsigned w = 1; w < (1u << m); ++w) d.words.insert(w);
    return d;
}

Descriptor desc_join(const Descriptor& a, const Descriptor& b) {
    if (a.m != b.m) throw std::logic_error("descriptor arity mismatch");
    Descriptor d{a.m, a.words};
    d.words.insert(b.words.begin(), b.words.end());
    return d;
}

Descriptor desc_intersect(const Descriptor& a, const Descriptor& b) {
    if (a.m != b.m) throw std::logic_error("descriptor arity mismatch");
    Descriptor d{a.m, {}};
    for (unsigned w : a.words)
        if (b.words.count(w)) d.words.insert(w);
    return d;
}

ZPoly zpoly_add(const ZPoly& a, const ZPoly& b) {
    ZPoly r = a;
    if (b.size() > r.size()) r.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    while (!r.empty() && r.back().is_zero()) r.pop_back();
    return r;
}

ZPoly zpoly_mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    while (!r.empty() && r.back().is_zero()) r.pop_back();
    return r;
}

ZPoly zpoly_scale(const ZPoly& a, const QTRat& c) {
    if (c.is_zero()) return {};
    ZPoly r = a;
    for (auto& x : r) x *= c;
    return r;
}

ZPoly zpoly_mul_lin(const ZPoly& a, const QTRat& alpha) {
    return zpoly_mul(a, {QTRat(1), QTRat(-1) * alpha});
}

ZPoly zpoly_div_lin(const ZPoly& a, const QTRat& alpha) {
    // quotient of a by (1 - alpha z); remainder must vanish
    if (a.empty()) return {};
    size_t d = a.size() - 1;
    if (d == 0) throw std::logic_error("zpoly_div_lin: degree too small");
    ZPoly q(d);
    q[0] = a[0];
    for (size_t k = 1; k < d; ++k) q[k] = a[k] + alpha * q[k - 1];
    if (!(a[d] + alpha * q[d - 1]).is_zero())
        throw std::logic_error("zpoly_div_lin: not divisible");
    while (!q.empty() && q.back().is_zero()) q.pop_back();
    return q;
}

bool zpoly_eq(const ZPoly& a, const ZPoly& b) {
    size_t n = std::max(a.size(), b.size());
    for (size_t i = 0; i < n; ++i) {
        QTRat x = i < a.size() ? a[i] : QTRat();
        QTRat y = i < b.size() ? b[i] : QTRat();
        if (!(x == y)) return false;
    }
    return true;
}

ZPoly pi_of_descriptor(const Partition& mu, const Descriptor& D) {
    int m = (int)corners(mu).size();
    if (D.m != m) throw std::logic_error("descriptor arity mismatch with mu");
    std::vector<QTRat> Tinv(m);
    for (int j = 1; j <= m; ++j) Tinv[j - 1] = T_corner(mu, j).inverse();
    ZPoly out(m + 1);
    for (unsigned w : D.words) {
        QTRat c(1);
        int zeros = 0;
        for (int j = 0; j < m; ++j)
            if (!(w & (1u << j))) {
                ++zeros;
                c *= QTRat(-1) * Tinv[j];
            }
        out[zeros] += c;
    }
    while (!out.empty() && out.back().is_zero()) out.pop_back();
    return out;
}

SymFunc apply_z_poly(const Partition& mu, const ZPoly& pi) {
    SymFunc phi = phi_mu(mu);
    if (pi.empty()) return sf_zero(phi.degree, Basis::s);
    return apply_eigen_op(phi, [&](const Partition& lam) {
        QTRat T = T_mu(lam), pw(1), acc;
        for (size_t k = 0; k < pi.size(); ++k) {
            if (!pi[k].is_zero()) acc += pi[k] * pw;
            pw *= T;
        }
        return acc;
    });
}

SymFunc frobenius_of_descriptor(const Partition& mu, const Descriptor& D) {
    return apply_z_poly(mu, pi_of_descriptor(mu, D));
}

std::map<std::pair<int, int>, Descriptor>
bh_cell_descriptors(const Partition& mu) {
    auto cs = corners(mu);
    int m = (int)cs.size();
    int L = (int)mu.size();
    std::map<std::pair<int, int>, Descriptor> out;
    std::vector<Descriptor> row; // assignments of the row just above
    for (int r = L; r >= 1; --r) {
        int b = mu[r - 1];
        if (r == L) {
            row.assign(b, desc_predecessor(m, 1));
        } else {
            int a = mu[r]; // length of the row above
            if (b > a) {
                int c = b - a;
                int corner_i = 0;
                for (int i = 0; i < m; ++i)
                    if (cs[i].row == r) corner_i = i + 1;
                if (!corner_i)
                    throw std::logic_error("row grows but no corner found");
                Descriptor C = desc_predecessor(m, corner_i);
                auto Aprime = [&](int s) -> Descriptor {
                    if (s <= 0) return desc_all_nonzero(m);
                    if (s <= a) return row[s - 1];
                    return desc_empty(m);
                };
                std::vector<Descriptor> nrow;
                for (int s = 1; s <= b; ++s)
                    nrow.push_back(desc_join(
                        Aprime(s), desc_intersect(Aprime(s - c), C)));
                row = nrow;
            }
            // equal length: keep the previous assignments
        }
        for (int s = 1; s <= b; ++s) out[{r - 1, s - 1}] = row[s - 1];
    }
    return out;
}

ZPoly pi_recursion(const Partition& mu, int i) {
    auto cs = corners(mu);
    int m = (int)cs.size();
    if (i < 1 || i > m) throw std::out_of_range("pi_recursion: bad corner");
    QTRat Tm = T_mu(mu);
    std::vector<QTRat> x(m + 1), u(m + 1);
    for (int j = 1; j <= m; ++j) x[j] = x_weight(mu, j);
    for (int j = 0; j <= m; ++j) u[j] = u_weight(mu, j);

    // Pi_1 = (1 + q + ... + q^{a_1}) prod_{j>=2} (1 - x_j z / T_mu)
    QTRat geo;
    for (int e = 0; e <= cs[0].coarm; ++e) geo += QTRat::q(e);
    ZPoly pi = {geo};
    for (int j = 2; j <= m; ++j) pi = zpoly_mul_lin(pi, x[j] / Tm);

    for (int step = 2; step <= i; ++step) {
        QTRat ratio = x[step] / u[step - 1];
        ZPoly first = zpoly_mul_lin(pi, u[step - 1] / Tm);
        first = zpoly_div_lin(first, x[step] / Tm);
        first = zpoly_scale(first, ratio);
        QTRat c = u[step - 1].inverse() * (x[step] - u[step - 1]) /
                  (QTRat::q(1) - QTRat(1));
        ZPoly second = {c};
        for (int j = 1; j <= m; ++j)
            if (j != step) second = zpoly_mul_lin(second, x[j] / Tm);
        pi = zpoly_add(first, second);
    }
    return pi;
}

bool verify_gamma_closed_form(const Partition& mu, std::string* msg) {
    auto cs = corners(mu);
    int m = (int)cs.size();
    QTRat Tm = T_mu(mu);
    for (int i = 1; i <= m; ++i) {
        ZPoly pi = pi_recursion(mu, i);
        // scale z -> z T_mu
        ZPoly lhs = pi;
        QTRat pw(1);
        for (size_t k = 0; k < lhs.size(); ++k) {
            lhs[k] *= pw;
            pw *= Tm;
        }
        lhs = zpoly_scale(lhs, QTRat(1) - QTRat::q(1));
        // (1-q) Pi_i(zT) = prod_{j=1..m}(1-x_j z)
        //                  - P prod_{s=1..i}(1-u_{s-1} z) prod_{j>i}(1-x_j z)
        ZPoly all = {QTRat(1)};
        for (int j = 1; j <= m; ++j) all = zpoly_mul_lin(all, x_weight(mu, j));
        QTRat P(1);
        ZPoly sec = {QTRat(1)};
        for (int s = 1; s <= i; ++s) {
            P *= x_weight(mu, s) / u_weight(mu, s - 1);
            sec = zpoly_mul_lin(sec, u_weight(mu, s - 1));
        }
        for (int j = i + 1; j <= m; ++j) sec = zpoly_mul_lin(sec, x_weight(mu, j));
        ZPoly rhs = zpoly_add(all, zpoly_scale(sec, QTRat(-1) * P));
        if (!zpoly_eq(lhs, rhs)) {
            if (msg) {
                std::ostringstream os;
                os << "closed form fails for " << part_str(mu) << " at corner "
                   << i;
                *msg = os.str();
            }
            return false;
        }
    }
    return true;
}

SymFunc bh_reassemble(const Partition& mu) {
    auto cs = corners(mu);
    int m = (int)cs.size();
    ZPoly total;
    for (int i = 1; i <= m; ++i) {
        int li = cs[i - 1].coleg;
        int lnext = i < m ? cs[i].coleg : -1;
        // t^{1+l_{i+1}} (1 + t + ... + t^{l_i - l_{i+1} - 1})
        QTRat w;
        for (int e = 0; e < li - lnext; ++e) w += QTRat::t(1 + lnext + e);
        total = zpoly_add(total, zpoly_scale(pi_recursion(mu, i), w));
    }
    return apply_z_poly(mu, total);
}

SymFunc bh_cell_sum(const Partition& mu) {
    auto cells = bh_cell_descriptors(mu);
    ZPoly total;
    for (auto& [rs, D] : cells)
        total = zpoly_add(
            total, zpoly_scale(pi_of_descriptor(mu, D),
                               QTRat::mono(1, rs.second, rs.first)));
    return apply_z_poly(mu, total);
}

std::vector<RegionCell> two_corner_regions(const Partition& mu) {
    auto cs = corners(mu);
    if (cs.size() != 2)
        throw std::invalid_argument("two_corner_regions: need exactly 2 corners");
    int b = mu[0];
    int a = mu.back();
    int lb = 0, la = 0;
    for (int p : mu) {
        if (p == b) ++lb;
        else if (p == a) ++la;
        else throw std::invalid_argument("two_corner_regions: not b^lb a^la");
    }
    int c = b - a;
    std::vector<RegionCell> out;
    for (int r = lb; r < lb + la; ++r)
        for (int s = 0; s < a; ++s) out.push_back({r, s, RegionLabel::UPR});
    if (c > a) {
        for (int r = 0; r < lb; ++r) {
            for (int s = 0; s < a; ++s) out.push_back({r, s, RegionLabel::INS});
            for (int s = a; s < c; ++s) out.push_back({r, s, RegionLabel::MID});
            for (int s = c; s < b; ++s) out.push_back({r, s, RegionLabel::OUT});
        }
    } else {
        for (int r = 0; r < lb; ++r) {
            for (int s = 0; s < c; ++s) out.push_back({r, s, RegionLabel::INS});
            for (int s = c; s < a; ++s) out.push_back({r, s, RegionLabel::MID});
            for (int s = a; s < b; ++s) out.push_back({r, s, RegionLabel::OUT});
        }
    }
    return out;
}

std::string region_basis_rule(const Partition& mu, RegionLabel l) {
    int b = mu[0], a = mu.back(), c = b - a;
    switch (l) {
        case RegionLabel::UPR: return "B_A";
        case RegionLabel::INS: return "B_{A v B}";
        case RegionLabel::OUT: return "B*_{Aperp ^ B}";
        case RegionLabel::MID: return c > a ? "B_B" : "B_A";
    }
    return "?";
}

} // namespace qtwb
