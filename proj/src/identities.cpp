#include "qtwb/identities.hpp"

#include <algorithm>
#include <sstream>

namespace qtwb {

static QTRat qt_pow(const QTRat& b, long k) {
    QTRat r(1);
    QTRat base = k >= 0 ? b : b.inverse();
    for (long i = 0; i < (k >= 0 ? k : -k); ++i) r *= base;
    return r;
}

QTRat e_sym(const std::vector<QTRat>& xs, int j) {
    if (j < 0 || j > (int)xs.size()) return QTRat();
    std::vector<QTRat> e(j + 1);
    e[0] = QTRat(1);
    for (size_t i = 0; i < xs.size(); ++i)
        for (int d = std::min<int>(j, (int)i + 1); d >= 1; --d)
            e[d] += xs[i] * e[d - 1];
    return e[j];
}

static void check_corner_set(const Partition& mu, const CornerSet& S) {
    int m = (int)corners(mu).size();
    if (S.empty())
        throw std::invalid_argument("corner set must be nonempty");
    for (size_t i = 0; i < S.size(); ++i) {
        if (S[i] < 1 || S[i] > m)
            throw std::invalid_argument("corner index out of range");
        if (i && S[i] <= S[i - 1])
            throw std::invalid_argument("corner set must be strictly increasing");
    }
}

// Lagrange coefficient prod_{r in R, r != j} 1/(1 - T_j/T_r)
static QTRat lagrange_coeff(const Partition& mu, const std::vector<int>& R,
                            int j) {
    QTRat Tj = T_corner(mu, j);
    QTRat c(1);
    for (int r : R) {
        if (r == j) continue;
        c /= QTRat(1) - Tj / T_corner(mu, r);
    }
    return c;
}

SymFunc phi_mu(const Partition& mu) {
    auto cs = corners(mu);
    int m = (int)cs.size();
    std::vector<int> all(m);
    for (int i = 0; i < m; ++i) all[i] = i + 1;
    SymFunc out = sf_zero(part_size(mu) - 1, Basis::s);
    for (int j = 1; j <= m; ++j)
        out = out + lagrange_coeff(mu, all, j) * tilde_H(predecessor(mu, j - 1));
    return out;
}

SymFunc phi_k(const Partition& mu, int k) {
    auto cs = corners(mu);
    int m = (int)cs.size();
    if (k < 1 || k > m) throw std::invalid_argument("phi_k: k out of range");
    std::vector<int> all(m);
    for (int i = 0; i < m; ++i) all[i] = i + 1;
    SymFunc out = sf_zero(part_size(mu) - 1, Basis::s);
    for (int j = 1; j <= m; ++j) {
        QTRat c = qt_pow(QTRat(-1) * T_corner(mu, j), m - k) *
                  lagrange_coeff(mu, all, j);
        out = out + c * tilde_H(predecessor(mu, j - 1));
    }
    return out;
}

static std::vector<int> complement(const Partition& mu, const CornerSet& S) {
    int m = (int)corners(mu).size();
    std::vector<int> out;
    for (int i = 1; i <= m; ++i)
        if (!std::binary_search(S.begin(), S.end(), i)) out.push_back(i);
    return out;
}

SymFunc phi_superset(const Partition& mu, const CornerSet& S, int route) {
    check_corner_set(mu, S);
    int m = (int)corners(mu).size();
    int n1 = part_size(mu) - 1;
    switch (route) {
        case 0: {
            // e-weighted sum of the Phi^(k) over complement inverse weights
            std::vector<QTRat> inv;
            for (int i : complement(mu, S))
                inv.push_back(T_corner(mu, i).inverse());
            SymFunc out = sf_zero(n1, Basis::s);
            for (int k = 1; k <= m; ++k) {
                QTRat w = e_sym(inv, m - k);
                if (!w.is_zero()) out = out + w * phi_k(mu, k);
            }
            return out;
        }
        case 1: {
            // operator product in the eigenbasis of degree |mu|-1
            auto comp = complement(mu, S);
            std::vector<QTRat> Tinv;
            for (int i : comp) Tinv.push_back(T_corner(mu, i));
            return apply_eigen_op(phi_mu(mu), [&](const Partition& lam) {
                QTRat g(1);
                QTRat Tl = T_mu(lam);
                for (auto& Ti : Tinv) g *= QTRat(1) - Tl / Ti;
                return g;
            });
        }
        case 2: {
            // divided differences over S with nodes 1/T_i
            std::vector<QTRat> y;
            std::vector<SymFunc> A;
            for (int i : S) {
                y.push_back(T_corner(mu, i).inverse());
                A.push_back(tilde_H(predecessor(mu, i - 1)));
            }
            // Delta[y_a..y_b] by recursion
            std::function<SymFunc(int, int)> dd = [&](int a, int b) -> SymFunc {
                if (a == b) return A[a];
                SymFunc left = dd(a, b - 1), right = dd(a + 1, b);
                QTRat d = (y[a] - y[b]).inverse();
                return d * (y[a] * left - y[b] * right);
            };
            return dd(0, (int)S.size() - 1);
        }
        case 3: {
            SymFunc out = sf_zero(n1, Basis::s);
            std::vector<int> R(S.begin(), S.end());
            for (int j : S)
                out = out +
                      lagrange_coeff(mu, R, j) * tilde_H(predecessor(mu, j - 1));
            return out;
        }
        default:
            throw std::invalid_argument("phi_superset: route must be 0..3");
    }
}

SymFunc phi_superset_checked(const Partition& mu, const CornerSet& S) {
    SymFunc ref = phi_superset(mu, S, 0);
    for (int r = 1; r < 4; ++r) {
        if (!(phi_superset(mu, S, r) == ref)) {
            std::ostringstream os;
            os << "phi_superset routes disagree for mu=" << part_str(mu)
               << " route " << r;
            throw std::logic_error(os.str());
        }
    }
    return ref;
}

bool verify_predecessor_expansion(const Partition& mu, std::string* msg) {
    int m = (int)corners(mu).size();
    for (int i = 1; i <= m; ++i) {
        std::vector<QTRat> inv;
        for (int j = 1; j <= m; ++j)
            if (j != i) inv.push_back(T_corner(mu, j).inverse());
        SymFunc sum = sf_zero(part_size(mu) - 1, Basis::s);
        for (int k = 1; k <= m; ++k) {
            QTRat w = e_sym(inv, m - k);
            if (!w.is_zero()) sum = sum + w * phi_k(mu, k);
        }
        if (!(sum == tilde_H(predecessor(mu, i - 1)))) {
            if (msg)
                *msg = "predecessor expansion fails at corner " +
                       std::to_string(i) + " of " + part_str(mu);
            return false;
        }
    }
    return true;
}

bool verify_nabla_phi_sums(const Partition& mu, std::string* msg) {
    int m = (int)corners(mu).size();
    std::vector<QTRat> inv;
    QTRat prodT(1);
    for (int j = 1; j <= m; ++j) {
        inv.push_back(T_corner(mu, j).inverse());
        prodT *= T_corner(mu, j);
    }
    int n1 = part_size(mu) - 1;
    SymFunc lhs1 = sf_zero(n1, Basis::s), lhs2 = sf_zero(n1, Basis::s);
    for (int k = 1; k <= m; ++k) {
        QTRat w1 = e_sym(inv, m - k), w2 = e_sym(inv, m + 1 - k);
        SymFunc pk = phi_k(mu, k);
        if (!w1.is_zero()) lhs1 = lhs1 + w1 * pk;
        if (!w2.is_zero()) lhs2 = lhs2 + w2 * pk;
    }
    SymFunc rhs1 = prodT.inverse() * nabla(phi_k(mu, 1));
    if (!(lhs1 == rhs1)) {
        if (msg) *msg = "first nabla sum fails for " + part_str(mu);
        return false;
    }
    SymFunc rhs2 = nabla(phi_mu(mu), -1);
    if (!(lhs2 == rhs2)) {
        if (msg) *msg = "second nabla sum fails for " + part_str(mu);
        return false;
    }
    return true;
}

bool verify_phi_down_arrow(const Partition& mu, std::string* msg) {
    int m = (int)corners(mu).size();
    QTRat prodT(1);
    for (int j = 1; j <= m; ++j) prodT *= T_corner(mu, j);
    for (int k = 1; k <= m; ++k) {
        SymFunc lhs = down_arrow(phi_k(mu, k));
        SymFunc rhs = prodT.inverse() * phi_k(mu, m + 1 - k);
        if (!(lhs == rhs)) {
            if (msg)
                *msg = "down-arrow relation fails at k=" + std::to_string(k) +
                       " for " + part_str(mu);
            return false;
        }
    }
    return true;
}

SymFunc butler_split(const Partition& mu, const Partition& nu) {
    QTRat Tm = T_mu(mu), Tn = T_mu(nu);
    QTRat d = (Tn - Tm).inverse();
    return d * (Tn * tilde_H(mu) - Tm * tilde_H(nu));
}

ButlerCheck butler_check(const Partition& mu, const Partition& nu) {
    ButlerCheck out;
    SymFunc Phi = butler_split(mu, nu);
    SymFunc dPhi = down_arrow(Phi);
    out.reconstruct_mu = tilde_H(mu) == Phi + T_mu(mu) * dPhi;
    out.reconstruct_nu = tilde_H(nu) == Phi + T_mu(nu) * dPhi;
    QTRat dd = (T_mu(mu) - T_mu(nu)).inverse();
    SymFunc Phis = to_schur_full(Phi);
    out.psi_flip = true;
    for (auto& lam : partitions_of(part_size(mu))) {
        QTRat psi = dd * (ktilde(lam, mu) - ktilde(lam, nu));
        QTRat rhs = Phis.coeff(conjugate(lam)).invert_vars();
        if (!(psi == rhs)) {
            out.psi_flip = false;
            break;
        }
    }
    return out;
}

// M = (1-1/t)(1-1/q)
static QTRat big_M() {
    return (QTRat(1) - QTRat::t(-1)) * (QTRat(1) - QTRat::q(-1));
}

SymFunc pieri_del_p1(const Partition& mu) {
    int m = (int)corners(mu).size();
    QTRat Minv = big_M().inverse();
    SymFunc out = sf_zero(part_size(mu) - 1, Basis::s);
    for (int i = 1; i <= m; ++i) {
        QTRat xi = x_weight(mu, i);
        QTRat numer(1);
        for (int s = 0; s <= m; ++s) numer *= u_weight(mu, s) - xi;
        QTRat denom(1);
        for (int s = 1; s <= m; ++s)
            if (s != i) denom *= x_weight(mu, s) - xi;
        QTRat c = Minv * xi.inverse() * numer / denom;
        out = out + c * tilde_H(predecessor(mu, i - 1));
    }
    return out;
}

QTRat b_mu_k(const Partition& mu, int k) {
    int m = (int)corners(mu).size();
    std::vector<QTRat> xs, us;
    for (int s = 0; s <= m; ++s) {
        if (s >= 1) xs.push_back(x_weight(mu, s));
        us.push_back(u_weight(mu, s));
    }
    xs.push_back(x_weight(mu, 0)); // x_0
    return (e_sym(xs, k) - e_sym(us, k)) / big_M();
}

SymFunc pieri_phi_expansion(const Partition& mu) {
    int m = (int)corners(mu).size();
    QTRat Tm = T_mu(mu);
    SymFunc out = sf_zero(part_size(mu) - 1, Basis::s);
    for (int k = 1; k <= m; ++k) {
        QTRat c = qt_pow(Tm, (long)k - m) * b_mu_k(mu, m + 1 - k);
        if (!c.is_zero()) out = out + c * phi_k(mu, k);
    }
    return out;
}

Rat sf_dimension_limit(const Partition& mu, const CornerSet& S) {
    check_corner_set(mu, S);
    QTRat total;
    std::vector<int> R(S.begin(), S.end());
    for (int j : S) {
        QTRat c = lagrange_coeff(mu, R, j).sub_t(1);
        QTRat hj = hilbert_poly(tilde_H(predecessor(mu, j - 1))).sub_t(1);
        total += c * hj;
    }
    return total.limit_q1();
}

Rat partial_fraction_limit_check(const std::vector<long>& ys) {
    for (size_t i = 0; i < ys.size(); ++i) {
        if (ys[i] == 0)
            throw std::invalid_argument("entries must be nonzero");
        for (size_t j = i + 1; j < ys.size(); ++j)
            if (ys[i] == ys[j])
                throw std::invalid_argument("entries must be distinct");
    }
    QTRat total;
    for (size_t s = 0; s < ys.size(); ++s) {
        QTRat c(1);
        QTRat qs = QTRat::q(ys[s]);
        for (size_t r = 0; r < ys.size(); ++r) {
            if (r == s) continue;
            c *= qs / (qs - QTRat::q(ys[r]));
        }
        c *= QTRat(Rat(ys[s])) / (QTRat(1) - qs);
        total += c;
    }
    total *= QTRat(1) - QTRat::q(1);
    return total.limit_q1();
}

std::vector<AuditViolation> positivity_audit(int n) {
    std::vector<AuditViolation> out;
    for (auto& mu : partitions_of(n + 1)) {
        int m = (int)corners(mu).size();
        for (int k = 1; k <= m; ++k) {
            SymFunc f = phi_k(mu, k);
            for (auto& [lam, c] : f.coeffs) {
                std::string w;
                if (!c.is_positive_integral(&w)) {
                    out.push_back({mu, k, {},
                                   "coeff of s" + part_str(lam) + ": " + w});
                }
            }
        }
        // all nonempty corner subsets
        for (unsigned mask = 1; mask < (1u << m); ++mask) {
            CornerSet S;
            for (int i = 0; i < m; ++i)
                if (mask & (1u << i)) S.push_back(i + 1);
            SymFunc f = phi_superset(mu, S, 3);
            for (auto& [lam, c] : f.coeffs) {
                std::string w;
                if (!c.is_positive_integral(&w)) {
                    out.push_back({mu, 0, S,
                                   "coeff of s" + part_str(lam) + ": " + w});
                }
            }
        }
    }
    return out;
}

} // namespace qtwb
