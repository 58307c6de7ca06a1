#include "qtwb/symfunc.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace qtwb {

std::string basis_name(Basis b) {
    switch (b) {
        case Basis::m: return "m";
        case Basis::e: return "e";
        case Basis::h: return "h";
        case Basis::p: return "p";
        case Basis::s: return "s";
        case Basis::Ht: return "Htilde";
    }
    return "?";
}

Basis basis_from_name(const std::string& s) {
    if (s == "m") return Basis::m;
    if (s == "e") return Basis::e;
    if (s == "h") return Basis::h;
    if (s == "p") return Basis::p;
    if (s == "s") return Basis::s;
    if (s == "Htilde" || s == "H" || s == "Ht") return Basis::Ht;
    throw std::invalid_argument("unknown basis: " + s);
}

void SymFunc::add(const Partition& mu, const QTRat& c) {
    if (c.is_zero()) return;
    auto it = coeffs.find(mu);
    if (it == coeffs.end()) {
        coeffs.emplace(mu, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) coeffs.erase(it);
    }
}

QTRat SymFunc::coeff(const Partition& mu) const {
    auto it = coeffs.find(mu);
    return it == coeffs.end() ? QTRat() : it->second;
}

std::string SymFunc::str() const {
    if (coeffs.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [mu, c] : coeffs) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")*" << basis_name(basis) << part_str(mu);
    }
    return os.str();
}

Int z_of(const Partition& rho) {
    Int z(1);
    std::map<int, int> mult;
    for (int p : rho) mult[p]++;
    for (auto& [part, m] : mult) {
        for (int i = 0; i < m; ++i) z *= part;
        for (int i = 2; i <= m; ++i) z *= i;
    }
    return z;
}

Int factorial(int n) {
    Int f(1);
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// ---- irreducible characters via rim-hook removal on beta-numbers ----

static Int chi_val(const Partition& lam, const Partition& rho);

static Int chi_rec(const Partition& lam, const Partition& rho) {
    if (lam.empty()) return 1;
    int k = rho[0];
    Partition rest(rho.begin() + 1, rho.end());
    int L = (int)lam.size();
    std::vector<long> beta(L);
    for (int i = 0; i < L; ++i) beta[i] = lam[i] + (L - 1 - i);
    std::sort(beta.begin(), beta.end());
    Int total(0);
    for (int i = 0; i < L; ++i) {
        long b = beta[i];
        if (b < k) continue;
        long nb = b - k;
        if (std::binary_search(beta.begin(), beta.end(), nb)) continue;
        int ht = 0;
        for (long x : beta)
            if (x > nb && x < b) ++ht;
        std::vector<long> nbeta = beta;
        nbeta[i] = nb;
        std::sort(nbeta.begin(), nbeta.end(), std::greater<long>());
        Partition nlam;
        for (int j = 0; j < L; ++j) {
            long part = nbeta[j] - (L - 1 - j);
            if (part > 0) nlam.push_back((int)part);
        }
        Int term = chi_val(nlam, rest);
        if (ht % 2) term = -term;
        total += term;
    }
    return total;
}

static Int chi_val(const Partition& lam, const Partition& rho) {
    static std::map<std::pair<Partition, Partition>, Int> memo;
    static std::mutex mx;
    auto key = std::make_pair(lam, rho);
    {
        std::lock_guard<std::mutex> g(mx);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    Int v = chi_rec(lam, rho);
    std::lock_guard<std::mutex> g(mx);
    memo.emplace(key, v);
    return v;
}

Int f_lambda(const Partition& lambda) {
    Partition ones(part_size(lambda), 1);
    return chi_val(lambda, ones);
}

// ---- transition matrices ----

using Mat = std::vector<std::vector<Rat>>;

static Mat mat_inverse(const Mat& a) {
    int n = (int)a.size();
    Mat m = a, inv(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i) inv[i][i] = 1;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (m[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) throw std::logic_error("mat_inverse: singular matrix");
        std::swap(m[piv], m[col]);
        std::swap(inv[piv], inv[col]);
        Rat d = m[col][col];
        for (int j = 0; j < n; ++j) {
            m[col][j] /= d;
            inv[col][j] /= d;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            Rat f = m[r][col];
            for (int j = 0; j < n; ++j) {
                m[r][j] -= f * m[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

// p-expansion of h_k (sign=false) or e_k (sign=true), as map over
// partitions of k
static std::map<Partition, Rat> hk_in_p(int k, bool sign) {
    std::map<Partition, Rat> out;
    for (auto& rho : partitions_of(k)) {
        Rat c = Rat(1) / Rat(z_of(rho));
        if (sign && (k - (int)rho.size()) % 2) c = -c;
        out[rho] = c;
    }
    return out;
}

static std::map<Partition, Rat> pmap_mul(const std::map<Partition, Rat>& a,
                                         const std::map<Partition, Rat>& b) {
    std::map<Partition, Rat> out;
    for (auto& [r1, c1] : a)
        for (auto& [r2, c2] : b) {
            Partition r = r1;
            r.insert(r.end(), r2.begin(), r2.end());
            std::sort(r.begin(), r.end(), std::greater<int>());
            out[r] += c1 * c2;
        }
    return out;
}

static const BasisTables& build_tables(int n);

const BasisTables& tables(int n) {
    static std::map<int, BasisTables> cache;
    static std::mutex mx;
    std::lock_guard<std::mutex> g(mx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    BasisTables T;
    T.n = n;
    T.parts = partitions_of(n);
    int N = (int)T.parts.size();
    for (int i = 0; i < N; ++i) T.index[T.parts[i]] = i;
    T.zrho.resize(N);
    for (int i = 0; i < N; ++i) T.zrho[i] = z_of(T.parts[i]);
    T.chi.assign(N, std::vector<Int>(N));
    for (int l = 0; l < N; ++l)
        for (int r = 0; r < N; ++r) T.chi[l][r] = chi_val(T.parts[l], T.parts[r]);

    auto fill = [&](Mat& m, bool sign) {
        m.assign(N, std::vector<Rat>(N, Rat(0)));
        for (int i = 0; i < N; ++i) {
            std::map<Partition, Rat> acc;
            acc[{}] = 1;
            for (int part : T.parts[i]) acc = pmap_mul(acc, hk_in_p(part, sign));
            for (auto& [rho, c] : acc) m[i][T.index[rho]] = c;
        }
    };
    fill(T.h2p, false);
    fill(T.e2p, true);
    T.s2p.assign(N, std::vector<Rat>(N, Rat(0)));
    T.p2s.assign(N, std::vector<Rat>(N, Rat(0)));
    for (int l = 0; l < N; ++l)
        for (int r = 0; r < N; ++r) {
            T.s2p[l][r] = Rat(T.chi[l][r]) / Rat(T.zrho[r]);
            T.p2s[r][l] = Rat(T.chi[l][r]);
        }
    // [m_mu] p_rho = <p_rho, h_mu> = z_rho [p_rho] h_mu
    T.p2m.assign(N, std::vector<Rat>(N, Rat(0)));
    for (int r = 0; r < N; ++r)
        for (int mu = 0; mu < N; ++mu)
            T.p2m[r][mu] = Rat(T.zrho[r]) * T.h2p[mu][r];
    T.m2p = mat_inverse(T.p2m);
    T.p2h = mat_inverse(T.h2p);
    T.p2e = mat_inverse(T.e2p);
    auto [pos, ok] = cache.emplace(n, std::move(T));
    (void)ok;
    return pos->second;
}

SymFunc sf_elem(Basis b, const Partition& mu) {
    SymFunc f;
    f.degree = part_size(mu);
    f.basis = b;
    f.coeffs[mu] = QTRat(1);
    return f;
}

SymFunc sf_zero(int degree, Basis b) {
    SymFunc f;
    f.degree = degree;
    f.basis = b;
    return f;
}

static std::vector<QTRat> to_p_vec(const SymFunc& f, const BasisTables& T) {
    int N = (int)T.parts.size();
    std::vector<QTRat> v(N);
    if (f.basis == Basis::p) {
        for (auto& [mu, c] : f.coeffs) v[T.index.at(mu)] = c;
        return v;
    }
    const Mat* X2P = nullptr;
    switch (f.basis) {
        case Basis::m: X2P = &T.m2p; break;
        case Basis::e: X2P = &T.e2p; break;
        case Basis::h: X2P = &T.h2p; break;
        case Basis::s: X2P = &T.s2p; break;
        default:
            throw std::logic_error("to_p_vec: unsupported source basis");
    }
    for (auto& [mu, c] : f.coeffs) {
        int i = T.index.at(mu);
        for (int j = 0; j < N; ++j)
            if ((*X2P)[i][j] != 0) v[j] += QTRat((*X2P)[i][j]) * c;
    }
    return v;
}

static SymFunc from_p_vec(const std::vector<QTRat>& v, const BasisTables& T,
                          Basis b) {
    SymFunc f = sf_zero(T.n, b);
    int N = (int)T.parts.size();
    if (b == Basis::p) {
        for (int j = 0; j < N; ++j)
            if (!v[j].is_zero()) f.coeffs[T.parts[j]] = v[j];
        return f;
    }
    const Mat* P2X = nullptr;
    switch (b) {
        case Basis::m: P2X = &T.p2m; break;
        case Basis::e: P2X = &T.p2e; break;
        case Basis::h: P2X = &T.p2h; break;
        case Basis::s: P2X = &T.p2s; break;
        default: throw std::logic_error("from_p_vec: unsupported target basis");
    }
    for (int j = 0; j < N; ++j) {
        if (v[j].is_zero()) continue;
        for (int i = 0; i < N; ++i)
            if ((*P2X)[j][i] != 0) f.add(T.parts[i], QTRat((*P2X)[j][i]) * v[j]);
    }
    return f;
}

SymFunc to_basis(const SymFunc& f, Basis b) {
    if (f.basis == b) return f;
    if (f.basis == Basis::Ht || b == Basis::Ht)
        throw std::logic_error(
            "to_basis: Htilde conversions live in the Macdonald layer");
    const BasisTables& T = tables(f.degree);
    return from_p_vec(to_p_vec(f, T), T, b);
}

SymFunc operator+(const SymFunc& a, const SymFunc& b) {
    if (a.degree != b.degree) throw std::logic_error("SymFunc +: degree mismatch");
    SymFunc bb = b.basis == a.basis ? b : to_basis(b, a.basis);
    SymFunc r = a;
    for (auto& [mu, c] : bb.coeffs) r.add(mu, c);
    return r;
}

SymFunc operator-(const SymFunc& a, const SymFunc& b) {
    return a + (QTRat(-1) * b);
}

SymFunc operator*(const QTRat& c, const SymFunc& f) {
    SymFunc r = sf_zero(f.degree, f.basis);
    if (c.is_zero()) return r;
    for (auto& [mu, v] : f.coeffs) r.coeffs[mu] = c * v;
    return r;
}

bool SymFunc::operator==(const SymFunc& o) const {
    if (degree != o.degree) return false;
    if (basis == o.basis) return coeffs == o.coeffs;
    return to_basis(*this, Basis::p).coeffs == to_basis(o, Basis::p).coeffs;
}

SymFunc sf_mul(const SymFunc& a, const SymFunc& b) {
    SymFunc pa = to_basis(a, Basis::p), pb = to_basis(b, Basis::p);
    SymFunc r = sf_zero(a.degree + b.degree, Basis::p);
    for (auto& [r1, c1] : pa.coeffs)
        for (auto& [r2, c2] : pb.coeffs) {
            Partition key = r1;
            key.insert(key.end(), r2.begin(), r2.end());
            std::sort(key.begin(), key.end(), std::greater<int>());
            r.add(key, c1 * c2);
        }
    return r;
}

QTRat hall_inner(const SymFunc& a, const SymFunc& b) {
    if (a.degree != b.degree) return QTRat();
    SymFunc pa = to_basis(a, Basis::p), pb = to_basis(b, Basis::p);
    QTRat s;
    for (auto& [rho, ca] : pa.coeffs) {
        auto it = pb.coeffs.find(rho);
        if (it == pb.coeffs.end()) continue;
        s += QTRat(Rat(z_of(rho))) * ca * it->second;
    }
    return s;
}

QTRat qt_inner(const SymFunc& a, const SymFunc& b) {
    if (a.degree != b.degree) return QTRat();
    SymFunc pa = to_basis(a, Basis::p), pb = to_basis(b, Basis::p);
    QTRat s;
    for (auto& [rho, ca] : pa.coeffs) {
        auto it = pb.coeffs.find(rho);
        if (it == pb.coeffs.end()) continue;
        QTRat w(Rat(z_of(rho)));
        for (int r : rho) w *= one_minus(r, 0) / one_minus(0, r);
        s += w * ca * it->second;
    }
    return s;
}

SymFunc omega(const SymFunc& f) {
    SymFunc p = to_basis(f, Basis::p);
    SymFunc r = sf_zero(p.degree, Basis::p);
    for (auto& [rho, c] : p.coeffs) {
        QTRat v = c;
        if ((p.degree - (int)rho.size()) % 2) v = QTRat(-1) * v;
        r.coeffs[rho] = v;
    }
    return r;
}

SymFunc down_arrow(const SymFunc& f) {
    SymFunc r = omega(f);
    for (auto& [rho, c] : r.coeffs) c = c.invert_vars();
    return r;
}

SymFunc flip_char(const Partition& mu, const SymFunc& f) {
    return T_mu(mu) * down_arrow(f);
}

SymFunc del_p1(const SymFunc& f) {
    SymFunc p = to_basis(f, Basis::p);
    if (p.degree < 1) throw std::logic_error("del_p1: degree must be >= 1");
    SymFunc r = sf_zero(p.degree - 1, Basis::p);
    for (auto& [rho, c] : p.coeffs) {
        long ones = std::count(rho.begin(), rho.end(), 1);
        if (!ones) continue;
        Partition nr = rho;
        nr.pop_back(); // parts descending, so trailing part is a 1
        r.add(nr, QTRat(Rat(ones)) * c);
    }
    return r;
}

QTRat hilbert_poly(const SymFunc& f) {
    SymFunc s = to_basis(f, Basis::s);
    QTRat out;
    for (auto& [lam, c] : s.coeffs) out += QTRat(Rat(f_lambda(lam))) * c;
    return out;
}

SymFunc pleth_reweight(const SymFunc& f, const std::function<QTRat(long)>& w) {
    SymFunc p = to_basis(f, Basis::p);
    SymFunc r = sf_zero(p.degree, Basis::p);
    for (auto& [rho, c] : p.coeffs) {
        QTRat v = c;
        for (int k : rho) v *= w(k);
        if (!v.is_zero()) r.coeffs[rho] = v;
    }
    return r;
}

SymFunc plethysm_scalar(const SymFunc& f, const QTRat& r) {
    return pleth_reweight(f, [&](long k) { return r.var_pow(k); });
}

} // namespace qtwb
