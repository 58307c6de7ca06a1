#include "qtwb/macdonald.hpp"
#include "qtwb/jsonio.hpp"

#include <fstream>
#include <mutex>
#include <sstream>

namespace qtwb {

QTRat qtrat_invert_t(const QTRat& r) {
    auto flip = [](const QTPoly& p) {
        QTPoly o;
        for (auto& [e, c] : p.terms) o.terms[{e.first, -e.second}] = c;
        return o;
    };
    return QTRat(flip(r.num()), flip(r.den()));
}

namespace {

struct MTab {
    bool have_P = false;
    std::vector<SymFunc> P; // m basis, indexed like tables(n).parts
    bool have_H = false;
    std::vector<SymFunc> Ht; // s basis
    bool have_Kinv = false;
    std::vector<std::vector<QTRat>> Kinv; // inverse of K[lam][mu] = [s_lam] Ht_mu
};

std::map<int, MTab>& mcache() {
    static std::map<int, MTab> c;
    return c;
}

std::mutex& mmx() {
    static std::mutex m;
    return m;
}

void ensure_P(int n) {
    MTab& M = mcache()[n];
    if (M.have_P) return;
    const BasisTables& T = tables(n);
    int N = (int)T.parts.size();
    M.P.resize(N);
    // Gram-Schmidt on the monomial basis along a linear extension of
    // dominance; yields the orthogonal family with unitriangular m-expansion
    std::vector<QTRat> norms(N);
    for (int i = 0; i < N; ++i) {
        SymFunc f = sf_elem(Basis::m, T.parts[i]);
        for (int j = 0; j < i; ++j) {
            QTRat c = qt_inner(f, M.P[j]) / norms[j];
            if (!c.is_zero()) f = f - c * M.P[j];
        }
        M.P[i] = to_basis(f, Basis::m);
        norms[i] = qt_inner(M.P[i], M.P[i]);
    }
    M.have_P = true;
}

void ensure_H(int n) {
    MTab& M = mcache()[n];
    if (M.have_H) return;
    ensure_P(n);
    const BasisTables& T = tables(n);
    int N = (int)T.parts.size();
    M.Ht.resize(N);
    for (int i = 0; i < N; ++i) {
        const Partition& mu = T.parts[i];
        SymFunc J = hook_products(mu).h * M.P[i];
        SymFunc g = pleth_reweight(J, [](long k) {
            return QTRat(1) / one_minus(0, k); // p_k /(1 - t^k)
        });
        g = to_basis(g, Basis::s);
        SymFunc H = sf_zero(n, Basis::s);
        QTRat tn = QTRat::mono(1, 0, n_stat(mu));
        for (auto& [lam, c] : g.coeffs) H.add(lam, tn * qtrat_invert_t(c));
        M.Ht[i] = H;
    }
    M.have_H = true;
}

void ensure_Kinv(int n) {
    MTab& M = mcache()[n];
    if (M.have_Kinv) return;
    ensure_H(n);
    const BasisTables& T = tables(n);
    int N = (int)T.parts.size();
    std::vector<std::vector<QTRat>> K(N, std::vector<QTRat>(N));
    for (int mu = 0; mu < N; ++mu)
        for (auto& [lam, c] : M.Ht[mu].coeffs) K[T.index.at(lam)][mu] = c;
    // Gauss-Jordan over the rational function field
    std::vector<std::vector<QTRat>> inv(N, std::vector<QTRat>(N));
    for (int i = 0; i < N; ++i) inv[i][i] = QTRat(1);
    for (int col = 0; col < N; ++col) {
        int piv = -1;
        for (int r = col; r < N; ++r)
            if (!K[r][col].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) throw std::logic_error("Kostka matrix singular");
        std::swap(K[piv], K[col]);
        std::swap(inv[piv], inv[col]);
        QTRat d = K[col][col];
        for (int j = 0; j < N; ++j) {
            if (!K[col][j].is_zero()) K[col][j] /= d;
            if (!inv[col][j].is_zero()) inv[col][j] /= d;
        }
        for (int r = 0; r < N; ++r) {
            if (r == col || K[r][col].is_zero()) continue;
            QTRat f = K[r][col];
            for (int j = 0; j < N; ++j) {
                if (!K[col][j].is_zero()) K[r][j] -= f * K[col][j];
                if (!inv[col][j].is_zero()) inv[r][j] -= f * inv[col][j];
            }
        }
    }
    M.Kinv = std::move(inv);
    M.have_Kinv = true;
}

} // namespace

SymFunc macd_P(const Partition& mu) {
    std::lock_guard<std::mutex> g(mmx());
    int n = part_size(mu);
    ensure_P(n);
    return mcache()[n].P[tables(n).index.at(mu)];
}

SymFunc macd_J(const Partition& mu) {
    return hook_products(mu).h * macd_P(mu);
}

SymFunc tilde_H(const Partition& mu) {
    std::lock_guard<std::mutex> g(mmx());
    int n = part_size(mu);
    ensure_H(n);
    return mcache()[n].Ht[tables(n).index.at(mu)];
}

QTRat ktilde(const Partition& lambda, const Partition& mu) {
    return tilde_H(mu).coeff(lambda);
}

SymFunc to_schur_full(const SymFunc& f) {
    if (f.basis != Basis::Ht) return to_basis(f, Basis::s);
    SymFunc out = sf_zero(f.degree, Basis::s);
    for (auto& [mu, c] : f.coeffs) {
        SymFunc H = tilde_H(mu);
        for (auto& [lam, k] : H.coeffs) out.add(lam, c * k);
    }
    return out;
}

SymFunc to_Ht(const SymFunc& f) {
    int n = f.degree;
    if (f.basis == Basis::Ht) return f;
    SymFunc s = to_basis(f, Basis::s);
    {
        std::lock_guard<std::mutex> g(mmx());
        ensure_Kinv(n);
    }
    const BasisTables& T = tables(n);
    const MTab& M = mcache()[n];
    int N = (int)T.parts.size();
    std::vector<QTRat> sv(N);
    for (auto& [lam, c] : s.coeffs) sv[T.index.at(lam)] = c;
    SymFunc out = sf_zero(n, Basis::Ht);
    for (int mu = 0; mu < N; ++mu) {
        QTRat c;
        for (int l = 0; l < N; ++l)
            if (!sv[l].is_zero() && !M.Kinv[mu][l].is_zero())
                c += M.Kinv[mu][l] * sv[l];
        if (!c.is_zero()) out.coeffs[T.parts[mu]] = c;
    }
    return out;
}

SymFunc to_basis_full(const SymFunc& f, Basis b) {
    if (b == Basis::Ht) return to_Ht(f);
    if (f.basis == Basis::Ht) return to_basis(to_schur_full(f), b);
    return to_basis(f, b);
}

SymFunc apply_eigen_op(const SymFunc& f,
                       const std::function<QTRat(const Partition&)>& g) {
    SymFunc h = to_Ht(f);
    SymFunc out = sf_zero(f.degree, Basis::Ht);
    for (auto& [lam, c] : h.coeffs) out.add(lam, g(lam) * c);
    return to_schur_full(out);
}

SymFunc nabla(const SymFunc& f, long k) {
    if (k == 0) return to_schur_full(f);
    return apply_eigen_op(f, [k](const Partition& lam) {
        QTRat T = T_mu(lam);
        QTRat r(1);
        long a = k >= 0 ? k : -k;
        QTRat b = k >= 0 ? T : T.inverse();
        for (long i = 0; i < a; ++i) r *= b;
        return r;
    });
}

SymFunc specialize_t1(const Partition& beta) {
    SymFunc acc = sf_zero(0, Basis::p);
    acc.coeffs[{}] = QTRat(1);
    for (int b : beta) {
        SymFunc hb = pleth_reweight(sf_elem(Basis::h, Partition{b}), [](long k) {
            return QTRat(1) / one_minus(k, 0); // p_k /(1 - q^k)
        });
        QTRat qfact(1);
        for (int j = 1; j <= b; ++j) qfact *= one_minus(j, 0);
        acc = sf_mul(acc, qfact * hb);
    }
    return acc;
}

SymFunc delta_diff(const SymFunc& f) {
    SymFunc p = to_schur_full(f);
    p = to_basis(p, Basis::p);
    int n = p.degree;
    SymFunc out = sf_zero(n, Basis::p);
    for (auto& [rho, c] : p.coeffs) {
        int L = (int)rho.size();
        if (L > 20) throw std::logic_error("delta_diff: partition too long");
        for (unsigned mask = 1; mask < (1u << L); ++mask) {
            QTRat w = c;
            Partition rest;
            long d = 0;
            for (int i = 0; i < L; ++i) {
                if (mask & (1u << i)) {
                    d += rho[i];
                    w *= one_minus(0, rho[i]) * one_minus(rho[i], 0);
                } else {
                    rest.push_back(rho[i]);
                }
            }
            if (d % 2) w = QTRat(-1) * w;
            // term: - c * prod a_k * (-1)^d e_d p_rest
            SymFunc ed = to_basis(sf_elem(Basis::e, Partition{(int)d}), Basis::p);
            SymFunc pr = sf_zero(n - (int)d, Basis::p);
            pr.coeffs[rest] = QTRat(1);
            SymFunc prod = sf_mul(ed, pr);
            for (auto& [key, v] : prod.coeffs) out.add(key, QTRat(-1) * w * v);
        }
    }
    return to_basis(out, Basis::s);
}

// ---- persisted tables ----

static std::string table_dump(int n, const std::vector<SymFunc>& Ht) {
    std::ostringstream os;
    os << "degree " << n << "\n";
    for (auto& H : Ht) os << H.str() << "\n";
    return os.str();
}

std::string table_build(int n) {
    std::vector<SymFunc> Ht;
    for (auto& mu : tables(n).parts) Ht.push_back(tilde_H(mu));
    nlohmann::json j;
    j["degree"] = n;
    j["entries"] = nlohmann::json::array();
    for (size_t i = 0; i < Ht.size(); ++i) {
        j["entries"].push_back(nlohmann::json{
            {"mu", tables(n).parts[i]}, {"fn", sf_to_json(Ht[i])}});
    }
    std::ostringstream h;
    h << std::hex << fnv1a(table_dump(n, Ht));
    j["hash"] = h.str();
    return j.dump(1);
}

void table_save(int n, const std::string& dir) {
    std::ostringstream name;
    name << dir << "/htilde_n" << n << ".json";
    std::ofstream out(name.str());
    if (!out) throw std::runtime_error("table_save: cannot write " + name.str());
    out << table_build(n);
}

void table_load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("table_load: cannot open " + path);
    nlohmann::json j;
    in >> j;
    int n = j.at("degree").get<int>();
    const BasisTables& T = tables(n);
    std::vector<SymFunc> Ht(T.parts.size());
    try {
        for (auto& e : j.at("entries")) {
            Partition mu = e.at("mu").get<Partition>();
            SymFunc f = sf_from_json(e.at("fn"));
            if (f.degree != n || f.basis != Basis::s)
                throw checksum_error("table_load: malformed entry in " + path);
            Ht[T.index.at(mu)] = f;
        }
    } catch (const checksum_error&) {
        throw;
    } catch (const std::exception& e) {
        // unparseable payload is corruption too
        throw checksum_error("table_load: corrupt entry in " + path + ": " +
                             e.what());
    }
    std::ostringstream h;
    h << std::hex << fnv1a(table_dump(n, Ht));
    if (j.at("hash").get<std::string>() != h.str())
        throw checksum_error("table_load: content hash mismatch in " + path);
    std::lock_guard<std::mutex> g(mmx());
    MTab& M = mcache()[n];
    M.Ht = std::move(Ht);
    M.have_H = true;
}

} // namespace qtwb
