#include "qtwb/orbit.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>

namespace qtwb {

BiPoly bp_add(const BiPoly& a, const BiPoly& b) {
    BiPoly r = a;
    for (auto& [m, c] : b) {
        Rat& v = r[m];
        v += c;
        if (v == 0) r.erase(m);
    }
    return r;
}

BiPoly bp_scale(const BiPoly& a, const Rat& c) {
    if (c == 0) return {};
    BiPoly r = a;
    for (auto& [m, v] : r) v *= c;
    return r;
}

BiPoly bp_diff(const BiPoly& a, int var) {
    BiPoly r;
    for (auto& [m, c] : a) {
        if (m[var] == 0) continue;
        Mono e = m;
        e[var] -= 1;
        r[e] += c * m[var];
    }
    return r;
}

BiPoly bp_apply_diffop(const BiPoly& P, const BiPoly& F) {
    BiPoly out;
    for (auto& [mp, cp] : P)
        for (auto& [mf, cf] : F) {
            Rat w = cp * cf;
            Mono e(mf.size());
            bool ok = true;
            for (size_t i = 0; i < mf.size() && ok; ++i) {
                if (mf[i] < mp[i]) {
                    ok = false;
                    break;
                }
                e[i] = mf[i] - mp[i];
                for (int k = 0; k < mp[i]; ++k) w *= mf[i] - k;
            }
            if (!ok) continue;
            Rat& v = out[e];
            v += w;
            if (v == 0) out.erase(e);
        }
    return out;
}

Rat apolar(const BiPoly& a, const BiPoly& b) {
    Rat s = 0;
    for (auto& [m, c] : a) {
        auto it = b.find(m);
        if (it == b.end()) continue;
        Rat w = c * it->second;
        for (int e : m)
            for (int k = 2; k <= e; ++k) w *= k;
        s += w;
    }
    return s;
}

BiPoly bp_permute(const BiPoly& a, const std::vector<int>& sigma) {
    int n = (int)sigma.size();
    BiPoly r;
    for (auto& [m, c] : a) {
        Mono e(2 * n, 0);
        for (int j = 0; j < n; ++j) {
            e[sigma[j]] = m[j];
            e[n + sigma[j]] = m[n + j];
        }
        r[e] += c;
    }
    return r;
}

BiPoly delta_mu(const Partition& mu) {
    int n = part_size(mu);
    if (n < 1 || n > 6)
        throw std::invalid_argument("delta_mu: size must be between 1 and 6");
    std::vector<std::pair<int, int>> be; // (x-exp, y-exp) per cell
    for (int r = 1; r <= (int)mu.size(); ++r)
        for (int c = 1; c <= mu[r - 1]; ++c) be.push_back({r - 1, c - 1});
    std::sort(be.begin(), be.end());
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    BiPoly out;
    do {
        int inv = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inv;
        Mono e(2 * n, 0);
        for (int i = 0; i < n; ++i) {
            e[perm[i]] += be[i].first;
            e[n + perm[i]] += be[i].second;
        }
        out[e] += (inv % 2) ? -1 : 1;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// ---- echelon machinery -------------------------------------------------

// insert p into a reduced row set; returns false if p reduced to zero
static bool rref_insert(std::vector<BiPoly>& rows, BiPoly p) {
    for (auto& r : rows) {
        auto it = p.find(r.begin()->first);
        if (it != p.end()) p = bp_add(p, bp_scale(r, -it->second));
    }
    if (p.empty()) return false;
    p = bp_scale(p, 1 / p.begin()->second);
    const Mono lead = p.begin()->first;
    for (auto& r : rows) {
        auto it = r.find(lead);
        if (it != r.end()) r = bp_add(r, bp_scale(p, -it->second));
    }
    auto pos = std::lower_bound(
        rows.begin(), rows.end(), p, [](const BiPoly& a, const BiPoly& b) {
            return std::greater<Mono>()(a.begin()->first, b.begin()->first);
        });
    rows.insert(pos, std::move(p));
    return true;
}

static std::pair<int, int> bidegree(const BiPoly& p, int n) {
    auto& m = p.begin()->first;
    int dx = 0, dy = 0;
    for (int i = 0; i < n; ++i) dx += m[i];
    for (int i = n; i < 2 * n; ++i) dy += m[i];
    return {dx, dy};
}

Space space_of(int n, const std::vector<BiPoly>& gens) {
    Space v;
    v.n = n;
    for (auto& g : gens) {
        if (g.empty()) continue;
        auto d = bidegree(g, n);
        auto& rows = v.blocks[d];
        rref_insert(rows, g);
        if (rows.empty()) v.blocks.erase(d);
    }
    return v;
}

Space derivative_module(const BiPoly& delta, int n) {
    if (delta.empty()) throw std::invalid_argument("derivative_module: zero");
    Space v;
    v.n = n;
    auto d0 = bidegree(delta, n);
    v.blocks[d0].push_back(bp_scale(delta, 1 / delta.begin()->second));
    for (int tot = d0.first + d0.second; tot >= 1; --tot) {
        for (auto& [d, rows] : v.blocks) {
            if (d.first + d.second != tot) continue;
            for (auto& r : rows)
                for (int var = 0; var < 2 * n; ++var) {
                    BiPoly dr = bp_diff(r, var);
                    if (dr.empty()) continue;
                    auto dd = bidegree(dr, n);
                    rref_insert(v.blocks[dd], dr);
                }
        }
    }
    std::erase_if(v.blocks, [](auto& kv) { return kv.second.empty(); });
    return v;
}

Space derivative_module(const Partition& mu) {
    return derivative_module(delta_mu(mu), part_size(mu));
}

int space_dim(const Space& v) {
    int d = 0;
    for (auto& [k, rows] : v.blocks) d += (int)rows.size();
    return d;
}

bool space_eq(const Space& a, const Space& b) {
    return a.n == b.n && a.blocks == b.blocks;
}

// basis of the right nullspace of a dense matrix
static std::vector<std::vector<Rat>>
nullspace(std::vector<std::vector<Rat>> a, int ncols) {
    int nrows = (int)a.size();
    std::vector<int> pcols;
    int r = 0;
    for (int c = 0; c < ncols && r < nrows; ++c) {
        int pr = -1;
        for (int i = r; i < nrows; ++i)
            if (a[i][c] != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        std::swap(a[r], a[pr]);
        Rat inv = Rat(1) / a[r][c];
        for (int j = c; j < ncols; ++j) a[r][j] *= inv;
        for (int i = 0; i < nrows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rat f = a[i][c];
            for (int j = c; j < ncols; ++j) a[i][j] -= f * a[r][j];
        }
        pcols.push_back(c);
        ++r;
    }
    std::vector<bool> isp(ncols, false);
    for (int c : pcols) isp[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (int f = 0; f < ncols; ++f) {
        if (isp[f]) continue;
        std::vector<Rat> x(ncols, 0);
        x[f] = 1;
        for (size_t k = 0; k < pcols.size(); ++k) x[pcols[k]] = -a[k][f];
        basis.push_back(std::move(x));
    }
    return basis;
}

Space space_intersect(const Space& a, const Space& b) {
    if (a.n != b.n) throw std::logic_error("space_intersect: arity mismatch");
    Space out;
    out.n = a.n;
    for (auto& [d, ar] : a.blocks) {
        auto it = b.blocks.find(d);
        if (it == b.blocks.end()) continue;
        const auto& br = it->second;
        std::map<Mono, int, std::greater<Mono>> col;
        for (auto& p : ar)
            for (auto& [m, c] : p) col.emplace(m, 0);
        for (auto& p : br)
            for (auto& [m, c] : p) col.emplace(m, 0);
        int M = 0;
        for (auto& [m, i] : col) i = M++;
        int k1 = (int)ar.size(), k2 = (int)br.size();
        // columns of the system are the k1+k2 combination coefficients;
        // rows are monomials
        std::vector<std::vector<Rat>> sys(M, std::vector<Rat>(k1 + k2, 0));
        for (int i = 0; i < k1; ++i)
            for (auto& [m, c] : ar[i]) sys[col[m]][i] = c;
        for (int j = 0; j < k2; ++j)
            for (auto& [m, c] : br[j]) sys[col[m]][k1 + j] = -c;
        auto ns = nullspace(std::move(sys), k1 + k2);
        std::vector<BiPoly>& rows = out.blocks[d];
        for (auto& v : ns) {
            BiPoly w;
            for (int i = 0; i < k1; ++i)
                if (v[i] != 0) w = bp_add(w, bp_scale(ar[i], v[i]));
            if (!w.empty()) rref_insert(rows, w);
        }
        if (rows.empty()) out.blocks.erase(d);
    }
    return out;
}

Space space_join(const Space& a, const Space& b) {
    if (a.n != b.n) throw std::logic_error("space_join: arity mismatch");
    Space out = a;
    for (auto& [d, br] : b.blocks) {
        auto& rows = out.blocks[d];
        for (auto& p : br) rref_insert(rows, p);
    }
    return out;
}

Space ortho_complement_in(const Space& v, const Space& w) {
    if (v.n != w.n)
        throw std::logic_error("ortho_complement_in: arity mismatch");
    Space out;
    out.n = w.n;
    for (auto& [d, wr] : w.blocks) {
        auto it = v.blocks.find(d);
        if (it == v.blocks.end()) {
            out.blocks[d] = wr; // no constraints in this bidegree
            continue;
        }
        const auto& vr = it->second;
        int kv = (int)vr.size(), kw = (int)wr.size();
        std::vector<std::vector<Rat>> gram(kv, std::vector<Rat>(kw));
        for (int i = 0; i < kv; ++i)
            for (int j = 0; j < kw; ++j) gram[i][j] = apolar(vr[i], wr[j]);
        auto ns = nullspace(std::move(gram), kw);
        std::vector<BiPoly>& rows = out.blocks[d];
        for (auto& c : ns) {
            BiPoly p;
            for (int j = 0; j < kw; ++j)
                if (c[j] != 0) p = bp_add(p, bp_scale(wr[j], c[j]));
            if (!p.empty()) rref_insert(rows, p);
        }
        if (rows.empty()) out.blocks.erase(d);
    }
    return out;
}

Space flip_space(const Space& v, const Partition& mu) {
    BiPoly delta = delta_mu(mu);
    std::vector<BiPoly> gens;
    for (auto& [d, rows] : v.blocks)
        for (auto& p : rows) gens.push_back(bp_apply_diffop(p, delta));
    return space_of(v.n, gens);
}

QTRat bigraded_hilbert(const Space& v) {
    QTPoly h;
    for (auto& [d, rows] : v.blocks)
        h.add_term(d.second, d.first, (long)rows.size());
    return QTRat(h);
}

static std::vector<int> perm_of_type(const Partition& rho, int n) {
    std::vector<int> sigma(n);
    int s = 0;
    for (int p : rho) {
        for (int i = 0; i < p; ++i) sigma[s + i] = s + (i + 1) % p;
        s += p;
    }
    return sigma;
}

SymFunc bigraded_frobenius(const Space& v) {
    int n = v.n;
    const BasisTables& tb = tables(n);
    int nc = (int)tb.parts.size();
    SymFunc out = sf_zero(n, Basis::s);
    for (auto& [d, rows] : v.blocks) {
        std::vector<Rat> tr(nc, 0);
        for (int ci = 0; ci < nc; ++ci) {
            auto sigma = perm_of_type(tb.parts[ci], n);
            for (size_t k = 0; k < rows.size(); ++k) {
                BiPoly img = bp_permute(rows[k], sigma);
                // coordinates against the echelon basis come straight off
                // the pivot monomials; the residual must vanish
                BiPoly res = img;
                Rat diag = 0;
                for (size_t j = 0; j < rows.size(); ++j) {
                    auto it = img.find(rows[j].begin()->first);
                    if (it == img.end()) continue;
                    if (j == k) diag = it->second;
                    res = bp_add(res, bp_scale(rows[j], -it->second));
                }
                if (!res.empty())
                    throw std::logic_error(
                        "bigraded_frobenius: block is not permutation-stable");
                tr[ci] += diag;
            }
        }
        for (int li = 0; li < nc; ++li) {
            Rat mult = 0;
            for (int ci = 0; ci < nc; ++ci)
                mult += Rat(tb.chi[li][ci]) * tr[ci] / Rat(tb.zrho[ci]);
            if (mult != 0)
                out.add(tb.parts[li], QTRat::mono(mult, d.second, d.first));
        }
    }
    return out;
}

bool verify_sf_dimensions(const Partition& mu, std::string* msg) {
    int m = (int)corners(mu).size();
    int n = part_size(mu) - 1;
    std::vector<Space> mods;
    for (int i = 0; i < m; ++i)
        mods.push_back(derivative_module(predecessor(mu, i)));
    Int nf = factorial(n);
    std::map<unsigned, int> dim_of;
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
        std::optional<Space> cur;
        int sz = 0;
        for (int i = 0; i < m; ++i)
            if (mask & (1u << i)) {
                ++sz;
                cur = cur ? space_intersect(*cur, mods[i]) : mods[i];
            }
        int dim = space_dim(*cur);
        dim_of[mask] = dim;
        Int expect = nf / sz;
        if (Int(dim) != expect) {
            if (msg) {
                std::ostringstream os;
                os << part_str(mu) << ": corner set mask " << mask << " has dim "
                   << dim << ", expected " << expect.get_str();
                *msg = os.str();
            }
            return false;
        }
    }
    if (m == 3) {
        // derived inclusion-exclusion counts
        Int d1 = Int(dim_of[1]) - 2 * Int(dim_of[3]) + Int(dim_of[7]);
        Int d2 = Int(dim_of[3]) - Int(dim_of[7]);
        if (d1 != nf / 3 || d2 != nf / 6) {
            if (msg) *msg = part_str(mu) + ": three-corner derived counts off";
            return false;
        }
    }
    return true;
}

} // namespace qtwb
