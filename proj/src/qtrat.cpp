#include "qtwb/qtrat.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace qtwb {

// ---- internal dense representations used only for gcd / exact division ----
// ZP: polynomial in t over Z, index = exponent, no trailing zeros.
// QP: polynomial in q with ZP coefficients, no trailing zeros.
namespace {

using ZP = std::vector<Int>;
using QP = std::vector<ZP>;

void zp_trim(ZP& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

bool zp_zero(const ZP& a) { return a.empty(); }

int zp_deg(const ZP& a) { return (int)a.size() - 1; }

ZP zp_mul(const ZP& a, const ZP& b) {
    if (a.empty() || b.empty()) return {};
    ZP r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    zp_trim(r);
    return r;
}

ZP zp_scal(const ZP& a, const Int& c) {
    if (c == 0) return {};
    ZP r = a;
    for (auto& x : r) x *= c;
    return r;
}

ZP zp_sub(const ZP& a, const ZP& b) {
    ZP r = a;
    if (b.size() > r.size()) r.resize(b.size(), Int(0));
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    zp_trim(r);
    return r;
}

Int zp_content(const ZP& a) {
    Int g(0);
    for (auto& x : a) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

ZP zp_prim(const ZP& a) {
    if (a.empty()) return a;
    Int g = zp_content(a);
    if (a.back() < 0) g = -g;
    ZP r = a;
    for (auto& x : r) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return r;
}

// pseudo-remainder (up to a scalar; callers take primitive parts)
ZP zp_prem(ZP a, const ZP& b) {
    const Int& lb = b.back();
    int db = zp_deg(b);
    while (!zp_zero(a) && zp_deg(a) >= db) {
        int sh = zp_deg(a) - db;
        Int la = a.back();
        a = zp_scal(a, lb);
        ZP s = zp_scal(b, la);
        ZP s2(sh, Int(0));
        s2.insert(s2.end(), s.begin(), s.end());
        a = zp_sub(a, s2);
    }
    return a;
}

ZP zp_neg_if(ZP a) {
    if (!a.empty() && a.back() < 0)
        for (auto& x : a) x = -x;
    return a;
}

ZP zp_gcd(ZP a, ZP b) {
    // gcd in Z[t] including integer content
    if (zp_zero(a)) return zp_neg_if(b);
    if (zp_zero(b)) return zp_neg_if(a);
    Int cg;
    mpz_gcd(cg.get_mpz_t(), zp_content(a).get_mpz_t(), zp_content(b).get_mpz_t());
    a = zp_prim(a);
    b = zp_prim(b);
    if (zp_deg(a) < zp_deg(b)) std::swap(a, b);
    while (!zp_zero(b)) {
        ZP r = zp_prem(a, b);
        a = b;
        b = zp_prim(r);
    }
    return zp_scal(a, cg);
}

// exact division in Z[t]; throws if the quotient is not integral
ZP zp_divexact(ZP a, const ZP& b) {
    if (zp_zero(a)) return {};
    int db = zp_deg(b);
    if (zp_deg(a) < db) throw std::logic_error("zp_divexact: not divisible");
    ZP q(zp_deg(a) - db + 1, Int(0));
    while (!zp_zero(a)) {
        int sh = zp_deg(a) - db;
        if (sh < 0) throw std::logic_error("zp_divexact: not divisible");
        Int c, r;
        mpz_tdiv_qr(c.get_mpz_t(), r.get_mpz_t(), a.back().get_mpz_t(),
                    b.back().get_mpz_t());
        if (r != 0) throw std::logic_error("zp_divexact: not divisible");
        q[sh] = c;
        ZP s = zp_scal(b, c);
        ZP s2(sh, Int(0));
        s2.insert(s2.end(), s.begin(), s.end());
        a = zp_sub(a, s2);
        if (!zp_zero(a) && zp_deg(a) >= db + sh)
            throw std::logic_error("zp_divexact: not divisible");
    }
    return q;
}

void qp_trim(QP& a) {
    while (!a.empty() && zp_zero(a.back())) a.pop_back();
}

bool qp_zero(const QP& a) { return a.empty(); }

int qp_deg(const QP& a) { return (int)a.size() - 1; }

QP qp_mul_zp(const QP& a, const ZP& c) {
    if (zp_zero(c)) return {};
    QP r;
    r.reserve(a.size());
    for (auto& x : a) r.push_back(zp_mul(x, c));
    return r;
}

QP qp_sub(QP a, const QP& b) {
    if (b.size() > a.size()) a.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i) a[i] = zp_sub(a[i], b[i]);
    qp_trim(a);
    return a;
}

ZP qp_content(const QP& a) {
    ZP g;
    for (auto& c : a) g = zp_gcd(g, c);
    return g;
}

QP qp_div_zp(const QP& a, const ZP& g) {
    QP r;
    r.reserve(a.size());
    for (auto& c : a) r.push_back(zp_zero(c) ? ZP{} : zp_divexact(c, g));
    return r;
}

QP qp_prim(const QP& a) {
    if (qp_zero(a)) return a;
    return qp_div_zp(a, qp_content(a));
}

QP qp_prem(QP a, const QP& b) {
    const ZP& lb = b.back();
    int db = qp_deg(b);
    while (!qp_zero(a) && qp_deg(a) >= db) {
        int sh = qp_deg(a) - db;
        ZP la = a.back();
        a = qp_mul_zp(a, lb);
        QP s = qp_mul_zp(b, la);
        QP s2(sh);
        s2.insert(s2.end(), s.begin(), s.end());
        a = qp_sub(a, s2);
    }
    return a;
}

QP qp_gcd_prs(QP a, QP b) {
    if (qp_deg(a) < qp_deg(b)) std::swap(a, b);
    while (!qp_zero(b)) {
        QP r = qp_prem(a, b);
        a = b;
        b = qp_prim(r);
    }
    return a;
}

int qp_tdeg(const QP& a) {
    int d = -1;
    for (auto& z : a) d = std::max(d, zp_deg(z));
    return d;
}

Int zp_eval(const ZP& a, long tau) {
    Int v(0);
    for (size_t i = a.size(); i-- > 0;) v = v * tau + a[i];
    return v;
}

ZP qp_eval_t(const QP& a, long tau) {
    ZP r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = zp_eval(a[i], tau);
    zp_trim(r);
    return r;
}

// interpolate through (xs[i], ys[i]); monomial coefficients, low first
std::vector<Rat> interp(const std::vector<long>& xs, std::vector<Rat> dd) {
    int n = (int)xs.size();
    for (int k = 1; k < n; ++k)
        for (int i = n - 1; i >= k; --i)
            dd[i] = (dd[i] - dd[i - 1]) / Rat(xs[i] - xs[i - k]);
    std::vector<Rat> c{dd[n - 1]};
    for (int i = n - 2; i >= 0; --i) {
        c.insert(c.begin(), Rat(0));
        for (size_t j = 0; j + 1 < c.size(); ++j) c[j] -= Rat(xs[i]) * c[j + 1];
        c[0] += dd[i];
    }
    return c;
}

QP qp_divexact(QP a, const QP& b);
QP to_qp(const QTPoly& p);
Int coeff_lcm(const QTPoly& p);

bool qp_divides(const QP& g, const QP& a) {
    try {
        qp_divexact(a, g);
        return true;
    } catch (const std::logic_error&) {
        return false;
    }
}

// gcd in Z[t][q] by evaluation at t = tau and interpolation; the candidate
// is certified by exact division, with the pseudo-remainder sequence as a
// fallback
QP qp_gcd(const QP& A, const QP& B) {
    if (qp_zero(A)) return B;
    if (qp_zero(B)) return A;
    ZP cg = zp_gcd(qp_content(A), qp_content(B));
    QP a = qp_prim(A), b = qp_prim(B);
    if (qp_deg(a) == 0 || qp_deg(b) == 0) return {cg};
    ZP lam = zp_gcd(a.back(), b.back());
    int dtb = std::min(qp_tdeg(a), qp_tdeg(b)) + zp_deg(lam);
    int need = dtb + 1;
    std::vector<long> taus;
    std::vector<std::vector<Rat>> imgs; // lam-scaled gcd images, rational
    int dq = 1 << 30;
    long tau = 2;
    bool fallback = false;
    while ((int)taus.size() < need) {
        if (tau > 2 * need + 64) {
            fallback = true;
            break;
        }
        long cur = tau++;
        if (zp_eval(a.back(), cur) == 0 || zp_eval(b.back(), cur) == 0)
            continue;
        ZP g = zp_gcd(qp_eval_t(a, cur), qp_eval_t(b, cur));
        int d = zp_deg(g);
        if (d == 0) return {cg}; // certified coprime up to content
        if (d > dq) continue;    // unlucky evaluation point
        if (d < dq) {
            dq = d;
            taus.clear();
            imgs.clear();
        }
        Rat s = Rat(zp_eval(lam, cur)) / Rat(g.back());
        std::vector<Rat> img(dq + 1);
        for (int j = 0; j <= dq; ++j) img[j] = Rat(g[j]) * s;
        taus.push_back(cur);
        imgs.push_back(std::move(img));
    }
    if (!fallback) {
        // interpolate each q-coefficient as a polynomial in t
        QTPoly acc;
        for (int j = 0; j <= dq; ++j) {
            std::vector<Rat> vals(taus.size());
            for (size_t i = 0; i < taus.size(); ++i) vals[i] = imgs[i][j];
            auto ct = interp(taus, vals);
            for (size_t k = 0; k < ct.size(); ++k)
                if (ct[k] != 0) acc.add_term(j, k, ct[k]);
        }
        if (!acc.is_zero()) {
            Int l = coeff_lcm(acc);
            QP cand = qp_prim(to_qp(acc.scaled(Rat(l))));
            if (qp_divides(cand, a) && qp_divides(cand, b))
                return qp_mul_zp(cand, cg);
        }
    }
    return qp_mul_zp(qp_gcd_prs(a, b), cg);
}

QP qp_divexact(QP a, const QP& b) {
    if (qp_zero(a)) return {};
    int db = qp_deg(b);
    if (qp_deg(a) < db) throw std::logic_error("qp_divexact: not divisible");
    QP q(qp_deg(a) - db + 1);
    while (!qp_zero(a)) {
        int sh = qp_deg(a) - db;
        if (sh < 0) throw std::logic_error("qp_divexact: not divisible");
        ZP c = zp_divexact(a.back(), b.back());
        q[sh] = c;
        QP s = qp_mul_zp(b, c);
        QP s2(sh);
        s2.insert(s2.end(), s.begin(), s.end());
        a = qp_sub(a, s2);
        if (!qp_zero(a) && qp_deg(a) >= db + sh)
            throw std::logic_error("qp_divexact: not divisible");
    }
    return q;
}

// QTPoly with integer coefficients and min exponents 0 -> QP
QP to_qp(const QTPoly& p) {
    QP r;
    for (auto& [e, c] : p.terms) {
        if ((size_t)e.first >= r.size()) r.resize(e.first + 1);
        ZP& z = r[e.first];
        if ((size_t)e.second >= z.size()) z.resize(e.second + 1, Int(0));
        z[e.second] = c.get_num(); // denominator is 1 by construction
    }
    return r;
}

QTPoly from_qp(const QP& p) {
    QTPoly r;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = 0; j < p[i].size(); ++j)
            if (p[i][j] != 0) r.terms[{(long)i, (long)j}] = Rat(p[i][j]);
    return r;
}

bool qp_is_unit(const QP& p) {
    return p.size() == 1 && p[0].size() == 1;
}

// scale to integer coefficients: returns multiplier L with L*p integral
Int coeff_lcm(const QTPoly& p) {
    Int l(1);
    for (auto& [e, c] : p.terms)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    return l;
}

Int int_content(const QTPoly& p) {
    Int g(0);
    for (auto& [e, c] : p.terms) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

} // namespace

QTRat::QTRat(const QTPoly& n, const QTPoly& d) : num_(n), den_(d) {
    canonicalize();
}

void QTRat::canonicalize() {
    if (den_.is_zero()) throw std::domain_error("QTRat: zero denominator");
    if (num_.is_zero()) {
        den_ = QTPoly(1);
        return;
    }

    auto [nq, nt] = num_.min_exps();
    auto [dq, dt] = den_.min_exps();
    long off_q = nq - dq, off_t = nt - dt;
    QTPoly n = num_.shifted(-nq, -nt);
    QTPoly d = den_.shifted(-dq, -dt);

    // polynomial gcd, skipped when the denominator is a lone term
    if (d.terms.size() > 1 && n.terms.size() > 1) {
        Int ln = coeff_lcm(n), ld = coeff_lcm(d);
        QP N = to_qp(n.scaled(Rat(ln)));
        QP D = to_qp(d.scaled(Rat(ld)));
        QP G = qp_gcd(N, D);
        if (!qp_is_unit(G)) {
            N = qp_divexact(N, G);
            D = qp_divexact(D, G);
        }
        // value changed by ld/ln relative to n/d; fold into n
        n = from_qp(N).scaled(Rat(ld) / Rat(ln));
        d = from_qp(D);
    }

    // scale so both are integral with coprime contents
    Int l;
    mpz_lcm(l.get_mpz_t(), coeff_lcm(n).get_mpz_t(), coeff_lcm(d).get_mpz_t());
    n = n.scaled(Rat(l));
    d = d.scaled(Rat(l));
    Int g;
    mpz_gcd(g.get_mpz_t(), int_content(n).get_mpz_t(), int_content(d).get_mpz_t());
    if (g > 1) {
        n = n.scaled(Rat(1) / Rat(g));
        d = d.scaled(Rat(1) / Rat(g));
    }
    // fix sign on the lexicographically least denominator term
    if (d.terms.begin()->second < 0) {
        n = -n;
        d = -d;
    }
    num_ = n.shifted(off_q, off_t);
    den_ = d;
}

QTRat QTRat::operator-() const {
    QTRat r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

QTRat QTRat::operator+(const QTRat& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den_ == o.den_) {
        QTRat r(num_ + o.num_, den_);
        return r;
    }
    return QTRat(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

QTRat QTRat::operator-(const QTRat& o) const { return *this + (-o); }

QTRat QTRat::operator*(const QTRat& o) const {
    if (is_zero() || o.is_zero()) return QTRat();
    return QTRat(num_ * o.num_, den_ * o.den_);
}

QTRat QTRat::operator/(const QTRat& o) const {
    if (o.is_zero()) throw std::domain_error("QTRat: division by zero");
    if (is_zero()) return QTRat();
    return QTRat(num_ * o.den_, den_ * o.num_);
}

QTRat QTRat::inverse() const {
    if (is_zero()) throw std::domain_error("QTRat: inverse of zero");
    return QTRat(den_, num_);
}

Rat QTRat::substitute(const Rat& qv, const Rat& tv) const {
    Rat d = den_.eval(qv, tv);
    if (d == 0) throw pole_error("substitute: denominator vanishes at point");
    return num_.eval(qv, tv) / d;
}

QTRat QTRat::var_pow(long k) const {
    if (k == 0) throw std::domain_error("var_pow: k must be nonzero");
    return QTRat(num_.var_pow(k), den_.var_pow(k));
}

QTRat QTRat::swap_vars() const {
    return QTRat(num_.swap_vars(), den_.swap_vars());
}

QTRat QTRat::sub_t(const Rat& tv) const {
    auto sub = [&](const QTPoly& p) {
        QTPoly r;
        for (auto& [e, c] : p.terms) {
            Rat tp(1);
            long k = e.second;
            if (k >= 0)
                for (long i = 0; i < k; ++i) tp *= tv;
            else {
                if (tv == 0) throw pole_error("sub_t: t^negative at t=0");
                for (long i = 0; i < -k; ++i) tp /= tv;
            }
            r.add_term(e.first, 0, c * tp);
        }
        return r;
    };
    QTPoly d = sub(den_);
    if (d.is_zero()) throw pole_error("sub_t: denominator vanishes identically");
    return QTRat(sub(num_), d);
}

Rat QTRat::limit_q1() const {
    if (num_.depends_on_t() || den_.depends_on_t())
        throw std::logic_error("limit_q1: expression still involves t");
    // univariate dense in q, clearing any negative exponents (q=1 anyway)
    long shift = 0;
    if (!num_.is_zero()) shift = std::min(0L, num_.min_exps().first);
    auto to_vec = [&](const QTPoly& p) {
        std::vector<Rat> v;
        for (auto& [e, c] : p.terms) {
            long i = e.first - shift;
            if ((size_t)i >= v.size()) v.resize(i + 1, Rat(0));
            v[i] = c;
        }
        return v;
    };
    std::vector<Rat> n = to_vec(num_), d = to_vec(den_);
    auto ev1 = [](const std::vector<Rat>& v) {
        Rat s(0);
        for (auto& c : v) s += c;
        return s;
    };
    auto div_q_minus_1 = [](std::vector<Rat> v) {
        // synthetic division by (q - 1); remainder must be 0
        std::vector<Rat> out(v.size() ? v.size() - 1 : 0, Rat(0));
        Rat carry(0);
        for (size_t i = v.size(); i-- > 1;) {
            carry += v[i];
            out[i - 1] = carry;
        }
        return out;
    };
    while (ev1(d) == 0) {
        if (ev1(n) != 0) throw pole_error("limit_q1: pole at q=1");
        n = div_q_minus_1(n);
        d = div_q_minus_1(d);
        if (d.empty()) throw pole_error("limit_q1: denominator vanished");
    }
    return ev1(n) / ev1(d);
}

bool QTRat::is_positive_integral(std::string* witness) const {
    if (!den_.is_one()) {
        if (witness) *witness = "denominator is " + den_.str();
        return false;
    }
    for (auto& [e, c] : num_.terms) {
        std::ostringstream os;
        if (e.first < 0 || e.second < 0) {
            if (witness) {
                os << "negative exponent in term q^" << e.first << " t^" << e.second;
                *witness = os.str();
            }
            return false;
        }
        if (c.get_den() != 1) {
            if (witness) {
                os << "non-integer coefficient " << c.get_str() << " at q^"
                   << e.first << " t^" << e.second;
                *witness = os.str();
            }
            return false;
        }
        if (c < 0) {
            if (witness) {
                os << "negative coefficient " << c.get_str() << " at q^"
                   << e.first << " t^" << e.second;
                *witness = os.str();
            }
            return false;
        }
    }
    return true;
}

std::string QTRat::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

QTRat operator*(const Rat& c, const QTRat& r) { return QTRat(c) * r; }

} // namespace qtwb
