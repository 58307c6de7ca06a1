#pragma once

#include <gmpxx.h>
#include <map>
#include <string>
#include <utility>

namespace qtwb {

using Rat = mpq_class;
using Int = mpz_class;

// exponent pair: (power of q, power of t), either may be negative
using Exp = std::pair<long, long>;

// Laurent polynomial in q,t with rational coefficients.
// Invariant: no zero coefficients stored.
class QTPoly {
public:
    std::map<Exp, Rat> terms;

    QTPoly() = default;
    explicit QTPoly(const Rat& c);
    explicit QTPoly(long c);

    static QTPoly mono(const Rat& c, long eq, long et);
    static QTPoly q(long e = 1) { return mono(1, e, 0); }
    static QTPoly t(long e = 1) { return mono(1, 0, e); }

    bool is_zero() const { return terms.empty(); }
    bool is_constant() const;
    bool is_one() const;

    void add_term(long eq, long et, const Rat& c);

    QTPoly operator-() const;
    QTPoly operator+(const QTPoly& o) const;
    QTPoly operator-(const QTPoly& o) const;
    QTPoly operator*(const QTPoly& o) const;
    QTPoly& operator+=(const QTPoly& o);
    QTPoly& operator-=(const QTPoly& o);
    QTPoly& operator*=(const QTPoly& o);
    bool operator==(const QTPoly& o) const { return terms == o.terms; }

    QTPoly scaled(const Rat& c) const;
    // multiply by q^dq t^dt
    QTPoly shifted(long dq, long dt) const;
    // (min q-exponent, min t-exponent); poly must be nonzero
    Exp min_exps() const;
    long max_q_exp() const;
    long max_t_exp() const;

    // q -> q^k, t -> t^k (k may be negative: q -> q^-1 etc.)
    QTPoly var_pow(long k) const;
    QTPoly swap_vars() const; // q <-> t

    // evaluate at rational point; negative exponents need nonzero value
    Rat eval(const Rat& qv, const Rat& tv) const;

    bool depends_on_t() const;
    bool depends_on_q() const;

    std::string str() const;
};

QTPoly operator*(const Rat& c, const QTPoly& p);

} // namespace qtwb
