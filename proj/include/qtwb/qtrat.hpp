#pragma once

#include "qtwb/qtpoly.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace qtwb {

struct pole_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Rational function in q,t, kept in a canonical reduced form:
//  - gcd(num, den) = 1 (as polynomials, after pulling the Laurent shift
//    into the numerator)
//  - den has integer coefficients with content 1, min q- and t-exponent 0,
//    and its lexicographically least term has positive coefficient
//  - num has integer coefficients with content coprime to nothing forced,
//    but num/den as a pair is scaled so both have integer coefficients and
//    the two integer contents are coprime
// Structural equality therefore coincides with equality of rational
// functions, and zero is stored as 0/1.
class QTRat {
    QTPoly num_, den_;
    void canonicalize();

public:
    QTRat() : den_(QTPoly(1)) {}
    QTRat(const Rat& c) : num_(QTPoly(c)), den_(QTPoly(1)) { canonicalize(); }
    QTRat(long c) : num_(QTPoly(c)), den_(QTPoly(1)) { canonicalize(); }
    explicit QTRat(const QTPoly& n) : num_(n), den_(QTPoly(1)) { canonicalize(); }
    QTRat(const QTPoly& n, const QTPoly& d);

    static QTRat mono(const Rat& c, long eq, long et) {
        return QTRat(QTPoly::mono(c, eq, et));
    }
    static QTRat q(long e = 1) { return mono(1, e, 0); }
    static QTRat t(long e = 1) { return mono(1, 0, e); }

    const QTPoly& num() const { return num_; }
    const QTPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    QTRat operator-() const;
    QTRat operator+(const QTRat& o) const;
    QTRat operator-(const QTRat& o) const;
    QTRat operator*(const QTRat& o) const;
    QTRat operator/(const QTRat& o) const;
    QTRat& operator+=(const QTRat& o) { return *this = *this + o; }
    QTRat& operator-=(const QTRat& o) { return *this = *this - o; }
    QTRat& operator*=(const QTRat& o) { return *this = *this * o; }
    QTRat& operator/=(const QTRat& o) { return *this = *this / o; }
    bool operator==(const QTRat& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }

    QTRat inverse() const;

    // numeric substitution q=qv, t=tv; throws pole_error if den vanishes
    Rat substitute(const Rat& qv, const Rat& tv) const;

    // q -> q^k, t -> t^k (k != 0; negative allowed)
    QTRat var_pow(long k) const;
    // q -> 1/q, t -> 1/t
    QTRat invert_vars() const { return var_pow(-1); }
    QTRat swap_vars() const;

    // substitute t=tv only, leaving q symbolic
    QTRat sub_t(const Rat& tv) const;

    // limit q->1 of a t-free rational function, cancelling (1-q) factors;
    // throws pole_error on a genuine pole, logic_error if t appears
    Rat limit_q1() const;

    // true iff this is a polynomial with nonnegative exponents and
    // nonnegative integer coefficients; otherwise *witness (if given)
    // describes one offending feature
    bool is_positive_integral(std::string* witness = nullptr) const;

    std::string str() const;
};

QTRat operator*(const Rat& c, const QTRat& r);

// 1 - q^a t^b as a rational function
inline QTRat one_minus(long a, long b) {
    return QTRat(QTPoly(1) - QTPoly::mono(1, a, b));
}

} // namespace qtwb
