#include "qtwb/qtpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace qtwb {

QTPoly::QTPoly(const Rat& c) {
    if (c != 0) terms[{0, 0}] = c;
}

QTPoly::QTPoly(long c) {
    if (c != 0) terms[{0, 0}] = Rat(c);
}

QTPoly QTPoly::mono(const Rat& c, long eq, long et) {
    QTPoly p;
    if (c != 0) p.terms[{eq, et}] = c;
    return p;
}

bool QTPoly::is_constant() const {
    if (terms.empty()) return true;
    return terms.size() == 1 && terms.begin()->first == Exp{0, 0};
}

bool QTPoly::is_one() const {
    return terms.size() == 1 && terms.begin()->first == Exp{0, 0} &&
           terms.begin()->second == 1;
}

void QTPoly::add_term(long eq, long et, const Rat& c) {
    if (c == 0) return;
    auto key = Exp{eq, et};
    auto it = terms.find(key);
    if (it == terms.end()) {
        terms.emplace(key, c);
    } else {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

QTPoly QTPoly::operator-() const {
    QTPoly r;
    for (auto& [e, c] : terms) r.terms[e] = -c;
    return r;
}

QTPoly& QTPoly::operator+=(const QTPoly& o) {
    for (auto& [e, c] : o.terms) add_term(e.first, e.second, c);
    return *this;
}

QTPoly& QTPoly::operator-=(const QTPoly& o) {
    for (auto& [e, c] : o.terms) add_term(e.first, e.second, -c);
    return *this;
}

QTPoly QTPoly::operator+(const QTPoly& o) const {
    QTPoly r = *this;
    r += o;
    return r;
}

QTPoly QTPoly::operator-(const QTPoly& o) const {
    QTPoly r = *this;
    r -= o;
    return r;
}

QTPoly QTPoly::operator*(const QTPoly& o) const {
    QTPoly r;
    for (auto& [e1, c1] : terms)
        for (auto& [e2, c2] : o.terms)
            r.add_term(e1.first + e2.first, e1.second + e2.second, c1 * c2);
    return r;
}

QTPoly& QTPoly::operator*=(const QTPoly& o) { return *this = *this * o; }

QTPoly QTPoly::scaled(const Rat& c) const {
    QTPoly r;
    if (c == 0) return r;
    for (auto& [e, v] : terms) r.terms[e] = v * c;
    return r;
}

QTPoly QTPoly::shifted(long dq, long dt) const {
    QTPoly r;
    for (auto& [e, v] : terms) r.terms[{e.first + dq, e.second + dt}] = v;
    return r;
}

Exp QTPoly::min_exps() const {
    if (terms.empty()) throw std::logic_error("min_exps of zero polynomial");
    long mq = terms.begin()->first.first, mt = terms.begin()->first.second;
    for (auto& [e, v] : terms) {
        if (e.first < mq) mq = e.first;
        if (e.second < mt) mt = e.second;
    }
    return {mq, mt};
}

long QTPoly::max_q_exp() const {
    long m = 0;
    bool first = true;
    for (auto& [e, v] : terms) {
        if (first || e.first > m) m = e.first;
        first = false;
    }
    return m;
}

long QTPoly::max_t_exp() const {
    long m = 0;
    bool first = true;
    for (auto& [e, v] : terms) {
        if (first || e.second > m) m = e.second;
        first = false;
    }
    return m;
}

QTPoly QTPoly::var_pow(long k) const {
    QTPoly r;
    for (auto& [e, v] : terms) r.terms[{e.first * k, e.second * k}] = v;
    return r;
}

QTPoly QTPoly::swap_vars() const {
    QTPoly r;
    for (auto& [e, v] : terms) r.terms[{e.second, e.first}] = v;
    return r;
}

static Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    Rat b = base;
    if (e < 0) {
        if (b == 0) throw std::domain_error("0 to a negative power");
        b = 1 / b;
        e = -e;
    }
    Rat acc(1);
    while (e) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

Rat QTPoly::eval(const Rat& qv, const Rat& tv) const {
    Rat s(0);
    for (auto& [e, c] : terms)
        s += c * rat_pow(qv, e.first) * rat_pow(tv, e.second);
    return s;
}

bool QTPoly::depends_on_t() const {
    for (auto& [e, c] : terms)
        if (e.second != 0) return true;
    return false;
}

bool QTPoly::depends_on_q() const {
    for (auto& [e, c] : terms)
        if (e.first != 0) return true;
    return false;
}

std::string QTPoly::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : terms) {
        Rat a = c;
        if (!first) {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool has_var = e.first != 0 || e.second != 0;
        if (!has_var || a != 1) {
            os << a.get_str();
            if (has_var) os << "*";
        }
        if (e.first != 0) {
            os << "q";
            if (e.first != 1) os << "^" << e.first;
        }
        if (e.second != 0) {
            if (e.first != 0) os << "*";
            os << "t";
            if (e.second != 1) os << "^" << e.second;
        }
    }
    return os.str();
}

QTPoly operator*(const Rat& c, const QTPoly& p) { return p.scaled(c); }

} // namespace qtwb
