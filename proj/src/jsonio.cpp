#include "qtwb/jsonio.hpp"

#include <sstream>

namespace qtwb {

using nlohmann::json;

json poly_to_json(const QTPoly& p) {
    json arr = json::array();
    for (auto& [e, c] : p.terms)
        arr.push_back(json::array({c.get_str(), e.first, e.second}));
    return arr;
}

QTPoly poly_from_json(const json& j) {
    QTPoly p;
    for (auto& t : j) {
        Rat c(t.at(0).get<std::string>());
        c.canonicalize();
        p.add_term(t.at(1).get<long>(), t.at(2).get<long>(), c);
    }
    return p;
}

json qtrat_to_json(const QTRat& r) {
    return json{{"num", poly_to_json(r.num())}, {"den", poly_to_json(r.den())}};
}

QTRat qtrat_from_json(const json& j) {
    return QTRat(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

json sf_to_json(const SymFunc& f) {
    json terms = json::array();
    for (auto& [mu, c] : f.coeffs)
        terms.push_back(json{{"part", mu}, {"coeff", qtrat_to_json(c)}});
    return json{{"degree", f.degree},
                {"basis", basis_name(f.basis)},
                {"terms", terms}};
}

SymFunc sf_from_json(const json& j) {
    SymFunc f;
    f.degree = j.at("degree").get<int>();
    f.basis = basis_from_name(j.at("basis").get<std::string>());
    for (auto& t : j.at("terms"))
        f.add(t.at("part").get<Partition>(), qtrat_from_json(t.at("coeff")));
    return f;
}

static std::string poly_latex(const QTPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : p.terms) {
        Rat a = c;
        if (!first) {
            os << (a < 0 ? "-" : "+");
            if (a < 0) a = -a;
        }
        first = false;
        bool var = e.first != 0 || e.second != 0;
        if (!var || a != 1) {
            if (a.get_den() == 1)
                os << a.get_str();
            else
                os << "\\tfrac{" << a.get_num().get_str() << "}{"
                   << a.get_den().get_str() << "}";
        }
        auto pw = [&](const char* v, long ex) {
            if (ex == 0) return;
            os << v;
            if (ex != 1) os << "^{" << ex << "}";
        };
        pw("q", e.first);
        pw("t", e.second);
    }
    return os.str();
}

std::string qtrat_latex(const QTRat& r) {
    if (r.den().is_one()) return poly_latex(r.num());
    return "\\frac{" + poly_latex(r.num()) + "}{" + poly_latex(r.den()) + "}";
}

std::string sf_latex(const SymFunc& f) {
    if (f.coeffs.empty()) return "0";
    std::string bn;
    switch (f.basis) {
        case Basis::Ht: bn = "\\tilde{H}"; break;
        default: bn = basis_name(f.basis); break;
    }
    std::ostringstream os;
    bool first = true;
    for (auto& [mu, c] : f.coeffs) {
        if (!first) os << " + ";
        first = false;
        os << "\\left(" << qtrat_latex(c) << "\\right) " << bn << "_{";
        for (size_t i = 0; i < mu.size(); ++i) {
            if (i) os << ",";
            os << mu[i];
        }
        os << "}";
    }
    return os.str();
}

uint64_t fnv1a(const std::string& s) {
    uint64_t h = 14695981039346656037ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace qtwb
