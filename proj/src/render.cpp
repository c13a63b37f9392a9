#include "hsf/render.hpp"

#include <sstream>
#include <stdexcept>

namespace hsf {

namespace {

const char* kind_name(VarKind k) {
    switch (k) {
        case VarKind::Z: return "Z";
        case VarKind::Lambda: return "LAMBDA";
        case VarKind::P: return "P";
        case VarKind::E: return "E";
        case VarKind::Tau: return "TAU";
        case VarKind::X1: return "X1";
        case VarKind::X2: return "X2";
        case VarKind::X3: return "X3";
    }
    return "?";
}

VarKind kind_from_name(const std::string& s) {
    if (s == "Z") return VarKind::Z;
    if (s == "LAMBDA") return VarKind::Lambda;
    if (s == "P") return VarKind::P;
    if (s == "E") return VarKind::E;
    if (s == "TAU") return VarKind::Tau;
    if (s == "X1") return VarKind::X1;
    if (s == "X2") return VarKind::X2;
    if (s == "X3") return VarKind::X3;
    throw std::invalid_argument("unknown variable kind '" + s + "'");
}

std::string monomial_text(const Monomial& m) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [v, e] : m.factors()) {
        if (!first) os << "*";
        os << v.name();
        if (e > 1) os << "^" << e;
        first = false;
    }
    return os.str();
}

std::string deriv_text(const DerivMonomial& d) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [v, e] : d.factors()) {
        if (!first) os << "*";
        os << "d" << v.name();
        if (e > 1) os << "^" << e;
        first = false;
    }
    return os.str();
}

void append_signed(std::ostringstream& os, bool& first, const Rational& coeff, const std::string& body) {
    const bool neg = coeff.sign() < 0;
    const Rational mag = coeff.abs();
    if (first) {
        if (neg) os << "-";
        first = false;
    } else {
        os << (neg ? " - " : " + ");
    }
    if (body.empty()) {
        os << mag.str();
    } else if (mag.is_one()) {
        os << body;
    } else {
        os << mag.str() << "*" << body;
    }
}

nlohmann::json json_int(const mpz_class& v) {
    mpz_class a = ::abs(v);
    if (mpz_sizeinbase(a.get_mpz_t(), 2) <= 53) {
        return static_cast<std::int64_t>(v.get_si());
    }
    return v.get_str();
}

mpz_class int_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return mpz_class(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) return mpz_class(j.get<std::string>());
    throw std::invalid_argument("expected integer or decimal string");
}

nlohmann::json exps_json(const Monomial& m) {
    nlohmann::json exps = nlohmann::json::array();
    for (const auto& [v, e] : m.factors()) exps.push_back({kind_name(v.kind), v.index, e});
    return exps;
}

Monomial monomial_from_exps(const nlohmann::json& exps) {
    Monomial m;
    for (const auto& f : exps) {
        VarId v{kind_from_name(f.at(0).get<std::string>()), f.at(1).get<int>()};
        m = m.times_var(v, f.at(2).get<int>());
    }
    return m;
}

nlohmann::json terms_json(const GradedPolynomial& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : p.terms()) {
        nlohmann::json t;
        t["coeff"] = {json_int(c.num()), json_int(c.den())};
        t["exps"] = exps_json(m);
        terms.push_back(t);
    }
    return terms;
}

void add_terms_from_json(GradedPolynomial& p, const nlohmann::json& terms) {
    for (const auto& t : terms) {
        Rational c(int_from_json(t.at("coeff").at(0)), int_from_json(t.at("coeff").at(1)));
        p.add_term(monomial_from_exps(t.at("exps")), c);
    }
}

std::string latex_var(VarId v) {
    std::ostringstream os;
    auto subscript = [](int i) {
        std::ostringstream s;
        if (i >= 10) s << "_{" << i << "}";
        else s << "_" << i;
        return s.str();
    };
    switch (v.kind) {
        case VarKind::Z: os << "z" << subscript(v.index); break;
        case VarKind::Lambda: os << "\\lambda" << subscript(v.index); break;
        case VarKind::P: os << "p" << subscript(v.index); break;
        case VarKind::E: os << "e" << subscript(v.index); break;
        case VarKind::Tau: os << "\\tau" << subscript(v.index); break;
        case VarKind::X1: os << "x_{1," << v.index << "}"; break;
        case VarKind::X2: os << "x_{2," << v.index << "}"; break;
        case VarKind::X3: os << "x_{3," << v.index << "}"; break;
    }
    return os.str();
}

std::string latex_monomial(const Monomial& m) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [v, e] : m.factors()) {
        if (!first) os << " ";
        os << latex_var(v);
        if (e > 1) os << "^{" << e << "}";
        first = false;
    }
    return os.str();
}

std::string latex_rational(const Rational& r) {
    if (r.is_integer()) return r.num().get_str();
    return "\\frac{" + r.num().get_str() + "}{" + r.den().get_str() + "}";
}

std::string latex_plain(const GradedPolynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        const bool neg = c.sign() < 0;
        const Rational mag = c.abs();
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        const std::string body = latex_monomial(m);
        if (body.empty()) {
            os << latex_rational(mag);
        } else if (mag.is_one()) {
            os << body;
        } else {
            os << latex_rational(mag) << " " << body;
        }
    }
    return os.str();
}

}  // namespace

Format parse_format(const std::string& name) {
    if (name == "text") return Format::Text;
    if (name == "json") return Format::Json;
    if (name == "latex") return Format::Latex;
    throw std::invalid_argument("unknown format '" + name + "'");
}

std::string to_text(const GradedPolynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p.terms()) append_signed(os, first, c, monomial_text(m));
    return os.str();
}

std::string to_text(const DifferentialOperator& op) {
    if (op.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, coeff] : op.terms()) {
        const std::string dv = deriv_text(d);
        if (coeff.term_count() == 1) {
            const auto& [m, c] = *coeff.terms().begin();
            std::string body = monomial_text(m);
            if (!dv.empty()) body = body.empty() ? dv : body + "*" + dv;
            append_signed(os, first, c, body);
        } else {
            if (!first) os << " + ";
            first = false;
            os << "(" << to_text(coeff) << ")";
            if (!dv.empty()) os << "*" << dv;
        }
    }
    return os.str();
}

nlohmann::json to_json(const GradedPolynomial& p) {
    nlohmann::json j;
    j["genus"] = p.genus();
    j["terms"] = terms_json(p);
    return j;
}

nlohmann::json to_json(const DifferentialOperator& op) {
    nlohmann::json j;
    j["genus"] = op.genus();
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [d, coeff] : op.terms()) {
        nlohmann::json t;
        t["orders"] = exps_json(d);
        t["coeff"] = terms_json(coeff);
        terms.push_back(t);
    }
    j["terms"] = terms;
    return j;
}

GradedPolynomial polynomial_from_json(const nlohmann::json& j) {
    GradedPolynomial p(j.at("genus").get<int>());
    add_terms_from_json(p, j.at("terms"));
    return p;
}

DifferentialOperator operator_from_json(const nlohmann::json& j) {
    const int genus = j.at("genus").get<int>();
    DifferentialOperator op(genus);
    for (const auto& t : j.at("terms")) {
        GradedPolynomial coeff(genus);
        add_terms_from_json(coeff, t.at("coeff"));
        op.add_term(monomial_from_exps(t.at("orders")), coeff);
    }
    return op;
}

std::string to_latex(const GradedPolynomial& p) {
    if (p.is_zero()) return "0";
    const Rational c = content(p);
    if (c.den() != 1) {
        GradedPolynomial inner = p;
        inner *= c.reciprocal();
        return latex_rational(c) + "\\left(" + latex_plain(inner) + "\\right)";
    }
    return latex_plain(p);
}

std::string to_latex(const DifferentialOperator& op) {
    if (op.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, coeff] : op.terms()) {
        std::ostringstream dv;
        for (const auto& [v, e] : d.factors()) {
            if (v.kind == VarKind::Z)
                dv << "\\partial_" << (v.index >= 10 ? "{" + std::to_string(v.index) + "}"
                                                     : std::to_string(v.index));
            else
                dv << "\\partial_{" << latex_var(v) << "}";
            if (e > 1) dv << "^{" << e << "}";
        }
        if (!first) os << " + ";
        first = false;
        if (coeff.term_count() > 1)
            os << "\\left(" << latex_plain(coeff) << "\\right)";
        else
            os << to_latex(coeff);
        if (!dv.str().empty()) os << " " << dv.str();
    }
    return os.str();
}

std::string render(const GradedPolynomial& p, Format f) {
    switch (f) {
        case Format::Text: return to_text(p);
        case Format::Json: return to_json(p).dump();
        case Format::Latex: return to_latex(p);
    }
    return {};
}

std::string render(const DifferentialOperator& op, Format f) {
    switch (f) {
        case Format::Text: return to_text(op);
        case Format::Json: return to_json(op).dump();
        case Format::Latex: return to_latex(op);
    }
    return {};
}

}  // namespace hsf
