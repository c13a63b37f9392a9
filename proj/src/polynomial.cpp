#include "hsf/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace hsf {

namespace {
void require_same_genus(int a, int b, const char* op) {
    if (a != b)
        throw std::invalid_argument(std::string("GradedPolynomial: genus mismatch in ") + op + " (" +
                                    std::to_string(a) + " vs " + std::to_string(b) + ")");
}
}  // namespace

void GradedPolynomial::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

GradedPolynomial& GradedPolynomial::operator+=(const GradedPolynomial& o) {
    require_same_genus(genus_, o.genus_, "add");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

GradedPolynomial& GradedPolynomial::operator-=(const GradedPolynomial& o) {
    require_same_genus(genus_, o.genus_, "sub");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

GradedPolynomial& GradedPolynomial::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

GradedPolynomial operator*(const GradedPolynomial& a, const GradedPolynomial& b) {
    require_same_genus(a.genus_, b.genus_, "mul");
    GradedPolynomial r(a.genus_);
    // Iterate the smaller operand on the outside to keep monomial products cheap.
    const GradedPolynomial& outer = a.term_count() <= b.term_count() ? a : b;
    const GradedPolynomial& inner = a.term_count() <= b.term_count() ? b : a;
    for (const auto& [ma, ca] : outer.terms_)
        for (const auto& [mb, cb] : inner.terms_) r.add_term(ma.times(mb), ca * cb);
    return r;
}

GradedPolynomial operator-(const GradedPolynomial& a) {
    GradedPolynomial r(a.genus());
    for (const auto& [m, c] : a.terms()) r.add_term(m, -c);
    return r;
}

GradedPolynomial GradedPolynomial::pow(int n) const {
    if (n < 0) throw std::invalid_argument("GradedPolynomial: negative power");
    GradedPolynomial r = constant(genus_, Rational(1));
    GradedPolynomial base = *this;
    while (n > 0) {
        if (n & 1) r = r * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return r;
}

GradedPolynomial partial_derivative(const GradedPolynomial& p, VarId v) {
    GradedPolynomial r(p.genus());
    for (const auto& [m, c] : p.terms()) {
        int e = m.exponent(v);
        if (e == 0) continue;
        r.add_term(m.times_var(v, -1), c * Rational(e));
    }
    return r;
}

Weight weight_of(const GradedPolynomial& p) {
    if (p.is_zero()) return {Weight::Kind::Any, 0};
    auto it = p.terms().begin();
    int w = it->first.weight();
    for (++it; it != p.terms().end(); ++it)
        if (it->first.weight() != w) return {Weight::Kind::NonHomogeneous, 0};
    return {Weight::Kind::Homogeneous, w};
}

GradedPolynomial graded_component(const GradedPolynomial& p, int lambda_weight) {
    GradedPolynomial r(p.genus());
    for (const auto& [m, c] : p.terms())
        if (m.weight_of_kind(VarKind::Lambda) == lambda_weight) r.add_term(m, c);
    return r;
}

std::vector<int> lambda_weights_present(const GradedPolynomial& p) {
    std::vector<int> ws;
    for (const auto& [m, c] : p.terms()) {
        int w = m.weight_of_kind(VarKind::Lambda);
        bool seen = false;
        for (int x : ws)
            if (x == w) seen = true;
        if (!seen) ws.push_back(w);
    }
    std::sort(ws.begin(), ws.end());
    return ws;
}

GradedPolynomial lambda_zero_limit(const GradedPolynomial& p) {
    GradedPolynomial r(p.genus());
    for (const auto& [m, c] : p.terms())
        if (!m.contains_kind(VarKind::Lambda)) r.add_term(m, c);
    return r;
}

GradedPolynomial substitute(const GradedPolynomial& p,
                            const std::map<VarId, GradedPolynomial>& subs,
                            int out_genus) {
    for (const auto& [v, q] : subs)
        if (q.genus() != out_genus)
            throw std::invalid_argument("substitute: replacement genus does not match target");
    GradedPolynomial r(out_genus);
    for (const auto& [m, c] : p.terms()) {
        GradedPolynomial term = GradedPolynomial::constant(out_genus, c);
        Monomial passthrough;
        for (const auto& [v, e] : m.factors()) {
            auto it = subs.find(v);
            if (it == subs.end())
                passthrough = passthrough.times_var(v, e);
            else
                term = term * it->second.pow(e);
        }
        if (!passthrough.is_unit()) term = term * GradedPolynomial::from_monomial(out_genus, passthrough, Rational(1));
        r += term;
    }
    return r;
}

GradedPolynomial lambda_symbol(const GenusContext& ctx, int s) {
    if (s == 0) return GradedPolynomial::constant(ctx.g(), Rational(1));
    if (ctx.valid_lambda_index(s)) return GradedPolynomial::from_var(ctx.g(), lambda_var(s));
    return GradedPolynomial::zero(ctx.g());
}

Rational content(const GradedPolynomial& p) {
    if (p.is_zero()) return Rational(1);
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const auto& [m, c] : p.terms()) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), num_gcd.get_mpz_t(), c.num().get_mpz_t());
        num_gcd = g;
        mpz_class l;
        mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
        den_lcm = l;
    }
    if (num_gcd == 0) num_gcd = 1;
    return Rational(num_gcd, den_lcm);
}

}  // namespace hsf
