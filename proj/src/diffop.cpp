#include "hsf/diffop.hpp"

#include <stdexcept>

namespace hsf {

namespace {
void require_same_genus(int a, int b, const char* op) {
    if (a != b)
        throw std::invalid_argument(std::string("DifferentialOperator: genus mismatch in ") + op);
}

GradedPolynomial iterated_derivative(GradedPolynomial p, VarId v, int order) {
    for (int i = 0; i < order && !p.is_zero(); ++i) p = partial_derivative(p, v);
    return p;
}
}  // namespace

void DifferentialOperator::add_term(const DerivMonomial& d, const GradedPolynomial& coeff) {
    if (coeff.is_zero()) return;
    require_same_genus(genus_, coeff.genus(), "add_term");
    auto [it, fresh] = terms_.try_emplace(d, coeff);
    if (!fresh) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

DifferentialOperator& DifferentialOperator::operator+=(const DifferentialOperator& o) {
    require_same_genus(genus_, o.genus_, "add");
    for (const auto& [d, c] : o.terms_) add_term(d, c);
    return *this;
}

DifferentialOperator& DifferentialOperator::operator-=(const DifferentialOperator& o) {
    require_same_genus(genus_, o.genus_, "sub");
    for (const auto& [d, c] : o.terms_) add_term(d, -c);
    return *this;
}

DifferentialOperator& DifferentialOperator::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [d, v] : terms_) v *= c;
    return *this;
}

DifferentialOperator operator-(const DifferentialOperator& a) {
    DifferentialOperator r(a.genus());
    for (const auto& [d, c] : a.terms()) r.add_term(d, -c);
    return r;
}

GradedPolynomial apply(const DifferentialOperator& op, const GradedPolynomial& p) {
    require_same_genus(op.genus(), p.genus(), "apply");
    GradedPolynomial out(p.genus());
    for (const auto& [d, c] : op.terms()) {
        GradedPolynomial image = p;
        for (const auto& [v, order] : d.factors()) {
            image = iterated_derivative(image, v, order);
            if (image.is_zero()) break;
        }
        if (!image.is_zero()) out += c * image;
    }
    return out;
}

// Normal ordering of ca d^Da cb d^Db: push d^Da through cb with the
// generalized Leibniz rule,
//   d_v^k (cb f) = sum_j C(k,j) (d_v^j cb) d_v^(k-j) f,
// one variable of Da at a time.
DifferentialOperator compose(const DifferentialOperator& a, const DifferentialOperator& b) {
    require_same_genus(a.genus(), b.genus(), "compose");
    DifferentialOperator out(a.genus());
    for (const auto& [da, ca] : a.terms()) {
        for (const auto& [db, cb] : b.terms()) {
            // Partial states: (remaining derivative monomial to land on f,
            // derivative applied so far to cb), expanded factor by factor.
            // ca stays to the left of everything and is multiplied in last.
            std::vector<std::pair<DerivMonomial, GradedPolynomial>> states = {{db, cb}};
            for (const auto& [v, k] : da.factors()) {
                std::vector<std::pair<DerivMonomial, GradedPolynomial>> next;
                for (const auto& [dm, coeff] : states) {
                    GradedPolynomial deriv = coeff;  // d_v^j applied to the coefficient
                    for (int j = 0; j <= k; ++j) {
                        if (j > 0) {
                            deriv = partial_derivative(deriv, v);
                            if (deriv.is_zero()) break;
                        }
                        next.push_back({dm.times_var(v, k - j), binomial(k, j) * deriv});
                    }
                }
                states = std::move(next);
            }
            for (const auto& [dm, coeff] : states) out.add_term(dm, ca * coeff);
        }
    }
    return out;
}

DifferentialOperator commutator(const DifferentialOperator& a, const DifferentialOperator& b) {
    return compose(a, b) - compose(b, a);
}

Weight operator_weight(const DifferentialOperator& op) {
    if (op.is_zero()) return {Weight::Kind::Any, 0};
    bool first = true;
    int w = 0;
    for (const auto& [d, c] : op.terms()) {
        Weight cw = weight_of(c);
        if (cw.kind != Weight::Kind::Homogeneous) return {Weight::Kind::NonHomogeneous, 0};
        int tw = cw.value - d.weight();
        if (first) {
            w = tw;
            first = false;
        } else if (tw != w) {
            return {Weight::Kind::NonHomogeneous, 0};
        }
    }
    return {Weight::Kind::Homogeneous, w};
}

}  // namespace hsf
