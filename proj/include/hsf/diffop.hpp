#ifndef HSF_DIFFOP_HPP
#define HSF_DIFFOP_HPP

#include <map>

#include "hsf/polynomial.hpp"

namespace hsf {

/// A mixed partial-derivative monomial: sorted (variable, order) pairs with
/// orders > 0. The empty monomial is the identity operator part.
using DerivMonomial = Monomial;

/// Linear differential operator with polynomial coefficients, kept in normal
/// order: every term is (coefficient polynomial) * (derivative monomial) with
/// the coefficient on the left. Equality is term-map equality, so op_equal is
/// a plain comparison.
class DifferentialOperator {
public:
    using TermMap = std::map<DerivMonomial, GradedPolynomial>;

    explicit DifferentialOperator(int genus = 0) : genus_(genus) {}

    static DifferentialOperator zero(int genus) { return DifferentialOperator(genus); }

    static DifferentialOperator identity(int genus) {
        return from_term(GradedPolynomial::constant(genus, Rational(1)), DerivMonomial::unit());
    }

    /// coeff * d^orders
    static DifferentialOperator from_term(const GradedPolynomial& coeff, const DerivMonomial& orders) {
        DifferentialOperator op(coeff.genus());
        if (!coeff.is_zero()) op.terms_[orders] = coeff;
        return op;
    }

    /// First derivative in one variable, d/dv.
    static DifferentialOperator derivative(int genus, VarId v) {
        return from_term(GradedPolynomial::constant(genus, Rational(1)), DerivMonomial::var(v));
    }

    /// Multiplication operator by a polynomial.
    static DifferentialOperator multiplication(const GradedPolynomial& p) {
        return from_term(p, DerivMonomial::unit());
    }

    int genus() const { return genus_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    GradedPolynomial coefficient(const DerivMonomial& d) const {
        auto it = terms_.find(d);
        return it == terms_.end() ? GradedPolynomial::zero(genus_) : it->second;
    }

    void add_term(const DerivMonomial& d, const GradedPolynomial& coeff);

    DifferentialOperator& operator+=(const DifferentialOperator& o);
    DifferentialOperator& operator-=(const DifferentialOperator& o);
    DifferentialOperator& operator*=(const Rational& c);

    friend DifferentialOperator operator+(DifferentialOperator a, const DifferentialOperator& b) { return a += b; }
    friend DifferentialOperator operator-(DifferentialOperator a, const DifferentialOperator& b) { return a -= b; }
    friend DifferentialOperator operator*(DifferentialOperator a, const Rational& c) { return a *= c; }
    friend DifferentialOperator operator*(const Rational& c, DifferentialOperator a) { return a *= c; }
    friend DifferentialOperator operator-(const DifferentialOperator& a);

    friend bool operator==(const DifferentialOperator& a, const DifferentialOperator& b) {
        return a.genus_ == b.genus_ && a.terms_ == b.terms_;
    }

private:
    int genus_;
    TermMap terms_;
};

/// Exact image of p under the operator.
GradedPolynomial apply(const DifferentialOperator& op, const GradedPolynomial& p);

/// Operator product a . b (a applied after b), renormalized via the
/// generalized Leibniz rule so the result is in normal order again.
DifferentialOperator compose(const DifferentialOperator& a, const DifferentialOperator& b);

/// compose(a, b) - compose(b, a)
DifferentialOperator commutator(const DifferentialOperator& a, const DifferentialOperator& b);

inline bool op_equal(const DifferentialOperator& a, const DifferentialOperator& b) { return a == b; }

/// Common weight over all terms (coefficient weight minus derivative-monomial
/// weight), with the same zero/NonHomogeneous conventions as weight_of.
Weight operator_weight(const DifferentialOperator& op);

}  // namespace hsf

#endif
