#ifndef HSF_POLYNOMIAL_HPP
#define HSF_POLYNOMIAL_HPP

#include <map>
#include <optional>
#include <vector>

#include "hsf/monomial.hpp"
#include "hsf/rational.hpp"

namespace hsf {

/// Result of weight_of: the zero polynomial is homogeneous of any weight.
struct Weight {
    enum class Kind { Any, Homogeneous, NonHomogeneous };
    Kind kind = Kind::Any;
    int value = 0;

    bool is_homogeneous() const { return kind != Kind::NonHomogeneous; }
    bool equals(int w) const { return kind == Kind::Any || (kind == Kind::Homogeneous && value == w); }
};

/// Sparse multivariate polynomial with exact rational coefficients over the
/// weighted variables of varid.hpp. Terms map monomials to nonzero
/// coefficients; two polynomials are equal iff their term maps are equal.
///
/// Every polynomial carries the genus tag of its ambient context; genus 0
/// marks genus-independent data (symmetric functions, tau parameters).
/// Arithmetic requires matching tags.
class GradedPolynomial {
public:
    using TermMap = std::map<Monomial, Rational>;

    explicit GradedPolynomial(int genus = 0) : genus_(genus) {}

    static GradedPolynomial zero(int genus) { return GradedPolynomial(genus); }

    static GradedPolynomial constant(int genus, const Rational& c) {
        GradedPolynomial p(genus);
        if (!c.is_zero()) p.terms_[Monomial::unit()] = c;
        return p;
    }

    static GradedPolynomial from_var(int genus, VarId v, int exp = 1, const Rational& c = Rational(1)) {
        GradedPolynomial p(genus);
        if (!c.is_zero() && exp >= 0) {
            if (exp == 0)
                p.terms_[Monomial::unit()] = c;
            else
                p.terms_[Monomial::var(v, exp)] = c;
        }
        return p;
    }

    static GradedPolynomial from_monomial(int genus, const Monomial& m, const Rational& c) {
        GradedPolynomial p(genus);
        if (!c.is_zero()) p.terms_[m] = c;
        return p;
    }

    int genus() const { return genus_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    Rational coefficient(const Monomial& m) const {
        auto it =terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Monomial& m, const Rational& c);

    GradedPolynomial& operator+=(const GradedPolynomial& o);
    GradedPolynomial& operator-=(const GradedPolynomial& o);
    GradedPolynomial& operator*=(const Rational& c);

    friend GradedPolynomial operator+(GradedPolynomial a, const GradedPolynomial& b) { return a += b; }
    friend GradedPolynomial operator-(GradedPolynomial a, const GradedPolynomial& b) { return a -= b; }
    friend GradedPolynomial operator*(const GradedPolynomial& a, const GradedPolynomial& b);
    friend GradedPolynomial operator*(GradedPolynomial a, const Rational& c) { return a *= c; }
    friend GradedPolynomial operator*(const Rational& c, GradedPolynomial a) { return a *= c; }
    friend GradedPolynomial operator-(const GradedPolynomial& a);

    friend bool operator==(const GradedPolynomial& a, const GradedPolynomial& b) {
        return a.genus_ == b.genus_ && a.terms_ == b.terms_;
    }

    GradedPolynomial pow(int n) const;

    /// Re-tags the polynomial into another context (the variable content must
    /// make sense there; no structural change).
    GradedPolynomial with_genus(int genus) const {
        GradedPolynomial p(*this);
        p.genus_ = genus;
        return p;
    }

private:
    int genus_;
    TermMap terms_;
};

/// Exact formal partial derivative.
GradedPolynomial partial_derivative(const GradedPolynomial& p, VarId v);

/// Common weight of all terms, NonHomogeneous marker, or Any for zero.
Weight weight_of(const GradedPolynomial& p);

/// Sum of the terms whose lambda-part has total weight exactly w.
GradedPolynomial graded_component(const GradedPolynomial& p, int lambda_weight);

/// Every distinct lambda-part weight present, ascending.
std::vector<int> lambda_weights_present(const GradedPolynomial& p);

/// Drops every term containing a lambda variable (the lambda -> 0 limit).
GradedPolynomial lambda_zero_limit(const GradedPolynomial& p);

/// Substitutes variables by polynomials; variables absent from the map pass
/// through unchanged. All replacement polynomials must carry out_genus.
GradedPolynomial substitute(const GradedPolynomial& p,
                            const std::map<VarId, GradedPolynomial>& subs,
                            int out_genus);

/// lambda_s as a polynomial in the given context: the variable for valid
/// indices, 1 for s = 0, and 0 for every other s.
GradedPolynomial lambda_symbol(const GenusContext& ctx, int s);

inline GradedPolynomial z_poly(const GenusContext& ctx, int i, int exp = 1) {
    if (!ctx.valid_z_index(i)) throw std::invalid_argument("z index out of range for genus");
    return GradedPolynomial::from_var(ctx.g(), z_var(i), exp);
}

/// gcd of the coefficients (gcd of numerators / lcm of denominators), > 0.
/// Zero polynomial yields 1.
Rational content(const GradedPolynomial& p);

}  // namespace hsf

#endif
