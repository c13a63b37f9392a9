#ifndef HSF_MONOMIAL_HPP
#define HSF_MONOMIAL_HPP

#include <compare>
#include <utility>
#include <vector>

#include "hsf/varid.hpp"

namespace hsf {

/// Sparse exponent vector: sorted (variable, exponent) pairs, exponents > 0.
/// The empty monomial is the ring unit.
class Monomial {
public:
    using Factor = std::pair<VarId, int>;

    Monomial() = default;

    static Monomial unit() { return Monomial(); }

    static Monomial var(VarId v, int exp = 1) {
        Monomial m;
        if (exp < 0) throw std::invalid_argument("Monomial: negative exponent");
        if (exp > 0) m.factors_.push_back({v, exp});
        return m;
    }

    bool is_unit() const { return factors_.empty(); }

    int exponent(VarId v) const {
        for (const auto& [var, e] : factors_)
            if (var == v) return e;
        return 0;
    }

    const std::vector<Factor>& factors() const { return factors_; }

    /// Sum of exponent * weight(var) over all factors.
    int weight() const {
        int w = 0;
        for (const auto& [var, e] : factors_) w += e * var.weight();
        return w;
    }

    /// Weight restricted to one variable family.
    int weight_of_kind(VarKind kind) const {
        int w = 0;
        for (const auto& [var, e] : factors_)
            if (var.kind == kind) w += e * var.weight();
        return w;
    }

    int total_degree() const {
        int d = 0;
        for (const auto& [var, e] : factors_) d += e;
        return d;
    }

    int degree_of_kind(VarKind kind) const {
        int d = 0;
        for (const auto& [var, e] : factors_)
            if (var.kind == kind) d += e;
        return d;
    }

    bool contains_kind(VarKind kind) const {
        for (const auto& [var, e] : factors_)
            if (var.kind == kind) return true;
        return false;
    }

    int max_index_of_kind(VarKind kind) const {
        int m = 0;
        for (const auto& [var, e] : factors_)
            if (var.kind == kind && var.index > m) m = var.index;
        return m;
    }

    Monomial times(const Monomial& o) const;

    /// Multiplies by v^exp (exp may be negative; throws if the result would
    /// have a negative exponent).
    Monomial times_var(VarId v, int exp) const;

    /// Canonical term order: walk variables in the canonical block order; at
    /// the first variable whose exponents differ, the larger exponent sorts
    /// first. Gives z1-major descending output, e.g. "z1^3 - 3*z3".
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors_ == b.factors_; }

private:
    std::vector<Factor> factors_;
};

}  // namespace hsf

#endif
