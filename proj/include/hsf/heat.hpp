#ifndef HSF_HEAT_HPP
#define HSF_HEAT_HPP

#include <string>
#include <vector>

#include "hsf/diffop.hpp"

namespace hsf {

/// Outcome of an identity-verification sweep. Failures carry a readable
/// description of the offending identity and residual.
struct CheckReport {
    bool ok = true;
    std::vector<std::string> failures;

    void fail(std::string what) {
        ok = false;
        failures.push_back(std::move(what));
    }
    void merge(const CheckReport& o) {
        if (!o.ok) ok = false;
        failures.insert(failures.end(), o.failures.begin(), o.failures.end());
    }
};

/// Entry v_{2k,2m} of the polynomial matrix defining the lambda vector
/// fields; symmetric in (k, m), homogeneous of weight 2k + 2m. Indices
/// k, m run over 1..2g.
GradedPolynomial v_poly(const GenusContext& ctx, int k, int m);

/// L_{2k} = sum_q v_{2k+2, 2q-2} d/dlambda_{2q}, the first-order fields in
/// the lambda directions, 0 <= k <= 2g-1. L_0 is the Euler field.
DifferentialOperator build_L(const GenusContext& ctx, int k);

/// The second-order z-operators H_0, H_2, H_4 (argument k = 0, 1, 2) with
/// polynomial lambda coefficients, valid for every genus.
DifferentialOperator build_H(const GenusContext& ctx, int k);

/// Q_{2k} = L_{2k} - H_{2k} for k <= 2; defined recursively through the
/// commutator relation
///   Q_{2k} = [Q_2, Q_{2k-2}]/(2(k-2))
///            - 2(2g-k+1)/((k-2)(2g+1)) (lambda_{2k} Q_0 - lambda_4 Q_{2k-4})
/// for 3 <= k <= 2g-1.
DifferentialOperator build_Q(const GenusContext& ctx, int k);

/// All of Q_0 .. Q_{2*kmax} in one pass (the recursion is shared).
std::vector<DifferentialOperator> build_Q_family(const GenusContext& ctx, int kmax);

/// The z-operator part of Q_{2k}, i.e. build_L(k) - Q_{2k}. Throws if the
/// difference still contains lambda derivatives (which would mean the
/// recursion left the expected representation).
DifferentialOperator h_part_of_Q(const GenusContext& ctx, int k);

/// Structural check of an H-operator: pure second-order part has unit
/// coefficients exactly on index pairs a + b = 2k, first-order coefficients
/// are z-linear with lambda-degree <= 1, zero-order part is a z-quadratic
/// form with lambda-degree <= 2 plus the closed-form constant
///   delta = (-(2g-k+1)(2g-k)/4 + (g+[(k+1)/2]-k)(g-[(k+1)/2])/2) lambda_{2k}.
CheckReport h_shape_check(const DifferentialOperator& op, const GenusContext& ctx, int k);

/// Rational limit (lambda = 0) of H_{2k}, built from its closed form:
///   k = 0:  -g(g+1)/2 + sum (2s-1) z_{2s-1} d_{2s-1}
///   k >= 1: (1/2) sum_{s=1}^{k} d_{2s-1} d_{2k+1-2s}
///           + sum_{s=1}^{g-k} (2s-1) z_{2s-1} d_{2s+2k-1},
/// with d_j = 0 for j > 2g-1. Defined for any k >= 0; vanishes for k >= 2g.
DifferentialOperator hat_H(const GenusContext& ctx, int k);

/// Witt-algebra generator on the genus window: derivatives and coordinates
/// beyond index 2*active_g - 1 are dropped at construction.
DifferentialOperator build_A(int k, int active_g);

/// Verifies [A_{2i}, A_{2j}] = 2(j-i) A_{2(i+j)} for 0 <= i < j <= max_k and
/// -2(k-2) hat_H_{2k} = [hat_H_2, hat_H_{2k-2}] for 3 <= k <= 2g-1.
CheckReport witt_check(int max_k, int active_g);

/// Verifies [L_2, L_{2k}] = 2(k-1) L_{2k+2}
///          + 4(2g-k)/(2g+1) (lambda_{2k+2} L_0 - lambda_4 L_{2k-2}).
CheckReport l_bracket_check(const GenusContext& ctx, int k);

}  // namespace hsf

#endif
