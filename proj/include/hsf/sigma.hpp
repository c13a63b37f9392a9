#ifndef HSF_SIGMA_HPP
#define HSF_SIGMA_HPP

#include <optional>
#include <utility>
#include <vector>

#include "hsf/heat.hpp"

namespace hsf {

/// A sigma-series truncation: every lambda-weight stratum up to
/// max_lambda_weight is complete, higher strata are deliberately absent.
/// Stratum 0 is the rational-limit polynomial m_g.
struct TruncatedSeries {
    int g = 0;
    int max_lambda_weight = 0;
    GradedPolynomial poly;
};

/// Solves the heat system stratum by stratum: stratum 0 is m_g, and each
/// higher lambda-weight stratum is the unique solution of the linear system
/// obtained by restricting Q_{2k} psi = 0 (k = 0..2g-1) to that stratum.
/// Throws std::runtime_error when a stratum solve is not uniquely solvable.
TruncatedSeries sigma_series(int g, int max_lambda_weight);

/// A rational expression num / sigma^pow over a fixed sigma polynomial.
struct SigmaRatio {
    GradedPolynomial num;
    int pow = 0;
};

SigmaRatio ratio_add(const GradedPolynomial& sigma, const SigmaRatio& a, const SigmaRatio& b);
SigmaRatio ratio_sub(const GradedPolynomial& sigma, const SigmaRatio& a, const SigmaRatio& b);
SigmaRatio ratio_mul(const SigmaRatio& a, const SigmaRatio& b);
SigmaRatio ratio_scale(SigmaRatio a, const Rational& c);

/// Quotient-rule derivative: d(num/sigma^p) = (dnum sigma - p num dsigma)/sigma^{p+1}.
SigmaRatio ratio_diff(const GradedPolynomial& sigma, const SigmaRatio& a, VarId v);

/// True when every lambda-weight stratum of the numerator up to the bound
/// vanishes; an empty bound demands the numerator be identically zero.
bool ratio_zero(const SigmaRatio& a, std::optional<int> bound);

/// zeta_k = d_k sigma / sigma.
SigmaRatio zeta(const TruncatedSeries& series, int k);

/// wp_{k1,...,kn} = -d_{k1} ... d_{kn} ln sigma, n >= 2, built by iterated
/// quotient-rule differentiation. Exact for rational-limit input; carries the
/// truncation contract otherwise.
SigmaRatio wp(const TruncatedSeries& series, const std::vector<int>& indices);

/// 4 d3 wp = d1 (d1^2 wp - 6 wp^2) for wp built on m_g; exact numerator
/// identity after clearing sigma powers. g = 1 degenerates to 0 = 0.
CheckReport kdv_check_rational(int g);

/// Same identity over the truncated series, asserted on every lambda stratum
/// up to the bound.
CheckReport kdv_check_series(int g, int max_lambda_weight);

/// Derivation of the function field: polynomial vector-field part plus
/// zeta-coefficient terms; each (a, b) entry contributes -zeta_a d_b.
struct ScriptL {
    DifferentialOperator field;
    std::vector<std::pair<int, int>> zeta_terms;
};

/// The derivations for k = 0, 1, 2:
///   script_L_0 = L_0 - sum (2s-1) z_{2s-1} d_{2s-1}
///   script_L_2 = L_2 - zeta_1 d_1 - sum (2s-1) z_{2s-1} d_{2s+1}
///                + 4/(2g+1) lambda_4 sum (g-s) z_{2s+1} d_{2s-1}
///   script_L_4 = L_4 - zeta_3 d_1 - zeta_1 d_3 - sum (2s-1) z_{2s-1} d_{2s+3}
///                - lambda_4 sum (2s-1) z_{2s+1} d_{2s+1}
///                + 6/(2g+1) lambda_6 sum (g-s) z_{2s+1} d_{2s-1}
ScriptL build_script_L(const GenusContext& ctx, int k);

/// Applies the derivation to a rational expression over the series' sigma.
SigmaRatio apply_script_L(const ScriptL& op, const TruncatedSeries& series, const SigmaRatio& f);

/// Polynomial vector fields on the 3g coordinates x_{i,j}: field maps (i, j)
/// to the tau-derivative of x_{i,j} as a polynomial in the x variables.
struct DynFields {
    int g = 0;
    std::vector<std::pair<std::pair<int, int>, GradedPolynomial>> d0;
    std::vector<std::pair<std::pair<int, int>, GradedPolynomial>> d1;
};

/// d0: dx_{i,j} = (i+j) x_{i,j};
/// d1: dx_{1,j} = x_{2,j}, dx_{2,j} = x_{3,j},
///     dx_{3,j} = 4 (2 x_{1,1} x_{2,j} + x_{2,1} x_{1,j} + x_{2,j+2}),
/// with x_{2,2g+1} = 0.
DynFields dyn_fields(int g);

enum class DynFlow { S0, S1, S2 };

/// Substitutes x_{1,j} = wp_{1,j}, x_{2,j} = wp_{1,1,j}, x_{3,j} = wp_{1,1,1,j}
/// built from sigma_series(g, bound) and verifies the flow equations as
/// rational-function identities on every lambda stratum up to the bound.
/// S0 and S1 run for any g; S2 is the genus-3 system (with the lambda_4
/// identity lambda_4 = -3 x_{1,1}^2 + x_{3,1}/2 - 2 x_{1,3}).
CheckReport dyn_consistency_check(int g, DynFlow flow, int max_lambda_weight);

}  // namespace hsf

#endif
