#ifndef HSF_SYMFUN_HPP
#define HSF_SYMFUN_HPP

#include <map>
#include <vector>

#include "hsf/heat.hpp"

namespace hsf {

enum class SymBasis { E, P };

/// A symmetric-function polynomial (genus tag 0) together with the basis its
/// variables refer to.
struct SymPoly {
    GradedPolynomial poly;
    SymBasis basis = SymBasis::P;
};

/// e_k expressed in power sums: e_k = (1/k!) p1^k + ... + (-1)^{k-1} (1/k) p_k.
/// Cached; k = 0 gives 1.
const GradedPolynomial& e_in_p(int k);

/// det of a square polynomial matrix by Laplace expansion.
GradedPolynomial poly_det(const std::vector<std::vector<GradedPolynomial>>& m);

/// The genus-g Schur polynomial det(e_{g-2i+j+1}) in the requested basis; the
/// P form is the Schur-Weierstrass polynomial ShW_g, a polynomial in the odd
/// power sums only.
SymPoly schur_poly(int g, SymBasis basis);

/// Wronskian det(D^{i-1} f_j) with D = d/d(var). Empty input gives 1.
GradedPolynomial wronskian(const std::vector<GradedPolynomial>& funcs, VarId var);

/// phi_{k+1}' phi_{k-1} - phi_{k+1} phi_{k-1}' = phi_k^2 for every interior
/// index, with phi_0 = 1 and phi_1 = p1 required up front.
CheckReport burchnall_chaundy_check(const std::vector<GradedPolynomial>& seq);

/// mu_0 = mu_1 = 1, mu_k = prod_{j=1}^{k} (2k-2j+1)^j.
Rational mu_const(int k);

/// alpha_{2i-1} = (-1)^{i-1} 3^2 5^2 ... (2i-3)^2 (2i-1), indexed by odd 2i-1.
Rational alpha_const(int odd_index);

/// Both constant families as tables: mu[k] for k = 0..max_k and
/// alpha[2i-1] for i = 2..max_k.
struct AdlerMoserConstants {
    std::map<int, Rational> mu;
    std::map<int, Rational> alpha;
};
AdlerMoserConstants adler_moser_constants(int max_k);

/// theta_k = mu_k phi_k; verifies the (2k+1)-weighted relation
/// theta_{k+1}' theta_{k-1} - theta_{k+1} theta_{k-1}' = (2k+1) theta_k^2
/// before returning the rescaled sequence.
std::vector<GradedPolynomial> adler_moser_from_bc(const std::vector<GradedPolynomial>& seq);

/// Coefficient c_k with tau_k = c_k p_{2k-1}:
/// c_k = (-1)^{k+1} (1/(2k-1)) mu_k / mu_{k-2}, k >= 2.
Rational tau_from_p(int k);

/// Solution of sum_{i>=2} (tau_i / alpha_{2i-1}) t^{2i-1} = th(sum tau_i* t^{2i-1})
/// to the requested odd order: tau_star[i] is tau_i* as a polynomial in the
/// tau variables (genus tag 0).
struct TanhChange {
    int order = 0;
    std::map<int, GradedPolynomial> tau_star;
};
TanhChange tanh_change_of_vars(int g, int order);

/// The change of variables p_{2k-1} = beta_k z_{2k-1} + q_{2k-1}(z-hat) under
/// which mu_g ShW_g(p(z)) equals the rational-limit polynomial m_g(z).
/// p_subst maps the odd index 2k-1 to the genus-g z-polynomial; determined
/// stage by stage ascending in k, each stage a unique linear solve, and
/// verified against m_g before returning.
struct ShwMatch {
    int g = 0;
    std::map<int, GradedPolynomial> p_subst;
};
ShwMatch match_shw_to_z(int g);

}  // namespace hsf

#endif
