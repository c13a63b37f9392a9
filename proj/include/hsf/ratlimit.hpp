#ifndef HSF_RATLIMIT_HPP
#define HSF_RATLIMIT_HPP

#include "hsf/heat.hpp"

namespace hsf {

/// The rational-limit sigma polynomial: the unique (up to scale) polynomial
/// annihilated by hat_H_0, hat_H_2, hat_H_4, normalized so the coefficient
/// of z1^{g(g+1)/2} is 1.
struct RationalLimitSolution {
    int g = 0;
    GradedPolynomial poly;
    Rational normalization;  // leading z1-power coefficient after normalization
};

enum class SolveMethod {
    Nullspace,  // joint-kernel solve over the full weight stratum
    Induction,  // coefficient recursion descending in total degree
};

/// Monomials z^I with i1 + 3 i3 + ... + (2g-1) i_{2g-1} = weighted_degree,
/// in a fixed deterministic order.
std::vector<Monomial> stratum_monomials(const GenusContext& ctx, int weighted_degree);

/// Computes m_g. Throws std::runtime_error if the joint kernel is not
/// one-dimensional (which would mean an operator-construction bug).
RationalLimitSolution solve_m(int g, SolveMethod method = SolveMethod::Nullspace);

/// hat_H_{2k} m_g = 0 for every k <= up_to_k.
CheckReport verify_annihilation(const RationalLimitSolution& sol, int up_to_k);

/// m_{g+1}' m_{g-1} - m_{g+1} m_{g-1}' = (2g+1) m_g^2 with m_0 = 1 and the
/// prime denoting d/dz1, checked for g = 1 .. max_g-1.
CheckReport adler_moser_recursion_check(int max_g);

}  // namespace hsf

#endif
