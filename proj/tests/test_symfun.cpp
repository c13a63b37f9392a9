#include <doctest.h>

#include "golden.hpp"
#include "hsf/series.hpp"
#include "hsf/symfun.hpp"

using namespace hsf;

namespace {

GradedPolynomial pv(int i, int e = 1) { return GradedPolynomial::from_var(0, p_var(i), e); }
GradedPolynomial ev(int i, int e = 1) { return GradedPolynomial::from_var(0, e_var(i), e); }
GradedPolynomial one0() { return GradedPolynomial::constant(0, Rational(1)); }

std::vector<GradedPolynomial> shw_sequence(int max_g) {
    std::vector<GradedPolynomial> seq = {one0(), pv(1)};
    for (int g = 2; g <= max_g; ++g) seq.push_back(schur_poly(g, SymBasis::P).poly);
    return seq;
}

}  // namespace

TEST_CASE("elementary symmetric polynomials in power sums") {
    CHECK(e_in_p(0) == one0());
    CHECK(e_in_p(1) == pv(1));
    CHECK(e_in_p(2) == Rational(1, 2) * (pv(1, 2) - pv(2)));
    CHECK(e_in_p(3) == Rational(1, 6) * (pv(1, 3) - Rational(3) * (pv(2) * pv(1)) + Rational(2) * pv(3)));
}

TEST_CASE("derivative rule de_k/dp_n") {
    for (int k = 1; k <= 12; ++k)
        for (int n = 1; n <= k; ++n) {
            Rational sign = n % 2 == 1 ? Rational(1, n) : Rational(-1, n);
            CHECK(partial_derivative(e_in_p(k), p_var(n)) == sign * e_in_p(k - n));
        }
}

TEST_CASE("Schur polynomials in the elementary basis") {
    auto sh2 = schur_poly(2, SymBasis::E);
    CHECK(sh2.poly == ev(2) * ev(1) - ev(3));
    auto sh3 = schur_poly(3, SymBasis::E);
    CHECK(sh3.poly == ev(3) * ev(2) * ev(1) + ev(5) * ev(1) - ev(4) * ev(1, 2) - ev(3, 2));
    CHECK(schur_poly(0, SymBasis::E).poly == one0());
    CHECK(schur_poly(1, SymBasis::E).poly == ev(1));
}

TEST_CASE("Schur-Weierstrass polynomials") {
    CHECK(schur_poly(0, SymBasis::P).poly == one0());
    CHECK(schur_poly(1, SymBasis::P).poly == pv(1));
    CHECK(schur_poly(2, SymBasis::P).poly == Rational(1, 3) * (pv(1, 3) - pv(3)));
    CHECK(schur_poly(3, SymBasis::P).poly ==
          Rational(1, 45) * (pv(1, 6) - Rational(5) * (pv(1, 3) * pv(3)) + Rational(9) * (pv(1) * pv(5)) -
                             Rational(5) * pv(3, 2)));
    // only odd power sums appear (the constructor throws otherwise), and the
    // leading coefficient is 1/mu
    for (int g = 2; g <= 6; ++g) {
        auto shw = schur_poly(g, SymBasis::P);
        Monomial lead = Monomial::var(p_var(1), g * (g + 1) / 2);
        CHECK(shw.poly.coefficient(lead) == mu_const(g).reciprocal());
    }
}

TEST_CASE("top power-sum derivative steps down by two") {
    // dShW_k/dp_{2k-1} = (-1)^{k+1} (1/(2k-1)) ShW_{k-2}; the 1/(2k-1) factor
    // is forced by ShW_2 = (p1^3 - p3)/3 against ShW_0 = 1, and makes
    // d(mu_k ShW_k)/d(tau_k) = theta_{k-2} come out monic.
    for (int k = 2; k <= 6; ++k) {
        auto d = partial_derivative(schur_poly(k, SymBasis::P).poly, p_var(2 * k - 1));
        auto expect = Rational(1, 2 * k - 1) * schur_poly(k - 2, SymBasis::P).poly;
        if (k % 2 == 0) expect = -expect;
        CHECK(d == expect);
    }
}

TEST_CASE("Wronskians of the e-chain") {
    CHECK(wronskian({}, p_var(1)) == one0());
    CHECK(wronskian({e_in_p(1)}, p_var(1)) == pv(1));
    // psi_j = e_{2j-1} has psi_j'' = psi_{j-1}; its Wronskians are the
    // Schur-Weierstrass polynomials, and the Wronskian sequence satisfies the
    // Burchnall-Chaundy recurrence
    std::vector<GradedPolynomial> wr = {one0()};
    for (int g = 1; g <= 6; ++g) {
        std::vector<GradedPolynomial> chain;
        for (int j = 1; j <= g; ++j) chain.push_back(e_in_p(2 * j - 1));
        wr.push_back(wronskian(chain, p_var(1)));
        CHECK(wr.back() == schur_poly(g, SymBasis::P).poly);
    }
    CHECK(burchnall_chaundy_check(wr).ok);
}

TEST_CASE("Burchnall-Chaundy relations for the ShW sequence") {
    auto seq = shw_sequence(6);
    auto rep = burchnall_chaundy_check(seq);
    CHECK_MESSAGE(rep.ok, (rep.failures.empty() ? "" : rep.failures.front().c_str()));

    // vacuous pass
    CHECK(burchnall_chaundy_check({one0(), pv(1)}).ok);

    // perturbation must fail at k = 1
    auto bad = seq;
    bad[2] = pv(1, 3);
    auto rep2 = burchnall_chaundy_check(bad);
    CHECK(!rep2.ok);
    CHECK(rep2.failures.front().find("k=1") != std::string::npos);
}

TEST_CASE("mu and alpha constants") {
    CHECK(mu_const(0) == Rational(1));
    CHECK(mu_const(1) == Rational(1));
    CHECK(mu_const(2) == Rational(3));
    CHECK(mu_const(3) == Rational(45));
    CHECK(mu_const(4) == Rational(4725));
    CHECK(mu_const(5) == Rational(4465125));
    // mu_{k+1} mu_{k-1} = (2k+1) mu_k^2 makes the theta rescaling work
    for (int k = 1; k <= 6; ++k)
        CHECK(mu_const(k + 1) * mu_const(k - 1) == Rational(2 * k + 1) * mu_const(k) * mu_const(k));

    CHECK(alpha_const(3) == Rational(-3));
    CHECK(alpha_const(5) == Rational(45));
    CHECK(alpha_const(7) == Rational(-1575));
    CHECK(alpha_const(9) == Rational(99225));
}

TEST_CASE("Adler-Moser sequence from the BC sequence") {
    auto theta = adler_moser_from_bc(shw_sequence(5));
    CHECK(theta[2] == pv(1, 3) - pv(3));
    // normalization: leading term p1^{k(k+1)/2}
    for (int k = 0; k <= 5; ++k) {
        Monomial lead = Monomial::var(p_var(1), k * (k + 1) / 2);
        CHECK(theta[static_cast<std::size_t>(k)].coefficient(lead) == Rational(1));
    }
}

TEST_CASE("tau coefficients") {
    CHECK(tau_from_p(2) == Rational(-1));
    CHECK(tau_from_p(3) == Rational(9));
    CHECK(tau_from_p(4) == Rational(-225));
}

TEST_CASE("hyperbolic tangent series") {
    auto th = tanh_series(9);
    CHECK(th[1] == Rational(1));
    CHECK(th[3] == Rational(-1, 3));
    CHECK(th[5] == Rational(2, 15));
    CHECK(th[7] == Rational(-17, 315));
    CHECK(th[0].is_zero());
    CHECK(th[2].is_zero());
}

TEST_CASE("tanh change of variables solves the triangular system") {
    auto change = tanh_change_of_vars(4, 7);
    // leading order: tau_2* = tau_2 / alpha_3 = -tau_2/3
    CHECK(change.tau_star.at(2) == Rational(-1, 3) * GradedPolynomial::from_var(0, tau_var(2)));

    // round-trip oracle: plug tau* back into th and compare with tau_i/alpha
    const std::size_t len = 8;
    std::vector<GradedPolynomial> u(len, GradedPolynomial::zero(0));
    for (const auto& [i, poly] : change.tau_star) u[static_cast<std::size_t>(2 * i - 1)] = poly;
    auto mul = [&](const std::vector<GradedPolynomial>& a, const std::vector<GradedPolynomial>& b) {
        std::vector<GradedPolynomial> r(len, GradedPolynomial::zero(0));
        for (std::size_t i = 0; i < len; ++i)
            for (std::size_t j = 0; i + j < len; ++j) r[i + j] += a[i] * b[j];
        return r;
    };
    auto th = tanh_series(len);
    std::vector<GradedPolynomial> acc = u;
    auto u3 = mul(mul(u, u), u);
    auto u5 = mul(mul(u3, u), u);
    auto u7 = mul(mul(u5, u), u);
    for (std::size_t s = 0; s < len; ++s) {
        acc[s] += th[3] * u3[s];
        acc[s] += th[5] * u5[s];
        acc[s] += th[7] * u7[s];
    }
    for (int i = 2; i <= 4; ++i) {
        auto expect = Rational(1) / alpha_const(2 * i - 1) * GradedPolynomial::from_var(0, tau_var(i));
        CHECK(acc[static_cast<std::size_t>(2 * i - 1)] == expect);
    }
}

TEST_CASE("matching ShW to the rational limit") {
    auto m2 = match_shw_to_z(2);
    GenusContext g2(2);
    CHECK(m2.p_subst.at(3) == Rational(3) * z_poly(g2, 3));

    auto m3 = match_shw_to_z(3);
    GenusContext g3(3);
    CHECK(m3.p_subst.at(3) == Rational(3) * z_poly(g3, 3));
    CHECK(m3.p_subst.at(5) == Rational(5) * z_poly(g3, 5));

    // tau_2 = -p_3 becomes -3 z3 under the substitution
    CHECK(tau_from_p(2) * m3.p_subst.at(3) == Rational(-3) * z_poly(g3, 3));

    // through g = 5 the change stays diagonal: p_{2k-1} = (2k-1) z_{2k-1}
    // (match_shw_to_z verifies mu_g ShW_g(p(z)) = m_g before returning)
    auto m5 = match_shw_to_z(5);
    GenusContext g5(5);
    CHECK(m5.p_subst.at(7) == Rational(7) * z_poly(g5, 7));
    CHECK(m5.p_subst.at(9) == Rational(9) * z_poly(g5, 9));
}
