#include <doctest.h>

#include <random>

#include "golden.hpp"
#include "hsf/heat.hpp"
#include "hsf/render.hpp"
#include "hsf/symfun.hpp"

using namespace hsf;

TEST_CASE("text rendering") {
    CHECK(to_text(golden::m_poly(2)) == "z1^3 - 3*z3");
    CHECK(to_text(golden::m_poly(3)) == "z1^6 - 15*z1^3*z3 + 45*z1*z5 - 45*z3^2");
    CHECK(to_text(GradedPolynomial::zero(1)) == "0");
    GenusContext g1(1);
    auto s = golden::sigma1_series_weight6();
    CHECK(to_text(s) == "1/210*z1^7*lambda6 + 1/60*z1^5*lambda4 + z1");
}

TEST_CASE("json rendering matches the schema") {
    CHECK(to_json(golden::m_poly(1)).dump() == R"({"genus":1,"terms":[{"coeff":[1,1],"exps":[["Z",1,1]]}]})");
}

TEST_CASE("latex rendering factors the content") {
    auto shw2 = schur_poly(2, SymBasis::P).poly;
    CHECK(to_latex(shw2) == "\\frac{1}{3}\\left(p_1^{3} - p_3\\right)");
    CHECK(to_latex(golden::m_poly(2)) == "z_1^{3} - 3 z_3");
}

TEST_CASE("polynomial json round-trip") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<int> expd(0, 3), coefn(-20, 20), coefd(1, 9);
    GenusContext ctx(2);
    std::vector<VarId> vars = ctx.z_vars();
    for (VarId v : ctx.lambda_vars()) vars.push_back(v);
    for (int trial = 0; trial < 30; ++trial) {
        GradedPolynomial p(2);
        for (int t = 0; t < 5; ++t) {
            Monomial m;
            for (VarId v : vars)
                if (expd(rng) == 1) m = m.times_var(v, expd(rng) + 1);
            p.add_term(m, Rational(coefn(rng), coefd(rng)));
        }
        CHECK(polynomial_from_json(to_json(p)) == p);
    }
}

TEST_CASE("json round-trip keeps huge coefficients exact") {
    GradedPolynomial p(1);
    Rational huge = Rational::from_string("90071992547409931234567/13");
    p.add_term(Monomial::var(z_var(1)), huge);
    auto j = to_json(p);
    CHECK(j["terms"][0]["coeff"][0].is_string());
    CHECK(polynomial_from_json(j) == p);
}

TEST_CASE("operator json round-trip") {
    GenusContext g2(2), g3(3);
    for (const DifferentialOperator& op :
         {build_H(g2, 2), build_L(g3, 2), build_Q(g2, 3), build_A(3, 2)}) {
        CHECK(operator_from_json(to_json(op)) == op);
    }
}

TEST_CASE("rendering is insertion-order independent") {
    GradedPolynomial a(2), b(2);
    auto m1 = Monomial::var(z_var(1), 3);
    auto m2 = Monomial::var(z_var(3));
    a.add_term(m1, Rational(1));
    a.add_term(m2, Rational(-3));
    b.add_term(m2, Rational(-3));
    b.add_term(m1, Rational(1));
    CHECK(to_text(a) == to_text(b));
    CHECK(to_json(a).dump() == to_json(b).dump());
}
