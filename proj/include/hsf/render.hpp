#ifndef HSF_RENDER_HPP
#define HSF_RENDER_HPP

#include <string>

#include <json.hpp>

#include "hsf/diffop.hpp"

namespace hsf {

enum class Format { Text, Json, Latex };

Format parse_format(const std::string& name);

/// Canonical text rendering, terms in the canonical monomial order:
/// "z1^3 - 3*z3", "1/420*lambda4*z1^7 + ...". Bit-stable across runs.
std::string to_text(const GradedPolynomial& p);

/// "coeff*d-monomial" per term; multi-term coefficients are parenthesized.
std::string to_text(const DifferentialOperator& op);

/// {"genus": g, "terms": [{"coeff": [num, den], "exps": [[kind, index, exp], ...]}, ...]}
/// Coefficient entries are JSON integers when they fit 53 bits, decimal
/// strings otherwise.
nlohmann::json to_json(const GradedPolynomial& p);

/// Mirrors the polynomial schema with an "orders" block per term; "coeff" is
/// the coefficient polynomial's term array.
nlohmann::json to_json(const DifferentialOperator& op);

GradedPolynomial polynomial_from_json(const nlohmann::json& j);
DifferentialOperator operator_from_json(const nlohmann::json& j);

/// LaTeX with the common rational content factored out when it has a
/// nontrivial denominator: "\frac{1}{3}\left(p_1^{3} - p_3\right)".
std::string to_latex(const GradedPolynomial& p);

std::string to_latex(const DifferentialOperator& op);

std::string render(const GradedPolynomial& p, Format f);
std::string render(const DifferentialOperator& op, Format f);

}  // namespace hsf

#endif
