#pragma once

// Serialization: human-readable strings for the exact types, the JSON schema
// for H-polynomials (decimal-string rational pairs, so no integer-width
// limits), CSV emission for tables, and the window-report JSON rows.

#include <json.hpp>

#include <string>
#include <vector>

#include "glambda/hpoly.hpp"
#include "glambda/orthopoly.hpp"
#include "glambda/quasifinite.hpp"

namespace glambda {

std::string poly_str(const Polynomial<Rational>& p, const std::string& var);
std::string scalar_str(const LambdaScalar& a);
std::string hpoly_str(const HPoly& f);
std::string spoly_str(const Polynomial<LambdaScalar>& p, const std::string& var);
std::string sscalar_str(const SScalar& a);
std::string qp_str(const QuasiPolynomial<LambdaScalar>& r);

// {"var":"H","coeffs":[{"num":[["p","q"],...],"den":[["p","q"],...]},...]},
// coeffs indexed by H-degree, num/den lambda-coefficient lists low-degree-first.
nlohmann::json emit_poly_json(const HPoly& f);
HPoly parse_poly_json(const nlohmann::json& doc);

// RFC-4180-style CSV: header row, "\n" line endings, quoting only when needed.
std::string emit_table_csv(const std::vector<std::string>& header,
                           const std::vector<std::vector<std::string>>& rows);

std::string residual_table_csv(const ResidualTable& table);

nlohmann::json window_report_json(const WindowReport<SScalar>& report);
nlohmann::json window_report_json(const WindowReport<Rational>& report);

}  // namespace glambda
