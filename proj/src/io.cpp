#include "glambda/io.hpp"

#include <sstream>

namespace glambda {

namespace {

bool is_plain_unit(const std::string& s) { return s == "1"; }

// Renders sum of coeff_str * var^d terms, highest degree first.
std::string render_terms(const std::vector<std::string>& coeffs, const std::vector<bool>& negated,
                         const std::string& var) {
    std::ostringstream os;
    bool first = true;
    for (size_t d = coeffs.size(); d-- > 0;) {
        const std::string& c = coeffs[d];
        if (c.empty()) continue;
        if (first) {
            if (negated[d]) os << "-";
            first = false;
        } else {
            os << (negated[d] ? " - " : " + ");
        }
        const bool unit = is_plain_unit(c);
        if (d == 0) {
            os << c;
        } else {
            if (!unit) os << c << "*";
            os << var;
            if (d > 1) os << "^" << d;
        }
    }
    if (first) return "0";
    return os.str();
}

}  // namespace

std::string poly_str(const Polynomial<Rational>& p, const std::string& var) {
    std::vector<std::string> coeffs(static_cast<size_t>(p.degree() + 1));
    std::vector<bool> negated(coeffs.size(), false);
    for (int d = 0; d <= p.degree(); ++d) {
        const Rational& c = p.coeff(d);
        if (c == 0) continue;
        negated[static_cast<size_t>(d)] = c < 0;
        coeffs[static_cast<size_t>(d)] = rational_str(abs(c));
    }
    return render_terms(coeffs, negated, var);
}

std::string scalar_str(const LambdaScalar& a) {
    if (a.is_polynomial()) return poly_str(a.num(), "lambda");
    return "(" + poly_str(a.num(), "lambda") + ")/(" + poly_str(a.den(), "lambda") + ")";
}

namespace {

// Wraps composite scalars in parens when they multiply a variable power.
std::string scalar_factor(const LambdaScalar& a) {
    const std::string s = scalar_str(a);
    if (s.find_first_of("+- ") != std::string::npos && !(s.size() > 1 && s[0] == '(' && s.back() == ')'))
        return "(" + s + ")";
    return s;
}

}  // namespace

std::string spoly_str(const Polynomial<LambdaScalar>& p, const std::string& var) {
    std::vector<std::string> coeffs(static_cast<size_t>(p.degree() + 1));
    std::vector<bool> negated(coeffs.size(), false);
    for (int d = 0; d <= p.degree(); ++d) {
        LambdaScalar c = p.coeff(d);
        if (c.is_zero()) continue;
        if (c.num().leading() < 0) {
            negated[static_cast<size_t>(d)] = true;
            c = -c;
        }
        coeffs[static_cast<size_t>(d)] = scalar_factor(c);
    }
    return render_terms(coeffs, negated, var);
}

std::string hpoly_str(const HPoly& f) { return spoly_str(f, "H"); }

std::string sscalar_str(const SScalar& a) {
    if (a.is_polynomial()) return spoly_str(a.num(), "s");
    return "(" + spoly_str(a.num(), "s") + ")/(" + spoly_str(a.den(), "s") + ")";
}

std::string qp_str(const QuasiPolynomial<LambdaScalar>& r) {
    if (r.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& term : r.terms()) {
        if (!first) os << " + ";
        first = false;
        os << "(" << spoly_str(term.coeff, "t") << ")*exp((" << scalar_str(term.exponent) << ")*t)";
    }
    return os.str();
}

namespace {

nlohmann::json rational_pair(const Rational& r) {
    return nlohmann::json::array({r.get_num().get_str(), r.get_den().get_str()});
}

nlohmann::json lambda_poly_json(const Polynomial<Rational>& p) {
    nlohmann::json arr = nlohmann::json::array();
    if (p.is_zero()) {
        arr.push_back(rational_pair(Rational(0)));
        return arr;
    }
    for (int d = 0; d <= p.degree(); ++d) arr.push_back(rational_pair(p.coeff(d)));
    return arr;
}

Rational rational_from_pair(const nlohmann::json& pair) {
    if (!pair.is_array() || pair.size() != 2) throw std::invalid_argument("bad rational pair");
    const Rational num = rational_from_string(pair[0].get<std::string>());
    const Rational den = rational_from_string(pair[1].get<std::string>());
    if (den == 0) throw std::invalid_argument("zero denominator in rational pair");
    return num / den;
}

Polynomial<Rational> lambda_poly_from_json(const nlohmann::json& arr) {
    if (!arr.is_array()) throw std::invalid_argument("bad lambda polynomial");
    std::vector<Rational> coeffs;
    for (const auto& pair : arr) coeffs.push_back(rational_from_pair(pair));
    return Polynomial<Rational>(std::move(coeffs));
}

}  // namespace

nlohmann::json emit_poly_json(const HPoly& f) {
    nlohmann::json coeffs = nlohmann::json::array();
    const int top = f.is_zero() ? 0 : f.degree();
    for (int d = 0; d <= top; ++d) {
        const LambdaScalar c = f.coeff(d);
        coeffs.push_back({{"num", lambda_poly_json(c.num())}, {"den", lambda_poly_json(c.den())}});
    }
    return {{"var", "H"}, {"coeffs", coeffs}};
}

HPoly parse_poly_json(const nlohmann::json& doc) {
    if (doc.value("var", "") != "H") throw std::invalid_argument("expected var H");
    std::vector<LambdaScalar> coeffs;
    for (const auto& c : doc.at("coeffs"))
        coeffs.emplace_back(lambda_poly_from_json(c.at("num")), lambda_poly_from_json(c.at("den")));
    return HPoly(std::move(coeffs));
}

namespace {

std::string csv_field(const std::string& value) {
    if (value.find_first_of(",\"\n") == std::string::npos) return value;
    std::string quoted = "\"";
    for (char ch : value) {
        if (ch == '"') quoted += '"';
        quoted += ch;
    }
    quoted += '"';
    return quoted;
}

}  // namespace

std::string emit_table_csv(const std::vector<std::string>& header,
                           const std::vector<std::vector<std::string>>& rows) {
    std::ostringstream os;
    for (size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << csv_field(header[i]);
    os << "\n";
    for (const auto& row : rows) {
        if (row.size() != header.size()) throw std::invalid_argument("ragged CSV row");
        for (size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(row[i]);
        os << "\n";
    }
    return os.str();
}

std::string residual_table_csv(const ResidualTable& table) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& r : table.rows)
        rows.push_back({r.lambda_text, std::to_string(r.l), std::to_string(r.i), std::to_string(r.j),
                        std::to_string(r.k_max), r.partial_sum, r.target, r.residual});
    return emit_table_csv({"lambda", "l", "i", "j", "k_max", "partial_sum", "target", "residual"}, rows);
}

namespace {

template <typename K, typename Str>
nlohmann::json window_json_impl(const WindowReport<K>& report, Str str) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : report.rows)
        rows.push_back({{"lambda", str(report.lambda_value)},
                        {"s", str(report.s_value)},
                        {"k", r.k},
                        {"cocycle", str(r.cocycle)},
                        {"expected", str(r.expected)},
                        {"match", r.match}});
    nlohmann::json correction = nlohmann::json::array();
    for (int j = 0; j <= report.correction.order(); ++j) correction.push_back(str(report.correction.coeff(j)));
    return {{"window", report.window}, {"rows", rows}, {"correction_series", correction}};
}

}  // namespace

nlohmann::json window_report_json(const WindowReport<SScalar>& report) {
    return window_json_impl(report, [](const SScalar& v) { return sscalar_str(v); });
}

nlohmann::json window_report_json(const WindowReport<Rational>& report) {
    return window_json_impl(report, [](const Rational& v) { return rational_str(v); });
}

}  // namespace glambda
