// Command-line surface for the gl(lambda) toolkit: compute the orthogonal
// polynomials and traces, emit Gram matrices, run the verification suites,
// explore the dual-orthogonality conjecture and print module characters.
//
// Exit codes: 0 success / all checks passed, 1 falsified identity check,
// 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

#include "glambda/io.hpp"
#include "glambda/modchar.hpp"
#include "glambda/orthopoly.hpp"
#include "glambda/quasifinite.hpp"
#include "glambda/traceform.hpp"
#include "glambda/verify.hpp"

namespace {

using namespace glambda;

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << text;
}

bool lambda_is_symbolic(const std::string& text) { return text.empty() || text == "symbolic"; }

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(std::stoi(item));
    }
    if (out.empty()) throw CLI::ValidationError("expected a comma-separated integer list");
    return out;
}

int run_poly(int k, int l, const std::string& route, const std::string& lambda_text, const std::string& format,
             const std::string& output) {
    OrthoPoly result;
    if (route == "ad")
        result = f_ad(k, l);
    else if (route == "hahn")
        result = f_hahn(k, l);
    else
        result = f_nabla(k, l);

    std::ostringstream os;
    if (format == "json")
        os << emit_poly_json(result.poly).dump(2) << "\n";
    else
        os << "f[" << k << "," << l << "] = " << hpoly_str(result.poly) << "\n";

    if (!lambda_is_symbolic(lambda_text)) {
        // Integer lambda additionally activates the matrix-oracle cross-check.
        const Rational lam = rational_from_string(lambda_text);
        const auto specialized = hpoly_eval_lambda(result.poly, lam);
        os << "at lambda=" << rational_str(lam) << ": " << poly_str(specialized, "H") << "\n";
        if (is_integer(lam) && lam > 0 && l >= 0) {
            const int n = static_cast<int>(lam.get_num().get_si());
            const auto via_ad = specialize(
                ad_pow(AlgebraElement::gen_y(), static_cast<unsigned>(k - l), pow(AlgebraElement::gen_x(), static_cast<unsigned>(k))), n);
            const auto via_poly = specialize(AlgebraElement::monomial(l, result.poly), n);
            os << "matrix oracle: " << (via_ad == via_poly ? "match" : "MISMATCH") << "\n";
            if (via_ad != via_poly) {
                write_output(os.str(), output);
                return 1;
            }
        }
    }
    write_output(os.str(), output);
    return 0;
}

int run_trace(int m, int series_order, bool normalized, const std::string& lambda_text, const std::string& format,
              const std::string& output) {
    std::ostringstream os;
    nlohmann::json doc;
    if (series_order > 0) {
        const auto s = normalized ? trace_zero_series(series_order) : trace_series(series_order);
        for (int j = 0; j <= series_order; ++j) {
            const std::string c = scalar_str(s.coeff(j));
            if (format == "json")
                doc["series"].push_back(c);
            else
                os << "t^" << j << ": " << c << "\n";
        }
    } else {
        LambdaScalar value = trace_moment(m);
        if (normalized) value = value / lambda();
        if (!lambda_is_symbolic(lambda_text)) {
            const Rational lam = rational_from_string(lambda_text);
            const Rational at = eval_lambda(value, lam);
            if (format == "json")
                doc = {{"m", m}, {"trace", rational_str(at)}};
            else
                os << "tr(H^" << m << ") at lambda=" << rational_str(lam) << " = " << rational_str(at) << "\n";
        } else {
            if (format == "json")
                doc = {{"m", m}, {"trace", scalar_str(value)}};
            else
                os << "tr(H^" << m << ") = " << scalar_str(value) << "\n";
        }
    }
    write_output(format == "json" ? doc.dump(2) + "\n" : os.str(), output);
    return 0;
}

int run_gram(int k_max, int l, const std::string& lambda_text, const std::string& format, const std::string& output) {
    const bool symbolic = lambda_is_symbolic(lambda_text);
    std::vector<HPoly> fs;
    for (int k = l; k <= k_max; ++k) fs.push_back(f_nabla(k, l).poly);
    const HPoly w = weight_product(l);

    std::vector<std::string> header{"k\\k'"};
    for (int k = l; k <= k_max; ++k) header.push_back(std::to_string(k));
    std::vector<std::vector<std::string>> rows;
    bool oracle_ok = true;
    for (int k = l; k <= k_max; ++k) {
        std::vector<std::string> row{std::to_string(k)};
        for (int k1 = l; k1 <= k_max; ++k1) {
            const HPoly prod = fs[static_cast<size_t>(k - l)] * fs[static_cast<size_t>(k1 - l)] * w;
            if (symbolic) {
                row.push_back(scalar_str(trace_h(prod)));
            } else {
                const Rational lam = rational_from_string(lambda_text);
                const Rational entry = eval_lambda(trace_h(prod), lam);
                row.push_back(rational_str(entry));
                // Integer lambda: cross-check against the finite trace.
                if (is_integer(lam) && lam > 0) {
                    const int n = static_cast<int>(lam.get_num().get_si());
                    if (trace_h_at(hpoly_eval_lambda(prod, lam), n) != entry) oracle_ok = false;
                }
            }
        }
        rows.push_back(std::move(row));
    }
    std::ostringstream os;
    if (format == "csv") {
        os << emit_table_csv(header, rows);
    } else if (format == "json") {
        nlohmann::json doc{{"l", l}, {"k_max", k_max}, {"rows", rows}};
        os << doc.dump(2) << "\n";
    } else {
        for (const auto& row : rows) {
            for (size_t i = 1; i < row.size(); ++i) os << (i > 1 ? "  " : "") << row[i];
            os << "\n";
        }
    }
    if (!oracle_ok) os << "matrix oracle: MISMATCH\n";
    write_output(os.str(), output);
    return oracle_ok ? 0 : 1;
}

int run_verify(const std::string& group, const VerifyParams& params, const std::string& format,
               const std::string& output) {
    const auto results = run_verify_group(group, params);
    bool all_passed = true;
    std::ostringstream os;
    nlohmann::json doc = nlohmann::json::array();
    for (const auto& r : results) {
        all_passed = all_passed && r.passed;
        if (format == "json")
            doc.push_back({{"check", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        else
            os << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << "  " << r.detail << "\n";
    }
    write_output(format == "json" ? doc.dump(2) + "\n" : os.str(), output);
    return all_passed ? 0 : 1;
}

int run_conjecture(const std::string& lambda_text, int l, int imax, const std::string& kmax_text,
                   bool include_lambda, unsigned precision, const std::string& format, const std::string& output) {
    const Rational lam = rational_from_string(lambda_is_symbolic(lambda_text) ? "1000" : lambda_text);
    ConjectureOptions opt;
    opt.l = l;
    opt.include_lambda = include_lambda;
    for (int i = l + 1; i <= l + imax; ++i)
        for (int j = l + 1; j <= l + imax; ++j) opt.pairs.emplace_back(i, j);
    for (int i = 1; i <= imax; ++i) opt.casimir_indices.push_back(i);
    opt.k_max_schedule = parse_int_list(kmax_text);
    const ResidualTable table = precision > 0 ? conjecture_scan_float(lam, opt, precision) : conjecture_scan(lam, opt);
    std::ostringstream os;
    if (format == "json") {
        nlohmann::json doc = nlohmann::json::array();
        for (const auto& r : table.rows)
            doc.push_back({{"lambda", r.lambda_text},
                           {"l", r.l},
                           {"i", r.i},
                           {"j", r.j},
                           {"k_max", r.k_max},
                           {"partial_sum", r.partial_sum},
                           {"target", r.target},
                           {"residual", r.residual}});
        os << doc.dump(2) << "\n";
    } else {
        os << residual_table_csv(table);
    }
    write_output(os.str(), output);
    return 0;
}

int run_character(const std::string& parts_text, int order, const std::string& format, const std::string& output) {
    const Partition nu(parse_int_list(parts_text));
    const auto result = char_poly(nu);
    const auto qc_standard = q_character(nu, NuConvention::standard, order);
    const auto qc_printed = q_character(nu, NuConvention::printed, order);
    std::ostringstream os;
    if (format == "json") {
        nlohmann::json doc;
        doc["partition"] = nu.parts();
        doc["char_poly"] = {{"stated", hpoly_str(result.stated)},
                            {"derived", hpoly_str(result.derived)},
                            {"match", result.match}};
        for (const auto* qc : {&qc_standard, &qc_printed}) {
            nlohmann::json entry{{"a_power", qc->a_power}, {"q_shift", qc->q_shift}, {"hooks", qc->hook_denominator}};
            for (int j = 0; j <= qc->series.order(); ++j) entry["series"].push_back(rational_str(qc->series.coeff(j)));
            doc["q_character"][qc == &qc_standard ? "standard" : "printed"] = entry;
        }
        os << doc.dump(2) << "\n";
    } else {
        os << "characteristic polynomial (stated):  " << hpoly_str(result.stated) << "\n";
        os << "characteristic polynomial (derived): " << hpoly_str(result.derived) << "\n";
        os << "match: " << (result.match ? "true" : "false") << "\n";
        os << "q-character (standard): a^" << qc_standard.a_power << " q^" << qc_standard.q_shift << " / hooks";
        for (int h : qc_standard.hook_denominator) os << " " << h;
        os << "\n";
        os << "q-character (printed n(nu)): a^" << qc_printed.a_power << " q^" << qc_printed.q_shift << "\n";
    }
    write_output(os.str(), output);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact toolkit for the Lie algebra gl(lambda) of complex-size matrices"};
    app.require_subcommand(1);
    app.fallthrough();  // allow global flags like --format after the subcommand

    std::string format = "text";
    std::string output;
    std::string lambda_text = "symbolic";
    app.add_option("--format", format, "Output format (text|json|csv)")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--output", output, "Write output to a file instead of stdout");

    // poly
    auto* poly = app.add_subcommand("poly", "Compute the orthogonal polynomial f_{k,l}");
    int poly_k = 0, poly_l = 0;
    std::string poly_route = "nabla";
    poly->add_option("--k", poly_k, "Upper index k")->required();
    poly->add_option("--l", poly_l, "Lower index l (0 <= l <= k)")->required();
    poly->add_option("--route", poly_route, "Construction route (nabla|ad|hahn)")
        ->check(CLI::IsMember({"nabla", "ad", "hahn"}))
        ->capture_default_str();
    poly->add_option("--lambda", lambda_text, "symbolic (default), integer or rational p/q");

    // trace
    auto* trace_cmd = app.add_subcommand("trace", "Trace moments and generating series");
    int trace_m = 0, trace_series_order = 0;
    bool trace_normalized = false;
    trace_cmd->add_option("--m", trace_m, "Moment index: print tr(H^m)");
    trace_cmd->add_option("--series", trace_series_order, "Print the generating series through t^N");
    trace_cmd->add_flag("--normalized", trace_normalized,
                        "Divide by lambda (moments) / use the lambda=0 normalization (series)");
    trace_cmd->add_option("--lambda", lambda_text, "symbolic (default), integer or rational p/q");

    // gram
    auto* gram = app.add_subcommand("gram", "Gram matrix of {f_{k,l}} under <.,.>_l");
    int gram_kmax = 4, gram_l = 0;
    gram->add_option("--kmax", gram_kmax, "Largest k")->capture_default_str();
    gram->add_option("--l", gram_l, "Weight index l")->capture_default_str();
    gram->add_option("--lambda", lambda_text, "symbolic (default), integer or rational p/q");

    // verify
    auto* verify = app.add_subcommand("verify", "Run identity-check suites");
    std::string group = "all";
    VerifyParams params;
    verify->add_option("group", group, "ortho|diffeq|casimir|dual|hahn|embedding|weights|modchar|conjecture-finite|all")
        ->check(CLI::IsMember({"ortho", "diffeq", "casimir", "dual", "hahn", "embedding", "weights", "modchar",
                               "conjecture-finite", "all"}))
        ->capture_default_str();
    verify->add_option("--kmax", params.k_max, "Largest k for polynomial checks")->capture_default_str();
    verify->add_option("--nmax", params.n_max, "Largest integer lambda")->capture_default_str();
    verify->add_option("--lmax", params.l_max, "Largest weight index for Gram checks")->capture_default_str();
    verify->add_option("--order", params.order, "Series truncation order")->capture_default_str();
    verify->add_option("--pairs", params.pairs, "Random pairs per n in the embedding oracle")->capture_default_str();
    verify->add_option("--gauges", params.gauges, "Random diagonal gauges in the window check")->capture_default_str();
    verify->add_option("--window", params.window, "Window half-size N")->capture_default_str();
    verify->add_option("--window-k", params.window_k, "Largest cocycle power k")->capture_default_str();
    verify->add_option("--configs", params.configs, "Seeded weight configurations")->capture_default_str();
    verify->add_option("--numax", params.nu_max, "Largest |nu| for modchar checks")->capture_default_str();
    verify->add_option("--seed", params.seed, "Seed for the randomized suites")->capture_default_str();

    // conjecture
    auto* conjecture = app.add_subcommand("conjecture", "Partial sums of the dual-orthogonality conjecture");
    int conj_l = 0, conj_imax = 3;
    std::string conj_kmax = "5,10,20,40";
    bool no_lambda_norm = false;
    unsigned precision = 0;
    conjecture->add_option("--lambda", lambda_text, "Evaluation point (rational)")->required();
    conjecture->add_option("--l", conj_l, "Weight index l")->capture_default_str();
    conjecture->add_option("--imax", conj_imax, "Indices i,j range over l+1..l+imax")->capture_default_str();
    conjecture->add_option("--kmax", conj_kmax, "Comma-separated k_max schedule")->capture_default_str();
    conjecture->add_flag("--drop-lambda-norm", no_lambda_norm, "Drop the leading lambda factor from the norms c_kl");
    conjecture->add_option("--precision", precision, "Decimal digits; 0 (default) = exact rationals");

    // character
    auto* character = app.add_subcommand("character", "Characteristic polynomial and q-character of V^nu");
    std::string parts_text;
    int char_order = 8;
    character->add_option("--parts", parts_text, "Partition, e.g. 3,1,1")->required();
    character->add_option("--order", char_order, "q-series truncation order")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (poly->parsed()) return run_poly(poly_k, poly_l, poly_route, lambda_text, format, output);
        if (trace_cmd->parsed())
            return run_trace(trace_m, trace_series_order, trace_normalized, lambda_text, format, output);
        if (gram->parsed()) return run_gram(gram_kmax, gram_l, lambda_text, format, output);
        if (verify->parsed()) return run_verify(group, params, format, output);
        if (conjecture->parsed())
            return run_conjecture(lambda_text, conj_l, conj_imax, conj_kmax, !no_lambda_norm, precision, format, output);
        if (character->parsed()) return run_character(parts_text, char_order, format, output);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
