// Command-line front end: structure-constant queries and tables, bracket
// evaluation on G-basis vectors, transvectants on inline polynomials, 6j
// symbols, the B/C/D/G2 tables, and the verification suites.
//
// Exit codes: 0 success, 1 usage or parse error, 2 verification or
// consistency failure.

#include "translie/bracket.hpp"
#include "translie/io.hpp"
#include "translie/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace translie;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) fail_arg("cannot open output file: " + out_path);
    out << text;
}

// The 6j route is only defined on triad keys; elsewhere the constant is
// identically zero because the target component is absent.
Rational omega_sixj_or_zero(const OmegaKey& key) {
    check_omega_key(key);
    if (!omega_triad_holds(key)) return Rational(0);
    return omega_via_sixj(key);
}

int run_omega(long n, long k, long l, long m, const std::string& method) {
    OmegaKey key{n, k, l, m};
    if (method == "formula") {
        std::cout << omega_formula(key).str() << "\n";
    } else if (method == "oracle") {
        std::cout << omega_oracle(n, k, l, m).str() << "\n";
    } else if (method == "sixj") {
        std::cout << omega_sixj_or_zero(key).str() << "\n";
    } else {  // all
        Rational f = omega_formula(key);
        Rational o = omega_oracle(n, k, l, m);
        Rational s = omega_sixj_or_zero(key);
        std::cout << "formula: " << f.str() << "\n"
                  << "oracle: " << o.str() << "\n"
                  << "sixj: " << s.str() << "\n";
        if (!(f == o && f == s)) {
            std::cerr << "error: methods disagree\n";
            return 2;
        }
    }
    return 0;
}

int run_table(long n, const std::string& format, const std::string& out_path) {
    std::vector<OmegaTableEntry> rows = omega_table(n);
    if (format == "json")
        emit(omega_table_to_json(n, rows).dump(2) + "\n", out_path);
    else if (format == "latex")
        emit(omega_table_to_latex(n, rows), out_path);
    else
        emit(omega_table_to_text(n, rows), out_path);
    return 0;
}

GVector read_gvector(const std::string& path, long n) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail_arg("cannot open input file: " + path);
    Json j = Json::parse(in, nullptr, true);
    GVector v = gvector_from_json(j);
    if (v.n() != n) fail_arg("GVector file " + path + " has mismatched n");
    return v;
}

int run_bracket(long n, const std::string& left, const std::string& right) {
    GVector u = read_gvector(left, n);
    GVector v = read_gvector(right, n);
    std::cout << gvector_to_json(lie_bracket(u, v)).dump(2) << "\n";
    return 0;
}

int run_transvect(const std::string& f_text, const std::string& g_text, long m,
                  const std::string& convention) {
    BinaryForm f = parse_form(f_text), g = parse_form(g_text);
    BinaryForm r = (convention == "classical") ? transvectant_classical(f, g, m)
                                               : transvectant_omega(f, g, m);
    std::cout << format_form(r) << "\n";
    return 0;
}

int run_sixj(const std::string& args_text) {
    std::istringstream in(args_text);
    std::vector<std::string> tokens;
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    if (tokens.size() != 6) fail_arg("sixj: expected six spins \"j1 j2 j12 j3 J j23\"");
    SixJArgs a{HalfInt::parse(tokens[0]), HalfInt::parse(tokens[1]),
               HalfInt::parse(tokens[2]), HalfInt::parse(tokens[3]),
               HalfInt::parse(tokens[4]), HalfInt::parse(tokens[5])};
    std::cout << sixj(a).str() << "\n";
    return 0;
}

DIndex parse_d_index(const std::string& text) {
    if (text == "n'" || text == "marker") return DIndex::extra();
    try {
        size_t used = 0;
        long v = std::stol(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return DIndex::regular(v);
    } catch (const std::exception&) {
        fail_arg("type D index must be an odd integer, \"n'\", or \"marker\": " + text);
    }
}

long parse_regular_index(const std::string& text, const char* what) {
    try {
        size_t used = 0;
        long v = std::stol(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        fail_arg(std::string(what) + " must be an integer: " + text);
    }
}

int run_types(const std::string& family, long n, const std::string& k_text,
              const std::string& l_text, const std::string& m_text) {
    bool query = !k_text.empty();
    if (family == "G2") {
        if (query) {
            Json out = Json::object();
            out["value"] = g2_omega(parse_regular_index(k_text, "--k"),
                                    parse_regular_index(l_text, "--l"),
                                    parse_regular_index(m_text, "--m"))
                               .str();
            out["reference_only"] = true;
            out["note"] = kG2ReferenceNote;
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << g2_table_to_json().dump(2) << "\n";
        }
        return 0;
    }
    if (family == "D") {
        if (query) {
            auto v = omega_type_d(n, parse_d_index(k_text), parse_d_index(l_text),
                                  parse_d_index(m_text));
            std::cout << (v.has_value() ? v->str() : std::string("undetermined")) << "\n";
        } else {
            std::cout << type_d_table_to_json(n).dump(2) << "\n";
        }
        return 0;
    }
    if (query) {
        long k = parse_regular_index(k_text, "--k");
        long l = parse_regular_index(l_text, "--l");
        long m = parse_regular_index(m_text, "--m");
        Rational v = (family == "B") ? omega_type_b(n, k, l, m) : omega_type_c(n, k, l, m);
        std::cout << v.str() << "\n";
    } else {
        std::cout << types_table_to_json(family[0], n).dump(2) << "\n";
    }
    return 0;
}

int run_verify(const std::string& suite) {
    std::vector<CheckResult> results = run_suite(suite);
    Json report = report_to_json(suite, results);
    std::cout << report.dump(2) << "\n";
    return report.at("passed").get<bool>() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact transvectant brackets and structure constants for sl_n"};
    app.require_subcommand(1);

    long n = 0, k = 0, l = 0, m = 0;
    std::string method = "formula", format = "json", out_path;
    std::string left, right, f_text, g_text, convention = "omega";
    std::string sixj_args, family, suite = "all";
    std::string k_text, l_text, m_text;

    CLI::App* omega_cmd = app.add_subcommand("omega", "one structure constant");
    omega_cmd->add_option("--n", n, "rank: sl_n")->required();
    omega_cmd->add_option("--k", k, "left component index")->required();
    omega_cmd->add_option("--l", l, "right component index")->required();
    omega_cmd->add_option("--m", m, "transvectant order")->required();
    omega_cmd->add_option("--method", method, "formula|oracle|sixj|all")
        ->check(CLI::IsMember({"formula", "oracle", "sixj", "all"}));

    CLI::App* table_cmd = app.add_subcommand("table", "full structure-constant table");
    table_cmd->add_option("--n", n, "rank: sl_n")->required();
    table_cmd->add_option("--format", format, "json|latex|text")
        ->check(CLI::IsMember({"json", "latex", "text"}));
    table_cmd->add_option("--out", out_path, "write to file instead of stdout");

    CLI::App* bracket_cmd = app.add_subcommand("bracket", "Lie bracket of two G-basis vectors");
    bracket_cmd->add_option("--n", n, "rank: sl_n")->required();
    bracket_cmd->add_option("--left", left, "left operand, GVector JSON file")->required();
    bracket_cmd->add_option("--right", right, "right operand, GVector JSON file")->required();
    bracket_cmd->add_option("--format", format, "json")->check(CLI::IsMember({"json"}));

    CLI::App* tv_cmd = app.add_subcommand("transvect", "transvectant of two binary forms");
    tv_cmd->add_option("--f", f_text, "first form, e.g. \"2*x^2*y + 1/3*y^3\"")->required();
    tv_cmd->add_option("--g", g_text, "second form")->required();
    tv_cmd->add_option("--m", m, "transvectant order")->required();
    tv_cmd->add_option("--convention", convention, "omega|classical")
        ->check(CLI::IsMember({"omega", "classical"}));

    CLI::App* sixj_cmd = app.add_subcommand("sixj", "Wigner 6j symbol");
    sixj_cmd->add_option("--args", sixj_args, "six spins \"j1 j2 j12 j3 J j23\" (halves as p/2)")
        ->required();

    CLI::App* types_cmd = app.add_subcommand("types", "structure constants for types B/C/D/G2");
    types_cmd->add_option("--family", family, "B|C|D|G2")
        ->required()
        ->check(CLI::IsMember({"B", "C", "D", "G2"}));
    types_cmd->add_option("--n", n, "rank (so_{2n+1}, sp_{2n}, so_{2n}; ignored for G2)");
    types_cmd->add_option("--k", k_text, "left index (type D also accepts n' or marker)");
    types_cmd->add_option("--l", l_text, "right index");
    types_cmd->add_option("--m", m_text, "transvectant order");

    CLI::App* verify_cmd = app.add_subcommand("verify", "run verification suites");
    verify_cmd->add_option("--suite", suite, "tables|oracle|symmetries|diagrams|all")
        ->check(CLI::IsMember({"tables", "oracle", "symmetries", "diagrams", "all"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (omega_cmd->parsed()) return run_omega(n, k, l, m, method);
        if (table_cmd->parsed()) return run_table(n, format, out_path);
        if (bracket_cmd->parsed()) return run_bracket(n, left, right);
        if (tv_cmd->parsed()) return run_transvect(f_text, g_text, m, convention);
        if (sixj_cmd->parsed()) return run_sixj(sixj_args);
        if (types_cmd->parsed()) {
            if (family != "G2" && n == 0) fail_arg("types: --n is required for B/C/D");
            bool any = !k_text.empty() || !l_text.empty() || !m_text.empty();
            bool all3 = !k_text.empty() && !l_text.empty() && !m_text.empty();
            if (any && !all3) fail_arg("types: --k/--l/--m must be given together");
            return run_types(family, n, k_text, l_text, m_text);
        }
        if (verify_cmd->parsed()) return run_verify(suite);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
