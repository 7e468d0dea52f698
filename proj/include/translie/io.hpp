#pragma once

// Serialization: JSON schemas for G-basis vectors, structure-constant
// tables, 6j values and type-B/C/D/G2 tables, plus the LaTeX and plain-text
// renderings of the tables. All emitters use fixed orderings and canonical
// rational strings so identical inputs produce byte-identical output.

#include "translie/gvector.hpp"
#include "translie/omega.hpp"
#include "translie/radical.hpp"
#include "translie/types_bcd.hpp"

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

namespace translie {

// Insertion-ordered JSON keeps emitted key order stable.
using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// GVector <-> {"n": int, "terms": [{"i": int, "j": int, "coeff": "p/q"}]}

inline Json gvector_to_json(const GVector& v) {
    Json terms = Json::array();
    for (const auto& [key, c] : v.terms()) {
        Json t = Json::object();
        t["i"] = key.first;
        t["j"] = key.second;
        t["coeff"] = c.str();
        terms.push_back(std::move(t));
    }
    Json out = Json::object();
    out["n"] = v.n();
    out["terms"] = std::move(terms);
    return out;
}

inline GVector gvector_from_json(const Json& j) {
    require_arg(j.is_object() && j.contains("n") && j.contains("terms"),
                "GVector JSON: expected {\"n\": ..., \"terms\": [...]}");
    GVector v(j.at("n").get<long>());
    for (const auto& t : j.at("terms")) {
        v.add_term(t.at("i").get<long>(), t.at("j").get<long>(),
                   Rational::parse(t.at("coeff").get<std::string>()));
    }
    return v;
}

// ---------------------------------------------------------------------------
// BinaryForm <-> {"degree": int, "coeffs": ["p/q", ...]}  (x-power ascending)

inline Json form_to_json(const BinaryForm& f) {
    Json coeffs = Json::array();
    for (long a = 0; a <= f.degree(); ++a) coeffs.push_back(f.coeff(a).str());
    Json out = Json::object();
    out["degree"] = f.degree();
    out["coeffs"] = std::move(coeffs);
    return out;
}

inline BinaryForm form_from_json(const Json& j) {
    require_arg(j.is_object() && j.contains("degree") && j.contains("coeffs"),
                "form JSON: expected {\"degree\": ..., \"coeffs\": [...]}");
    BinaryForm f(j.at("degree").get<long>());
    const auto& coeffs = j.at("coeffs");
    require_arg(static_cast<long>(coeffs.size()) == f.degree() + 1,
                "form JSON: coeffs length must be degree+1");
    for (long a = 0; a <= f.degree(); ++a)
        f.coeff(a) = Rational::parse(coeffs.at(a).get<std::string>());
    return f;
}

// ---------------------------------------------------------------------------
// Structure-constant table, JSON schema
// {"n": int, "constants": [{"k": int, "l": int, "m": int, "value": "p/q"}]}

inline Json omega_table_to_json(long n, const std::vector<OmegaTableEntry>& rows) {
    Json cs = Json::array();
    for (const auto& e : rows) {
        Json o = Json::object();
        o["k"] = e.k;
        o["l"] = e.l;
        o["m"] = e.m;
        o["value"] = e.value.str();
        cs.push_back(std::move(o));
    }
    Json out = Json::object();
    out["n"] = n;
    out["constants"] = std::move(cs);
    return out;
}

namespace detail {

// Cells of one (k, l) row, padded with "0" to the table width. Zero values
// render as a bare 0, matching the published tables.
inline std::vector<std::string> latex_row_cells(const std::vector<OmegaTableEntry>& rows,
                                                size_t& idx, long width) {
    std::vector<std::string> cells;
    long k = rows[idx].k, l = rows[idx].l;
    while (idx < rows.size() && rows[idx].k == k && rows[idx].l == l) {
        const OmegaTableEntry& e = rows[idx];
        if (e.value.is_zero()) {
            cells.push_back("0");
        } else {
            std::ostringstream cell;
            cell << "$\\omega_{" << e.k << "," << e.l << "}^{(" << e.m
                 << ")} = " << e.value.str() << "$";
            cells.push_back(cell.str());
        }
        ++idx;
    }
    while (static_cast<long>(cells.size()) < width) cells.push_back("0");
    return cells;
}

}  // namespace detail

// One tabular, one (k, l) pair per row, columns by descending m, zero-padded
// to the full width.
inline std::string omega_table_to_latex(long n, const std::vector<OmegaTableEntry>& rows) {
    long width = omega_table_width(n);
    std::ostringstream os;
    os << "\\begin{tabular}{|";
    for (long c = 0; c < width; ++c) os << "l|";
    os << "}\n\\hline\n";
    size_t idx = 0;
    while (idx < rows.size()) {
        std::vector<std::string> cells = detail::latex_row_cells(rows, idx, width);
        for (size_t c = 0; c < cells.size(); ++c)
            os << cells[c] << (c + 1 < cells.size() ? " & " : " \\\\\n");
        os << "\\hline\n";
    }
    os << "\\end{tabular}\n";
    return os.str();
}

inline std::string omega_table_to_text(long n, const std::vector<OmegaTableEntry>& rows) {
    std::ostringstream os;
    os << "structure constants of sl_" << n << " (k >= l >= 2)\n";
    size_t idx = 0;
    while (idx < rows.size()) {
        long k = rows[idx].k, l = rows[idx].l;
        os << "(" << k << "," << l << "):";
        while (idx < rows.size() && rows[idx].k == k && rows[idx].l == l) {
            os << "  m=" << rows[idx].m << ": " << rows[idx].value.str();
            ++idx;
        }
        os << "\n";
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Radical -> {"coeff": "p/q", "radicand": "s"}

inline Json radical_to_json(const Radical& r) {
    Json out = Json::object();
    out["coeff"] = r.coeff().str();
    out["radicand"] = r.radicand().get_str();
    return out;
}

// ---------------------------------------------------------------------------
// Type B/C/D/G2 tables, same constants schema plus family / marker fields.

// Rows over the odd exponents k >= l >= 3 of the family, m = 2l-1, 2l-3, ...
// down to 1. Zero values are kept, as in the sl tables.
inline Json types_table_to_json(char family, long n) {
    require_arg(family == 'B' || family == 'C', "types_table_to_json: family must be B or C");
    long top = 2 * n - 1;  // largest exponent of B_n and C_n
    Json cs = Json::array();
    for (long k = 3; k <= top; k += 2)
        for (long l = 3; l <= k; l += 2)
            for (long m = 2 * l - 1; m >= 1; m -= 2) {
                Json o = Json::object();
                o["k"] = k;
                o["l"] = l;
                o["m"] = m;
                o["value"] = (family == 'B' ? omega_type_b(n, k, l, m)
                                            : omega_type_c(n, k, l, m))
                                 .str();
                cs.push_back(std::move(o));
            }
    Json out = Json::object();
    out["family"] = std::string(1, family);
    out["n"] = n;
    out["constants"] = std::move(cs);
    return out;
}

// so_{2n}: regular odd exponents run up to 2n-3 and reduce to sl_{2n-1};
// the extra exponent n-1 is the marker index n', reported through the
// marker_rules block instead of blowing up the constants list.
inline Json type_d_table_to_json(long n) {
    require_arg(n >= 3, "type_d_table_to_json: rank must be >= 3");
    long top = 2 * n - 3;
    Json cs = Json::array();
    for (long k = 3; k <= top; k += 2)
        for (long l = 3; l <= k; l += 2)
            for (long m = 2 * l - 1; m >= 1; m -= 2) {
                Json o = Json::object();
                o["k"] = k;
                o["l"] = l;
                o["m"] = m;
                auto val = omega_type_d(n, DIndex::regular(k), DIndex::regular(l),
                                        DIndex::regular(m));
                internal_check(val.has_value(), "type D: regular entry came back undetermined");
                o["value"] = val->str();
                cs.push_back(std::move(o));
            }
    Json marker = Json::object();
    marker["symbol"] = "n'";
    marker["exponent"] = n - 1;
    Json rules = Json::array();
    auto rule = [&rules](const char* k, const char* l, const char* m, const char* v) {
        Json r = Json::object();
        r["k"] = k;
        r["l"] = l;
        r["m"] = m;
        r["value"] = v;
        rules.push_back(std::move(r));
    };
    rule("any", "any", "n'", "0");
    rule("odd", "n'", "odd", "0");
    rule("n'", "odd", "odd", "0");
    rule("n'", "n'", "odd", "undetermined");
    marker["rules"] = std::move(rules);

    Json out = Json::object();
    out["family"] = "D";
    out["n"] = n;
    out["constants"] = std::move(cs);
    out["marker"] = std::move(marker);
    return out;
}

inline Json g2_table_to_json() {
    Json cs = Json::array();
    for (long m : {9L, 7L, 5L, 3L, 1L}) {
        Json o = Json::object();
        o["k"] = 5;
        o["l"] = 5;
        o["m"] = m;
        o["value"] = g2_omega(5, 5, m).str();
        cs.push_back(std::move(o));
    }
    Json out = Json::object();
    out["family"] = "G2";
    out["n"] = 2;
    out["constants"] = std::move(cs);
    out["reference_only"] = true;
    out["note"] = kG2ReferenceNote;
    return out;
}

}  // namespace translie
