#include "szeta/io.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "szeta/rootzeta.hpp"

namespace szeta {

json to_json(cplx v) { return json::array({v.real(), v.imag()}); }

json to_json(const Approx& a) {
    return {{"re", a.value.real()}, {"im", a.value.imag()}, {"err_bound", a.err_bound}};
}

json to_json(const ContentSpec& spec) {
    json z = json::object(), y = json::object();
    for (const auto& [k, v] : spec.z) z[std::to_string(k)] = v.imag() == 0 ? json(v.real()) : to_json(v);
    for (const auto& [k, v] : spec.y) y[std::to_string(k)] = v;
    return {{"z", z}, {"y", y}};
}

json to_json(const IdentityReport& r) {
    json j;
    j["identity_id"] = to_string(r.id);
    j["shape"] = r.shape;
    j["lhs"] = to_json(r.lhs);
    j["rhs"] = to_json(r.rhs);
    j["discrepancy"] = r.discrepancy;
    j["budget"] = r.budget;
    j["pass"] = r.pass;
    j["cutoffs"] = r.cutoffs;
    j["runtime_ms"] = r.runtime_ms;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

cplx parse_complex(const std::string& text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw ParseError("empty number");
    try {
        if (t.back() != 'i') {
            std::size_t used = 0;
            double v = std::stod(t, &used);
            if (used != t.size()) throw ParseError("bad number '" + text + "'");
            return v;
        }
        std::string body = t.substr(0, t.size() - 1);
        // split at the last sign that is not the leading one or an exponent sign
        std::size_t split = std::string::npos;
        for (std::size_t i = body.size(); i-- > 1;)
            if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
                split = i;
                break;
            }
        auto num = [&](const std::string& s) {
            if (s.empty() || s == "+") return 1.0;
            if (s == "-") return -1.0;
            std::size_t used = 0;
            double v = std::stod(s, &used);
            if (used != s.size()) throw ParseError("bad number '" + text + "'");
            return v;
        };
        if (split == std::string::npos) return cplx(0, num(body));
        return cplx(num(body.substr(0, split)), num(body.substr(split)));
    } catch (const std::logic_error&) {
        throw ParseError("bad number '" + text + "'");
    }
}

std::map<int, cplx> parse_assignments(const std::string& text) {
    std::map<int, cplx> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos) throw ParseError("expected k=v, got '" + item + "'");
        int k;
        try {
            std::size_t used = 0;
            k = std::stoi(item.substr(0, eq), &used);
            if (used != eq) throw ParseError("");
        } catch (const std::exception&) {
            throw ParseError("bad content key in '" + item + "'");
        }
        out[k] = parse_complex(item.substr(eq + 1));
    }
    return out;
}

cplx complex_from_json(const json& j) {
    if (j.is_number()) return j.get<double>();
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return {j[0].get<double>(), j[1].get<double>()};
    if (j.is_string()) return parse_complex(j.get<std::string>());
    throw ParseError("expected a number or [re, im], got " + j.dump());
}

ContentSpec spec_from_json(const json& j) {
    if (!j.is_object() || !j.contains("z")) throw ParseError("content spec needs a \"z\" object");
    ContentSpec spec;
    auto key = [](const std::string& s) {
        try {
            std::size_t used = 0;
            int k = std::stoi(s, &used);
            if (used == s.size()) return k;
        } catch (const std::exception&) {
        }
        throw ParseError("bad content key '" + s + "'");
    };
    for (const auto& [k, v] : j.at("z").items()) spec.z[key(k)] = complex_from_json(v);
    if (j.contains("y"))
        for (const auto& [k, v] : j.at("y").items()) {
            if (!v.is_number()) throw ParseError("shift for content " + k + " must be real");
            spec.y[key(k)] = v.get<double>();
        }
    return spec;
}

SkewShape shape_from_json(const json& rows) {
    if (!rows.is_array()) throw ParseError("tableau must be an array of rows");
    std::vector<int> outer, inner;
    for (const auto& row : rows) {
        if (!row.is_array()) throw ParseError("tableau rows must be arrays");
        int lead = 0;
        while (lead < static_cast<int>(row.size()) && row[lead].is_null()) ++lead;
        for (std::size_t c = lead; c < row.size(); ++c)
            if (row[c].is_null()) throw ParseError("null after a filled cell in a row");
        outer.push_back(static_cast<int>(row.size()));
        inner.push_back(lead);
    }
    while (!inner.empty() && inner.back() == 0) inner.pop_back();
    try {
        return SkewShape(Partition(outer), Partition(inner));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("tableau is not a skew shape: ") + e.what());
    }
}

namespace {

template <class T, class F>
Tableau<T> tableau_from_json(const json& rows, F conv) {
    Tableau<T> t(shape_from_json(rows));
    for (auto c : t.cells()) t[c] = conv(rows[c.row - 1][c.col - 1]);
    return t;
}

}  // namespace

ExponentTableau exponent_tableau_from_json(const json& rows) {
    return tableau_from_json<cplx>(rows, complex_from_json);
}

ShiftTableau shift_tableau_from_json(const json& rows) {
    return tableau_from_json<double>(rows, [](const json& v) {
        if (!v.is_number()) throw ParseError("shift entries must be real numbers");
        return v.get<double>();
    });
}

TableauInput tableau_input_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("tableau file must hold an object");
    if (j.contains("s") && j.at("s").is_array()) {
        auto s = exponent_tableau_from_json(j.at("s"));
        ShiftTableau x(s.shape(), 0.0);
        if (j.contains("x")) {
            x = shift_tableau_from_json(j.at("x"));
            if (!(x.shape() == s.shape())) throw ParseError("s and x tableaux have different shapes");
        }
        return {s, x};
    }
    if (!j.contains("shape")) throw ParseError("content-spec tableau input needs a \"shape\" string");
    SkewShape shape = parse_skew(j.at("shape").get<std::string>());
    ContentSpec spec = spec_from_json(j.contains("s") ? j.at("s") : j);
    for (auto c : shape.cells()) spec.y.emplace(c.content(), 0.0);
    auto [s, x] = expand_content(spec, shape);
    return {s, x};
}

std::vector<ManifestCheck> parse_manifest(const std::string& text) {
    std::vector<ManifestCheck> out;
    std::stringstream ss(text);
    std::string line;
    int lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
        std::stringstream ls(line);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (tok.empty()) continue;
        auto where = "manifest line " + std::to_string(lineno) + ": ";
        if (tok.size() < 2) throw ParseError(where + "expected identity_id and shape");
        ManifestCheck c;
        c.line = lineno;
        try {
            c.id = parse_identity_id(tok[0]);
            c.shape = tok[1];
            for (std::size_t i = 2; i < tok.size(); ++i) {
                auto eq = tok[i].find('=');
                if (eq == std::string::npos) throw ParseError("expected key=value, got '" + tok[i] + "'");
                std::string k = tok[i].substr(0, eq), v = tok[i].substr(eq + 1);
                if (k == "z") c.spec.z = parse_assignments(v);
                else if (k == "y")
                    for (auto [kk, vv] : parse_assignments(v)) c.spec.y[kk] = vv.real();
                else if (k == "cutoff") c.cutoff = std::stol(v);
                else if (k == "outer") c.outer_cutoff = std::stol(v);
                else c.params[k] = v;
            }
        } catch (const ParseError& e) {
            throw ParseError(where + e.what());
        } catch (const std::logic_error& e) {
            throw ParseError(where + "bad value");
        }
        out.push_back(std::move(c));
    }
    return out;
}

namespace {

int int_param(const ManifestCheck& c, const std::string& key, int fallback) {
    auto it = c.params.find(key);
    if (it == c.params.end()) return fallback;
    try {
        return std::stoi(it->second);
    } catch (const std::exception&) {
        throw ParseError("bad integer for " + key);
    }
}

std::pair<int, int> hook_arms(const Partition& lam) {
    if (!is_hook(lam)) throw ParseError("shape " + to_string(lam) + " is not a hook");
    return {lam(1) - 1, lam.rows() - 1};
}

}  // namespace

IdentityReport run_check(const ManifestCheck& c, const IdentityConfig& cfg) {
    switch (c.id) {
        case IdentityId::jacobi_trudi_h: return jacobi_trudi_H(c.spec, parse_partition(c.shape), cfg);
        case IdentityId::jacobi_trudi_e: return jacobi_trudi_E(c.spec, parse_partition(c.shape), cfg);
        case IdentityId::giambelli: return giambelli(c.spec, parse_partition(c.shape), cfg);
        case IdentityId::frobenius_expansion: return frobenius_expansion(c.spec, parse_partition(c.shape), cfg);
        case IdentityId::dirichlet_series: return dirichlet_series_expr(c.spec, parse_partition(c.shape), cfg);
        case IdentityId::hook_expansion_star: {
            auto [p, q] = hook_arms(parse_partition(c.shape));
            return hook_expansion_star(c.spec, p, q, cfg);
        }
        case IdentityId::hook_expansion_zeta: {
            auto [p, q] = hook_arms(parse_partition(c.shape));
            return hook_expansion_zeta(c.spec, p, q, cfg);
        }
        case IdentityId::derivative_identity: {
            auto [p, q] = hook_arms(parse_partition(c.shape));
            return derivative_identity(c.spec, p, q, int_param(c, "ell", 0), int_param(c, "order", 1), cfg);
        }
        case IdentityId::extended_jacobi_trudi: {
            SkewShape shape(parse_partition(c.shape));
            ContentSpec spec = c.spec;
            for (auto cell : shape.cells()) spec.y.emplace(cell.content(), 0.0);
            auto [s, x] = expand_content(spec, shape);
            return extended_jacobi_trudi(s, x, cfg, int_param(c, "single", 0) == 0);
        }
        case IdentityId::skew_giambelli_hash: {
            SkewShape shape(parse_partition(c.shape));
            ContentSpec spec = c.spec;
            for (auto cell : shape.cells()) spec.y.emplace(cell.content(), 0.0);
            auto [s, x] = expand_content(spec, shape);
            IntTableau gamma = s.map<int>([](cplx v) {
                if (v.imag() != 0 || v.real() != std::round(v.real()))
                    throw DomainError("skew Giambelli needs integer exponents");
                return static_cast<int>(v.real());
            });
            return skew_giambelli_hash(gamma, x, cfg);
        }
        case IdentityId::root_reduction: {
            auto start = std::chrono::steady_clock::now();
            std::vector<cplx> zp, zm;
            for (const auto& [k, v] : c.spec.z)
                if (k > 0) zp.push_back(v);
            for (auto it = c.spec.z.rbegin(); it != c.spec.z.rend(); ++it)
                if (it->first < 0) zm.push_back(it->second);
            double m = int_param(c, "m", 1);
            auto rep = check_reductions(zp, zm, m, cfg.eval, cfg.slack);
            const ReductionCheck& worst =
                rep.star_star.discrepancy - rep.star_star.budget >= rep.strict.discrepancy - rep.strict.budget
                    ? rep.star_star
                    : rep.strict;
            IdentityReport r;
            r.id = c.id;
            r.shape = c.shape;
            r.lhs = worst.lhs;
            r.rhs = worst.rhs;
            r.discrepancy = worst.discrepancy;
            r.budget = worst.budget;
            r.pass = rep.pass();
            r.cutoffs["series"] = cfg.eval.cutoff;
            r.runtime_ms =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
            std::ostringstream note;
            note << "star_star gap " << rep.star_star.discrepancy << ", strict gap " << rep.strict.discrepancy;
            r.note = note.str();
            return r;
        }
    }
    throw ParseError("unknown identity");
}

}  // namespace szeta
