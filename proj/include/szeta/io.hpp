#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "szeta/identities.hpp"
#include "szeta/tableaux.hpp"

namespace szeta {

using json = nlohmann::json;

json to_json(cplx v);
json to_json(const Approx& a);
json to_json(const ContentSpec& spec);
json to_json(const IdentityReport& r);

template <class T>
json tableau_to_json(const Tableau<T>& t) {
    json rows = json::array();
    const SkewShape& sh = t.shape();
    for (int r = 1; r <= sh.outer().rows(); ++r) {
        json row = json::array();
        for (int c = 1; c <= sh.outer()(r); ++c) {
            if (!sh.contains({r, c})) row.push_back(nullptr);
            else if constexpr (std::is_same_v<T, cplx>) row.push_back(to_json(t[{r, c}]));
            else row.push_back(t[{r, c}]);
        }
        rows.push_back(row);
    }
    return rows;
}

cplx complex_from_json(const json& j);
ContentSpec spec_from_json(const json& j);
// nested rows, null marks a cell of the inner shape
SkewShape shape_from_json(const json& rows);
ExponentTableau exponent_tableau_from_json(const json& rows);
ShiftTableau shift_tableau_from_json(const json& rows);

// "k=v,k=v"; v may be "a+bi"
std::map<int, cplx> parse_assignments(const std::string& text);
cplx parse_complex(const std::string& text);

// {"s": rows | {"z":..,"y":..}, "x": rows, "shape": "..."} or a bare ContentSpec with a "shape" key
struct TableauInput {
    ExponentTableau s;
    ShiftTableau x;
};
TableauInput tableau_input_from_json(const json& j);

struct ManifestCheck {
    IdentityId id{};
    std::string shape;
    ContentSpec spec;
    std::optional<long> cutoff;
    std::optional<long> outer_cutoff;
    std::map<std::string, std::string> params;
    int line = 0;
};

// one check per line: identity_id shape z=k=v,... [y=k=v,...] [cutoff=N] [key=value ...]; '#' starts a comment
std::vector<ManifestCheck> parse_manifest(const std::string& text);

IdentityReport run_check(const ManifestCheck& check, const IdentityConfig& cfg);

}  // namespace szeta
