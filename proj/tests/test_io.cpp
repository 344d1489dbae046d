#include <doctest.h>

#include "szeta/io.hpp"

using namespace szeta;

TEST_CASE("complex numbers") {
    CHECK(parse_complex("2") == cplx(2));
    CHECK(parse_complex("2+1i") == cplx(2, 1));
    CHECK(parse_complex("2.5-0.5i") == cplx(2.5, -0.5));
    CHECK(parse_complex("-3i") == cplx(0, -3));
    CHECK(parse_complex("1e1") == cplx(10));
    CHECK_THROWS_AS(parse_complex("abc"), ParseError);
    CHECK_THROWS_AS(parse_complex(""), ParseError);
    CHECK(complex_from_json(json(3)) == cplx(3));
    CHECK(complex_from_json(json::array({1, -2})) == cplx(1, -2));
    CHECK(complex_from_json(json("1+2i")) == cplx(1, 2));
    CHECK(complex_from_json(to_json(cplx(0.25, 4))) == cplx(0.25, 4));
}

TEST_CASE("assignments") {
    auto a = parse_assignments("0=2,1=3,-1=2.5+1i");
    CHECK(a.size() == 3);
    CHECK(a.at(-1) == cplx(2.5, 1));
    CHECK(a.at(1) == cplx(3));
    CHECK(parse_assignments("0=2,,1=3,").size() == 2);
    CHECK_THROWS_AS(parse_assignments("x=2"), ParseError);
    CHECK_THROWS_AS(parse_assignments("0:2"), ParseError);
}

TEST_CASE("content spec round trip") {
    ContentSpec s;
    s.z = {{-1, cplx(2, 1)}, {0, 3}, {2, 2.5}};
    s.y = {{-1, 0.5}, {0, 0}, {2, 0.25}};
    auto back = spec_from_json(to_json(s));
    CHECK(back.z == s.z);
    CHECK(back.y == s.y);
    CHECK_THROWS_AS(spec_from_json(json::parse(R"({"z": {"a": 2}})")), ParseError);
}

TEST_CASE("tableau json") {
    SkewShape sh(Partition{3, 2}, Partition{1});
    ExponentTableau s(sh, cplx(2));
    s[{1, 3}] = cplx(3, 1);
    json rows = tableau_to_json(s);
    CHECK(rows[0][0].is_null());
    CHECK(shape_from_json(rows) == sh);
    auto back = exponent_tableau_from_json(rows);
    CHECK(back.values() == s.values());

    ShiftTableau x(sh, 0.5);
    CHECK(shift_tableau_from_json(tableau_to_json(x)).values() == x.values());
    CHECK_THROWS_AS(shape_from_json(json::parse("[[1,null],[1]]")), ParseError);
    CHECK_THROWS_AS(shift_tableau_from_json(json::parse(R"([["a"]])")), ParseError);

    auto in = tableau_input_from_json(json::parse(R"({"s": [[2, 3], [4]], "x": [[0, 0.5], [1]]})"));
    CHECK(in.s[{2, 1}] == cplx(4));
    CHECK(in.x[{1, 2}] == 0.5);
    auto in2 = tableau_input_from_json(json::parse(R"({"shape": "2,1", "z": {"0": 2, "1": 3, "-1": 4}})"));
    CHECK(in2.s[{1, 2}] == cplx(3));
    CHECK(in2.x[{2, 1}] == 0.0);
    CHECK_THROWS_AS(tableau_input_from_json(json::parse(R"({"s": [[2, 3]], "x": [[0]]})")), ParseError);
    CHECK_THROWS_AS(tableau_input_from_json(json::parse(R"({"shape": "2,1", "z": {"0": 2}})")), DomainError);
}

TEST_CASE("report json") {
    IdentityReport r;
    r.id = IdentityId::giambelli;
    r.shape = "2,2";
    r.lhs = {cplx(1, 0), 1e-7};
    r.cutoffs["series"] = 2000;
    json j = to_json(r);
    CHECK(j.at("identity_id") == "giambelli");
    CHECK(j.at("lhs").at("err_bound") == 1e-7);
    CHECK(j.at("cutoffs").at("series") == 2000);
    CHECK_FALSE(j.contains("note"));
    r.note = "x";
    CHECK(to_json(r).at("note") == "x");
}

TEST_CASE("manifest parsing") {
    auto checks = parse_manifest(R"(# comment
jacobi_trudi_h 2,2 z=-1=2,0=3,1=2 y=1=0.5 cutoff=5000

giambelli 3,2 z=-1=2,0=2,1=2,2=3  # trailing
derivative_identity 3,1,1 z=-2=2,-1=3,0=2,1=2,2=3 ell=1 order=2 outer=50
)");
    REQUIRE(checks.size() == 3);
    CHECK(checks[0].id == IdentityId::jacobi_trudi_h);
    CHECK(checks[0].line == 2);
    CHECK(checks[0].cutoff == 5000);
    CHECK(checks[0].spec.y.at(1) == 0.5);
    CHECK(checks[1].line == 4);
    CHECK_FALSE(checks[1].cutoff);
    CHECK(checks[2].params.at("ell") == "1");
    CHECK(checks[2].outer_cutoff == 50);

    auto err = [](const char* text) {
        try {
            parse_manifest(text);
        } catch (const ParseError& e) {
            return std::string(e.what());
        }
        return std::string();
    };
    CHECK(err("\n\nnot_an_identity 2,2 z=0=2").rfind("manifest line 3:", 0) == 0);
    CHECK(err("giambelli").rfind("manifest line 1:", 0) == 0);
    CHECK(err("giambelli 2,2 z=0=2 cutoff=abc").rfind("manifest line 1:", 0) == 0);
    CHECK(err("giambelli 2,2 zzz").rfind("manifest line 1:", 0) == 0);
}

TEST_CASE("run_check dispatch") {
    IdentityConfig cfg;
    cfg.eval.cutoff = 2000;
    auto checks = parse_manifest(R"(
jacobi_trudi_e 3,2 z=-1=2,0=3,1=2,2=2.5
hook_expansion_zeta 3,1 z=-1=2,0=3,1=2,2=3
derivative_identity 2,1 z=-1=2,0=3,1=2 ell=1 order=1
extended_jacobi_trudi 2,1 z=-1=2,0=3,1=2
root_reduction 2,1 z=-1=2,1=3,2=2 m=2
skew_giambelli_hash 2,2 z=-1=2,0=3,1=2
)");
    for (const auto& c : checks) {
        auto r = run_check(c, cfg);
        CHECK(r.pass);
        CHECK(r.id == c.id);
    }
    CHECK_THROWS_AS(run_check(parse_manifest("hook_expansion_star 2,2 z=-1=2,0=3,1=2")[0], cfg), ParseError);
    CHECK_THROWS_AS(run_check(parse_manifest("skew_giambelli_hash 2,2 z=-1=2,0=2.5,1=2")[0], cfg), DomainError);
    CHECK_THROWS_AS(run_check(parse_manifest("giambelli 2,2 z=-1=2,0=1,1=2")[0], cfg), DomainError);
}
