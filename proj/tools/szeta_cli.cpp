#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <set>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "szeta/io.hpp"
#include "szeta/lgv.hpp"
#include "szeta/rootzeta.hpp"

using namespace szeta;

namespace {

struct Outcome {
    json report;
    bool pass = false;
};

using Job = std::function<Outcome(const IdentityConfig&)>;

long default_cutoff() {
    if (const char* env = std::getenv("SZETA_CUTOFF")) {
        try {
            return std::stol(env);
        } catch (const std::exception&) {
        }
    }
    return 2000;
}

Outcome from_report(const IdentityReport& r) { return {to_json(r), r.pass}; }

Job manifest_job(ManifestCheck c) {
    return [c](const IdentityConfig& base) {
        IdentityConfig cfg = base;
        if (c.cutoff && !base.eval.target_abs_err) cfg.eval.cutoff = *c.cutoff;
        if (c.outer_cutoff) cfg.outer_cutoff = *c.outer_cutoff;
        return from_report(run_check(c, cfg));
    };
}

ContentSpec alternating(double a, double b, double y_pos, double y_neg) {
    ContentSpec s;
    for (int k = -6; k <= 6; ++k) {
        s.z[k] = (k % 2 == 0) ? a : b;
        s.y[k] = k > 0 ? y_pos : (k < 0 ? y_neg : 0.0);
    }
    return s;
}

std::vector<ContentSpec> spec_grid() {
    return {alternating(2, 3, 0, 0), alternating(3, 2, 0.3, 0), alternating(2.5, 2, 0, 0.3),
            alternating(3, 2.5, 0.3, 0.3)};
}

void add_manifest_style(std::vector<Job>& jobs, IdentityId id, const std::string& shape, const ContentSpec& spec,
                        std::map<std::string, std::string> params = {}) {
    ManifestCheck c;
    c.id = id;
    c.shape = shape;
    c.spec = spec;
    c.params = std::move(params);
    jobs.push_back(manifest_job(c));
}

std::vector<Job> lgv_jobs() {
    std::vector<Job> jobs;
    for (std::string shape : {"1,1", "2,1", "2,2", "3,1"})
        for (int n = 1; n <= 4; ++n)
            for (int variant = 0; variant < 2; ++variant)
                jobs.push_back([shape, n, variant](const IdentityConfig&) {
                    auto start = std::chrono::steady_clock::now();
                    Partition lam = parse_partition(shape);
                    SkewShape sh(lam);
                    IntTableau s(sh);
                    RationalTableau x(sh);
                    for (auto c : s.cells()) {
                        s[c] = (c.content() + variant) % 2 == 0 ? 2 : 3;
                        x[c] = (c.content() + variant) % 2 == 0 ? Rational(0) : Rational(1, 2);
                    }
                    auto rep = verify_cancellation(lam, n, s, x);
                    json j{{"identity_id", "lgv_cancellation"},
                           {"shape", shape},
                           {"n", n},
                           {"signed_total", to_string(rep.sums.signed_total)},
                           {"nonintersecting_total", to_string(rep.sums.nonintersecting_total)},
                           {"intersecting_signed_total", to_string(rep.sums.intersecting_signed_total)},
                           {"patterns", rep.sums.patterns},
                           {"pairs_checked", rep.pairs_checked},
                           {"pass", rep.pass()},
                           {"runtime_ms", std::chrono::duration<double, std::milli>(
                                              std::chrono::steady_clock::now() - start)
                                              .count()}};
                    if (!rep.witness_failure.empty()) j["note"] = rep.witness_failure;
                    return Outcome{j, rep.pass()};
                });
    return jobs;
}

std::vector<Job> builtin_jobs(const std::string& suite) {
    std::vector<Job> jobs;
    auto want = [&](const std::string& name) { return suite == "all" || suite == name; };
    bool known = false;
    if (want("jacobi-trudi")) {
        known = true;
        for (std::string shape : {"1,1", "2", "2,1", "2,2", "3,2"})
            for (const auto& spec : spec_grid()) {
                add_manifest_style(jobs, IdentityId::jacobi_trudi_h, shape, spec);
                add_manifest_style(jobs, IdentityId::jacobi_trudi_e, shape, spec);
            }
        for (std::string shape : {"2,1", "3,2,1"})
            add_manifest_style(jobs, IdentityId::extended_jacobi_trudi, shape, alternating(2, 3, 0.3, 0));
    }
    if (want("giambelli")) {
        known = true;
        for (std::string shape : {"2,2", "3,2", "3,3,1"})
            for (const auto& spec : spec_grid()) add_manifest_style(jobs, IdentityId::giambelli, shape, spec);
        add_manifest_style(jobs, IdentityId::skew_giambelli_hash, "2,2", alternating(2, 3, 0, 0));
        add_manifest_style(jobs, IdentityId::skew_giambelli_hash, "4,3,3,2", alternating(2, 2, 0, 0));
    }
    if (want("hook")) {
        known = true;
        for (std::string shape : {"1,1", "2,1", "3,1", "2,1,1"})
            for (const auto& spec : spec_grid()) {
                add_manifest_style(jobs, IdentityId::hook_expansion_star, shape, spec);
                add_manifest_style(jobs, IdentityId::hook_expansion_zeta, shape, spec);
            }
    }
    if (want("frobenius")) {
        known = true;
        for (std::string shape : {"2,2", "3,2", "3,3,1"})
            for (const auto& spec : spec_grid()) add_manifest_style(jobs, IdentityId::frobenius_expansion, shape, spec);
    }
    if (want("dirichlet")) {
        known = true;
        for (std::string shape : {"1", "2,1", "3,1,1", "2,2"})
            add_manifest_style(jobs, IdentityId::dirichlet_series, shape, alternating(3, 2, 0.3, 0));
    }
    if (want("derivative")) {
        known = true;
        for (auto [shape, p] : std::vector<std::pair<std::string, int>>{{"2,1", 1}, {"3,1,1", 2}})
            for (int ell = 0; ell <= p; ++ell)
                for (int order = 1; order <= 2; ++order)
                    add_manifest_style(jobs, IdentityId::derivative_identity, shape, alternating(3, 2, 0.3, 0),
                                       {{"ell", std::to_string(ell)}, {"order", std::to_string(order)}});
    }
    if (want("lgv-exact")) {
        known = true;
        auto l = lgv_jobs();
        jobs.insert(jobs.end(), l.begin(), l.end());
    }
    if (want("reductions")) {
        known = true;
        for (int p = 0; p <= 3; ++p)
            for (int q = 0; q <= 3; ++q)
                for (int m = 1; m <= 3; ++m) {
                    ContentSpec spec;
                    for (int k = 1; k <= p; ++k) spec.z[k] = k % 2 ? 2.0 : 3.0;
                    for (int k = 1; k <= q; ++k) spec.z[-k] = k % 2 ? 3.0 : 2.0;
                    add_manifest_style(jobs, IdentityId::root_reduction,
                                       "p=" + std::to_string(p) + ",q=" + std::to_string(q), spec,
                                       {{"m", std::to_string(m)}});
                }
    }
    if (!known) throw ParseError("unknown builtin suite '" + suite + "'");
    return jobs;
}

int run_jobs(const std::vector<Job>& jobs, const IdentityConfig& cfg, int n_jobs) {
    std::vector<Outcome> results(jobs.size());
    std::vector<std::string> errors(jobs.size());
    std::vector<int> error_code(jobs.size(), 0);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < jobs.size();) {
            try {
                results[i] = jobs[i](cfg);
            } catch (const DomainError& e) {
                errors[i] = e.what();
                error_code[i] = 3;
            } catch (const CapabilityError& e) {
                errors[i] = e.what();
                error_code[i] = 3;
            } catch (const std::exception& e) {
                errors[i] = e.what();
                error_code[i] = 2;
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < std::max(1, n_jobs); ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    int failed = 0, worst_error = 0;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        if (error_code[i]) {
            std::cout << json{{"index", i}, {"error", errors[i]}, {"pass", false}}.dump() << "\n";
            worst_error = std::max(worst_error, error_code[i]);
            continue;
        }
        std::cout << results[i].report.dump() << "\n";
        if (!results[i].pass) ++failed;
    }
    std::cerr << jobs.size() << " checks, " << failed << " failed";
    if (worst_error) std::cerr << ", some checks raised errors";
    std::cerr << "\n";
    if (worst_error) return worst_error;
    return failed ? 1 : 0;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// lets values such as "-1=2,0=3" follow an option without being mistaken for flags
std::vector<std::string> glue_values(int argc, char** argv) {
    static const std::set<std::string> valued{"--z", "--y", "--skew", "--shape"};
    std::vector<std::string> out;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (valued.count(a) && i + 1 < argc) {
            out.push_back(a + "=" + argv[++i]);
        } else {
            out.push_back(a);
        }
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Schur multiple zeta-functions: certified evaluation and identity checks"};
    app.require_subcommand(1);

    long cutoff = default_cutoff();
    std::string tail_mode = "integral";
    std::optional<double> target;

    auto* eval = app.add_subcommand("eval", "evaluate a value; prints {value_re, value_im, err_bound, cutoff, runtime_ms}");
    std::string shape_text, skew_text, tableau_file, z_text, y_text;
    eval->add_option("--shape", shape_text, "partition, e.g. 2,2");
    eval->add_option("--skew", skew_text, "skew shape outer/inner, e.g. 3,2/1");
    eval->add_option("--tableau-file", tableau_file, "JSON file with s and x tableaux or a content spec");
    eval->add_option("--z", z_text, "exponents per content, e.g. -1=2,0=3,1=2 (complex as 2+1i)");
    eval->add_option("--y", y_text, "shifts per content, missing contents default to 0");
    eval->add_option("--cutoff", cutoff, "series cutoff (default 2000 or $SZETA_CUTOFF)");
    eval->add_option("--tail-mode", tail_mode, "integral | bound")->check(CLI::IsMember({"integral", "bound"}));
    eval->add_option("--target", target, "double the cutoff until err_bound is below this");

    auto* check = app.add_subcommand("check", "run identity checks; one JSON report per line");
    std::string builtin, manifest;
    int n_jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    std::optional<long> check_cutoff;
    check->add_option("--builtin", builtin,
                      "jacobi-trudi | giambelli | hook | frobenius | dirichlet | derivative | lgv-exact | reductions | all");
    check->add_option("--manifest", manifest, "manifest file, see data/example_manifest.txt");
    check->add_option("--jobs", n_jobs, "concurrent checks (default: hardware threads)");
    check->add_option("--cutoff", check_cutoff, "series cutoff; overrides manifest values (default 2000 or $SZETA_CUTOFF)");
    check->add_option("--tail-mode", tail_mode, "integral | bound")->check(CLI::IsMember({"integral", "bound"}));

    auto* paths = app.add_subcommand("paths", "count lattice-path patterns by type");
    std::string paths_shape;
    int paths_n = 1;
    std::string kind_text = "H";
    bool render = false;
    paths->add_option("--shape", paths_shape, "partition")->required();
    paths->add_option("--n", paths_n, "height N")->required()->check(CLI::Range(1, 12));
    paths->add_option("--kind", kind_text, "H | E")->check(CLI::IsMember({"H", "E"}));
    paths->add_flag("--render", render, "print every nonintersecting pattern as a text diagram");

    auto args = glue_values(argc, argv);
    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*eval) {
            auto start = std::chrono::steady_clock::now();
            SchurInstance inst;
            int given = !shape_text.empty() + !skew_text.empty() + !tableau_file.empty();
            if (given != 1) throw ParseError("give exactly one of --shape, --skew, --tableau-file");
            if (!tableau_file.empty()) {
                auto in = tableau_input_from_json(json::parse(read_file(tableau_file)));
                inst = make_instance(in.s, in.x);
            } else {
                SkewShape shape = shape_text.empty() ? parse_skew(skew_text) : SkewShape(parse_partition(shape_text));
                ContentSpec spec;
                spec.z = parse_assignments(z_text);
                for (auto [k, v] : parse_assignments(y_text)) {
                    if (v.imag() != 0) throw ParseError("shifts must be real");
                    spec.y[k] = v.real();
                }
                for (auto c : shape.cells()) {
                    if (!spec.z.count(c.content()))
                        throw ParseError("--z has no value for content " + std::to_string(c.content()));
                    spec.y.emplace(c.content(), 0.0);
                }
                inst = make_instance(shape, spec);
            }
            EvalConfig cfg;
            cfg.cutoff = cutoff;
            cfg.tail_mode = tail_mode == "bound" ? TailMode::bound_only : TailMode::integral_correction;
            cfg.target_abs_err = target;
            long used = cfg.cutoff;
            Approx v = refine_cutoff(cfg, [&](const EvalConfig& c) {
                used = c.cutoff;
                EvalConfig fixed = c;
                fixed.target_abs_err.reset();
                return schur_eval(inst, fixed);
            });
            double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
            std::cout << json{{"value_re", v.value.real()}, {"value_im", v.value.imag()}, {"err_bound", v.err_bound},
                              {"cutoff", used}, {"runtime_ms", ms}}
                             .dump()
                      << "\n";
            std::cerr << "value " << v.value << " +- " << v.err_bound << "\n";
            return 0;
        }
        if (*check) {
            if (builtin.empty() == manifest.empty()) throw ParseError("give exactly one of --builtin, --manifest");
            IdentityConfig cfg;
            cfg.eval.cutoff = check_cutoff.value_or(default_cutoff());
            cfg.eval.tail_mode = tail_mode == "bound" ? TailMode::bound_only : TailMode::integral_correction;
            std::vector<Job> jobs;
            if (!builtin.empty()) {
                jobs = builtin_jobs(builtin);
            } else {
                for (auto& c : parse_manifest(read_file(manifest))) {
                    if (check_cutoff) c.cutoff = *check_cutoff;
                    jobs.push_back(manifest_job(c));
                }
            }
            return run_jobs(jobs, cfg, n_jobs);
        }
        if (*paths) {
            Partition lam = parse_partition(paths_shape);
            PathKind kind = kind_text == "E" ? PathKind::E : PathKind::H;
            std::map<std::string, long> by_type, nonint_by_type;
            long total = 0, nonint = 0;
            std::vector<std::string> diagrams;
            for_each_pattern(lam, paths_n, kind, [&](const Pattern& L) {
                ++total;
                auto t = to_string(L.type);
                ++by_type[t];
                if (is_nonintersecting(L)) {
                    ++nonint;
                    ++nonint_by_type[t];
                    if (render) diagrams.push_back("type " + t + "\n" + render_pattern(L));
                }
            });
            std::cout << json{{"shape", to_string(lam)},
                              {"n", paths_n},
                              {"kind", kind_text},
                              {"patterns", total},
                              {"nonintersecting", nonint},
                              {"by_type", by_type},
                              {"nonintersecting_by_type", nonint_by_type}}
                             .dump()
                      << "\n";
            for (const auto& d : diagrams) std::cout << d << "\n";
            std::cerr << total << " patterns, " << nonint << " nonintersecting\n";
            return 0;
        }
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 3;
    } catch (const CapabilityError& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
