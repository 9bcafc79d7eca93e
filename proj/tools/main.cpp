// hlx: hyperlink invariants, holonomy observables and their finite-kappa
// Gaussian-kernel verification.
//
// Exit codes: 0 success, 1 malformed input, 2 validation failure,
// 3 degenerate geometry.

#include <complex>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hlx/diagram.hpp"
#include "hlx/documents.hpp"
#include "hlx/errors.hpp"
#include "hlx/examples.hpp"
#include "hlx/kappa.hpp"
#include "hlx/observables.hpp"
#include "hlx/piercing.hpp"
#include "hlx/quadrature.hpp"
#include "hlx/representation.hpp"

using nlohmann::json;

namespace {

constexpr const char* kVersion = "0.1.0";
constexpr double kPi = 3.14159265358979323846;

struct CommonOpts {
    std::string out;  // empty: stdout
    bool deterministic = false;
    double eps_gen = 0.0;
};

std::string timestamp_utc() {
    std::time_t now = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    return buf;
}

json make_manifest(const std::string& command, const json& inputs, const json& params,
                   const CommonOpts& opts) {
    json m{{"command", command}, {"inputs", inputs}, {"parameters", params},
           {"version", kVersion}};
    if (!opts.deterministic) m["timestamp"] = timestamp_utc();
    return m;
}

void emit_text(const CommonOpts& opts, const std::string& text) {
    if (opts.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(opts.out);
        if (!f) throw hlx::DocumentError("cannot write '" + opts.out + "'");
        f << text;
    }
}

void emit_json(const CommonOpts& opts, const json& doc) { emit_text(opts, doc.dump(2) + "\n"); }

json violation_json(const hlx::Violation& v) {
    const char* kind = "";
    switch (v.kind) {
        case hlx::Violation::Kind::SpatialCoincidence: kind = "spatial_coincidence"; break;
        case hlx::Violation::Kind::SelfIntersection: kind = "self_intersection"; break;
        case hlx::Violation::Kind::PlaneCoincidence: kind = "plane_coincidence"; break;
        case hlx::Violation::Kind::DegenerateProjection: kind = "degenerate_projection"; break;
    }
    return json{{"kind", kind},
                {"loops", json::array({v.loop_a, v.loop_b})},
                {"params", json::array({v.s, v.t})},
                {"witness_a", json::array({v.witness_a.x0, v.witness_a.x1, v.witness_a.x2,
                                           v.witness_a.x3})},
                {"witness_b", json::array({v.witness_b.x0, v.witness_b.x1, v.witness_b.x2,
                                           v.witness_b.x3})},
                {"detail", v.detail}};
}

// Validates and, on failure, emits the report document.  Returns true when valid.
bool require_valid(const hlx::Hyperlink& h, const CommonOpts& opts, const std::string& command) {
    const auto rep = hlx::validate_timelike(h, opts.eps_gen);
    if (rep.valid()) return true;
    json violations = json::array();
    for (const auto& v : rep.violations) violations.push_back(violation_json(v));
    emit_json(opts, json{{"valid", false},
                         {"violations", violations},
                         {"manifest", make_manifest(command, {}, {}, opts)}});
    return false;
}

hlx::Hyperlink merged(const hlx::ColoredHyperlink& m, const hlx::Hyperlink& g) {
    hlx::Hyperlink all = m.base;
    for (const auto& l : g.loops) all.loops.push_back(l);
    all.labels.resize(all.loops.size());
    return all;
}

json complex_json(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

int cmd_validate(const std::string& input, bool colored, const CommonOpts& opts) {
    hlx::Hyperlink h =
        colored ? hlx::read_colored_hyperlink(input).base : hlx::read_hyperlink(input);
    const auto rep = hlx::validate_timelike(h, opts.eps_gen);
    json violations = json::array();
    for (const auto& v : rep.violations) violations.push_back(violation_json(v));
    emit_json(opts, json{{"valid", rep.valid()},
                         {"violations", violations},
                         {"manifest", make_manifest("validate", json{{"input", input}}, {},
                                                    opts)}});
    return rep.valid() ? 0 : 2;
}

int cmd_sk(const std::string& input, int a, int b, const CommonOpts& opts) {
    const hlx::Hyperlink h = hlx::read_hyperlink(input);
    if (a < 0 || b < 0 || a >= h.size() || b >= h.size() || a == b) {
        throw hlx::DocumentError("sk: loop indices out of range");
    }
    if (!require_valid(h, opts, "sk")) return 2;
    std::vector<hlx::Crossing> all;
    for (int plane = 1; plane <= 3; ++plane) {
        const auto c = hlx::find_crossings(h.loops[static_cast<size_t>(a)],
                                           h.loops[static_cast<size_t>(b)], plane, opts.eps_gen);
        all.insert(all.end(), c.begin(), c.end());
    }
    const int sk = hlx::hyperlinking_number(h.loops[static_cast<size_t>(a)],
                                            h.loops[static_cast<size_t>(b)], opts.eps_gen);
    std::ostringstream os;
    hlx::write_crossings_csv(os, all);
    emit_text(opts, os.str());
    std::cout << "sk = " << sk << "\n";
    return 0;
}

int cmd_lk(const std::string& hyperlink_path, const std::string& surface_path,
           const CommonOpts& opts) {
    const hlx::Hyperlink h = hlx::read_hyperlink(hyperlink_path);
    const hlx::PlanarSurface s = hlx::read_surface(surface_path);
    if (!require_valid(h, opts, "lk")) return 2;
    const auto piercings = hlx::find_piercings(h, s, opts.eps_gen);
    std::ostringstream os;
    hlx::write_piercings_csv(os, piercings);
    emit_text(opts, os.str());
    std::cout << "lk = " << hlx::hyperlink_lk(h, s, opts.eps_gen)
              << ", piercings = " << piercings.size() << "\n";
    return 0;
}

int cmd_wilson(const std::string& matter_path, const std::string& geometric_path, double q,
               const CommonOpts& opts) {
    const hlx::ColoredHyperlink m = hlx::read_colored_hyperlink(matter_path);
    hlx::Hyperlink g;
    if (!geometric_path.empty()) g = hlx::read_hyperlink(geometric_path);
    if (!require_valid(merged(m, g), opts, "wilson")) return 2;
    const auto z = hlx::wilson_loop(q, m, g, opts.eps_gen);
    json sk = json::array();
    for (const auto& l : m.base.loops) sk.push_back(hlx::sk_loop_vs_hyperlink(l, g, opts.eps_gen));
    emit_json(opts,
              json{{"value", complex_json(z)},
                   {"sk", sk},
                   {"manifest", make_manifest("wilson",
                                              json{{"matter", matter_path},
                                                   {"geometric", geometric_path}},
                                              json{{"q", q}}, opts)}});
    return 0;
}

int cmd_area(const std::string& matter_path, const std::string& geometric_path,
             const std::string& surface_path, double q, const CommonOpts& opts) {
    const hlx::ColoredHyperlink m = hlx::read_colored_hyperlink(matter_path);
    hlx::Hyperlink g;
    if (!geometric_path.empty()) g = hlx::read_hyperlink(geometric_path);
    std::optional<hlx::PlanarSurface> s;
    if (!surface_path.empty()) s = hlx::read_surface(surface_path);
    if (!require_valid(merged(m, g), opts, "area")) return 2;
    const hlx::AreaResult res = hlx::area_operator(q, m, g, s, opts.eps_gen);
    json terms = json::array();
    for (const auto& t : res.per_loop_terms) {
        terms.push_back(json{{"loop", t.loop},
                             {"plus", complex_json(t.plus_term)},
                             {"minus", complex_json(t.minus_term)}});
    }
    emit_json(opts,
              json{{"value", complex_json(res.value)},
                   {"per_loop_terms", terms},
                   {"piercing_sums", json::array({res.piercing_sums.first,
                                                  res.piercing_sums.second})},
                   {"sk", res.sk_values},
                   {"piercings", res.piercing_counts},
                   {"surface_empty", res.surface_empty},
                   {"manifest", make_manifest("area",
                                              json{{"matter", matter_path},
                                                   {"geometric", geometric_path},
                                                   {"surface", surface_path}},
                                              json{{"q", q}}, opts)}});
    return 0;
}

struct VerifyOpts {
    std::string target;
    std::vector<double> kappas{8.0, 16.0, 32.0};
    int nodes = 8;
    std::string hyperlink_path, matter_path, geometric_path, surface_path;
    int loop_a = 0, loop_b = 1;
    double q = 1.0;
    std::string side = "plus";
    bool absolute = false;
    bool self_check = false;
};

int cmd_verify(const VerifyOpts& v, const CommonOpts& opts) {
    hlx::QuadratureConfig base;
    base.base_points_per_segment = v.nodes;
    base.eps_gen = opts.eps_gen;

    std::function<std::complex<double>(const hlx::QuadratureConfig&)> estimator;
    std::complex<double> reference;

    if (v.target == "sk") {
        const hlx::Hyperlink h = hlx::read_hyperlink(v.hyperlink_path);
        if (!require_valid(h, opts, "verify")) return 2;
        const auto a = h.loops.at(static_cast<size_t>(v.loop_a));
        const auto b = h.loops.at(static_cast<size_t>(v.loop_b));
        reference = hlx::hyperlinking_number(a, b, opts.eps_gen);
        estimator = [a, b, v](const hlx::QuadratureConfig& cfg) {
            double delta = 0.0;
            const double est = hlx::sk_finite_kappa(a, b, cfg, v.self_check ? &delta : nullptr);
            if (v.self_check && delta > 0.01) {
                std::cerr << "warning: node doubling moves the sk estimate by "
                          << delta * 100.0 << "% at kappa=" << cfg.kappa << "\n";
            }
            return std::complex<double>(est, 0.0);
        };
    } else if (v.target == "lk") {
        const hlx::Hyperlink h = hlx::read_hyperlink(v.hyperlink_path);
        const hlx::PlanarSurface s = hlx::read_surface(v.surface_path);
        if (!require_valid(h, opts, "verify")) return 2;
        const auto l = h.loops.at(static_cast<size_t>(v.loop_a));
        const bool absolute = v.absolute;
        reference = absolute
                        ? static_cast<double>(hlx::piercing_count(l, s, opts.eps_gen))
                        : static_cast<double>(hlx::linking_number_surface(l, s, opts.eps_gen));
        const bool self_check = v.self_check;
        estimator = [l, s, absolute, self_check](const hlx::QuadratureConfig& cfg) {
            double delta = 0.0;
            double* d = self_check ? &delta : nullptr;
            const double est = absolute ? hlx::piercing_count_finite_kappa(l, s, cfg, d)
                                        : hlx::lk_finite_kappa(l, s, cfg, d);
            if (self_check && delta > 0.01) {
                std::cerr << "warning: node doubling moves the lk estimate by "
                          << delta * 100.0 << "% at kappa=" << cfg.kappa << "\n";
            }
            return std::complex<double>(est, 0.0);
        };
    } else if (v.target == "holonomy") {
        const hlx::ColoredHyperlink m = hlx::read_colored_hyperlink(v.matter_path);
        hlx::Hyperlink g;
        if (!v.geometric_path.empty()) g = hlx::read_hyperlink(v.geometric_path);
        if (!require_valid(merged(m, g), opts, "verify")) return 2;
        const hlx::Side side = v.side == "minus" ? hlx::Side::Minus : hlx::Side::Plus;
        const int u = v.loop_a;
        const double q = v.q;
        const int sk = hlx::sk_loop_vs_hyperlink(m.base.loops.at(static_cast<size_t>(u)), g,
                                                 opts.eps_gen);
        const hlx::SpinPair color = m.colors.at(static_cast<size_t>(u));
        reference = side == hlx::Side::Plus
                        ? hlx::trace_exp_E(color.jplus, -kPi * q * sk)
                        : hlx::trace_exp_E(color.jminus, kPi * q * sk);
        estimator = [m, g, u, side, q](const hlx::QuadratureConfig& cfg) {
            return hlx::holonomy_factor_finite_kappa(q, m, u, g, side, cfg);
        };
    } else if (v.target == "area") {
        const hlx::ColoredHyperlink m = hlx::read_colored_hyperlink(v.matter_path);
        hlx::Hyperlink g;
        if (!v.geometric_path.empty()) g = hlx::read_hyperlink(v.geometric_path);
        const hlx::PlanarSurface s = hlx::read_surface(v.surface_path);
        if (!require_valid(merged(m, g), opts, "verify")) return 2;
        const double q = v.q;
        reference = hlx::area_operator(q, m, g, s, opts.eps_gen).value;
        estimator = [m, g, s, q](const hlx::QuadratureConfig& cfg) {
            return hlx::area_finite_kappa(q, m, g, s, cfg);
        };
    } else {
        throw hlx::DocumentError("verify: unknown target '" + v.target + "'");
    }

    const auto rows = hlx::convergence_study(estimator, reference, v.kappas, base);
    std::ostringstream os;
    hlx::write_convergence_csv(os, rows);
    emit_text(opts, os.str());
    return 0;
}

int cmd_example(const std::string& name, const std::string& dir) {
    for (const std::string& f : hlx::examples::write(name, dir)) {
        std::cout << f << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hyperlink invariants, holonomy observables and finite-kappa verification"};
    app.require_subcommand(1);
    app.fallthrough();  // global options may follow the subcommand
    app.set_version_flag("--version", kVersion);

    CommonOpts common;
    app.add_option("-o,--out", common.out, "output file (default: stdout)");
    app.add_flag("--deterministic", common.deterministic,
                 "single worker and no timestamps: byte-identical reruns");
    app.add_option("--eps-gen", common.eps_gen,
                   "genericity tolerance (default: 1e-9 x model diameter)");

    auto* validate = app.add_subcommand("validate", "check the time-likeness conditions");
    std::string validate_input;
    bool validate_colored = false;
    validate->add_option("--input", validate_input, "hyperlink document")->required();
    validate->add_flag("--colored", validate_colored, "input carries colors");

    auto* sk = app.add_subcommand("sk", "crossing table and hyperlinking number");
    std::string sk_input;
    int sk_a = 0, sk_b = 1;
    sk->add_option("--input", sk_input, "hyperlink document")->required();
    sk->add_option("--a", sk_a, "first loop index");
    sk->add_option("--b", sk_b, "second loop index");

    auto* lk = app.add_subcommand("lk", "piercing table and loop-surface linking number");
    std::string lk_hyperlink, lk_surface;
    lk->add_option("--hyperlink", lk_hyperlink, "hyperlink document")->required();
    lk->add_option("--surface", lk_surface, "surface document")->required();

    auto* wilson = app.add_subcommand("wilson", "closed-form Wilson loop observable");
    std::string w_matter, w_geometric;
    double w_q = 1.0;
    wilson->add_option("--matter", w_matter, "colored hyperlink document")->required();
    wilson->add_option("--geometric", w_geometric, "hyperlink document (may be omitted)");
    wilson->add_option("--q", w_q, "charge");

    auto* area = app.add_subcommand("area", "closed-form quantized area");
    std::string a_matter, a_geometric, a_surface;
    double a_q = 1.0;
    area->add_option("--matter", a_matter, "colored hyperlink document")->required();
    area->add_option("--geometric", a_geometric, "hyperlink document (may be omitted)");
    area->add_option("--surface", a_surface, "surface document (omitted: empty surface)");
    area->add_option("--q", a_q, "charge");

    auto* verify = app.add_subcommand("verify", "finite-kappa convergence study");
    VerifyOpts vo;
    verify->add_option("--target", vo.target, "sk | lk | holonomy | area")->required();
    verify->add_option("--kappa", vo.kappas, "kappa schedule")->delimiter(',');
    verify->add_option("--nodes", vo.nodes, "base Gauss-Legendre nodes per segment per axis");
    verify->add_option("--hyperlink", vo.hyperlink_path, "hyperlink document (sk, lk)");
    verify->add_option("--matter", vo.matter_path, "colored hyperlink (holonomy, area)");
    verify->add_option("--geometric", vo.geometric_path, "geometric hyperlink");
    verify->add_option("--surface", vo.surface_path, "surface document (lk, area)");
    verify->add_option("--a", vo.loop_a, "loop index (sk first loop / lk / holonomy)");
    verify->add_option("--b", vo.loop_b, "second loop index (sk)");
    verify->add_option("--q", vo.q, "charge (holonomy, area)");
    verify->add_option("--side", vo.side, "plus | minus (holonomy)");
    verify->add_flag("--abs", vo.absolute, "lk: integrate |.| (piercing count form)");
    verify->add_flag("--self-check", vo.self_check, "re-evaluate with doubled nodes and warn");

    auto* example = app.add_subcommand("example", "write a bundled example's documents");
    std::string ex_name, ex_dir = ".";
    example->add_option("name", ex_name, "one of: two-circles, hopf-pair, one-piercing, "
                                         "cancelling-piercings, two-loop-colored")
        ->required();
    example->add_option("--dir", ex_dir, "output directory");

    CLI11_PARSE(app, argc, argv);

    if (common.deterministic) hlx::set_worker_count(1);

    try {
        if (validate->parsed()) return cmd_validate(validate_input, validate_colored, common);
        if (sk->parsed()) return cmd_sk(sk_input, sk_a, sk_b, common);
        if (lk->parsed()) return cmd_lk(lk_hyperlink, lk_surface, common);
        if (wilson->parsed()) return cmd_wilson(w_matter, w_geometric, w_q, common);
        if (area->parsed()) return cmd_area(a_matter, a_geometric, a_surface, a_q, common);
        if (verify->parsed()) return cmd_verify(vo, common);
        if (example->parsed()) return cmd_example(ex_name, ex_dir);
    } catch (const hlx::DocumentError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const hlx::DegenerateDiagram& e) {
        std::cerr << "degenerate diagram: " << e.what() << "\n";
        return 3;
    } catch (const hlx::DegeneratePiercing& e) {
        std::cerr << "degenerate piercing: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
