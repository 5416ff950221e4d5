// discotop: constants tables, homology runs, discontinuity-modulus estimator
// ladders, witness exports, and reproducible experiment reports.

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <string>

#include "CLI11.hpp"

#include "discotop/errors.hpp"
#include "discotop/experiments.hpp"
#include "discotop/homology.hpp"
#include "discotop/lemma_chain.hpp"
#include "discotop/vietoris_rips.hpp"

namespace {

using namespace disco;

struct CommonOpts {
    std::string out;
    std::string format = "json";
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--out", o.out, "output path (default stdout)");
    cmd->add_option("--format", o.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
}

int finish(Report rep, const CommonOpts& o, double wall_ms) {
    rep.wall_time_ms = wall_ms;
    const std::string body =
        emit_report(rep, o.format == "csv" ? ReportFormat::csv : ReportFormat::json);
    if (o.out.empty()) {
        std::cout << body;
    } else {
        std::ofstream os(o.out);
        if (!os) {
            std::cerr << "error: cannot write " << o.out << "\n";
            return 2;
        }
        os << body;
    }
    return rep.all_pass() ? 0 : 1;
}

ModulusEstimate run_estimate(const WitnessSpec& spec, double rho, double sep,
                             WitnessResult& out_w, ConfigSample* configs_out = nullptr) {
    out_w = build_witness(spec);
    if (rho <= 0.0) return measure_witness_modulus(out_w, configs_out);
    switch (spec.kind) {
    case WitnessKind::k5_jump:
    case WitnessKind::tverberg_one_point:
        return alpha_r_hat(out_w.fn, 2, rho);
    case WitnessKind::equatorial_odd:
        return delta_hat(out_w.fn, rho, CodomainMetric::sphere_geodesic);
    default:
        return alpha_hat(out_w.fn, rho, sep > 0.0 ? sep : 2.0 * rho);
    }
}

WitnessKind parse_witness_kind(const std::string& s) {
    static const std::map<std::string, WitnessKind> table{
        {"digit-interleave", WitnessKind::digit_interleave},
        {"k5-jump", WitnessKind::k5_jump},
        {"tverberg-one-point", WitnessKind::tverberg_one_point},
        {"equatorial-odd", WitnessKind::equatorial_odd},
        {"monotone-step", WitnessKind::monotone_step},
        {"nonmonotone-step", WitnessKind::nonmonotone_step}};
    const auto it = table.find(s);
    if (it == table.end()) throw CLI::ValidationError("unknown witness kind: " + s);
    return it->second;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"discontinuity-modulus and nonembeddability-bound toolkit"};
    app.require_subcommand(1);
    const auto t0 = std::chrono::steady_clock::now();
    auto wall_ms = [&t0] {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                         t0)
            .count();
    };

    // constants
    auto* c_cmd = app.add_subcommand("constants", "table of scale constants with provenance");
    int c_n = 1, c_kmax = 9;
    CommonOpts c_opts;
    c_cmd->add_option("--n", c_n, "sphere dimension n");
    c_cmd->add_option("--k-max", c_kmax, "largest k in the table");
    add_common(c_cmd, c_opts);

    // bound
    auto* b_cmd = app.add_subcommand("bound", "theorem-backed lower bound for a scenario");
    std::string b_scenario;
    int b_d = 1, b_n = 1, b_r = 2, b_k = 1;
    CommonOpts b_opts;
    b_cmd->add_option("--scenario", b_scenario,
                      "general | haefliger-weber | projective | sphere | euclidean | vkf | "
                      "tverberg | tverberg-kappa-delta")
        ->required();
    b_cmd->add_option("--d", b_d, "target dimension d");
    b_cmd->add_option("--n", b_n, "domain dimension n");
    b_cmd->add_option("--r", b_r, "Tverberg multiplicity r");
    b_cmd->add_option("--k", b_k, "sphere dimension k");
    add_common(b_cmd, b_opts);

    // homology
    auto* h_cmd = app.add_subcommand("homology", "Betti numbers of a complex file");
    std::string h_in;
    CommonOpts h_opts;
    h_cmd->add_option("--in", h_in, "complex text file")->required();
    add_common(h_cmd, h_opts);

    // vr
    auto* v_cmd = app.add_subcommand("vr", "Vietoris-Rips complex of an n-gon sample");
    int v_ngon = 6, v_maxdim = 3;
    double v_threshold = 2.0 * std::numbers::pi / 3.0;
    std::string v_convention = "weak", v_complex_out;
    CommonOpts v_opts;
    v_cmd->add_option("--ngon", v_ngon, "number of circle points");
    v_cmd->add_option("--threshold", v_threshold, "diameter threshold (radians)");
    v_cmd->add_option("--convention", v_convention, "weak or strict")
        ->check(CLI::IsMember({"weak", "strict"}));
    v_cmd->add_option("--max-dim", v_maxdim, "top dimension kept");
    v_cmd->add_option("--complex-out", v_complex_out, "write the complex text format here");
    add_common(v_cmd, v_opts);

    // estimate
    auto* e_cmd = app.add_subcommand("estimate", "modulus estimate for a witness");
    std::string e_kind;
    WitnessSpec e_spec;
    double e_rho = 0.0, e_sep = 0.0;
    std::vector<double> e_ladder;
    CommonOpts e_opts;
    e_cmd->add_option("--witness", e_kind, "witness kind")->required();
    e_cmd->add_option("--bits", e_spec.bits, "digit-interleave bit depth");
    e_cmd->add_option("--grid", e_spec.grid, "grid resolution");
    e_cmd->add_option("--offset", e_spec.offset, "k5 jump offset");
    e_cmd->add_option("--k", e_spec.k, "sphere dimension k");
    e_cmd->add_option("--n", e_spec.n, "sphere dimension n");
    e_cmd->add_option("--seed", e_spec.seed, "sample seed");
    e_cmd->add_option("--rho", e_rho, "neighborhood radius (default: witness preset)");
    e_cmd->add_option("--rho-ladder", e_ladder,
                      "explicit decreasing rho values (overrides --rho)")
        ->delimiter(',');
    e_cmd->add_option("--sep", e_sep, "pair separation (Conf_2 witnesses)");
    std::string e_configs_csv;
    e_cmd->add_option("--configs-csv", e_configs_csv,
                      "export the configuration sample used (preset measurements)");
    add_common(e_cmd, e_opts);

    // witness
    auto* w_cmd = app.add_subcommand("witness", "construct, verify, and export a witness");
    std::string w_kind, w_csv = "witness.csv", w_sidecar = "witness.json";
    WitnessSpec w_spec;
    w_cmd->add_option("--kind", w_kind, "witness kind")->required();
    w_cmd->add_option("--bits", w_spec.bits, "digit-interleave bit depth");
    w_cmd->add_option("--grid", w_spec.grid, "grid resolution");
    w_cmd->add_option("--offset", w_spec.offset, "k5 jump offset");
    w_cmd->add_option("--k", w_spec.k, "sphere dimension k");
    w_cmd->add_option("--n", w_spec.n, "sphere dimension n");
    w_cmd->add_option("--seed", w_spec.seed, "sample seed");
    w_cmd->add_option("--out-csv", w_csv, "evaluation table path");
    w_cmd->add_option("--out-sidecar", w_sidecar, "JSON sidecar path");

    // experiment
    auto* x_cmd = app.add_subcommand("experiment", "orchestrated experiment with a report");
    std::string x_id;
    std::string x_config_path;
    int x_d = 1, x_r = 2, x_grid = 0, x_count = 100, x_q = 6;
    std::uint64_t x_seed = 0;
    bool x_seed_set = false;
    CommonOpts x_opts;
    x_cmd->add_option("id", x_id, "vkf | tverberg | sphere-homology | lemma-suite")
        ->required();
    x_cmd->add_option("--config", x_config_path, "JSON config file (flags override)");
    x_cmd->add_option("--d", x_d, "dimension d");
    x_cmd->add_option("--r", x_r, "multiplicity r");
    x_cmd->add_option("--grid", x_grid, "witness grid");
    x_cmd->add_option("--count", x_count, "lemma-suite function count");
    x_cmd->add_option("--q", x_q, "lemma-suite barycentric denominator");
    x_cmd->add_option("--seed", x_seed, "experiment seed")->each([&](const std::string&) {
        x_seed_set = true;
    });
    add_common(x_cmd, x_opts);

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_cmd->parsed()) return finish(constants_table_report(c_n, c_kmax), c_opts, wall_ms());

        if (b_cmd->parsed()) {
            Scenario s;
            if (b_scenario == "general") s = GeneralConf2{b_d};
            else if (b_scenario == "haefliger-weber") s = HaefligerWeber{b_n, b_d};
            else if (b_scenario == "projective") s = ProjectivePowerOfTwo{b_k};
            else if (b_scenario == "sphere") s = SphereToEuclidean{b_k, b_d};
            else if (b_scenario == "euclidean") s = EuclideanToEuclidean{b_k + 1, b_d};
            else if (b_scenario == "vkf") s = VanKampenFlores{b_d};
            else if (b_scenario == "tverberg") s = Tverberg{b_r, b_d};
            else if (b_scenario == "tverberg-kappa-delta") s = TverbergKappaDelta{b_r, b_d};
            else {
                std::cerr << "error: unknown scenario " << b_scenario << "\n";
                return 2;
            }
            return finish(bound_report(s), b_opts, wall_ms());
        }

        if (h_cmd->parsed()) {
            std::ifstream is(h_in);
            if (!is) {
                std::cerr << "error: cannot read " << h_in << "\n";
                return 2;
            }
            const SimplicialComplex K = SimplicialComplex::read_text(is);
            const BettiVector b = betti_numbers(chain_complex(K));
            Report rep;
            rep.experiment = "homology";
            rep.config = {{"in", h_in}};
            CheckResult c;
            c.name = "betti";
            c.citation = "two-element-field-homology";
            c.pass = true;
            c.value = static_cast<double>(b.size());
            c.extra["betti"] = b;
            rep.checks.push_back(std::move(c));
            return finish(std::move(rep), h_opts, wall_ms());
        }

        if (v_cmd->parsed()) {
            const FiniteMetricSample sample = ngon_sample(v_ngon);
            const VRThreshold t{v_threshold, v_convention == "weak"
                                                 ? VRThreshold::Convention::weak
                                                 : VRThreshold::Convention::strict};
            const SimplicialComplex K = vr_complex(sample, t, v_maxdim);
            if (!v_complex_out.empty()) {
                std::ofstream os(v_complex_out);
                if (!os) {
                    std::cerr << "error: cannot write " << v_complex_out << "\n";
                    return 2;
                }
                K.write_text(os);
            }
            Report rep;
            rep.experiment = "vr";
            rep.config = {{"ngon", v_ngon},
                          {"threshold", v_threshold},
                          {"convention", v_convention},
                          {"max_dim", v_maxdim}};
            CheckResult c;
            c.name = "vr-complex";
            c.citation = "rips-clique-complex";
            c.pass = true;
            c.value = static_cast<double>(K.face_count());
            c.extra["betti"] = betti_numbers(chain_complex(K));
            nlohmann::ordered_json counts = nlohmann::ordered_json::array();
            for (int dd = 0; dd <= K.dim(); ++dd) counts.push_back(K.face_count(dd));
            c.extra["face_counts"] = counts;
            rep.checks.push_back(std::move(c));
            return finish(std::move(rep), v_opts, wall_ms());
        }

        if (e_cmd->parsed()) {
            WitnessSpec spec = e_spec;
            spec.kind = parse_witness_kind(e_kind);
            if (spec.kind == WitnessKind::digit_interleave && e_cmd->count("--grid") == 0)
                spec.grid = 1 << spec.bits;
            WitnessResult w;
            ModulusEstimate est;
            ConfigSample used_configs;
            ConfigSample* cfg_sink = e_configs_csv.empty() ? nullptr : &used_configs;
            if (!e_ladder.empty()) {
                est = run_estimate(spec, e_ladder.front(), e_sep, w, cfg_sink);
                est.ladder.clear();
                for (double rho : e_ladder) {
                    WitnessResult scratch;
                    est.ladder.emplace_back(rho,
                                            run_estimate(spec, rho, e_sep, scratch).value);
                }
                est.value = est.ladder.front().second;
            } else {
                est = run_estimate(spec, e_rho, e_sep, w, cfg_sink);
            }
            if (cfg_sink && !used_configs.tuples.empty())
                used_configs.write_csv(e_configs_csv);
            Report rep;
            rep.experiment = "estimate";
            rep.seed = spec.seed;
            rep.config = {{"witness", e_kind}, {"grid", spec.grid}, {"rho", est.rho},
                          {"sep", est.separation}};
            CheckResult c;
            c.name = "modulus-estimate";
            c.citation = w.expected_bound_citation;
            c.value = est.value;
            c.pass = true;
            c.exact = false;
            c.ladder = est.ladder;
            c.extra["method"] = est.method;
            c.extra["pair_metric"] = "max-over-coordinates";
            rep.checks.push_back(std::move(c));
            return finish(std::move(rep), e_opts, wall_ms());
        }

        if (w_cmd->parsed()) {
            WitnessSpec spec = w_spec;
            spec.kind = parse_witness_kind(w_kind);
            if (spec.kind == WitnessKind::digit_interleave && w_cmd->count("--grid") == 0)
                spec.grid = 1 << spec.bits;
            const WitnessResult w = build_witness(spec);
            export_witness(w, w_csv, w_sidecar);
            std::cout << "witness " << w_kind << ": verified, " << w.fn.size()
                      << " samples -> " << w_csv << ", " << w_sidecar << "\n";
            return 0;
        }

        if (x_cmd->parsed()) {
            // Config file first, flags override.
            if (!x_config_path.empty()) {
                std::ifstream is(x_config_path);
                if (!is) {
                    std::cerr << "error: cannot read " << x_config_path << "\n";
                    return 2;
                }
                nlohmann::json cfg = nlohmann::json::parse(is);
                if (cfg.contains("d") && x_cmd->count("--d") == 0) x_d = cfg["d"];
                if (cfg.contains("r") && x_cmd->count("--r") == 0) x_r = cfg["r"];
                if (cfg.contains("grid") && x_cmd->count("--grid") == 0) x_grid = cfg["grid"];
                if (cfg.contains("count") && x_cmd->count("--count") == 0) x_count = cfg["count"];
                if (cfg.contains("q") && x_cmd->count("--q") == 0) x_q = cfg["q"];
                if (cfg.contains("seed") && x_cmd->count("--seed") == 0) {
                    x_seed = cfg["seed"];
                    x_seed_set = true;
                }
            }
            Report rep;
            if (x_id == "vkf") {
                rep = vkf_experiment(x_d, x_grid > 0 ? x_grid : 400);
            } else if (x_id == "tverberg") {
                rep = tverberg_experiment(x_r, x_d, x_grid > 0 ? x_grid : 40);
            } else if (x_id == "sphere-homology") {
                rep = sphere_homology_experiment(x_d);
            } else if (x_id == "lemma-suite") {
                if (!x_seed_set) {
                    std::cerr << "error: lemma-suite requires --seed (sampled experiment)\n";
                    return 2;
                }
                rep = lemma_suite_experiment(x_seed, x_count, x_q);
            } else {
                std::cerr << "error: unknown experiment id " << x_id << "\n";
                return 2;
            }
            return finish(std::move(rep), x_opts, wall_ms());
        }
    } catch (const InapplicableTheorem& e) {
        std::cerr << "inapplicable-theorem: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
