// Batch driver: loads a JSON experiment config, runs one analysis or
// simulation, and writes report.json (plus sweep.csv for grid sweeps) into the
// output directory. Identical config + seeds produce byte-identical reports
// when --no-timestamp is passed.

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "sumcq/json_io.hpp"

namespace {

using sumcq::Json;

struct GlobalOptions {
    std::string config_path;
    std::string out_dir = ".";
    std::optional<std::uint64_t> seed_override;
    sumcq::Budgets budgets;
    double tol = 1e-9;
    bool no_timestamp = false;
};

sumcq::Tolerances tolerances(const GlobalOptions& g) {
    sumcq::Tolerances t;
    t.herm = t.psd = t.trace = t.povm = t.pmf = g.tol;
    return t;
}

Json load_config(const GlobalOptions& g) {
    std::ifstream in(g.config_path);
    if (!in) throw sumcq::UsageError("cannot open config file: " + g.config_path);
    return Json::parse(in);
}

std::uint64_t resolve_seed(const GlobalOptions& g, const Json& cfg) {
    if (g.seed_override) return *g.seed_override;
    return cfg.value("seed", std::uint64_t{0});
}

void write_report(const GlobalOptions& g, const std::string& command, Json result) {
    Json report;
    report["schema"] = sumcq::kSchemaVersion;
    report["command"] = command;
    if (!g.no_timestamp) {
        report["timestamp_unix"] =
            std::chrono::duration_cast<std::chrono::seconds>(
                std::chrono::system_clock::now().time_since_epoch())
                .count();
    }
    report["result"] = std::move(result);
    std::filesystem::create_directories(g.out_dir);
    const auto path = std::filesystem::path(g.out_dir) / "report.json";
    std::ofstream out(path);
    out << report.dump(2) << '\n';
    std::cout << path.string() << '\n';
}

std::vector<double> grid_from_config(const Json& cfg, const char* key, double lo, double hi,
                                     double step) {
    if (cfg.contains(key)) return cfg.at(key).get<std::vector<double>>();
    std::vector<double> out;
    const auto count = static_cast<std::size_t>(std::llround((hi - lo) / step));
    for (std::size_t i = 0; i <= count; ++i) out.push_back(std::min(hi, lo + step * i));
    return out;
}

int run_rates(const GlobalOptions& g) {
    const Json cfg = load_config(g);
    const auto tol = tolerances(g);
    const auto mac = sumcq::mac_from_json(cfg.at("channel"), tol);
    const auto r = sumcq::message_sum_rate(mac, cfg.at("q").get<std::uint32_t>(),
                                           cfg.at("p_v1x1").get<std::vector<double>>(),
                                           cfg.at("p_v2x2").get<std::vector<double>>(), tol);
    write_report(g, "rates", sumcq::rate_report_to_json(r));
    return 0;
}

int run_optimize(const GlobalOptions& g) {
    const Json cfg = load_config(g);
    const auto tol = tolerances(g);
    const auto mac = sumcq::mac_from_json(cfg.at("channel"), tol);
    const auto r = sumcq::optimize_message_sum_rate(
        mac, cfg.at("q").get<std::uint32_t>(), cfg.value("grid_resolution", std::size_t{10}),
        cfg.value("refine", true), g.budgets, tol);
    write_report(g, "optimize", sumcq::rate_report_to_json(r));
    return 0;
}

int run_example1(const GlobalOptions& g) {
    const Json cfg = load_config(g);
    const auto tol = tolerances(g);
    const auto theta_grid = grid_from_config(cfg, "theta_grid", 0.0, 1.0, 0.01);

    if (cfg.value("search", false)) {
        const auto p_grid = grid_from_config(cfg, "p_grid", 0.05, 0.45, 0.05);
        const auto q_grid = grid_from_config(cfg, "q_grid", 0.0, 0.4, 0.05);
        const auto overlap_grid = grid_from_config(cfg, "overlap_grid", 0.0, 0.9, 0.05);

        std::filesystem::create_directories(g.out_dir);
        std::ofstream csv(std::filesystem::path(g.out_dir) / "sweep.csv");
        csv << "p,q_noise,overlap,lhs_structured,rhs_structured,theta_star,"
               "lhs_unstructured,rhs_unstructured,structured_ok,unstructured_ok\n";
        csv.precision(17);
        std::optional<sumcq::Example1Report> witness;
        const auto sigma0 = sumcq::pure_qubit(0.0);
        for (double p : p_grid) {
            for (double qn : q_grid) {
                for (double ov : overlap_grid) {
                    const auto sigma1 = sumcq::pure_qubit(std::acos(ov));
                    const auto rep =
                        sumcq::example1_analysis(p, qn, sigma0, sigma1, theta_grid, tol);
                    csv << p << ',' << qn << ',' << ov << ',' << rep.lhs_structured_closed << ','
                        << rep.rhs_structured << ',' << rep.theta_star << ','
                        << rep.lhs_unstructured << ',' << rep.rhs_unstructured << ','
                        << rep.structured_ok << ',' << rep.unstructured_ok << '\n';
                    if (!witness && rep.structured_ok && !rep.unstructured_ok) witness = rep;
                }
            }
        }
        Json result;
        result["witness_found"] = witness.has_value();
        if (witness) result["witness"] = sumcq::example1_report_to_json(*witness);
        write_report(g, "example1", std::move(result));
        return 0;
    }

    const double overlap = cfg.at("overlap").get<double>();
    const auto rep = sumcq::example1_analysis(
        cfg.at("p").get<double>(), cfg.at("q_noise").get<double>(), sumcq::pure_qubit(0.0),
        sumcq::pure_qubit(std::acos(overlap)), theta_grid, tol);
    write_report(g, "example1", sumcq::example1_report_to_json(rep));
    return 0;
}

int run_simulate_ptp(const GlobalOptions& g) {
    const Json cfg = load_config(g);
    const auto tol = tolerances(g);
    const auto ptp = sumcq::ptp_from_json(cfg.at("channel"), tol);
    const auto ncc = sumcq::random_ncc(
        cfg.at("n").get<std::size_t>(), cfg.at("k").get<std::size_t>(),
        cfg.at("l").get<std::size_t>(), cfg.at("q").get<std::uint32_t>(), resolve_seed(g, cfg));
    const auto code =
        sumcq::build_ptp_code(ncc, ptp, cfg.at("p_v").get<std::vector<double>>(),
                              cfg.at("delta").get<double>(), g.budgets, tol);
    const auto r = sumcq::exact_ptp_error(code, ptp, g.budgets);
    write_report(g, "simulate-ptp", sumcq::sim_result_to_json(r, !g.no_timestamp));
    return 0;
}

sumcq::MacSumCode mac_sum_from_config(const GlobalOptions& g, const Json& cfg,
                                      const sumcq::CqMac& mac) {
    return sumcq::build_mac_sum_code(
        mac, cfg.at("q").get<std::uint32_t>(), cfg.at("p_v1x1").get<std::vector<double>>(),
        cfg.at("p_v2x2").get<std::vector<double>>(), cfg.at("n").get<std::size_t>(),
        cfg.at("k").get<std::size_t>(), cfg.at("l").get<std::size_t>(),
        cfg.at("delta").get<double>(), resolve_seed(g, cfg), g.budgets, tolerances(g));
}

int run_simulate_mac_sum(const GlobalOptions& g) {
    const Json cfg = load_config(g);
    const auto mac = sumcq::mac_from_json(cfg.at("channel"), tolerances(g));
    const auto code = mac_sum_from_config(g, cfg, mac);
    const auto num_messages = code.povm.elements.size() - 1;
    std::vector<double> uniform(num_messages, 1.0 / static_cast<double>(num_messages));
    const auto p_m1 = cfg.contains("p_m1") ? cfg.at("p_m1").get<std::vector<double>>() : uniform;
    const auto p_m2 = cfg.contains("p_m2") ? cfg.at("p_m2").get<std::vector<double>>() : uniform;
    const auto r = sumcq::exact_mac_sum_error(code, p_m1, p_m2, mac, g.budgets);
    write_report(g, "simulate-mac-sum", sumcq::sim_result_to_json(r, !g.no_timestamp));
    return 0;
}

int run_simulate_end_to_end(const GlobalOptions& g) {
    const Json cfg = load_config(g);
    const auto tol = tolerances(g);
    const auto mac = sumcq::mac_from_json(cfg.at("channel"), tol);
    const auto source = sumcq::source_from_json(cfg.at("source"), tol);
    const auto code = mac_sum_from_config(g, cfg, mac);
    const auto q = cfg.at("q").get<std::uint32_t>();
    const auto n = cfg.at("n").get<std::size_t>();
    const auto l = cfg.at("l").get<std::size_t>();

    std::vector<double> p_z(q, 0.0);
    for (std::uint32_t a = 0; a < q; ++a) {
        for (std::uint32_t b = 0; b < q; ++b) p_z[(a + b) % q] += source.prob(a, b);
    }
    // Shared parity matrix: explicit in the config, or drawn from the seed
    // (full-rank redraws keep the l = n map invertible).
    sumcq::FieldMatrix h(std::max<std::size_t>(l, 1), n, q);
    if (cfg.contains("h")) {
        h = sumcq::FieldMatrix(l, n, q, cfg.at("h").get<std::vector<std::uint32_t>>());
    } else {
        auto rng = sumcq::CounterRng(resolve_seed(g, cfg)).substream(100);
        do {
            h = sumcq::uniform_random_matrix(l, n, q, rng);
        } while (l == n && sumcq::field_rank(h) != n);
    }
    const sumcq::KmCode km(q, n, l, h, p_z, tol);

    sumcq::SimResult r;
    if (cfg.value("mode", "exact") == "exact") {
        r = sumcq::end_to_end_function_error_exact(km, code, source, mac, g.budgets);
    } else {
        r = sumcq::end_to_end_function_error_mc(km, code, source, mac,
                                                cfg.at("trials").get<std::uint64_t>(),
                                                resolve_seed(g, cfg), g.budgets);
    }
    write_report(g, "simulate-end-to-end", sumcq::sim_result_to_json(r, !g.no_timestamp));
    return 0;
}

int run_verify_pinching(const GlobalOptions& g) {
    const Json cfg = load_config(g);
    const auto tol = tolerances(g);
    std::vector<sumcq::DensityOperator> states;
    for (const auto& s : cfg.at("states")) states.push_back(sumcq::density_from_json(s, tol));
    const auto r = sumcq::pinching_check(
        cfg.at("p_ab").get<std::vector<double>>(), cfg.at("a_size").get<std::size_t>(), states,
        cfg.at("n").get<std::size_t>(), cfg.at("delta").get<double>(), g.budgets, tol);
    write_report(g, "verify-pinching", sumcq::pinching_result_to_json(r));
    return 0;
}

int run_verify_coverage(const GlobalOptions& g) {
    const Json cfg = load_config(g);
    const auto r = sumcq::coset_coverage_probability(
        cfg.at("n").get<std::size_t>(), cfg.at("k").get<std::size_t>(),
        cfg.at("q").get<std::uint32_t>(), cfg.at("p_v").get<std::vector<double>>(),
        cfg.at("delta").get<double>(), cfg.at("trials").get<std::uint64_t>(),
        resolve_seed(g, cfg), g.budgets);
    write_report(g, "verify-coverage", sumcq::coverage_result_to_json(r));
    return 0;
}

int run_km(const GlobalOptions& g) {
    const Json cfg = load_config(g);
    const auto source = sumcq::source_from_json(cfg.at("source"), tolerances(g));
    const auto r = sumcq::km_error_monte_carlo(
        source, cfg.at("q").get<std::uint32_t>(), cfg.at("n").get<std::size_t>(),
        cfg.at("l").get<std::size_t>(), cfg.at("trials").get<std::uint64_t>(),
        resolve_seed(g, cfg), cfg.value("per_trial_h", false), g.budgets);
    write_report(g, "km", sumcq::sim_result_to_json(r, !g.no_timestamp));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sum-over-CQ-MAC coding toolkit"};
    app.require_subcommand(1);

    GlobalOptions g;
    app.add_option("--config", g.config_path, "experiment config (JSON)")->required();
    app.add_option("--out", g.out_dir, "output directory");
    std::uint64_t seed_flag = 0;
    auto* seed_opt = app.add_option("--seed", seed_flag, "override config seed");
    app.add_option("--budget-dim", g.budgets.dim_budget, "tensor dimension budget");
    app.add_option("--budget-enum", g.budgets.enum_budget, "enumeration budget");
    app.add_option("--tol", g.tol, "validation tolerance");
    app.add_flag("--no-timestamp", g.no_timestamp, "omit timestamps and timing from reports");

    int (*runner)(const GlobalOptions&) = nullptr;
    const std::pair<const char*, int (*)(const GlobalOptions&)> commands[] = {
        {"rates", run_rates},
        {"optimize", run_optimize},
        {"example1", run_example1},
        {"simulate-ptp", run_simulate_ptp},
        {"simulate-mac-sum", run_simulate_mac_sum},
        {"simulate-end-to-end", run_simulate_end_to_end},
        {"verify-pinching", run_verify_pinching},
        {"verify-coverage", run_verify_coverage},
        {"km", run_km},
    };
    for (const auto& [name, fn] : commands) {
        auto* sub = app.add_subcommand(name);
        sub->fallthrough();  // allow global flags after the subcommand name
        sub->callback([&runner, fn = fn] { runner = fn; });
    }

    CLI11_PARSE(app, argc, argv);
    if (seed_opt->count() > 0) g.seed_override = seed_flag;

    try {
        return runner(g);
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: malformed config JSON: " << e.what() << '\n';
        return 2;
    } catch (const sumcq::ResourceError& e) {
        std::cerr << "error: budget exceeded: " << e.what() << '\n';
        return 4;
    } catch (const sumcq::UsageError& e) {
        std::cerr << "error: precondition failed: " << e.what() << '\n';
        return 3;
    } catch (const sumcq::ValidationError& e) {
        std::cerr << "error: validation failed: " << e.what() << '\n';
        return 3;
    }
}
