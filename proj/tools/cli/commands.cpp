#include "commands.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "criteria.hpp"
#include "init_state.hpp"
#include "signbal/balance.hpp"
#include "signbal/dynamics.hpp"
#include "signbal/edge_list.hpp"
#include "signbal/error.hpp"
#include "signbal/generate.hpp"
#include "signbal/json.hpp"
#include "signbal/spectral.hpp"

namespace signbal::cli {

using nlohmann::json;

namespace {

json load_config(const std::string& path) {
    if (path.empty()) return json::object();
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoError, "cannot open config " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::ParseError, path + ": " + e.what());
    }
}

LoadedGraph load_input(const CommonOptions& opt) {
    if (opt.input.empty()) throw Error(ErrorCode::IoError, "--input is required");
    return load_edge_list(opt.input);
}

// Writes to --output when given, otherwise to `fallback`.
template <class F>
void emit(const std::string& path, std::ostream& fallback, F&& write) {
    if (path.empty()) {
        write(fallback);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
    write(out);
    if (!out) throw Error(ErrorCode::IoError, "write failed for " + path);
}

template <class T>
T get_or(const json& j, const char* key, T fallback) {
    const auto it = j.find(key);
    if (it == j.end()) return fallback;
    try {
        return it->get<T>();
    } catch (const json::exception&) {
        throw Error(ErrorCode::InvalidConfig, std::string("config key '") + key + "' has the wrong type");
    }
}

std::optional<BalanceTarget> mode_from(const json& cfg) {
    const auto mode = get_or<std::string>(cfg, "mode", "");
    if (mode.empty()) return std::nullopt;
    if (mode == "balanced") return BalanceTarget::Balanced;
    if (mode == "antibalanced") return BalanceTarget::Antibalanced;
    throw Error(ErrorCode::InvalidConfig, "mode must be balanced or antibalanced, got '" + mode + "'");
}

void write_trajectory(std::ostream& out, const Trajectory& traj, const std::string& format) {
    if (format == "json") {
        json states = json::array();
        for (const auto& x : traj.states) states.push_back(vector_to_json(x));
        out << json{{"model", to_string(traj.model)}, {"config", traj.config}, {"states", states}}.dump(2) << '\n';
        return;
    }
    out << "t,node,value\n";
    for (std::size_t t = 0; t < traj.states.size(); ++t) {
        for (Eigen::Index j = 0; j < traj.states[t].size(); ++j) {
            out << t << ',' << j << ',' << format_double(traj.states[t](j)) << '\n';
        }
    }
}

json graph_header(const CommonOptions& opt, const LoadedGraph& loaded) {
    const auto& g = loaded.graph;
    json out = {{"input", opt.input},
                {"nodes", g.node_count()},
                {"edges", g.edge_count()},
                {"positive_edges", g.positive_edge_count()},
                {"negative_edges", g.negative_edge_count()}};
    bool numeric = true;
    for (std::size_t v = 0; v < loaded.labels.size(); ++v) numeric = numeric && loaded.labels[v] == std::to_string(v);
    if (!numeric) out["labels"] = loaded.labels;
    return out;
}

}  // namespace

int cmd_classify(const CommonOptions& opt, std::ostream& out) {
    const LoadedGraph loaded = load_input(opt);
    const auto c = classify(loaded.graph);
    const auto m = strict_unbalance_contraction(loaded.graph);
    json report = graph_header(opt, loaded);
    report.update(json(c));
    report["d_b"] = m.d_b;
    report["d_a"] = m.d_a;
    emit(opt.output, out, [&](std::ostream& o) { o << report.dump(2) << '\n'; });
    return kOk;
}

int cmd_measure(const CommonOptions& opt, std::ostream& out) {
    const LoadedGraph loaded = load_input(opt);
    const SignedGraph& g = loaded.graph;
    const json cfg = load_config(opt.config);
    require_keys(cfg, {"frustration_mode"}, "measure config");
    const auto mode_name = get_or<std::string>(cfg, "frustration_mode", "auto");

    auto frustrate = [&](BalanceTarget target) {
        if (mode_name == "auto") return frustration(g, target);
        if (mode_name == "exact") return frustration(g, target, FrustrationMode::Exact);
        if (mode_name == "heuristic") return frustration(g, target, FrustrationMode::Heuristic);
        throw Error(ErrorCode::InvalidConfig, "frustration_mode must be auto, exact or heuristic");
    };

    const auto c = classify(g);
    json report = graph_header(opt, loaded);
    report["verdict"] = to_string(c.verdict);
    report["measures"] = strict_unbalance_contraction(g);
    report["frustration"] = {{"balanced", frustrate(BalanceTarget::Balanced)},
                             {"antibalanced", frustrate(BalanceTarget::Antibalanced)}};
    if (c.balanced() || c.antibalanced()) report["spectral_theorem"] = verify_spectral_theorem(g, c);
    emit(opt.output, out, [&](std::ostream& o) { o << report.dump(2) << '\n'; });
    return kOk;
}

int cmd_generate(const std::string& kind, const CommonOptions& opt, std::ostream& out) {
    const json cfg = load_config(opt.config);
    SignedGraph g = build_graph(1, {});
    json params;
    if (kind == "ssbm") {
        auto p = cfg.get<SSBMParams>();
        if (opt.seed) p.seed = *opt.seed;
        g = ssbm(p);
        params = p;
    } else if (kind == "lattice") {
        auto p = cfg.get<LatticeParams>();
        if (opt.seed) {
            auto* flip = std::get_if<FlipKPlan>(&p.plan);
            if (flip == nullptr) throw Error(ErrorCode::InvalidConfig, "--seed only applies to a flipk lattice plan");
            flip->seed = *opt.seed;
        }
        g = ring_lattice(p);
        params = p;
    } else if (kind == "tree") {
        require_keys(cfg, {"n", "sign_prob", "alpha", "seed"}, "tree");
        const auto n = get_or<std::size_t>(cfg, "n", 16);
        const auto sign_prob = get_or<double>(cfg, "sign_prob", 0.5);
        const auto alpha = get_or<double>(cfg, "alpha", 1.0);
        const auto seed = opt.seed.value_or(get_or<std::uint64_t>(cfg, "seed", 1));
        g = random_signed_tree(n, sign_prob, seed, alpha);
        params = {{"n", n}, {"sign_prob", sign_prob}, {"alpha", alpha}, {"seed", seed}};
    } else {
        throw Error(ErrorCode::InvalidConfig, "unknown generator '" + kind + "' (expected ssbm, lattice or tree)");
    }
    const std::vector<std::string> comments = {"signbal generate " + kind, "params " + params.dump()};
    emit(opt.output, out, [&](std::ostream& o) { write_edge_list(o, g, comments); });
    return kOk;
}

int cmd_simulate(const std::string& model, const CommonOptions& opt, const std::string& summary_path, std::ostream& out) {
    if (opt.format != "csv" && opt.format != "json") {
        throw Error(ErrorCode::InvalidConfig, "--format must be csv or json");
    }
    const LoadedGraph loaded = load_input(opt);
    const SignedGraph& g = loaded.graph;
    json cfg = load_config(opt.config);
    const auto horizon = get_or<std::size_t>(cfg, "horizon", 50);
    const auto mode = mode_from(cfg);

    Trajectory traj;
    json summary;
    if (model == "linear" || model == "rw") {
        if (model == "linear") {
            require_keys(cfg, {"horizon", "init", "l0", "mode"}, "linear config");
        } else {
            require_keys(cfg, {"horizon", "init", "l0", "mode", "until_converged", "tolerance"}, "rw config");
        }
        const Vector x0 = parse_initial_state(get_or<std::string>(cfg, "init", "uniform"), g, get_or(cfg, "l0", 1.0), mode);
        if (model == "linear") {
            traj = linear_adjacency_simulate(g, x0, horizon);
        } else {
            traj = get_or(cfg, "until_converged", false)
                       ? random_walk_until_converged(g, x0, horizon, get_or(cfg, "tolerance", kConvergenceTolerance))
                       : random_walk_simulate(g, x0, horizon);
            summary = {{"model", "rw"}, {"verdict", to_string(classify(g).verdict)}, {"steps", traj.horizon()}};
            try {
                summary["prediction"] = predict_stationary(g, x0);
            } catch (const Error& e) {
                if (e.code() != ErrorCode::BipartiteUnsupported) throw;
                summary["prediction"] = {{"kind", "unsupported"}, {"reason", e.what()}};
            }
            summary["final_state"] = vector_to_json(traj.final_state());
        }
    } else if (model == "elt") {
        require_keys(cfg, {"horizon", "init", "l0", "mode", "theta_l", "alpha", "thresholds", "lattice"}, "elt config");
        json elt_part = json::object();
        for (const char* key : {"theta_l", "alpha", "l0", "horizon", "thresholds"}) {
            if (cfg.contains(key)) elt_part[key] = cfg[key];
        }
        ELTConfig elt = elt_part.get<ELTConfig>();
        elt.horizon = horizon;
        const auto init = get_or<std::string>(cfg, "init", "neighbourhood:0");
        ThresholdRun run;
        if (get_or(cfg, "lattice", false)) {
            if (!init.starts_with("neighbourhood:")) {
                throw Error(ErrorCode::InvalidConfig, "lattice runs are seeded with neighbourhood:<id>");
            }
            const auto center = static_cast<NodeId>(std::stoull(init.substr(14)));
            run = elt_lattice_simulate(g, center, elt, mode.value_or(nearest_structure(g)));
        } else {
            run = elt_simulate(g, parse_initial_state(init, g, elt.l0, mode), elt);
        }
        traj = std::move(run.trajectory);
        summary = {{"model", "elt"}, {"verdict", to_string(classify(g).verdict)}, {"activation", run.activation}};
    } else {
        throw Error(ErrorCode::InvalidConfig, "unknown model '" + model + "' (expected linear, rw or elt)");
    }

    emit(opt.output, out, [&](std::ostream& o) { write_trajectory(o, traj, opt.format); });
    if (!summary.is_null()) {
        if (!summary_path.empty()) {
            emit(summary_path, out, [&](std::ostream& o) { o << summary.dump(2) << '\n'; });
        } else if (!opt.output.empty()) {
            out << summary.dump(2) << '\n';
        }
    }
    return kOk;
}

int cmd_verify(const VerifyOptions& verify, const CommonOptions& opt, std::ostream& out) {
    verify::Options options;
    options.inject_sign_error = verify.inject_sign_error;
    options.tribes_path = verify.tribes;
    const std::vector<int> ids = verify.criterion ? std::vector<int>{*verify.criterion} : verify::suite_criteria(verify.suite);

    json results = json::array();
    bool passed = true;
    for (const int id : ids) {
        const auto r = verify::run_criterion(id, options);
        passed = passed && r.passed;
        results.push_back(verify::to_json(r));
    }
    const json report = {{"suite", verify.criterion ? "criterion " + std::to_string(*verify.criterion) : verify.suite},
                         {"inject_sign_error", verify.inject_sign_error},
                         {"passed", passed},
                         {"criteria", results}};
    emit(opt.output, out, [&](std::ostream& o) { o << report.dump(2) << '\n'; });
    return passed ? kOk : kVerificationFailed;
}

}  // namespace signbal::cli
