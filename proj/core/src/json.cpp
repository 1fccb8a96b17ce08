#include "signbal/json.hpp"

#include <algorithm>
#include <string>

#include "signbal/error.hpp"

namespace signbal {

using nlohmann::json;

namespace {

template <class T>
void read(const json& j, std::string_view key, T& out, std::string_view what) {
    const auto it = j.find(key);
    if (it == j.end()) return;
    try {
        out = it->get<T>();
    } catch (const json::exception&) {
        throw Error(ErrorCode::InvalidConfig, std::string(what) + "." + std::string(key) + " has the wrong type");
    }
}

std::string_view rule_name(BipartitionRule::Kind k) {
    switch (k) {
        case BipartitionRule::Kind::Uniform: return "uniform";
        case BipartitionRule::Kind::Arc: return "arc";
        case BipartitionRule::Kind::Blocks: return "blocks";
    }
    return "uniform";
}

}  // namespace

void require_keys(const json& j, std::initializer_list<std::string_view> allowed, std::string_view what) {
    if (!j.is_object()) throw Error(ErrorCode::InvalidConfig, std::string(what) + " must be a JSON object");
    for (const auto& [key, value] : j.items()) {
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
            throw Error(ErrorCode::InvalidConfig, "unknown key '" + key + "' in " + std::string(what));
        }
    }
}

json vector_to_json(const Vector& v) {
    json out = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
    return out;
}

Vector vector_from_json(const json& j) {
    if (!j.is_array()) throw Error(ErrorCode::InvalidConfig, "expected an array of numbers");
    Vector v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_number()) throw Error(ErrorCode::InvalidConfig, "expected an array of numbers");
        v(static_cast<Eigen::Index>(i)) = j[i].get<double>();
    }
    return v;
}

void to_json(json& j, const Bipartition& b) { j = std::vector<int>(b.signs().begin(), b.signs().end()); }

void to_json(json& j, const Edge& e) { j = json::array({e.i, e.j, e.w}); }

void to_json(json& j, const BalanceClassification& c) {
    j = {{"verdict", to_string(c.verdict)},
         {"balanced", c.balanced()},
         {"antibalanced", c.antibalanced()},
         {"balanced_partition", c.balanced() ? json(*c.balanced_partition) : json(nullptr)},
         {"antibalanced_partition", c.antibalanced() ? json(*c.antibalanced_partition) : json(nullptr)}};
}

void to_json(json& j, const FrustrationReport& r) {
    j = {{"target", to_string(r.target)},     {"flip_count", r.flip_count}, {"flipped_weight", r.flipped_weight},
         {"exact", r.exact},                  {"partition", r.partition},   {"flip_set", r.flip_set}};
}

void to_json(json& j, const BalanceMeasures& m) {
    j = {{"d_b", m.d_b},
         {"d_a", m.d_a},
         {"rho_signed", m.rho_signed},
         {"rho_unsigned", m.rho_unsigned},
         {"contraction", m.contraction}};
}

void to_json(json& j, const PerturbationEstimate& p) {
    j = {{"target", to_string(p.target)},
         {"predicted", p.predicted},
         {"realized", p.realized},
         {"flipped_weight", p.flipped_weight},
         {"m", p.m}};
}

void to_json(json& j, const SpectralTheoremReport& r) {
    j = json::array();
    for (const auto& c : r.comparisons) {
        j.push_back({{"target", to_string(c.target)},
                     {"eigenvalue_deviation", c.eigenvalue_deviation},
                     {"eigenvector_deviation", c.eigenvector_deviation}});
    }
}

void to_json(json& j, const StationaryPrediction& p) {
    j = {{"kind", to_string(p.kind)}};
    if (p.kind == StationaryPrediction::Kind::AlternatingPair) {
        j["odd"] = vector_to_json(p.vectors.at(0));
        j["even"] = vector_to_json(p.vectors.at(1));
    } else {
        j["state"] = vector_to_json(p.vectors.at(0));
    }
}

void to_json(json& j, const ActivationSets& a) {
    j = json::array();
    for (std::size_t t = 0; t < a.positive.size(); ++t) {
        j.push_back({{"t", t}, {"positive", a.positive[t]}, {"negative", a.negative[t]}});
    }
}

void to_json(json& j, const SSBMParams& p) {
    j = {{"n1", p.n1},     {"n2", p.n2},       {"p_in", p.p_in}, {"p_out", p.p_out},
         {"eta", p.eta},   {"alpha", p.alpha}, {"seed", p.seed}};
}

void from_json(const json& j, SSBMParams& p) {
    require_keys(j, {"n1", "n2", "p_in", "p_out", "eta", "alpha", "seed"}, "ssbm");
    read(j, "n1", p.n1, "ssbm");
    read(j, "n2", p.n2, "ssbm");
    read(j, "p_in", p.p_in, "ssbm");
    read(j, "p_out", p.p_out, "ssbm");
    read(j, "eta", p.eta, "ssbm");
    read(j, "alpha", p.alpha, "ssbm");
    read(j, "seed", p.seed, "ssbm");
}

void to_json(json& j, const BipartitionRule& r) { j = {{"kind", rule_name(r.kind)}, {"size", r.size}}; }

void from_json(const json& j, BipartitionRule& r) {
    require_keys(j, {"kind", "size"}, "rule");
    std::string kind(rule_name(r.kind));
    read(j, "kind", kind, "rule");
    if (kind == "uniform") {
        r.kind = BipartitionRule::Kind::Uniform;
    } else if (kind == "arc") {
        r.kind = BipartitionRule::Kind::Arc;
    } else if (kind == "blocks") {
        r.kind = BipartitionRule::Kind::Blocks;
    } else {
        throw Error(ErrorCode::InvalidConfig, "rule.kind must be uniform, arc or blocks, got '" + kind + "'");
    }
    read(j, "size", r.size, "rule");
}

void to_json(json& j, const LatticeParams& p) {
    json plan;
    if (const auto* b = std::get_if<BalancedPlan>(&p.plan)) {
        plan = {{"kind", "balanced"}, {"rule", b->rule}};
    } else if (const auto* a = std::get_if<AntibalancedPlan>(&p.plan)) {
        plan = {{"kind", "antibalanced"}, {"rule", a->rule}};
    } else {
        const auto& f = std::get<FlipKPlan>(p.plan);
        plan = {{"kind", "flipk"}, {"rule", f.rule}, {"k", f.k}, {"seed", f.seed}};
    }
    j = {{"n", p.n}, {"dbar", p.dbar}, {"alpha", p.alpha}, {"plan", plan}};
}

void from_json(const json& j, LatticeParams& p) {
    require_keys(j, {"n", "dbar", "alpha", "plan"}, "lattice");
    read(j, "n", p.n, "lattice");
    read(j, "dbar", p.dbar, "lattice");
    read(j, "alpha", p.alpha, "lattice");
    const auto it = j.find("plan");
    if (it == j.end()) return;
    const json& plan = *it;
    require_keys(plan, {"kind", "rule", "k", "seed"}, "lattice.plan");
    std::string kind = "balanced";
    read(plan, "kind", kind, "lattice.plan");
    BipartitionRule rule;
    if (const auto r = plan.find("rule"); r != plan.end()) rule = r->get<BipartitionRule>();
    if (kind == "balanced" || kind == "antibalanced") {
        if (plan.contains("k") || plan.contains("seed")) {
            throw Error(ErrorCode::InvalidConfig, "lattice.plan." + kind + " takes no k or seed");
        }
        if (kind == "balanced") {
            p.plan = BalancedPlan{rule};
        } else {
            p.plan = AntibalancedPlan{rule};
        }
    } else if (kind == "flipk") {
        FlipKPlan f{rule};
        read(plan, "k", f.k, "lattice.plan");
        read(plan, "seed", f.seed, "lattice.plan");
        p.plan = f;
    } else {
        throw Error(ErrorCode::InvalidConfig, "lattice.plan.kind must be balanced, antibalanced or flipk, got '" + kind + "'");
    }
}

void to_json(json& j, const ELTConfig& c) {
    j = {{"theta_l", c.theta_l}, {"alpha", c.alpha}, {"l0", c.l0}, {"horizon", c.horizon}};
    if (c.general_thresholds) {
        json rows = json::array();
        for (Eigen::Index r = 0; r < c.general_thresholds->rows(); ++r) {
            rows.push_back(vector_to_json(c.general_thresholds->row(r).transpose()));
        }
        j["thresholds"] = rows;
    }
}

void from_json(const json& j, ELTConfig& c) {
    require_keys(j, {"theta_l", "alpha", "l0", "horizon", "thresholds"}, "elt");
    read(j, "theta_l", c.theta_l, "elt");
    read(j, "alpha", c.alpha, "elt");
    read(j, "l0", c.l0, "elt");
    read(j, "horizon", c.horizon, "elt");
    const auto it = j.find("thresholds");
    if (it == j.end() || it->is_null()) return;
    if (!it->is_array() || it->empty()) throw Error(ErrorCode::InvalidConfig, "elt.thresholds must be a non-empty array of rows");
    const auto rows = static_cast<Eigen::Index>(it->size());
    const auto cols = static_cast<Eigen::Index>((*it)[0].size());
    DenseMatrix table(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r) {
        const Vector row = vector_from_json((*it)[static_cast<std::size_t>(r)]);
        if (row.size() != cols) throw Error(ErrorCode::InvalidConfig, "elt.thresholds rows differ in length");
        table.row(r) = row.transpose();
    }
    c.general_thresholds = std::move(table);
}

}  // namespace signbal
