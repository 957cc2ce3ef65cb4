#include "fairpart/json_io.hpp"

#include <stdexcept>

namespace fairpart {

namespace {

std::string color_str(Color c) { return std::string(1, color_char(c)); }

std::string topology_str(Topology t) { return t == Topology::Line ? "line" : "circle"; }

} // namespace

Json partition_to_json(const Partition& partition) {
    Json j;
    j["n"] = partition.n();
    j["boundaries"] = partition.boundaries();
    return j;
}

Json alpha_partition_to_json(const AlphaPartition& partition) {
    Json j = partition_to_json(partition.partition);
    j["alpha"] = partition.alpha.str();
    j["non_allowable"] = partition.non_allowable;
    return j;
}

Json audit_report_to_json(const AuditReport& report) {
    Json j;
    j["is_fair"] = report.is_fair;
    j["alpha"] = report.alpha.str();
    j["topology"] = topology_str(report.topology);
    j["groups"] = Json::array();
    for (const auto& g : report.groups) {
        Json item;
        item["start"] = g.interval.start;
        item["len"] = g.interval.len;
        item["color"] = color_str(g.color);
        item["unhappy"] = g.unhappy_count;
        j["groups"].push_back(std::move(item));
    }
    j["intervals"] = Json::array();
    for (const auto& s : report.intervals) {
        Json item;
        item["start"] = s.start;
        item["len"] = s.len;
        item["majority"] = color_str(s.majority);
        item["unhappy"] = s.unhappy;
        item["allowable"] = s.allowable;
        j["intervals"].push_back(std::move(item));
    }
    return j;
}

Json solve_result_to_json(const SolveResult& result) {
    Json j;
    j["feasible"] = result.feasible;
    if (result.partition)
        j["partition"] = partition_to_json(*result.partition);
    else
        j["partition"] = nullptr;
    Json stats;
    stats["states"] = result.stats.states;
    stats["fair4_calls"] = result.stats.fair4_calls;
    stats["elapsed_ms"] = result.stats.elapsed_ms;
    j["stats"] = std::move(stats);
    return j;
}

std::string gen_meta_line(const GenResult& result) {
    Json meta;
    meta["kind"] = gen_kind_name(result.kind);
    meta["n"] = result.n;
    if (result.sigma) meta["sigma"] = *result.sigma;
    if (!result.sigmas.empty()) meta["sigmas"] = result.sigmas;
    if (result.epsilon) meta["epsilon"] = result.epsilon->str();
    if (result.beta) meta["beta"] = result.beta->str();
    if (result.seed) meta["seed"] = *result.seed;
    if (result.min_run) meta["min_run"] = *result.min_run;
    if (result.max_run) meta["max_run"] = *result.max_run;
    if (result.requested_gamma) meta["gamma"] = result.requested_gamma->str();
    if (result.realized_gamma) meta["realized_gamma"] = result.realized_gamma->str();
    if (result.p_red) meta["p_red"] = result.p_red->str();
    if (result.infeasibility_bound) meta["n0"] = result.infeasibility_bound->str();
    if (result.exceeds_bound) meta["exceeds_n0"] = *result.exceeds_bound;
    if (result.truncated_last_run) meta["truncated_last_run"] = *result.truncated_last_run;
    if (result.degenerate_beta_boundary && *result.degenerate_beta_boundary)
        meta["beta_boundary_warning"] = true;
    return "# meta: " + meta.dump();
}

std::string gen_instance_file(const GenResult& result) {
    return gen_meta_line(result) + "\n" + result.instance.to_run_string() + "\n";
}

Partition parse_partition_file(std::string_view text) {
    const std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) throw std::invalid_argument("empty partition file");
    if (text[first] == '{') {
        const Json j = Json::parse(text, nullptr, true);
        if (!j.contains("n") || !j.contains("boundaries"))
            throw std::invalid_argument("partition JSON needs fields n and boundaries");
        return Partition(j["n"].get<int>(), j["boundaries"].get<std::vector<int>>());
    }
    return Partition::parse_text(text);
}

} // namespace fairpart
