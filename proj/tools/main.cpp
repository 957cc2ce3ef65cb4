#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "fairpart/audit.hpp"
#include "fairpart/constructive.hpp"
#include "fairpart/core.hpp"
#include "fairpart/exact.hpp"
#include "fairpart/generators.hpp"
#include "fairpart/json_io.hpp"

namespace {

using namespace fairpart;

// exit 1: bad flags or parameter strings; exit 2: unusable input payloads;
// exit 3: infeasible / unfair outcomes.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_stream_or_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Instance load_instance(const std::string& path) {
    try {
        return Instance::parse(read_stream_or_file(path));
    } catch (const std::invalid_argument& e) {
        throw InputError(std::string("bad instance: ") + e.what());
    }
}

Rational parse_rational_arg(const std::string& text, const char* name) {
    try {
        return Rational::parse(text);
    } catch (const std::exception& e) {
        throw UsageError(std::string("invalid ") + name + " '" + text + "': " + e.what());
    }
}

struct ParamArgs {
    int sigma = 0;
    std::string epsilon = "0";
    std::string beta = "1/2";
    std::string beta_mode = "inclusive";

    FairnessParams build() const {
        if (sigma < 1) throw UsageError("--sigma must be a positive integer");
        BetaMode mode;
        if (beta_mode == "strict")
            mode = BetaMode::Strict;
        else if (beta_mode == "inclusive")
            mode = BetaMode::Inclusive;
        else
            throw UsageError("--beta-mode must be strict or inclusive");
        try {
            return FairnessParams(sigma, parse_rational_arg(epsilon, "epsilon"),
                                  parse_rational_arg(beta, "beta"), mode);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
};

void add_param_flags(CLI::App* cmd, ParamArgs& args) {
    cmd->add_option("--sigma", args.sigma, "ideal interval size")->required();
    cmd->add_option("--epsilon", args.epsilon, "size tolerance, p/q or decimal");
    cmd->add_option("--beta", args.beta, "deviation threshold, p/q or decimal");
    cmd->add_option("--beta-mode", args.beta_mode, "strict|inclusive");
}

Topology parse_topology(const std::string& text) {
    if (text == "line") return Topology::Line;
    if (text == "circle") return Topology::Circle;
    throw UsageError("--topology must be line or circle");
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    out << content;
}

std::string render_strip(const Instance& x, const std::optional<Partition>& partition) {
    std::string out;
    std::optional<HappinessIndex> happiness;
    if (partition) happiness.emplace(x, *partition);
    for (int p = 1; p <= x.size(); ++p) {
        char c = color_char(x.color_at(p));
        if (happiness && happiness->unhappy(p)) c = static_cast<char>(c - 'A' + 'a');
        out += c;
        if (partition && p < x.size()) {
            const auto& bounds = partition->boundaries();
            for (std::size_t i = 1; i + 1 < bounds.size(); ++i)
                if (bounds[i] == p) out += '|';
        }
    }
    return out;
}

std::string render_svg(const Instance& x, const std::optional<Partition>& partition) {
    const int unit = 12, height = 48;
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << x.size() * unit + 20
        << "\" height=\"" << height + 20 << "\">\n";
    int offset = 0;
    for (const auto& run : x.runs()) {
        svg << "  <rect x=\"" << 10 + offset * unit << "\" y=\"10\" width=\"" << run.length * unit
            << "\" height=\"24\" fill=\"" << (run.color == Color::Red ? "#cc4444" : "#4466cc")
            << "\" stroke=\"#222222\"/>\n";
        offset += run.length;
    }
    if (partition) {
        const auto& bounds = partition->boundaries();
        for (std::size_t i = 0; i < bounds.size(); ++i) {
            const int xx = 10 + bounds[i] * unit;
            svg << "  <line x1=\"" << xx << "\" y1=\"6\" x2=\"" << xx
                << "\" y2=\"42\" stroke=\"#000000\" stroke-width=\"2\"/>\n";
        }
        for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
            const int a = 10 + bounds[i] * unit, b = 10 + bounds[i + 1] * unit;
            svg << "  <path d=\"M " << a << " 44 L " << a << " 48 L " << b << " 48 L " << b
                << " 44\" fill=\"none\" stroke=\"#000000\"/>\n";
        }
    }
    svg << "</svg>\n";
    return svg.str();
}

std::string describe_groups_text(const AuditReport& report) {
    std::ostringstream out;
    out << (report.is_fair ? "fair" : "unfair") << " alpha=" << report.alpha.str() << "\n";
    for (const auto& g : report.groups)
        out << "group (" << g.interval.start << "," << g.interval.start + g.interval.len << "] color="
            << color_char(g.color) << " unhappy=" << g.unhappy_count << "\n";
    return out.str();
}

int run(int argc, char** argv) {
    CLI::App app{"locally fair balanced partitions of two-colored point sequences"};
    app.require_subcommand(1);
    app.fallthrough(); // shared flags like --format may follow the subcommand

    std::string format = "json";
    app.add_option("--format", format, "json|text")->capture_default_str();

    // solve / oracle -----------------------------------------------------
    ParamArgs solve_params, oracle_params, audit_params, part_params;
    std::string solve_instance = "-", oracle_instance = "-", audit_instance = "-";
    std::string solve_topology = "line", oracle_topology = "line";
    std::string fair4_cache = "auto";
    int oracle_cap = 60;
    bool force = false, first_only = false;

    CLI::App* solve = app.add_subcommand("solve", "decide and construct a fair partition");
    add_param_flags(solve, solve_params);
    solve->add_option("instance", solve_instance, "instance file or - for stdin");
    solve->add_option("--topology", solve_topology, "line|circle");
    solve->add_option("--fair4-cache", fair4_cache, "on|off|auto");
    solve->add_option("--oracle-cap", oracle_cap, "largest n the oracle accepts");
    solve->add_flag("--force", force, "ignore the oracle cap");

    CLI::App* oracle = app.add_subcommand("oracle", "brute-force feasibility check");
    add_param_flags(oracle, oracle_params);
    oracle->add_option("instance", oracle_instance, "instance file or - for stdin");
    oracle->add_option("--topology", oracle_topology, "line|circle");
    oracle->add_option("--oracle-cap", oracle_cap, "largest n the oracle accepts");
    oracle->add_flag("--force", force, "ignore the oracle cap");

    // audit ----------------------------------------------------------------
    std::string audit_partition_path, audit_topology = "line";
    CLI::App* audit_cmd = app.add_subcommand("audit", "audit a partition against an instance");
    add_param_flags(audit_cmd, audit_params);
    audit_cmd->add_option("instance", audit_instance, "instance file or - for stdin");
    audit_cmd->add_option("--partition", audit_partition_path, "partition file (text or JSON)")->required();
    audit_cmd->add_option("--topology", audit_topology, "line|circle");
    audit_cmd->add_flag("--first-only", first_only, "stop at the first witness");

    // partition ------------------------------------------------------------
    std::string part_instance = "-", part_output = "-";
    CLI::App* partition_cmd = app.add_subcommand("partition", "construct a partition");
    partition_cmd->require_subcommand(1);
    CLI::App* part_uniform = partition_cmd->add_subcommand("uniform", "almost-uniform construction");
    CLI::App* part_clustered = partition_cmd->add_subcommand("clustered", "clustered-instance construction");
    for (CLI::App* sub : {part_uniform, part_clustered}) {
        add_param_flags(sub, part_params);
        sub->add_option("instance", part_instance, "instance file or - for stdin");
        sub->add_option("-o,--output", part_output, "output file, default stdout");
    }

    // gen --------------------------------------------------------------
    CLI::App* gen = app.add_subcommand("gen", "generate instances");
    gen->require_subcommand(1);
    int gen_n = 0, gen_sigma = 0, gen_min_run = 0, gen_max_run = 0;
    std::string gen_epsilon = "0", gen_beta = "1/2", gen_gamma = "0", gen_p_red = "1/2";
    std::string gen_sigmas, gen_output = "-";
    std::uint64_t gen_seed = 0;

    CLI::App* gen_adv = gen->add_subcommand("adversarial", "alternating runs of ceil(beta*sigma)");
    gen_adv->add_option("--sigma", gen_sigma)->required();
    gen_adv->add_option("--epsilon", gen_epsilon);
    gen_adv->add_option("--beta", gen_beta);
    gen_adv->add_option("--n", gen_n)->required();

    CLI::App* gen_multi = gen->add_subcommand("multi-sigma", "adversarial blocks for several sigmas");
    gen_multi->add_option("--sigmas", gen_sigmas, "comma-separated sigma list")->required();
    gen_multi->add_option("--epsilon", gen_epsilon);
    gen_multi->add_option("--beta", gen_beta);
    gen_multi->add_option("--n", gen_n)->required();

    CLI::App* gen_clu = gen->add_subcommand("clustered", "alternating runs with bounded lengths");
    gen_clu->add_option("--n", gen_n)->required();
    gen_clu->add_option("--min-run", gen_min_run)->required();
    gen_clu->add_option("--max-run", gen_max_run)->required();
    gen_clu->add_option("--seed", gen_seed);

    CLI::App* gen_mostly = gen->add_subcommand("mostly-clustered", "long runs plus short bursts");
    gen_mostly->add_option("--n", gen_n)->required();
    gen_mostly->add_option("--sigma", gen_sigma)->required();
    gen_mostly->add_option("--gamma", gen_gamma, "short-run mass bound");
    gen_mostly->add_option("--min-run", gen_min_run)->required();
    gen_mostly->add_option("--seed", gen_seed);

    CLI::App* gen_rand = gen->add_subcommand("random", "independent colors");
    gen_rand->add_option("--n", gen_n)->required();
    gen_rand->add_option("--p-red", gen_p_red);
    gen_rand->add_option("--seed", gen_seed);

    for (CLI::App* sub : {gen_adv, gen_multi, gen_clu, gen_mostly, gen_rand})
        sub->add_option("-o,--output", gen_output, "output file, default stdout");

    // render ----------------------------------------------------------------
    std::string render_instance = "-", render_partition_path, render_svg_path;
    CLI::App* render = app.add_subcommand("render", "draw an instance as text (and optionally SVG)");
    render->add_option("instance", render_instance, "instance file or - for stdin");
    render->add_option("--partition", render_partition_path, "partition file (text or JSON)");
    render->add_option("--svg", render_svg_path, "also write an SVG drawing to this path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    const bool json_output = [&] {
        if (format == "json") return true;
        if (format == "text") return false;
        throw UsageError("--format must be json or text");
    }();

    if (solve->parsed() || oracle->parsed()) {
        const bool via_oracle = oracle->parsed();
        const ParamArgs& pa = via_oracle ? oracle_params : solve_params;
        const FairnessParams params = pa.build();
        const Topology topology = parse_topology(via_oracle ? oracle_topology : solve_topology);
        const Instance x = load_instance(via_oracle ? oracle_instance : solve_instance);

        SolveResult result;
        try {
            if (via_oracle || topology == Topology::Circle) {
                result = brute_force_solve(x, params, topology, OracleOptions{oracle_cap, force});
            } else {
                SolveOptions opts;
                if (fair4_cache == "on")
                    opts.fair4_cache = Fair4Mode::On;
                else if (fair4_cache == "off")
                    opts.fair4_cache = Fair4Mode::Off;
                else if (fair4_cache == "auto")
                    opts.fair4_cache = Fair4Mode::Auto;
                else
                    throw UsageError("--fair4-cache must be on, off or auto");
                result = dp_solve(x, params, opts);
            }
        } catch (const OracleCapExceeded& e) {
            throw InputError(e.what());
        }

        if (json_output) {
            std::cout << solve_result_to_json(result).dump(2) << "\n";
        } else {
            std::cout << (result.feasible ? "feasible" : "infeasible") << "\n";
            if (result.partition) std::cout << result.partition->to_text() << "\n";
        }
        return result.feasible ? 0 : 3;
    }

    if (audit_cmd->parsed()) {
        const FairnessParams params = audit_params.build();
        const Topology topology = parse_topology(audit_topology);
        const Instance x = load_instance(audit_instance);
        Partition partition = [&] {
            try {
                return parse_partition_file(read_stream_or_file(audit_partition_path));
            } catch (const std::exception& e) {
                throw InputError(std::string("bad partition: ") + e.what());
            }
        }();
        if (partition.n() != x.size())
            throw InputError("partition covers " + std::to_string(partition.n()) + " points, instance has " +
                             std::to_string(x.size()));
        const AuditReport report = audit(x, partition, params, topology, first_only);
        std::cout << (json_output ? audit_report_to_json(report).dump(2) + "\n"
                                  : describe_groups_text(report));
        return report.is_fair ? 0 : 3;
    }

    if (partition_cmd->parsed()) {
        const FairnessParams params = part_params.build();
        const Instance x = load_instance(part_instance);
        std::string body;
        if (part_uniform->parsed()) {
            Partition partition = [&] {
                try {
                    return almost_uniform_partition(x.size(), params);
                } catch (const std::invalid_argument& e) {
                    throw InputError(e.what());
                }
            }();
            if (!guarantee_check(x.size(), params))
                std::cerr << "note: no fairness certificate for these parameters; the partition may admit "
                             "deviating groups\n";
            body = json_output ? partition_to_json(partition).dump(2) + "\n" : partition.to_text() + "\n";
        } else {
            const AlphaPartition result = partition_clustered(x, params);
            body = json_output ? alpha_partition_to_json(result).dump(2) + "\n"
                               : result.partition.to_text() + "\n";
        }
        write_output(part_output, body);
        return 0;
    }

    if (gen->parsed()) {
        GenResult result = [&]() -> GenResult {
            try {
                if (gen_adv->parsed())
                    return gen_adversarial(gen_sigma, parse_rational_arg(gen_epsilon, "epsilon"),
                                           parse_rational_arg(gen_beta, "beta"), gen_n);
                if (gen_multi->parsed()) {
                    std::vector<int> sigmas;
                    std::stringstream ss(gen_sigmas);
                    std::string item;
                    while (std::getline(ss, item, ','))
                        if (!item.empty()) sigmas.push_back(std::stoi(item));
                    return gen_multi_sigma_adversarial(sigmas, parse_rational_arg(gen_epsilon, "epsilon"),
                                                       parse_rational_arg(gen_beta, "beta"), gen_n);
                }
                if (gen_clu->parsed()) return gen_clustered(gen_n, gen_min_run, gen_max_run, gen_seed);
                if (gen_mostly->parsed())
                    return gen_mostly_clustered(gen_n, gen_sigma, parse_rational_arg(gen_gamma, "gamma"),
                                                gen_min_run, gen_seed);
                return gen_uniform_random(gen_n, parse_rational_arg(gen_p_red, "p_red"), gen_seed);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
        }();
        if (result.degenerate_beta_boundary && *result.degenerate_beta_boundary)
            std::cerr << "note: beta equals (1-epsilon)/2, the degenerate majority boundary\n";
        write_output(gen_output, gen_instance_file(result));
        return 0;
    }

    if (render->parsed()) {
        const Instance x = load_instance(render_instance);
        std::optional<Partition> partition;
        if (!render_partition_path.empty()) {
            try {
                partition = parse_partition_file(read_stream_or_file(render_partition_path));
            } catch (const std::exception& e) {
                throw InputError(std::string("bad partition: ") + e.what());
            }
            if (partition->n() != x.size()) throw InputError("partition does not match instance length");
        }
        std::cout << render_strip(x, partition) << "\n";
        if (!render_svg_path.empty()) write_output(render_svg_path, render_svg(x, partition));
        return 0;
    }

    return 1;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
