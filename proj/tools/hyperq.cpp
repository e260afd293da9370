// hyperq: hypergraph edge-colouring toolkit.
//
// Exit codes: 0 success, 2 parse/flag/input error, 3 a VIOLATED instance,
// 4 unresolved within budget, 1 unexpected internal failure.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "hyperq/analysis.hpp"
#include "hyperq/coloring.hpp"
#include "hyperq/errors.hpp"
#include "hyperq/hgr_io.hpp"
#include "hyperq/instances.hpp"
#include "hyperq/oracle.hpp"
#include "hyperq/report.hpp"
#include "hyperq/survey.hpp"

namespace {

using namespace hyperq;

constexpr int exit_ok = 0;
constexpr int exit_usage = 2;
constexpr int exit_violated = 3;
constexpr int exit_unresolved = 4;

struct BudgetFlags {
    std::optional<std::uint64_t> nodes;
    std::optional<double> seconds;

    void attach(CLI::App* cmd)
    {
        cmd->add_option("--budget", nodes, "search-node limit per exact oracle call");
        cmd->add_option("--time-limit", seconds, "seconds per exact oracle call");
    }

    OracleBudget resolve() const
    {
        auto b = OracleBudget::from_env();
        if (nodes)
            b.max_nodes = *nodes;
        if (seconds)
            b.time_limit = std::chrono::milliseconds(static_cast<std::int64_t>(*seconds * 1000.0));
        b.validate();
        return b;
    }
};

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text, const char* flag)
{
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const auto v = std::stoull(text);
            return {v, v};
        }
        return {std::stoull(text.substr(0, dots)), std::stoull(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw InputError(std::string(flag) + " expects A..B, got '" + text + "'");
    }
}

std::vector<std::uint64_t> parse_list(const std::string& text, const char* flag)
{
    std::vector<std::uint64_t> out;
    std::size_t start = 0;
    try {
        while (start <= text.size()) {
            const auto comma = text.find(',', start);
            const auto end = comma == std::string::npos ? text.size() : comma;
            out.push_back(std::stoull(text.substr(start, end - start)));
            if (comma == std::string::npos)
                break;
            start = comma + 1;
        }
    } catch (const std::exception&) {
        throw InputError(std::string(flag) + " expects a comma-separated list, got '" + text + "'");
    }
    return out;
}

int status_exit(Status s)
{
    switch (s) {
    case Status::violated:
        return exit_violated;
    case Status::unresolved:
        return exit_unresolved;
    default:
        return exit_ok;
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"hyperq: hypergraph chromatic index toolkit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(tool_version));

    std::string format_name = "text";
    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format_name, "report format: text or json")
            ->check(CLI::IsMember({"text", "json"}));
    };

    // stats
    std::string input;
    auto* stats_cmd = app.add_subcommand("stats", "structural metrics of a hypergraph");
    stats_cmd->add_option("file", input, "input .hgr file")->required();
    add_format(stats_cmd);

    // color
    auto* color_cmd = app.add_subcommand("color", "colour the hyperedges");
    std::string method = "greedy";
    std::string order = "desc-degree";
    std::uint64_t seed = 1;
    BudgetFlags color_budget;
    color_cmd->add_option("file", input, "input .hgr file")->required();
    color_cmd->add_option("--method", method, "greedy, brooks, vizing or exact")
        ->check(CLI::IsMember({"greedy", "brooks", "vizing", "exact"}));
    color_cmd->add_option("--order", order, "greedy order: index, desc-degree, random, random(<seed>)");
    color_cmd->add_option("--seed", seed, "seed for --order random");
    color_budget.attach(color_cmd);
    add_format(color_cmd);

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "check q(H) <= Delta_2 + 1 and classify the instance");
    bool exact = true;
    BudgetFlags verify_budget;
    verify_cmd->add_option("file", input, "input .hgr file")->required();
    verify_cmd->add_flag("--exact,!--no-exact", exact, "settle q with the exact search (default on)");
    verify_budget.attach(verify_cmd);
    add_format(verify_cmd);

    // critical
    auto* critical_cmd = app.add_subcommand("critical", "critical hyperedges and a critical core");
    BudgetFlags critical_budget;
    critical_cmd->add_option("file", input, "input .hgr file")->required();
    critical_budget.attach(critical_cmd);
    add_format(critical_cmd);

    // gen
    auto* gen_cmd = app.add_subcommand("gen", "generate an instance");
    std::string family;
    std::string out_path;
    gen_cmd->add_option("--family", family, "family specification, e.g. \"affine-plane 3\"")->required();
    gen_cmd->add_option("--out", out_path, "output .hgr file (default stdout)");
    gen_cmd->add_option("--seed", seed, "seed when the family string has none");

    // survey
    auto* survey_cmd = app.add_subcommand("survey", "verify many seeded random linear instances");
    std::string survey_family = "random-linear";
    std::uint64_t count = 100;
    std::string n_range = "6..12";
    std::string m_range = "4..16";
    std::string k_list = "3";
    unsigned jobs = 1;
    BudgetFlags survey_budget;
    survey_cmd->add_option("--family", survey_family, "instance family (random-linear)")
        ->check(CLI::IsMember({"random-linear"}));
    survey_cmd->add_option("--count", count, "number of instances");
    survey_cmd->add_option("--n-range", n_range, "vertex count range A..B");
    survey_cmd->add_option("--m-range", m_range, "hyperedge count range A..B");
    survey_cmd->add_option("--k", k_list, "uniformity, or comma-separated choices");
    survey_cmd->add_option("--seed", seed, "master seed");
    survey_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    survey_cmd->add_flag("--exact,!--no-exact", exact, "settle q with the exact search (default on)");
    survey_budget.attach(survey_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        const auto format = parse_format(format_name);
        if (*stats_cmd) {
            const auto h = read_hgr(input);
            std::cout << render(stats_tree(h), format);
            return exit_ok;
        }
        if (*color_cmd) {
            const auto h = read_hgr(input);
            EdgeColoring c;
            std::string label = method;
            int code = exit_ok;
            if (method == "greedy") {
                const auto strategy = OrderStrategy::parse(order, seed);
                c = greedy_color(h, strategy);
                label += " " + strategy.to_string();
            } else if (method == "brooks") {
                c = brooks_edge_color(h);
            } else if (method == "vizing") {
                c = vizing_edge_color(h);
            } else {
                const auto q = chromatic_index(h, color_budget.resolve());
                c = q.witness;
                if (!q.exact()) {
                    label += " (budget exhausted, q in [" + std::to_string(q.lower) + ", "
                             + std::to_string(q.upper) + "])";
                    code = exit_unresolved;
                }
            }
            std::cout << render(coloring_tree(h, c, label), format);
            return code;
        }
        if (*verify_cmd) {
            const auto h = read_hgr(input);
            const auto v = verify_conjecture(h, verify_budget.resolve(), exact);
            std::cout << render(verdict_tree(h, v), format);
            return status_exit(v.status);
        }
        if (*critical_cmd) {
            const auto h = read_hgr(input);
            const auto budget = critical_budget.resolve();
            const auto report = check_lemma_key(h, budget);
            const auto core = extract_critical(h, budget);
            std::cout << render(criticality_tree(h, report, core), format);
            return report.complete && core.final ? exit_ok : exit_unresolved;
        }
        if (*gen_cmd) {
            const auto h = generate(FamilySpec::parse(family, seed));
            if (out_path.empty())
                std::cout << to_hgr(h);
            else
                write_hgr(out_path, h);
            return exit_ok;
        }
        if (*survey_cmd) {
            SurveyConfig config;
            config.count = count;
            std::tie(config.n_min, config.n_max) = parse_range(n_range, "--n-range");
            std::tie(config.m_min, config.m_max) = parse_range(m_range, "--m-range");
            config.ks = parse_list(k_list, "--k");
            config.seed = seed;
            config.exact = exact;
            config.budget = survey_budget.resolve();
            const auto rows = run_survey(config, jobs);
            std::cout << render_survey(rows);
            return survey_exit_code(rows);
        }
    } catch (const ParseError& e) {
        std::cerr << "hyperq: parse error: " << e.what() << '\n';
        return exit_usage;
    } catch (const InputError& e) {
        std::cerr << "hyperq: " << e.what() << '\n';
        return exit_usage;
    } catch (const UnsupportedInput& e) {
        std::cerr << "hyperq: unsupported input: " << e.what() << '\n';
        return exit_usage;
    } catch (const GenerationError& e) {
        std::cerr << "hyperq: generation failed: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "hyperq: internal error: " << e.what() << '\n';
        return 1;
    }
    return exit_usage;
}
