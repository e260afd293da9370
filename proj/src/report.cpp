#include "hyperq/report.hpp"

#include "hyperq/errors.hpp"
#include "hyperq/hgr_io.hpp"

namespace hyperq {

ReportFormat parse_format(std::string_view name)
{
    if (name == "text")
        return ReportFormat::text;
    if (name == "json")
        return ReportFormat::json;
    throw InputError("unknown report format '" + std::string(name) + "' (expected text or json)");
}

namespace {

ReportTree header(const Hypergraph& h)
{
    ReportTree t;
    t["tool"] = tool_version;
    t["input"] = input_digest(h);
    return t;
}

template <typename T>
ReportTree optional_value(const std::optional<T>& v)
{
    return v ? ReportTree(*v) : ReportTree(nullptr);
}

ReportTree colours(const std::vector<Color>& c)
{
    return ReportTree(c);
}

void flatten(const ReportTree& node, const std::string& prefix, std::string& out)
{
    if (node.is_object()) {
        for (const auto& [key, child] : node.items())
            flatten(child, prefix.empty() ? key : prefix + "." + key, out);
        return;
    }
    out += prefix;
    out += ':';
    if (node.is_array()) {
        if (!node.empty() && node.front().is_structured()) {
            out += '\n';
            for (std::size_t i = 0; i < node.size(); ++i)
                flatten(node[i], prefix + "[" + std::to_string(i) + "]", out);
            return;
        }
        for (const auto& item : node) {
            out += ' ';
            out += item.is_string() ? item.get<std::string>() : item.dump();
        }
    } else if (node.is_string()) {
        out += ' ' + node.get<std::string>();
    } else if (node.is_null()) {
        out += " -";
    } else {
        out += ' ' + node.dump();
    }
    out += '\n';
}

} // namespace

ReportTree stats_tree(const Hypergraph& h)
{
    const auto s = stats(h);
    ReportTree t = header(h);
    t["n"] = s.n;
    t["m"] = s.m;
    t["rank"] = optional_value(s.rank);
    t["antirank"] = optional_value(s.antirank);
    t["max_degree"] = s.max_degree;
    t["min_degree"] = s.min_degree;
    t["loopless"] = s.loopless;
    t["linear"] = s.linear;
    t["uniform_k"] = optional_value(s.uniform_k);
    t["regular_d"] = optional_value(s.regular_d);
    t["connected"] = s.connected;
    t["delta2"] = s.delta2;
    return t;
}

ReportTree verdict_tree(const Hypergraph& h, const Verdict& v)
{
    ReportTree t = stats_tree(h);
    ReportTree b;
    b["bf"] = v.bounds.bf;
    b["greedy61"] = optional_value(v.bounds.greedy61);
    b["linegraph62"] = optional_value(v.bounds.linegraph62);
    b["max_edge_degree_plus1"] = optional_value(v.bounds.max_edge_degree_plus1);
    t["bounds"] = b;
    ReportTree tags = ReportTree::array();
    for (Tag tag : v.applicable)
        tags.push_back(std::string(to_string(tag)));
    t["applicable"] = tags;
    if (v.q_exact) {
        t["q"] = v.q_upper;
    } else {
        t["q_lower"] = v.q_lower;
        t["q_upper"] = v.q_upper;
    }
    t["q_exact"] = v.q_exact;
    t["in_scope"] = v.in_scope;
    t["status"] = std::string(to_string(v.status));
    if (v.efl_holds)
        t["efl_q_le_n"] = *v.efl_holds;
    if (!v.alarm.empty())
        t["alarm"] = v.alarm;
    if (v.greedy61_exceeded)
        t["greedy61_exceeded"] = true;
    t["search_nodes"] = v.nodes;
    t["witness_method"] = v.witness_method;
    t["witness_proper"] = v.witness_proper;
    t["witness"] = colours(v.witness.colors);
    return t;
}

ReportTree coloring_tree(const Hypergraph& h, const EdgeColoring& c, std::string_view method)
{
    ReportTree t = header(h);
    t["method"] = std::string(method);
    t["colors_used"] = c.q_used;
    t["proper"] = is_proper(h, c);
    t["bf"] = bf_bound(h);
    t["coloring"] = colours(c.colors);
    return t;
}

ReportTree criticality_tree(const Hypergraph& h, const CriticalityReport& report,
                            const CriticalCore& core)
{
    ReportTree t = header(h);
    t["q"] = optional_value(report.q);
    t["complete"] = report.complete;
    t["lemma_ok"] = report.lemma_ok;
    t["drop_at_most_one"] = report.drop_at_most_one;
    ReportTree rows = ReportTree::array();
    for (const auto& e : report.entries) {
        ReportTree row;
        row["edge"] = e.index;
        row["degree"] = e.edge_degree;
        row["q_without"] = optional_value(e.q_without);
        row["critical"] = optional_value(e.critical);
        rows.push_back(row);
    }
    t["edges"] = rows;
    ReportTree c;
    c["final"] = core.final;
    c["q"] = core.q;
    c["kept"] = core.kept;
    t["critical_core"] = c;
    return t;
}

std::string render(const ReportTree& tree, ReportFormat format)
{
    if (format == ReportFormat::json)
        return tree.dump(2) + "\n";
    std::string out;
    flatten(tree, "", out);
    return out;
}

} // namespace hyperq
