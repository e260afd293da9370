#include "hyperq/hgr_io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string_view>
#include <vector>

#include "hyperq/errors.hpp"

namespace hyperq {

namespace {

std::vector<std::string_view> split(std::string_view line)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    auto space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
    while (i < line.size()) {
        while (i < line.size() && space(line[i]))
            ++i;
        std::size_t j = i;
        while (j < line.size() && !space(line[j]))
            ++j;
        if (j > i)
            out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

std::uint64_t parse_count(std::string_view tok, std::size_t line_no, std::string_view what)
{
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(line_no, "expected " + std::string(what) + ", got '" + std::string(tok) + "'");
    return v;
}

} // namespace

Hypergraph parse_hgr(std::istream& in)
{
    std::string raw;
    std::size_t line_no = 0;
    bool have_header = false;
    std::uint64_t n = 0;
    std::uint64_t m = 0;
    std::vector<Hyperedge> edges;

    while (std::getline(in, raw)) {
        ++line_no;
        const auto tok = split(raw);
        if (tok.empty() || tok[0] == "c")
            continue;
        if (tok[0] == "p") {
            if (have_header)
                throw ParseError(line_no, "duplicate header");
            if (tok.size() != 4 || tok[1] != "hgr")
                throw ParseError(line_no, "malformed header, expected 'p hgr <n> <m>'");
            n = parse_count(tok[2], line_no, "vertex count");
            m = parse_count(tok[3], line_no, "hyperedge count");
            have_header = true;
            continue;
        }
        if (tok[0] == "e") {
            if (!have_header)
                throw ParseError(line_no, "hyperedge before header");
            if (edges.size() == m)
                throw ParseError(line_no, "more hyperedges than the header's " + std::to_string(m));
            if (tok.size() == 1)
                throw ParseError(line_no, "empty hyperedge");
            Hyperedge e;
            for (std::size_t i = 1; i < tok.size(); ++i) {
                const auto id = parse_count(tok[i], line_no, "vertex id");
                if (id < 1 || id > n)
                    throw ParseError(line_no, "vertex id " + std::to_string(id) + " outside [1, "
                                                  + std::to_string(n) + "]");
                e.push_back(static_cast<VertexId>(id - 1));
            }
            std::sort(e.begin(), e.end());
            if (auto dup = std::adjacent_find(e.begin(), e.end()); dup != e.end())
                throw ParseError(line_no, "repeated vertex " + std::to_string(*dup + 1)
                                              + " in one hyperedge");
            edges.push_back(std::move(e));
            continue;
        }
        throw ParseError(line_no, "unknown record '" + std::string(tok[0]) + "'");
    }
    if (!have_header)
        throw ParseError(line_no, "missing 'p hgr' header");
    if (edges.size() != m)
        throw ParseError(line_no, "header announces " + std::to_string(m) + " hyperedges, found "
                                      + std::to_string(edges.size()));
    return Hypergraph(n, std::move(edges));
}

Hypergraph parse_hgr(const std::string& text)
{
    std::istringstream in(text);
    return parse_hgr(in);
}

Hypergraph read_hgr(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open " + path.string());
    return parse_hgr(in);
}

std::string to_hgr(const Hypergraph& h)
{
    std::string out = "p hgr " + std::to_string(h.vertex_count()) + " "
                      + std::to_string(h.edge_count()) + "\n";
    for (const auto& e : h.edges()) {
        out += 'e';
        for (VertexId x : e)
            out += ' ' + std::to_string(x + 1);
        out += '\n';
    }
    return out;
}

void write_hgr(const std::filesystem::path& path, const Hypergraph& h)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw InputError("cannot write " + path.string());
    out << to_hgr(h);
}

std::string input_digest(const Hypergraph& h)
{
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char c : to_hgr(h)) {
        hash ^= c;
        hash *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
    return std::string("fnv1a64:") + buf;
}

} // namespace hyperq
