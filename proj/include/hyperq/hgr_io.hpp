#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "hyperq/hypergraph.hpp"

namespace hyperq {

// Text format, one record per line:
//   c <anything>         comment
//   p hgr <n> <m>        header, exactly once, before any edge
//   e <v1> <v2> ...      hyperedge, 1-based vertex ids, m lines in total
// Blank lines are ignored. Errors raise ParseError carrying the line number.
Hypergraph parse_hgr(std::istream& in);
Hypergraph parse_hgr(const std::string& text);
Hypergraph read_hgr(const std::filesystem::path& path);

/// Canonical form: header then one sorted "e" line per hyperedge, no comments.
std::string to_hgr(const Hypergraph& h);
void write_hgr(const std::filesystem::path& path, const Hypergraph& h);

/// "fnv1a64:<16 hex digits>" over the canonical text.
std::string input_digest(const Hypergraph& h);

} // namespace hyperq
