#pragma once

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "pahyper/hypergraph.hpp"
#include "pahyper/modularity.hpp"

namespace pahyper {

/// Hyperedge-list text format: one hyperedge per line as whitespace-separated
/// vertex ids, a repeated id meaning multiplicity. Lines starting with '#' are
/// comments, except an optional `#vertices N` header that fixes the vertex
/// count (otherwise 1 + the largest id). Errors name the offending line.
Hypergraph read_hypergraph(std::istream& in);
Hypergraph parse_hypergraph(const std::filesystem::path& path);

/// Always writes the `#vertices` header so isolated vertices survive.
void write_hypergraph(const Hypergraph& h, std::ostream& out);
void write_hypergraph(const Hypergraph& h, const std::filesystem::path& path);

/// Community file: `vertex<TAB>block` per line. Every vertex 0..max must be
/// labeled exactly once; pass expected_vertices to also require that count.
std::vector<std::uint32_t> read_communities(std::istream& in, std::size_t expected_vertices = 0);
std::vector<std::uint32_t> parse_communities(const std::filesystem::path& path,
                                             std::size_t expected_vertices = 0);

void write_communities(const std::vector<std::uint32_t>& labels, std::ostream& out);
void write_communities(const std::vector<std::uint32_t>& labels, const std::filesystem::path& path);

/// Copy of h carrying the given labels (r = 1 + largest label).
Hypergraph with_communities(const Hypergraph& h, const std::vector<std::uint32_t>& labels);

}  // namespace pahyper
