#include "pahyper/io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

#include "pahyper/text.hpp"

namespace pahyper {

namespace {

[[noreturn]] void fail_at(std::size_t line, const std::string& what) {
  throw std::runtime_error("line " + std::to_string(line) + ": " + what);
}

VertexId parse_id(std::string_view token, std::size_t line) {
  if (!token.empty() && token.front() == '-') fail_at(line, "negative vertex id '" + std::string(token) + "'");
  try {
    const auto id = parse_number<std::uint64_t>(token);
    if (id >= std::numeric_limits<VertexId>::max()) fail_at(line, "vertex id too large");
    return static_cast<VertexId>(id);
  } catch (const std::invalid_argument&) {
    fail_at(line, "malformed vertex id '" + std::string(token) + "'");
  }
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

}  // namespace

Hypergraph read_hypergraph(std::istream& in) {
  std::optional<std::size_t> declared;
  std::vector<std::vector<VertexId>> edges;
  std::size_t n = 0;
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    const auto text = trim(line);
    if (text.empty()) continue;
    if (text.front() == '#') {
      const auto toks = tokens(text.substr(1));
      if (!toks.empty() && toks[0] == "vertices") {
        if (toks.size() != 2) fail_at(lineno, "expected '#vertices N'");
        if (declared) fail_at(lineno, "duplicate #vertices header");
        declared = parse_id(toks[1], lineno);
      }
      continue;
    }
    std::vector<VertexId> members;
    for (auto tok : tokens(text)) {
      members.push_back(parse_id(tok, lineno));
      n = std::max<std::size_t>(n, members.back() + std::size_t{1});
    }
    edges.push_back(std::move(members));
  }
  if (declared) {
    if (*declared < n) {
      throw std::runtime_error("#vertices " + std::to_string(*declared) + " but vertex id " +
                               std::to_string(n - 1) + " appears");
    }
    n = *declared;
  }
  Hypergraph h;
  for (std::size_t v = 0; v < n; ++v) h.add_vertex();
  for (auto& e : edges) h.add_hyperedge(std::move(e));
  return h;
}

Hypergraph parse_hypergraph(const std::filesystem::path& path) {
  auto in = open_in(path);
  try {
    return read_hypergraph(in);
  } catch (const std::runtime_error& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

void write_hypergraph(const Hypergraph& h, std::ostream& out) {
  out << "#vertices " << h.num_vertices() << '\n';
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    const auto edge = h.edge(e);
    for (std::size_t i = 0; i < edge.size(); ++i) out << (i ? " " : "") << edge[i];
    out << '\n';
  }
}

void write_hypergraph(const Hypergraph& h, const std::filesystem::path& path) {
  auto out = open_out(path);
  write_hypergraph(h, out);
}

std::vector<std::uint32_t> read_communities(std::istream& in, std::size_t expected_vertices) {
  std::vector<std::optional<std::uint32_t>> labels(expected_vertices);
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    const auto text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    const auto toks = tokens(text);
    if (toks.size() != 2) fail_at(lineno, "expected 'vertex<TAB>block'");
    const VertexId v = parse_id(toks[0], lineno);
    const std::uint32_t block = parse_id(toks[1], lineno);
    if (expected_vertices && v >= expected_vertices) {
      fail_at(lineno, "vertex " + std::to_string(v) + " out of range (" +
                          std::to_string(expected_vertices) + " vertices)");
    }
    if (v >= labels.size()) labels.resize(v + std::size_t{1});
    if (labels[v]) fail_at(lineno, "vertex " + std::to_string(v) + " labeled twice");
    labels[v] = block;
  }
  std::vector<std::uint32_t> out;
  out.reserve(labels.size());
  for (std::size_t v = 0; v < labels.size(); ++v) {
    if (!labels[v]) throw std::runtime_error("vertex " + std::to_string(v) + " has no community label");
    out.push_back(*labels[v]);
  }
  return out;
}

std::vector<std::uint32_t> parse_communities(const std::filesystem::path& path,
                                             std::size_t expected_vertices) {
  auto in = open_in(path);
  try {
    return read_communities(in, expected_vertices);
  } catch (const std::runtime_error& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

void write_communities(const std::vector<std::uint32_t>& labels, std::ostream& out) {
  for (std::size_t v = 0; v < labels.size(); ++v) out << v << '\t' << labels[v] << '\n';
}

void write_communities(const std::vector<std::uint32_t>& labels, const std::filesystem::path& path) {
  auto out = open_out(path);
  write_communities(labels, out);
}

Hypergraph with_communities(const Hypergraph& h, const std::vector<std::uint32_t>& labels) {
  if (labels.size() != h.num_vertices()) {
    throw std::invalid_argument("label count " + std::to_string(labels.size()) + " differs from " +
                                std::to_string(h.num_vertices()) + " vertices");
  }
  const std::uint32_t r = labels.empty() ? 1 : *std::max_element(labels.begin(), labels.end()) + 1;
  Hypergraph out(r);
  for (std::uint32_t label : labels) out.add_vertex(label);
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    const auto edge = h.edge(e);
    out.add_hyperedge({edge.begin(), edge.end()});
  }
  return out;
}

}  // namespace pahyper
