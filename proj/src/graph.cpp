#include "spanner/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <random>
#include <sstream>
#include <unordered_set>

namespace spanner {

Graph Graph::from_edges(std::size_t n, std::vector<VertexPair> edges) {
  for (auto& [a, b] : edges) {
    if (a >= n || b >= n) {
      throw BoundsError("edge endpoint " + std::to_string(std::max(a, b)) +
                        " out of range for n = " + std::to_string(n));
    }
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  std::erase_if(edges, [](const VertexPair& e) { return e.first == e.second; });

  Graph g;
  g.offsets_.assign(n + 1, 0);
  for (const auto& [a, b] : edges) {
    ++g.offsets_[a + 1];
    ++g.offsets_[b + 1];
  }
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];
  g.neighbors_.resize(edges.size() * 2);
  std::vector<std::uint64_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& [a, b] : edges) {
    g.neighbors_[fill[a]++] = b;
    g.neighbors_[fill[b]++] = a;
  }
  // Edges were processed in canonical order, so each list is sorted.
  return g;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  if (u >= vertex_count() || v >= vertex_count()) return false;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<VertexPair> Graph::edges() const {
  std::vector<VertexPair> out;
  out.reserve(edge_count());
  for (std::size_t v = 0; v < vertex_count(); ++v) {
    for (VertexId w : neighbors(static_cast<VertexId>(v))) {
      if (v < w) out.emplace_back(static_cast<VertexId>(v), w);
    }
  }
  return out;
}

void EdgeSet::canonicalize() const {
  if (canonical_) return;
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  canonical_ = true;
}

bool EdgeSet::contains(VertexId a, VertexId b) const {
  canonicalize();
  return std::binary_search(edges_.begin(), edges_.end(),
                            canonical_edge(a, b));
}

namespace {

std::uint64_t parse_uint(std::string_view token, std::size_t line_no) {
  std::uint64_t value = 0;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line_no, "expected nonnegative integer, got '" +
                                  std::string(token) + "'");
  }
  return value;
}

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::vector<VertexPair> edges;
  bool have_header = false;
  std::uint64_t declared_n = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto tokens = split_tokens(line);
    if (tokens.empty() || tokens[0].front() == '#') continue;
    if (tokens[0] == "p") {
      if (have_header || !edges.empty()) {
        throw ParseError(line_no, "header must be the first data line");
      }
      if (tokens.size() != 3) {
        throw ParseError(line_no, "header needs exactly 'p <n> <m>'");
      }
      declared_n = parse_uint(tokens[1], line_no);
      parse_uint(tokens[2], line_no);  // m field checked for syntax only
      if (declared_n > kNoVertex) {
        throw BoundsError("declared n exceeds vertex id limit", line_no);
      }
      have_header = true;
      continue;
    }
    if (tokens.size() != 2) {
      throw ParseError(line_no, "expected 'u v', got " +
                                    std::to_string(tokens.size()) + " tokens");
    }
    std::uint64_t u = parse_uint(tokens[0], line_no);
    std::uint64_t v = parse_uint(tokens[1], line_no);
    if (u >= kNoVertex || v >= kNoVertex) {
      throw BoundsError("vertex id exceeds supported range", line_no);
    }
    if (have_header && (u >= declared_n || v >= declared_n)) {
      throw BoundsError("vertex id " + std::to_string(std::max(u, v)) +
                            " >= declared n = " + std::to_string(declared_n),
                        line_no);
    }
    edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
  }

  std::uint64_t n = declared_n;
  if (!have_header) {
    n = 0;
    for (const auto& [u, v] : edges) n = std::max<std::uint64_t>(n, std::max(u, v) + 1);
  }
  return Graph::from_edges(static_cast<std::size_t>(n), std::move(edges));
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

std::string serialize(const Graph& g) {
  std::string out = "p " + std::to_string(g.vertex_count()) + " " +
                    std::to_string(g.edge_count()) + "\n";
  for (const auto& [u, v] : g.edges()) {
    out += std::to_string(u);
    out += ' ';
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

void serialize_edge_set(std::ostream& out, const EdgeSet& edges,
                        std::size_t n) {
  out << "p " << n << " " << edges.size() << "\n";
  for (const auto& [u, v] : edges.edges()) out << u << " " << v << "\n";
}

namespace {

// Uniform draw from [0, bound) without modulo bias; identical on every
// platform given the fixed mt19937_64 stream.
std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t bound) {
  std::uint64_t threshold = (-bound) % bound;
  for (;;) {
    std::uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

// Lexicographic index -> pair (u, v), u < v. Row u starts at
// base(u) = u*n - u(u+1)/2.
VertexPair decode_pair_index(std::uint64_t k, std::uint64_t n) {
  auto base = [n](std::uint64_t u) { return u * n - u * (u + 1) / 2; };
  long double disc = (static_cast<long double>(n) - 0.5L);
  disc = disc * disc - 2.0L * static_cast<long double>(k);
  std::uint64_t u = 0;
  if (disc > 0) {
    long double guess = static_cast<long double>(n) - 0.5L - sqrtl(disc);
    u = guess <= 0 ? 0 : static_cast<std::uint64_t>(guess);
  }
  while (u + 1 < n && base(u + 1) <= k) ++u;
  while (u > 0 && base(u) > k) --u;
  std::uint64_t v = u + 1 + (k - base(u));
  return {static_cast<VertexId>(u), static_cast<VertexId>(v)};
}

}  // namespace

Graph generate_gnm(std::size_t n, std::uint64_t m, std::uint64_t seed) {
  std::uint64_t max_edges = n < 2 ? 0 : static_cast<std::uint64_t>(n) * (n - 1) / 2;
  if (m > max_edges) {
    throw CapacityError("requested m = " + std::to_string(m) +
                        " exceeds n(n-1)/2 = " + std::to_string(max_edges));
  }
  std::mt19937_64 rng(seed);
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(m * 2);
  std::vector<std::uint64_t> picks;
  picks.reserve(m);
  // Floyd's subset sampling: exactly m distinct indices, m draws.
  for (std::uint64_t j = max_edges - m; j < max_edges; ++j) {
    std::uint64_t t = bounded_draw(rng, j + 1);
    if (chosen.insert(t).second) {
      picks.push_back(t);
    } else {
      chosen.insert(j);
      picks.push_back(j);
    }
  }
  std::vector<VertexPair> edges;
  edges.reserve(m);
  for (std::uint64_t k : picks) edges.push_back(decode_pair_index(k, n));
  return Graph::from_edges(n, std::move(edges));
}

}  // namespace spanner
