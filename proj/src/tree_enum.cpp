#include "kemeny/tree_enum.hpp"

#include <algorithm>
#include <unordered_set>

#include <omp.h>

#include "kemeny/error.hpp"

namespace kemeny {

namespace {

/// Compressed adjacency of a tree; avoids building a Graph on hot paths.
struct Csr {
  std::vector<std::uint32_t> offsets;
  std::vector<Vertex> targets;

  std::size_t order() const { return offsets.size() - 1; }
  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets.data() + offsets[v], offsets[v + 1] - offsets[v]};
  }
};

Csr csr_from_edges(std::size_t n, std::span<const Edge> edges) {
  Csr c;
  c.offsets.assign(n + 1, 0);
  for (const Edge& e : edges) {
    ++c.offsets[e.u + 1];
    ++c.offsets[e.v + 1];
  }
  for (std::size_t v = 0; v < n; ++v) c.offsets[v + 1] += c.offsets[v];
  c.targets.resize(2 * edges.size());
  std::vector<std::uint32_t> fill(c.offsets.begin(), c.offsets.end() - 1);
  for (const Edge& e : edges) {
    c.targets[fill[e.u]++] = e.v;
    c.targets[fill[e.v]++] = e.u;
  }
  return c;
}

/// Peels leaves layer by layer; what survives is the center (1 or 2 vertices).
std::vector<Vertex> tree_center(const Csr& g) {
  const std::size_t n = g.order();
  if (n <= 2) {
    std::vector<Vertex> all(n);
    for (std::size_t v = 0; v < n; ++v) all[v] = static_cast<Vertex>(v);
    return all;
  }
  std::vector<std::uint32_t> deg(n);
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = static_cast<std::uint32_t>(g.neighbors(v).size());
    if (deg[v] == 1) layer.push_back(v);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<Vertex> next;
    for (const Vertex v : layer) {
      deg[v] = 0;
      for (const Vertex w : g.neighbors(v)) {
        if (deg[w] > 0 && --deg[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

/// AHU encoding of the subtree hanging from root, never crossing into `blocked`.
std::string ahu(const Csr& g, Vertex root, Vertex blocked) {
  const std::size_t n = g.order();
  std::vector<Vertex> parent(n, blocked);
  std::vector<Vertex> order;
  order.reserve(n);
  std::vector<Vertex> stack{root};
  parent[root] = root;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (const Vertex w : g.neighbors(v)) {
      if (w != blocked && w != parent[v]) {
        parent[w] = v;
        stack.push_back(w);
      }
    }
  }
  std::vector<std::string> enc(n);
  std::vector<std::vector<Vertex>> kids(n);
  for (const Vertex v : order) {
    if (v != root) kids[parent[v]].push_back(v);
  }
  std::vector<const std::string*> parts;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    parts.clear();
    for (const Vertex c : kids[v]) parts.push_back(&enc[c]);
    std::sort(parts.begin(), parts.end(), [](const std::string* a, const std::string* b) { return *a < *b; });
    std::string& out = enc[v];
    out.push_back('(');
    for (const std::string* p : parts) out += *p;
    out.push_back(')');
    for (const Vertex c : kids[v]) std::string().swap(enc[c]);
  }
  return std::move(enc[root]);
}

CanonicalCode code_of(const Csr& g) {
  const auto center = tree_center(g);
  if (center.size() == 1) return CanonicalCode("1" + ahu(g, center[0], static_cast<Vertex>(g.order())));
  std::string a = ahu(g, center[0], center[1]);
  std::string b = ahu(g, center[1], center[0]);
  if (b < a) std::swap(a, b);
  return CanonicalCode("2" + a + b);
}

Tree build_tree(const CanonicalCode& code) { return tree_from_graph(graph_from_code(code)); }

TreeFamily family_from_codes(std::size_t order, std::vector<CanonicalCode> codes, bool parallel) {
  std::sort(codes.begin(), codes.end());
  std::vector<std::optional<Tree>> built(codes.size());
  const auto count = static_cast<std::int64_t>(codes.size());
#pragma omp parallel for schedule(dynamic, 16) if (parallel)
  for (std::int64_t k = 0; k < count; ++k) built[static_cast<std::size_t>(k)] = build_tree(codes[static_cast<std::size_t>(k)]);

  TreeFamily fam;
  fam.order = order;
  fam.codes = std::move(codes);
  fam.members.reserve(built.size());
  for (auto& t : built) fam.members.push_back(std::move(*t));
  return fam;
}

/// Every one-leaf extension of one tree, as canonical byte strings.
void extend_one(const CanonicalCode& code, std::unordered_set<std::string>& out) {
  const Graph g = graph_from_code(code);
  const std::size_t n = g.order();
  std::vector<Edge> edges = g.edges();
  edges.emplace_back(0, 0);
  for (Vertex v = 0; v < n; ++v) {
    edges.back() = Edge(v, static_cast<Vertex>(n));
    out.insert(code_of(csr_from_edges(n + 1, edges)).bytes());
  }
}

std::vector<CanonicalCode> grow_layer(const std::vector<CanonicalCode>& layer, bool parallel) {
  std::unordered_set<std::string> merged;
  const auto count = static_cast<std::int64_t>(layer.size());
#pragma omp parallel if (parallel)
  {
    std::unordered_set<std::string> local;
#pragma omp for schedule(dynamic, 8) nowait
    for (std::int64_t k = 0; k < count; ++k) extend_one(layer[static_cast<std::size_t>(k)], local);
#pragma omp critical(kemeny_grow_layer_merge)
    merged.insert(local.begin(), local.end());
  }
  std::vector<CanonicalCode> next;
  next.reserve(merged.size());
  for (const auto& bytes : merged) next.emplace_back(bytes);
  std::sort(next.begin(), next.end());
  return next;
}

void check_order(std::size_t order, const EnumConfig& config) {
  if (order == 0) throw Error(ErrorKind::InvalidArgument, "tree order must be at least 1");
  if (order > config.max_order) {
    throw Error(ErrorKind::ResourceLimit, "order " + std::to_string(order) + " exceeds the enumeration cap " +
                                              std::to_string(config.max_order));
  }
}

TreeFamily enumerate_impl(std::size_t order, const EnumConfig& config, bool parallel) {
  check_order(order, config);
  std::vector<CanonicalCode> layer{CanonicalCode("1()")};
  for (std::size_t k = 1; k < order; ++k) layer = grow_layer(layer, parallel);
  return family_from_codes(order, std::move(layer), parallel);
}

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

std::string CanonicalCode::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes_.size() * 2);
  for (const char ch : bytes_) {
    const auto b = static_cast<unsigned char>(ch);
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0xf]);
  }
  return out;
}

CanonicalCode CanonicalCode::from_hex(std::string_view hex) {
  if (hex.size() % 2 != 0) throw Error(ErrorKind::InvalidArgument, "odd-length hex code");
  std::string bytes;
  bytes.reserve(hex.size() / 2);
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    const int hi = hex_value(hex[i]);
    const int lo = hex_value(hex[i + 1]);
    if (hi < 0 || lo < 0) throw Error(ErrorKind::InvalidArgument, "bad hex digit in code");
    bytes.push_back(static_cast<char>(hi * 16 + lo));
  }
  return CanonicalCode(std::move(bytes));
}

CanonicalCode canonical_code(const Tree& t) { return canonical_code(t.graph()); }

CanonicalCode canonical_code(const Graph& tree) {
  if (tree.order() == 0 || tree.size() + 1 != tree.order() || !is_connected(tree)) {
    throw Error(ErrorKind::NotATree, "canonical codes are defined for trees only");
  }
  return code_of(csr_from_edges(tree.order(), tree.edges()));
}

Graph graph_from_code(const CanonicalCode& code) {
  const std::string& b = code.bytes();
  const auto malformed = [] { return Error(ErrorKind::InvalidArgument, "malformed canonical code"); };
  if (b.size() < 3 || (b[0] != '1' && b[0] != '2')) throw malformed();

  std::vector<Edge> edges;
  std::vector<Vertex> roots;
  std::vector<Vertex> stack;
  Vertex next = 0;
  for (std::size_t i = 1; i < b.size(); ++i) {
    if (b[i] == '(') {
      if (stack.empty()) {
        roots.push_back(next);
      } else {
        edges.emplace_back(stack.back(), next);
      }
      stack.push_back(next++);
    } else if (b[i] == ')') {
      if (stack.empty()) throw malformed();
      stack.pop_back();
    } else {
      throw malformed();
    }
  }
  const std::size_t want_roots = b[0] == '1' ? 1 : 2;
  if (!stack.empty() || roots.size() != want_roots) throw malformed();
  if (want_roots == 2) edges.emplace_back(roots[0], roots[1]);
  return Graph(next, std::move(edges));
}

Graph tree_from_prufer(std::span<const Vertex> sequence, std::size_t order) {
  if (order < 2 || sequence.size() + 2 != order) {
    throw Error(ErrorKind::InvalidArgument, "Pruefer sequence length must be order - 2");
  }
  std::vector<std::uint32_t> degree(order, 1);
  for (const Vertex x : sequence) {
    if (x >= order) throw Error(ErrorKind::InvalidArgument, "Pruefer entry out of range");
    ++degree[x];
  }
  std::vector<Edge> edges;
  edges.reserve(order - 1);
  std::size_t ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  std::size_t leaf = ptr;
  for (const Vertex x : sequence) {
    edges.emplace_back(static_cast<Vertex>(leaf), x);
    if (--degree[x] == 1 && x < ptr) {
      leaf = x;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.emplace_back(static_cast<Vertex>(leaf), static_cast<Vertex>(order - 1));
  return Graph(order, std::move(edges));
}

std::optional<std::size_t> TreeFamily::find(const CanonicalCode& code) const {
  const auto it = std::lower_bound(codes.begin(), codes.end(), code);
  if (it == codes.end() || *it != code) return std::nullopt;
  return static_cast<std::size_t>(it - codes.begin());
}

TreeFamily enumerate_trees(std::size_t order, const EnumConfig& config) { return enumerate_impl(order, config, true); }

TreeFamily enumerate_trees_serial(std::size_t order, const EnumConfig& config) {
  return enumerate_impl(order, config, false);
}

TreeFamily extend_family(const TreeFamily& from, std::size_t order, const EnumConfig& config) {
  check_order(order, config);
  if (from.diameter) throw Error(ErrorKind::InvalidArgument, "cannot extend a diameter-filtered family");
  if (order < from.order) throw Error(ErrorKind::InvalidArgument, "target order below the census order");
  std::vector<CanonicalCode> layer = from.codes;
  for (std::size_t k = from.order; k < order; ++k) layer = grow_layer(layer, true);
  return family_from_codes(order, std::move(layer), true);
}

TreeFamily filter_diameter(const TreeFamily& all, std::uint32_t d) {
  if (d < 1 || d + 1 > all.order) {
    throw Error(ErrorKind::InvalidArgument,
                "diameter " + std::to_string(d) + " out of range for order " + std::to_string(all.order));
  }
  TreeFamily out;
  out.order = all.order;
  out.diameter = d;
  for (std::size_t k = 0; k < all.size(); ++k) {
    if (all.members[k].diameter() == d) {
      out.members.push_back(all.members[k]);
      out.codes.push_back(all.codes[k]);
    }
  }
  return out;
}

TreeFamily family(std::size_t order, std::uint32_t d, const EnumConfig& config) {
  if (d < 1 || d + 1 > order) {
    throw Error(ErrorKind::InvalidArgument,
                "diameter " + std::to_string(d) + " out of range for order " + std::to_string(order));
  }
  return filter_diameter(enumerate_trees(order, config), d);
}

std::size_t prufer_oracle_count(std::size_t order) {
  if (order == 0) throw Error(ErrorKind::InvalidArgument, "tree order must be at least 1");
  if (order > 9) throw Error(ErrorKind::ResourceLimit, "Pruefer oracle is limited to order 9");
  if (order <= 2) return 1;

  const std::size_t len = order - 2;
  std::int64_t total = 1;
  for (std::size_t k = 0; k < len; ++k) total *= static_cast<std::int64_t>(order);

  std::unordered_set<std::string> merged;
#pragma omp parallel
  {
    std::unordered_set<std::string> local;
    std::vector<Vertex> seq(len);
#pragma omp for schedule(static) nowait
    for (std::int64_t idx = 0; idx < total; ++idx) {
      auto rest = static_cast<std::uint64_t>(idx);
      for (std::size_t k = 0; k < len; ++k) {
        seq[k] = static_cast<Vertex>(rest % order);
        rest /= order;
      }
      const Graph g = tree_from_prufer(seq, order);
      local.insert(code_of(csr_from_edges(order, g.edges())).bytes());
    }
#pragma omp critical(kemeny_prufer_merge)
    merged.insert(local.begin(), local.end());
  }
  return merged.size();
}

std::string export_census(const TreeFamily& fam) {
  std::string out;
  for (std::size_t k = 0; k < fam.size(); ++k) {
    out += fam.codes[k].hex();
    out += ' ';
    out += fam.members[k].graph().edge_string();
    out += '\n';
  }
  return out;
}

TreeFamily import_census(std::string_view text) {
  std::vector<CanonicalCode> codes;
  std::size_t order = 0;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() : nl + 1;
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;

    const auto space = line.find(' ');
    try {
      const auto code = CanonicalCode::from_hex(line.substr(0, space));
      const std::size_t n = code.tree_order();
      const Graph g = parse_edge_string(space == std::string_view::npos ? std::string_view{} : line.substr(space + 1), n);
      if (canonical_code(g) != code) throw Error(ErrorKind::InvalidArgument, "edge list does not match its code");
      if (order != 0 && n != order) throw Error(ErrorKind::InvalidArgument, "mixed orders in one census");
      order = n;
      codes.push_back(code);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::Parse) throw;
      throw ParseError(ParseError::Reason::BadToken, line_no, e.what());
    }
  }
  if (codes.empty()) throw ParseError(ParseError::Reason::Empty, 0, "empty census");
  std::sort(codes.begin(), codes.end());
  if (std::adjacent_find(codes.begin(), codes.end()) != codes.end()) {
    throw ParseError(ParseError::Reason::BadToken, 0, "census lists an isomorphism class twice");
  }
  return family_from_codes(order, std::move(codes), true);
}

}  // namespace kemeny
