#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hychrom/caps.hpp"
#include "hychrom/errors.hpp"
#include "hychrom/union_find.hpp"

namespace hychrom {

// A finite hypergraph on vertices 0..n-1. Edges are kept canonical: strictly
// sorted within each edge, edges sorted lexicographically, no duplicates,
// every edge of size >= 2. Values are immutable after construction and safe
// to share across threads.
class Hypergraph {
 public:
  Hypergraph() = default;

  Hypergraph(int num_vertices, std::vector<std::vector<int>> edges)
      : n_(num_vertices), edges_(std::move(edges)) {
    if (n_ < 0) throw ParseError("num_vertices must be nonnegative");
    for (auto& e : edges_) {
      std::sort(e.begin(), e.end());
      if (e.size() < 2) throw ParseError("edge of size < 2");
      if (std::adjacent_find(e.begin(), e.end()) != e.end())
        throw ParseError("repeated vertex inside an edge");
      if (e.front() < 0 || e.back() >= n_)
        throw ParseError("vertex index out of range");
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
      throw ParseError("duplicate edge");

    degrees_.assign(n_, 0);
    for (const auto& e : edges_)
      for (int v : e) ++degrees_[v];
    max_degree_ = degrees_.empty()
                      ? 0
                      : *std::max_element(degrees_.begin(), degrees_.end());

    if (!edges_.empty()) {
      std::size_t t = edges_.front().size();
      bool uniform = std::all_of(edges_.begin(), edges_.end(),
                                 [&](const auto& e) { return e.size() == t; });
      if (uniform) uniformity_ = static_cast<int>(t);
    }

    if (n_ <= 64) {
      edge_masks_.reserve(edges_.size());
      for (const auto& e : edges_) {
        std::uint64_t m = 0;
        for (int v : e) m |= std::uint64_t{1} << v;
        edge_masks_.push_back(m);
      }
    }
  }

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::vector<int>>& edges() const { return edges_; }
  const std::vector<int>& edge(int i) const { return edges_[i]; }

  // Present iff all edges share the same size t >= 2 (and there is an edge).
  std::optional<int> uniformity() const { return uniformity_; }

  // D = max over vertices of the number of incident edges; 0 when edgeless.
  int max_degree() const { return max_degree_; }
  int degree(int v) const { return degrees_[v]; }

  // Vertex bitmask of edge i; only available for n <= 64.
  std::uint64_t edge_mask(int i) const {
    require_vertex_masks();
    return edge_masks_[i];
  }
  const std::vector<std::uint64_t>& edge_masks() const {
    require_vertex_masks();
    return edge_masks_;
  }

  bool operator==(const Hypergraph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  void require_vertex_masks() const {
    if (n_ > 64) throw CapExceeded("vertex bitmasks require n <= 64");
  }

  int n_ = 0;
  std::vector<std::vector<int>> edges_;
  std::optional<int> uniformity_;
  int max_degree_ = 0;
  std::vector<int> degrees_;
  std::vector<std::uint64_t> edge_masks_;
};

inline void check_edge_subset_cap(const Hypergraph& h, const Caps& caps) {
  if (h.num_edges() > caps.subset_edges)
    throw CapExceeded("edge-subset enumeration over " +
                      std::to_string(h.num_edges()) + " edges exceeds cap " +
                      std::to_string(caps.subset_edges));
}

inline void check_vertex_subset_cap(const Hypergraph& h, const Caps& caps) {
  if (h.num_vertices() > caps.subset_vertices)
    throw CapExceeded("vertex-subset enumeration over " +
                      std::to_string(h.num_vertices()) +
                      " vertices exceeds cap " +
                      std::to_string(caps.subset_vertices));
}

// ---------------------------------------------------------------------------
// Text I/O. Schema: {"num_vertices": <int>, "edges": [[int,...],...]}.

inline Hypergraph hypergraph_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ParseError("document is not a JSON object");
  if (!doc.contains("num_vertices") ||
      !doc["num_vertices"].is_number_integer())
    throw ParseError("missing or non-integer \"num_vertices\"");
  if (!doc.contains("edges") || !doc["edges"].is_array())
    throw ParseError("missing or non-array \"edges\"");
  std::vector<std::vector<int>> edges;
  for (const auto& item : doc["edges"]) {
    if (!item.is_array()) throw ParseError("edge is not an array");
    std::vector<int> e;
    for (const auto& v : item) {
      if (!v.is_number_integer()) throw ParseError("vertex is not an integer");
      e.push_back(v.get<int>());
    }
    edges.push_back(std::move(e));
  }
  return Hypergraph(doc["num_vertices"].get<int>(), std::move(edges));
}

inline Hypergraph parse_hypergraph(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    throw ParseError(std::string("malformed JSON: ") + err.what());
  }
  return hypergraph_from_json(doc);
}

inline Hypergraph parse_hypergraph(std::istream& in) {
  return parse_hypergraph(
      std::string(std::istreambuf_iterator<char>(in), {}));
}

inline nlohmann::json hypergraph_to_json(const Hypergraph& h) {
  nlohmann::json doc;
  doc["num_vertices"] = h.num_vertices();
  doc["edges"] = h.edges();
  return doc;
}

// Canonical serialization: edges already sorted within and across; key order
// and spacing are fixed, so re-parsing reproduces the value bit-exactly.
inline std::string serialize_hypergraph(const Hypergraph& h) {
  return hypergraph_to_json(h).dump();
}

// ---------------------------------------------------------------------------
// Edge subsets and connectivity.

// An edge-index subset E' together with c(E'), the number of connected
// components of (V(H), E'). Isolated vertices count as components.
struct EdgeSubset {
  std::uint64_t mask = 0;
  int size = 0;
  int component_count = 0;
};

inline std::uint64_t full_edge_mask(const Hypergraph& h) {
  if (h.num_edges() > 64) throw CapExceeded("edge bitmasks require |E| <= 64");
  return h.num_edges() == 64 ? ~std::uint64_t{0}
                             : (std::uint64_t{1} << h.num_edges()) - 1;
}

inline int component_count(const Hypergraph& h, std::uint64_t edge_mask) {
  if (h.num_edges() > 64) throw CapExceeded("edge bitmasks require |E| <= 64");
  UnionFind uf(h.num_vertices());
  for (std::uint64_t rest = edge_mask; rest != 0; rest &= rest - 1) {
    const auto& e = h.edge(std::countr_zero(rest));
    for (std::size_t i = 1; i < e.size(); ++i) uf.unite(e[0], e[i]);
  }
  return uf.components();
}

inline EdgeSubset connected_components(const Hypergraph& h,
                                       std::uint64_t edge_mask) {
  return EdgeSubset{edge_mask, std::popcount(edge_mask),
                    component_count(h, edge_mask)};
}

// True when (V, E') has every vertex in a single component. The empty
// hypergraph (n = 0) is vacuously connected.
inline bool is_connected_spanning(const Hypergraph& h,
                                  std::uint64_t edge_mask) {
  return component_count(h, edge_mask) <= 1;
}

// ---------------------------------------------------------------------------
// Induced subhypergraphs.

struct InducedSubhypergraph {
  Hypergraph subgraph;
  // vertex_map[new_index] = original index; positions follow sorted order.
  std::vector<int> vertex_map;
};

inline InducedSubhypergraph induced(const Hypergraph& h,
                                    std::uint64_t vertex_mask) {
  if (h.num_vertices() > 64)
    throw CapExceeded("vertex bitmasks require n <= 64");
  std::vector<int> map;
  std::vector<int> reindex(h.num_vertices(), -1);
  for (int v = 0; v < h.num_vertices(); ++v) {
    if (vertex_mask >> v & 1) {
      reindex[v] = static_cast<int>(map.size());
      map.push_back(v);
    }
  }
  std::vector<std::vector<int>> edges;
  for (int i = 0; i < h.num_edges(); ++i) {
    if ((h.edge_mask(i) & ~vertex_mask) != 0) continue;  // partial: dropped
    std::vector<int> e;
    for (int v : h.edge(i)) e.push_back(reindex[v]);
    edges.push_back(std::move(e));
  }
  return {Hypergraph(static_cast<int>(map.size()), std::move(edges)),
          std::move(map)};
}

inline int max_edge_size(const Hypergraph& h) {
  int t = 0;
  for (const auto& e : h.edges()) t = std::max(t, static_cast<int>(e.size()));
  return t;
}

// Subhypergraph on the full vertex set keeping only the selected edges.
// Edge order is preserved, so position i corresponds to the i-th set bit.
inline Hypergraph edge_subset_hypergraph(const Hypergraph& h,
                                         std::uint64_t edge_mask) {
  std::vector<std::vector<int>> edges;
  for (int i = 0; i < h.num_edges(); ++i)
    if (edge_mask >> i & 1) edges.push_back(h.edge(i));
  return Hypergraph(h.num_vertices(), std::move(edges));
}

// ---------------------------------------------------------------------------
// The intersection graph G_H: one node per hyperedge, adjacent iff the
// hyperedges share a vertex. Its max degree is at most t*D for t-uniform H.

struct IntersectionGraph {
  int node_count = 0;
  std::vector<std::pair<int, int>> adjacency;  // pairs (i, j) with i < j

  int max_degree() const {
    std::vector<int> deg(node_count, 0);
    for (auto [i, j] : adjacency) {
      ++deg[i];
      ++deg[j];
    }
    return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
  }
};

inline IntersectionGraph intersection_graph(const Hypergraph& h) {
  IntersectionGraph g;
  g.node_count = h.num_edges();
  for (int i = 0; i < h.num_edges(); ++i) {
    const auto& a = h.edge(i);
    for (int j = i + 1; j < h.num_edges(); ++j) {
      const auto& b = h.edge(j);
      bool meet;
      if (h.num_vertices() <= 64) {
        meet = (h.edge_mask(i) & h.edge_mask(j)) != 0;
      } else {
        std::vector<int> tmp;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                              std::back_inserter(tmp));
        meet = !tmp.empty();
      }
      if (meet) g.adjacency.emplace_back(i, j);
    }
  }
  return g;
}

}  // namespace hychrom
