#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace pbland {

class VcspInstance;

/// Simple undirected graph over named vertices. No self-loops, no multi-edges.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::vector<std::string> names);

  std::size_t vertex_count() const noexcept { return names_.size(); }
  std::size_t edge_count() const noexcept;
  const std::string& name(std::size_t v) const { return names_.at(v); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<std::size_t> index_of(const std::string& name) const;
  /// Throws UnknownVertex.
  std::size_t require(const std::string& name) const;

  void add_edge(std::size_t u, std::size_t w);
  bool has_edge(std::size_t u, std::size_t w) const;
  /// Sorted neighbour list.
  const std::vector<std::size_t>& neighbors(std::size_t v) const { return adj_.at(v); }

  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  /// Subgraph induced by the given vertices (names and order preserved).
  Graph induced(const std::vector<std::string>& keep) const;
  /// Same graph with vertex i renamed/moved to position perm[i].
  Graph permuted(const std::vector<std::size_t>& perm) const;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> lookup_;
  std::vector<std::vector<std::size_t>> adj_;
};

/// Named-vertex hypergraph; hyperedges are sorted vertex index lists.
struct Hypergraph {
  std::vector<std::string> names;
  std::vector<std::vector<std::size_t>> edges;

  std::optional<std::size_t> index_of(const std::string& name) const;
  Hypergraph induced(const std::vector<std::string>& keep) const;
};

/// Constraint hypergraph of an instance (one hyperedge per scope).
Hypergraph constraint_hypergraph(const VcspInstance& instance);

/// Hypergraph whose hyperedges are the edges of g.
Hypergraph as_hypergraph(const Graph& g);

}  // namespace pbland
