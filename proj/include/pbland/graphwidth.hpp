#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pbland/graph.hpp"

namespace pbland {

/// Ordered bins over named vertices.
struct PathDecomposition {
  std::vector<std::vector<std::string>> bins;

  /// max bin size - 1; -1 for no bins.
  int width() const;
  /// Distinct vertices in bin order of first appearance.
  std::vector<std::string> vertices() const;

  friend bool operator==(const PathDecomposition&, const PathDecomposition&) = default;
};

/// Branch sets claimed to contract to K_target.
struct MinorCertificate {
  std::vector<std::vector<std::string>> branch_sets;
  int target = 0;

  friend bool operator==(const MinorCertificate&, const MinorCertificate&) = default;
};

struct DecompositionReport {
  bool valid = false;
  int width = -1;
  bool edges_checked = true;
  std::vector<std::string> violations;
};

struct MinorReport {
  bool valid = false;
  bool edges_checked = true;
  std::vector<std::string> violations;
};

/// Checks vertex coverage, hyperedge containment (when check_edges), per-vertex bin
/// contiguity and the two interface requirements. Throws UnknownVertex for names
/// outside the hypergraph.
DecompositionReport validate_decomposition(const Hypergraph& h, const PathDecomposition& pd,
                                           const std::vector<std::string>& first_must_contain = {},
                                           const std::vector<std::string>& last_must_contain = {},
                                           bool check_edges = true);

/// Coverage/contiguity only, over the vertex universe named by the bins themselves.
DecompositionReport validate_decomposition_without_edges(const PathDecomposition& pd);

/// Connected, pairwise-adjacent, disjoint branch sets, exactly `target` of them.
MinorReport validate_minor(const Graph& g, const MinorCertificate& cert);

/// Disjointness and count only; used where the edge set is unavailable.
MinorReport validate_minor_without_edges(const MinorCertificate& cert);

inline constexpr std::size_t kMaxExactPathwidthVertices = 22;

struct PathwidthResult {
  int width = 0;
  /// Vertex order attaining the width (vertex separation).
  std::vector<std::size_t> order;
};

/// Exact pathwidth via vertex separation number with a subset DP. Throws TooLarge
/// above kMaxExactPathwidthVertices.
PathwidthResult exact_pathwidth_with_order(const Graph& g);
int exact_pathwidth(const Graph& g);

/// Standard decomposition from a linear order: bin i = {v_i} plus earlier vertices
/// that still have a neighbour at position >= i.
PathDecomposition decomposition_from_order(const Graph& g, const std::vector<std::size_t>& order);

/// One gadget's decomposition plus the vertices it shares with its neighbours.
/// `entry` must sit in the first bin and `exit` in the last bin.
struct ChainPiece {
  PathDecomposition decomposition;
  std::vector<std::string> entry;
  std::vector<std::string> exit;
};

/// Concatenates pieces in order. Vertices shared by consecutive pieces must lie in
/// exit(i) and entry(i+1); vertices may not skip a piece. When `edges` is given,
/// every hyperedge spanning two pieces must end up inside one bin. Throws
/// InterfaceMismatch otherwise.
PathDecomposition compose_chain_decomposition(const std::vector<ChainPiece>& pieces,
                                              const Hypergraph* edges = nullptr);

}  // namespace pbland
