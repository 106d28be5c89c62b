#include "pbland/graph.hpp"

#include <algorithm>

#include "pbland/error.hpp"
#include "pbland/vcsp.hpp"

namespace pbland {

Graph::Graph(std::vector<std::string> names) : names_(std::move(names)), adj_(names_.size()) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!lookup_.emplace(names_[i], i).second)
      throw Error(ErrorKind::InvalidArgument, "duplicate vertex name '" + names_[i] + "'");
  }
}

std::size_t Graph::edge_count() const noexcept {
  std::size_t twice = 0;
  for (const auto& n : adj_) twice += n.size();
  return twice / 2;
}

std::optional<std::size_t> Graph::index_of(const std::string& name) const {
  auto it = lookup_.find(name);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t Graph::require(const std::string& name) const {
  auto i = index_of(name);
  if (!i) throw Error(ErrorKind::UnknownVertex, "vertex '" + name + "' is not in the graph");
  return *i;
}

void Graph::add_edge(std::size_t u, std::size_t w) {
  if (u >= names_.size() || w >= names_.size()) throw Error(ErrorKind::UnknownVertex, "edge endpoint out of range");
  if (u == w) return;
  auto insert = [](std::vector<std::size_t>& list, std::size_t v) {
    auto it = std::lower_bound(list.begin(), list.end(), v);
    if (it == list.end() || *it != v) list.insert(it, v);
  };
  insert(adj_[u], w);
  insert(adj_[w], u);
}

bool Graph::has_edge(std::size_t u, std::size_t w) const {
  const auto& list = adj_.at(u);
  return std::binary_search(list.begin(), list.end(), w);
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < adj_.size(); ++u) {
    for (auto w : adj_[u]) {
      if (u < w) out.emplace_back(u, w);
    }
  }
  return out;
}

Graph Graph::induced(const std::vector<std::string>& keep) const {
  Graph g(keep);
  std::vector<std::size_t> old;
  old.reserve(keep.size());
  for (const auto& name : keep) old.push_back(require(name));
  for (std::size_t a = 0; a < old.size(); ++a) {
    for (std::size_t b = a + 1; b < old.size(); ++b) {
      if (has_edge(old[a], old[b])) g.add_edge(a, b);
    }
  }
  return g;
}

Graph Graph::permuted(const std::vector<std::size_t>& perm) const {
  if (perm.size() != names_.size()) throw Error(ErrorKind::InvalidArgument, "permutation size mismatch");
  std::vector<std::string> names(names_.size());
  for (std::size_t i = 0; i < perm.size(); ++i) names.at(perm[i]) = names_[i];
  Graph g(std::move(names));
  for (auto [u, w] : edges()) g.add_edge(perm[u], perm[w]);
  return g;
}

std::optional<std::size_t> Hypergraph::index_of(const std::string& name) const {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names.begin());
}

Hypergraph Hypergraph::induced(const std::vector<std::string>& keep) const {
  Hypergraph h;
  h.names = keep;
  std::vector<std::optional<std::size_t>> remap(names.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    auto old = index_of(keep[i]);
    if (!old) throw Error(ErrorKind::UnknownVertex, "vertex '" + keep[i] + "' is not in the hypergraph");
    remap[*old] = i;
  }
  for (const auto& e : edges) {
    std::vector<std::size_t> mapped;
    bool inside = true;
    for (auto v : e) {
      if (!remap[v]) {
        inside = false;
        break;
      }
      mapped.push_back(*remap[v]);
    }
    if (inside) {
      std::sort(mapped.begin(), mapped.end());
      h.edges.push_back(std::move(mapped));
    }
  }
  return h;
}

Hypergraph constraint_hypergraph(const VcspInstance& instance) {
  Hypergraph h;
  h.names.reserve(instance.num_vars());
  for (std::size_t i = 0; i < instance.num_vars(); ++i) h.names.push_back(instance.vertex_name(VariableId{i}));
  for (const auto& c : instance.constraints()) {
    std::vector<std::size_t> e;
    for (auto v : c.scope) e.push_back(v.index);
    h.edges.push_back(std::move(e));
  }
  return h;
}

Hypergraph as_hypergraph(const Graph& g) {
  Hypergraph h;
  h.names = g.names();
  for (auto [u, w] : g.edges()) h.edges.push_back({u, w});
  return h;
}

}  // namespace pbland
