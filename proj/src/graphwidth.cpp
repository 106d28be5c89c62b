#include "pbland/graphwidth.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include "pbland/error.hpp"

namespace pbland {

int PathDecomposition::width() const {
  if (bins.empty()) return -1;
  std::size_t widest = 0;
  for (const auto& b : bins) widest = std::max(widest, std::set<std::string>(b.begin(), b.end()).size());
  return static_cast<int>(widest) - 1;
}

std::vector<std::string> PathDecomposition::vertices() const {
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const auto& b : bins) {
    for (const auto& v : b) {
      if (seen.insert(v).second) out.push_back(v);
    }
  }
  return out;
}

namespace {

std::string join(const std::vector<std::string>& names) {
  std::string s = "{";
  for (std::size_t i = 0; i < names.size(); ++i) s += (i ? "," : "") + names[i];
  return s + "}";
}

// Bin indices in which each vertex occurs, plus duplicate-in-bin violations.
struct Occurrence {
  std::vector<std::vector<std::size_t>> bins_of;
  std::vector<std::set<std::size_t>> bin_sets;
};

Occurrence occurrences(const PathDecomposition& pd, const std::unordered_map<std::string, std::size_t>& index,
                       std::vector<std::string>& violations) {
  Occurrence occ;
  occ.bins_of.assign(index.size(), {});
  for (std::size_t r = 0; r < pd.bins.size(); ++r) {
    std::set<std::size_t> bin;
    for (const auto& name : pd.bins[r]) {
      auto it = index.find(name);
      if (it == index.end()) throw Error(ErrorKind::UnknownVertex, "bin " + std::to_string(r + 1) + " names '" + name + "'");
      if (!bin.insert(it->second).second) {
        violations.push_back("bin " + std::to_string(r + 1) + " lists " + name + " twice");
      } else {
        occ.bins_of[it->second].push_back(r);
      }
    }
    occ.bin_sets.push_back(std::move(bin));
  }
  return occ;
}

void check_interface(const std::vector<std::string>& must, const std::set<std::size_t>* bin,
                     const std::unordered_map<std::string, std::size_t>& index, const char* which,
                     std::vector<std::string>& violations) {
  for (const auto& name : must) {
    auto it = index.find(name);
    if (it == index.end()) throw Error(ErrorKind::UnknownVertex, std::string(which) + " interface names '" + name + "'");
    if (bin == nullptr || !bin->count(it->second)) violations.push_back(std::string(which) + " bin lacks interface vertex " + name);
  }
}

DecompositionReport validate_impl(const std::vector<std::string>& names,
                                  const std::vector<std::vector<std::size_t>>* edges, const PathDecomposition& pd,
                                  const std::vector<std::string>& first_must, const std::vector<std::string>& last_must) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < names.size(); ++i) index.emplace(names[i], i);

  DecompositionReport rep;
  rep.edges_checked = edges != nullptr;
  auto occ = occurrences(pd, index, rep.violations);

  for (std::size_t v = 0; v < names.size(); ++v) {
    const auto& where = occ.bins_of[v];
    if (where.empty()) {
      rep.violations.push_back("vertex " + names[v] + " is in no bin");
      continue;
    }
    if (where.back() - where.front() + 1 != where.size()) {
      std::ostringstream os;
      os << "vertex " << names[v] << " bins not contiguous:";
      for (auto r : where) os << ' ' << r + 1;
      rep.violations.push_back(os.str());
    }
  }

  if (edges) {
    for (const auto& e : *edges) {
      bool covered = std::any_of(occ.bin_sets.begin(), occ.bin_sets.end(), [&](const std::set<std::size_t>& bin) {
        return std::all_of(e.begin(), e.end(), [&](std::size_t v) { return bin.count(v) > 0; });
      });
      if (!covered) {
        std::vector<std::string> en;
        for (auto v : e) en.push_back(names[v]);
        rep.violations.push_back("hyperedge " + join(en) + " is in no bin");
      }
    }
  }

  check_interface(first_must, occ.bin_sets.empty() ? nullptr : &occ.bin_sets.front(), index, "first", rep.violations);
  check_interface(last_must, occ.bin_sets.empty() ? nullptr : &occ.bin_sets.back(), index, "last", rep.violations);

  rep.width = pd.width();
  rep.valid = rep.violations.empty();
  return rep;
}

}  // namespace

DecompositionReport validate_decomposition(const Hypergraph& h, const PathDecomposition& pd,
                                           const std::vector<std::string>& first_must_contain,
                                           const std::vector<std::string>& last_must_contain, bool check_edges) {
  return validate_impl(h.names, check_edges ? &h.edges : nullptr, pd, first_must_contain, last_must_contain);
}

DecompositionReport validate_decomposition_without_edges(const PathDecomposition& pd) {
  return validate_impl(pd.vertices(), nullptr, pd, {}, {});
}

namespace {

std::vector<std::string> disjointness(const MinorCertificate& cert) {
  std::vector<std::string> violations;
  if (static_cast<int>(cert.branch_sets.size()) != cert.target) {
    violations.push_back("certificate has " + std::to_string(cert.branch_sets.size()) + " branch sets, target K" +
                         std::to_string(cert.target));
  }
  std::map<std::string, std::size_t> owner;
  for (std::size_t i = 0; i < cert.branch_sets.size(); ++i) {
    if (cert.branch_sets[i].empty()) violations.push_back("branch set " + std::to_string(i + 1) + " is empty");
    for (const auto& v : cert.branch_sets[i]) {
      auto [it, fresh] = owner.emplace(v, i);
      if (!fresh && it->second != i) {
        violations.push_back("vertex " + v + " is in branch sets " + std::to_string(it->second + 1) + " and " +
                             std::to_string(i + 1));
      }
    }
  }
  return violations;
}

}  // namespace

MinorReport validate_minor(const Graph& g, const MinorCertificate& cert) {
  MinorReport rep;
  rep.violations = disjointness(cert);

  std::vector<std::vector<std::size_t>> sets;
  for (const auto& bs : cert.branch_sets) {
    std::vector<std::size_t> s;
    for (const auto& name : bs) s.push_back(g.require(name));
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    sets.push_back(std::move(s));
  }

  for (std::size_t i = 0; i < sets.size(); ++i) {
    const auto& s = sets[i];
    if (s.empty()) continue;
    std::set<std::size_t> members(s.begin(), s.end()), seen{s.front()};
    std::vector<std::size_t> stack{s.front()};
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      for (auto w : g.neighbors(v)) {
        if (members.count(w) && seen.insert(w).second) stack.push_back(w);
      }
    }
    if (seen.size() != members.size())
      rep.violations.push_back("branch set " + std::to_string(i + 1) + " " + join(cert.branch_sets[i]) + " is not connected");
  }

  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      bool joined = std::any_of(sets[i].begin(), sets[i].end(), [&](std::size_t u) {
        return std::any_of(sets[j].begin(), sets[j].end(), [&](std::size_t w) { return g.has_edge(u, w); });
      });
      if (!joined) {
        rep.violations.push_back("branch sets " + std::to_string(i + 1) + " " + join(cert.branch_sets[i]) + " and " +
                                 std::to_string(j + 1) + " " + join(cert.branch_sets[j]) + " share no edge");
      }
    }
  }
  rep.valid = rep.violations.empty();
  return rep;
}

MinorReport validate_minor_without_edges(const MinorCertificate& cert) {
  MinorReport rep;
  rep.edges_checked = false;
  rep.violations = disjointness(cert);
  rep.valid = rep.violations.empty();
  return rep;
}

PathwidthResult exact_pathwidth_with_order(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n > kMaxExactPathwidthVertices) {
    throw Error(ErrorKind::TooLarge, "exact pathwidth supports at most " + std::to_string(kMaxExactPathwidthVertices) +
                                         " vertices, graph has " + std::to_string(n));
  }
  PathwidthResult result;
  if (n == 0) return result;

  std::vector<std::uint32_t> adj(n, 0);
  for (auto [u, w] : g.edges()) {
    adj[u] |= std::uint32_t{1} << w;
    adj[w] |= std::uint32_t{1} << u;
  }
  const std::uint32_t full = n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
  auto boundary = [&](std::uint32_t set) {
    int count = 0;
    for (std::uint32_t rest = set; rest; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      if (adj[v] & ~set & full) ++count;
    }
    return count;
  };

  // best[S] = min over orders of S (as a prefix) of the largest prefix boundary.
  std::vector<std::uint8_t> best(std::size_t{1} << n, 0);
  for (std::uint32_t set = 1; set <= full; ++set) {
    std::uint8_t inner = 0xff;
    for (std::uint32_t rest = set; rest; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      inner = std::min(inner, best[set & ~(std::uint32_t{1} << v)]);
    }
    best[set] = std::max<std::uint8_t>(inner, static_cast<std::uint8_t>(boundary(set)));
    if (set == full) break;
  }
  result.width = best[full];

  // Walk back from the full set, peeling a last vertex that keeps the optimum.
  std::vector<std::size_t> reversed;
  for (std::uint32_t set = full; set;) {
    for (std::uint32_t rest = set; rest; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      std::uint32_t prev = set & ~(std::uint32_t{1} << v);
      if (std::max<int>(best[prev], boundary(set)) == best[set]) {
        reversed.push_back(static_cast<std::size_t>(v));
        set = prev;
        break;
      }
    }
  }
  result.order.assign(reversed.rbegin(), reversed.rend());
  return result;
}

int exact_pathwidth(const Graph& g) { return exact_pathwidth_with_order(g).width; }

PathDecomposition decomposition_from_order(const Graph& g, const std::vector<std::size_t>& order) {
  const std::size_t n = g.vertex_count();
  if (order.size() != n) throw Error(ErrorKind::InvalidArgument, "order must list every vertex once");
  std::vector<std::size_t> pos(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (order[i] >= n || pos[order[i]] != n) throw Error(ErrorKind::InvalidArgument, "order is not a permutation");
    pos[order[i]] = i;
  }
  std::vector<std::size_t> last(n);
  for (std::size_t v = 0; v < n; ++v) {
    last[v] = pos[v];
    for (auto w : g.neighbors(v)) last[v] = std::max(last[v], pos[w]);
  }
  PathDecomposition pd;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::string> bin;
    for (std::size_t j = 0; j < i; ++j) {
      if (last[order[j]] >= i) bin.push_back(g.name(order[j]));
    }
    bin.push_back(g.name(order[i]));
    pd.bins.push_back(std::move(bin));
  }
  return pd;
}

PathDecomposition compose_chain_decomposition(const std::vector<ChainPiece>& pieces, const Hypergraph* edges) {
  PathDecomposition out;
  if (pieces.empty()) return out;

  std::vector<std::set<std::string>> members;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const auto& p = pieces[i];
    if (p.decomposition.bins.empty()) throw Error(ErrorKind::InterfaceMismatch, "piece " + std::to_string(i + 1) + " has no bins");
    const auto& first = p.decomposition.bins.front();
    const auto& last = p.decomposition.bins.back();
    for (const auto& v : p.entry) {
      if (std::find(first.begin(), first.end(), v) == first.end())
        throw Error(ErrorKind::InterfaceMismatch, "piece " + std::to_string(i + 1) + ": entry vertex " + v + " not in first bin");
    }
    for (const auto& v : p.exit) {
      if (std::find(last.begin(), last.end(), v) == last.end())
        throw Error(ErrorKind::InterfaceMismatch, "piece " + std::to_string(i + 1) + ": exit vertex " + v + " not in last bin");
    }
    auto vs = p.decomposition.vertices();
    members.emplace_back(vs.begin(), vs.end());
  }

  std::map<std::string, std::size_t> owner;  // last piece seen containing the vertex
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    for (const auto& v : members[i]) {
      auto it = owner.find(v);
      if (it != owner.end()) {
        const std::size_t prev = it->second;
        const auto& exit = pieces[prev].exit;
        const auto& entry = pieces[i].entry;
        if (prev + 1 != i) {
          throw Error(ErrorKind::InterfaceMismatch,
                      "vertex " + v + " appears in pieces " + std::to_string(prev + 1) + " and " + std::to_string(i + 1));
        }
        if (std::find(exit.begin(), exit.end(), v) == exit.end() || std::find(entry.begin(), entry.end(), v) == entry.end()) {
          throw Error(ErrorKind::InterfaceMismatch, "vertex " + v + " shared by pieces " + std::to_string(prev + 1) + " and " +
                                                        std::to_string(i + 1) + " is not an interface vertex of both");
        }
      }
      owner[v] = i;
    }
  }

  for (const auto& p : pieces) {
    out.bins.insert(out.bins.end(), p.decomposition.bins.begin(), p.decomposition.bins.end());
  }

  if (edges) {
    // Only hyperedges spanning more than one piece are the composer's responsibility.
    std::vector<std::set<std::string>> bin_sets;
    for (const auto& b : out.bins) bin_sets.emplace_back(b.begin(), b.end());
    for (const auto& e : edges->edges) {
      std::vector<std::string> names;
      for (auto v : e) names.push_back(edges->names.at(v));
      bool spans = false;
      for (std::size_t i = 0; i < members.size() && !spans; ++i) {
        bool some = std::any_of(names.begin(), names.end(), [&](const std::string& v) { return members[i].count(v) > 0; });
        bool all = std::all_of(names.begin(), names.end(), [&](const std::string& v) { return members[i].count(v) > 0; });
        spans = some && !all;
      }
      if (!spans) continue;
      bool covered = std::any_of(bin_sets.begin(), bin_sets.end(), [&](const std::set<std::string>& bin) {
        return std::all_of(names.begin(), names.end(), [&](const std::string& v) { return bin.count(v) > 0; });
      });
      if (!covered) throw Error(ErrorKind::InterfaceMismatch, "cross edge " + join(names) + " is not inside any junction bin");
    }
  }
  return out;
}

}  // namespace pbland
