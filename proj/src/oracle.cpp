#include "pbland/oracle.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <set>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pbland/checked.hpp"
#include "pbland/error.hpp"
#include "pbland/search.hpp"

namespace pbland {

namespace {

void require_small(const VcspInstance& instance) {
  if (instance.num_vars() > kMaxEnumerateVars) {
    throw Error(ErrorKind::TooLarge, "exhaustive enumeration supports at most " + std::to_string(kMaxEnumerateVars) +
                                         " variables, instance has " + std::to_string(instance.num_vars()));
  }
}

Assignment from_mask(std::uint32_t mask, std::size_t d) {
  Assignment x(d);
  for (std::size_t i = 0; i < d; ++i) x.set(i, (mask >> i) & 1u);
  return x;
}

struct Term {
  std::uint32_t others;
  std::int64_t weight;
};

}  // namespace

std::vector<Assignment> enumerate_peaks(const VcspInstance& instance) {
  require_small(instance);
  const std::size_t d = instance.num_vars();

  // Per variable: the other scope members of each constraint containing it.
  std::vector<std::vector<Term>> terms(d);
  for (std::size_t v = 0; v < d; ++v) {
    std::int64_t bound = 0;
    for (auto ci : instance.constraints_of(VariableId{v})) {
      const auto& c = instance.constraints()[ci];
      std::uint32_t mask = 0;
      for (auto w : c.scope) {
        if (w.index != v) mask |= std::uint32_t{1} << w.index;
      }
      terms[v].push_back({mask, c.weight});
      bound = checked_add(bound, c.weight < 0 ? checked_neg(c.weight) : c.weight);
    }
  }

  const std::uint64_t total = std::uint64_t{1} << d;
  const std::uint64_t chunk = std::max<std::uint64_t>(1, total / 256);
  const std::int64_t chunks = static_cast<std::int64_t>((total + chunk - 1) / chunk);
  std::vector<std::vector<std::uint32_t>> found(static_cast<std::size_t>(chunks));

#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t c = 0; c < chunks; ++c) {
    const std::uint64_t lo = static_cast<std::uint64_t>(c) * chunk;
    const std::uint64_t hi = std::min(total, lo + chunk);
    auto& out = found[static_cast<std::size_t>(c)];
    for (std::uint64_t xm = lo; xm < hi; ++xm) {
      const auto x = static_cast<std::uint32_t>(xm);
      bool peak = true;
      for (std::size_t v = 0; v < d && peak; ++v) {
        std::int64_t sum = 0;
        for (const auto& t : terms[v]) {
          if ((x & t.others) == t.others) sum += t.weight;
        }
        const std::int64_t delta = (x >> v) & 1u ? -sum : sum;
        peak = delta <= 0;
      }
      if (peak) out.push_back(x);
    }
  }

  std::vector<Assignment> peaks;
  for (const auto& part : found) {
    for (auto x : part) peaks.push_back(from_mask(x, d));
  }
  std::sort(peaks.begin(), peaks.end());
  return peaks;
}

std::vector<Assignment> enumerate_peaks_serial(const VcspInstance& instance) {
  require_small(instance);
  const std::size_t d = instance.num_vars();
  std::vector<Assignment> peaks;
  for (std::uint64_t xm = 0; xm < (std::uint64_t{1} << d); ++xm) {
    auto x = from_mask(static_cast<std::uint32_t>(xm), d);
    if (improving_moves(instance, x).empty()) peaks.push_back(std::move(x));
  }
  std::sort(peaks.begin(), peaks.end());
  return peaks;
}

AscentGraphReport explore_ascent_graph(const VcspInstance& instance, const Assignment& start, std::size_t node_limit) {
  if (start.size() != instance.num_vars()) throw Error(ErrorKind::LengthMismatch, "start length mismatch");
  AscentGraphReport rep;
  rep.start = start;

  std::unordered_set<std::string> visited{start.to_string()};
  std::vector<Assignment> stack{start};
  while (!stack.empty()) {
    Assignment x = std::move(stack.back());
    stack.pop_back();
    const auto moves = improving_moves(instance, x);
    rep.max_out_degree = std::max(rep.max_out_degree, moves.size());
    if (moves.empty()) rep.peaks_reached.push_back(x);
    for (const auto& mv : moves) {
      if (mv.delta <= 0) throw Error(ErrorKind::InvalidArgument, "non-improving arc in ascent graph");
      ++rep.arcs;
      auto y = x.flipped(mv.var);
      if (visited.insert(y.to_string()).second) {
        if (visited.size() > node_limit) {
          throw Error(ErrorKind::BudgetExceeded,
                      "ascent graph exceeds " + std::to_string(node_limit) + " assignments");
        }
        stack.push_back(std::move(y));
      }
    }
  }
  rep.reachable_count = visited.size();
  std::sort(rep.peaks_reached.begin(), rep.peaks_reached.end());
  rep.unique_maximal_path = rep.max_out_degree <= 1 && rep.peaks_reached.size() == 1;
  if (rep.unique_maximal_path) rep.path_length = rep.reachable_count - 1;
  return rep;
}

std::vector<std::string> peak_table_rows(bool P, bool Q, bool R) {
  const std::string r = R ? "1" : "0";
  if (!P && !Q) return {"00000000", "01100101"};
  if (!P && Q) return {"00000011", "01100111"};
  if (P && !Q) return {"1110010" + r, "11111001"};
  return {"1001101" + r, "11111010"};
}

PeakTableReport verify_peak_table(int n, int k, BridgeConvention convention) {
  if (k < 1 || n < k || n > kMaxCdN) throw Error(ErrorKind::ParamOutOfRange, "need 1 <= k <= n <= 48");
  PeakTableReport rep;
  rep.n = n;
  rep.k = k;
  rep.convention = convention;
  rep.all_match = true;
  for (int bits = 0; bits < 8; ++bits) {
    PeakTableCase c;
    c.P = bits & 4;
    c.Q = bits & 2;
    c.R = bits & 1;
    const auto gadget = build_cd_gadget(n, k, GadgetBoundary{c.P, c.Q, c.R, false}, convention);
    std::set<std::string> expected;
    for (auto& s : peak_table_rows(c.P, c.Q, c.R)) expected.insert(s);
    std::set<std::string> actual;
    for (const auto& x : enumerate_peaks(gadget)) actual.insert(x.to_string());
    c.expected.assign(expected.begin(), expected.end());
    c.actual.assign(actual.begin(), actual.end());
    std::set_difference(expected.begin(), expected.end(), actual.begin(), actual.end(), std::back_inserter(c.missing));
    std::set_difference(actual.begin(), actual.end(), expected.begin(), expected.end(),
                        std::back_inserter(c.unexpected));
    c.match = c.missing.empty() && c.unexpected.empty();
    rep.all_match = rep.all_match && c.match;
    rep.cases.push_back(std::move(c));
  }
  return rep;
}

std::int64_t DeltaFormula::eval(std::int64_t m, std::int64_t s) const {
  return checked_add(checked_add(checked_mul(a, m), checked_mul(b, s)), c);
}

DeltaFormula parse_delta_formula(const std::string& text) {
  DeltaFormula f;
  f.text = text;
  std::size_t i = 0;
  auto fail = [&]() -> DeltaFormula {
    throw Error(ErrorKind::ParseError, "cannot parse delta formula '" + text + "'");
  };
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  std::int64_t outer = 1;
  bool paren = false;
  skip();
  if (i + 1 < text.size() && text[i] == '-' && text[i + 1] == '(') {
    outer = -1;
    paren = true;
    i += 2;
  }
  std::int64_t sign = 1;
  bool first = true;
  while (true) {
    skip();
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (!first) {
      break;
    }
    std::int64_t coef = 0;
    bool digits = false;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      coef = coef * 10 + (text[i] - '0');
      ++i;
      digits = true;
    }
    if (!digits) coef = 1;
    if (i < text.size() && text[i] == '*') ++i;
    if (i < text.size() && (text[i] == 'm' || text[i] == 's')) {
      (text[i] == 'm' ? f.a : f.b) += sign * coef;
      ++i;
    } else if (digits) {
      f.c += sign * coef;
    } else {
      return fail();
    }
    sign = 1;
    first = false;
  }
  skip();
  if (paren) {
    if (i >= text.size() || text[i] != ')') return fail();
    ++i;
    skip();
  }
  if (i != text.size()) return fail();
  f.a *= outer;
  f.b *= outer;
  f.c *= outer;
  return f;
}

namespace {

struct RawRow {
  const char* pq;
  const char* state;
  std::array<const char*, 8> cells;
};

// Transcribed in print order; m is m_k and s is s_k.
const RawRow kDeltaTable[] = {
    {"10", "00000000", {"3", "-(m+5)", "-(m+3)", "-(m+s+7)", "-1", "-(m+1)", "-(s+5)", "-(s+3)"}},
    {"10", "10000000", {"-3", "1", "-(m+3)", "-(s+1)", "-1", "-(m+1)", "-(s+5)", "-(s+5)"}},
    {"10", "11000000", {"-(m+9)", "-1", "1", "-(s+1)", "-1", "-(m+1)", "-(s+5)", "-1"}},
    {"10", "11100000", {"-(m+9)", "-(m+5)", "-1", "-(s+1)", "-1", "1", "-(s+5)", "-1"}},
    {"10", "11100100", {"-(m+9)", "-(m+5)", "-(m+3)", "-(s+1)", "-(m+3)", "-1", "-(s+5)", "-1"}},
    {"11", "11100100", {"-(m+9)", "-(m+5)", "-(m+3)", "-(s+1)", "-(m+3)", "-(m+1)", "1", "-1"}},
    {"11", "11100110", {"-(m+9)", "-(m+5)", "-(m+3)", "1", "-(m+3)", "-(m+1)", "-1", "-1"}},
    {"11", "11110110", {"-(2m+15)", "-(m+5)", "-(m+3)", "-1", "1", "-(m+1)", "-(s+3)", "-1"}},
    {"11", "11111110", {"-(2m+15)", "-(m+5)", "-(m+3)", "-(m+5)", "-1", "1", "-(s+3)", "-1"}},
    {"11", "11111010", {"-(2m+15)", "-(m+5)", "-1", "-(m+5)", "-(m+3)", "-1", "-(s+3)", "-1"}},
    {"10", "11111010", {"-(2m+15)", "-(m+5)", "-1", "-(m+5)", "-(m+3)", "-(m+1)", "3", "-1"}},
    {"10", "11111000", {"-(2m+15)", "-(m+5)", "-1", "-(m-s+3)", "-(m+3)", "-(m+1)", "-3", "s+1"}},
    {"10", "11111001", {"-(2m+13)", "-(m+s+9)", "-1", "-(m+5)", "-(m+3)", "-(m+1)", "-(s+5)", "-(s+1)"}},
    {"00", "11111001", {"3", "-(m+s+9)", "-1", "-(m+5)", "-(m+3)", "-(m+1)", "-(s+5)", "-(2s+1)"}},
    {"00", "01111001", {"-3", "-(s+3)", "-1", "1", "-(m+3)", "-(m+1)", "-(s+5)", "-(2s+3)"}},
    {"00", "01101001", {"-(m+9)", "-(s+3)", "-1", "-1", "1", "-(m+1)", "-(s+5)", "-(s+1)"}},
    {"00", "01100001", {"-(m+9)", "-(s+3)", "-1", "-(m+5)", "-1", "1", "-(s+5)", "-(s+1)"}},
    {"00", "01100101", {"-(m+9)", "-(s+3)", "-(m+3)", "-(m+5)", "-(m+3)", "-1", "-(s+5)", "-(s+1)"}},
    {"01", "01100101", {"-(m+9)", "-(s+3)", "-(m+3)", "-(m+5)", "-(m+3)", "-(m+1)", "1", "-(s+1)"}},
    {"01", "01100111", {"-(m+9)", "1", "-(m+3)", "-(m+5)", "-(m+3)", "-(m+1)", "-1", "-(s+1)"}},
    {"01", "00100111", {"-(2m+15)", "-1", "1", "-(m+5)", "-(m+3)", "-(m+1)", "-(s+5)", "-(s+1)"}},
    {"01", "00000111", {"-(2m+15)", "-(m+5)", "-1", "-(m+5)", "-(m+3)", "1", "-(s+5)", "-(s+1)"}},
    {"01", "00000011", {"-(2m+15)", "-(m+5)", "-(m+3)", "-(m+5)", "-1", "-1", "-(s+5)", "-(s+1)"}},
    {"00", "00000011", {"-(2m+15)", "-(m+5)", "-(m+3)", "-(m+5)", "-1", "-(m+1)", "1", "-(s+1)"}},
    {"00", "00000001", {"-(2m+15)", "-(m-s+1)", "-(m+3)", "-(m+5)", "-1", "-(m+1)", "-1", "3"}},
    {"00", "00000000", {"-(2m+15)", "-(m+5)", "-(m+3)", "-(m+s+7)", "-1", "-(m+1)", "-(s+5)", "-3"}},
};

int sign(std::int64_t v) { return (v > 0) - (v < 0); }

}  // namespace

const std::vector<DeltaTableRow>& delta_table_rows() {
  static const std::vector<DeltaTableRow> rows = [] {
    std::vector<DeltaTableRow> out;
    for (const auto& raw : kDeltaTable) {
      DeltaTableRow r;
      r.P = raw.pq[0] == '1';
      r.Q = raw.pq[1] == '1';
      r.state = raw.state;
      for (std::size_t i = 0; i < 8; ++i) r.entries[i] = parse_delta_formula(raw.cells[i]);
      out.push_back(std::move(r));
    }
    return out;
  }();
  return rows;
}

DeltaTableReport verify_delta_table(int n, int k, BridgeConvention convention) {
  if (k < 2 || k >= n || n > kMaxCdN) throw Error(ErrorKind::ParamOutOfRange, "delta table needs 2 <= k < n <= 48");
  if (n > 20) throw Error(ErrorKind::TooLarge, "delta table replay limited to n <= 20");

  DeltaTableReport rep;
  rep.n = n;
  rep.k = k;
  rep.convention = convention;
  rep.m_k = cd_m(n, k);
  rep.s_k = cd_s(n, k);

  const CdParams params{n, n, Variant::P10, convention};
  const auto chain = build_cd_chain(params);
  const auto trace = run_ascent(chain, cd_start(params), PivotRule::first(), cd_default_max_steps(n), false);

  auto pos = [&](int g, const char* slot) { return cd_position(n, g, slot); };
  const auto& table = delta_table_rows();

  std::size_t next = 0;
  Assignment x = trace.start;
  auto try_match = [&](std::size_t step) {
    if (next >= table.size()) return;
    const auto& row = table[next];
    std::string local;
    for (auto slot : kCdSlots) local += x.get(cd_position(n, k, slot)) ? '1' : '0';
    if (local != row.state || x.get(pos(k + 1, "6")) != row.P || x.get(pos(k - 1, "B")) != row.Q) return;

    DeltaRowCheck check;
    check.row = next + 1;
    check.P = row.P;
    check.Q = row.Q;
    check.state = row.state;
    check.trajectory_step = step;
    const auto got = delta_row(chain, x, k);
    check.match = true;
    for (std::size_t i = 0; i < 8; ++i) {
      auto& e = check.entries[i];
      e.expected = row.entries[i].eval(rep.m_k, rep.s_k);
      e.actual = got[i];
      e.bridge = (kCdSlots[i] == "A" && x.get(pos(k - 1, "B"))) || (kCdSlots[i] == "B" && x.get(pos(k + 1, "A")));
      e.match = e.bridge ? sign(e.expected) == sign(e.actual) : e.expected == e.actual;
      check.match = check.match && e.match;
      ++rep.entries_checked;
      if (e.match) ++rep.entries_matched;
    }
    rep.rows.push_back(check);
    ++next;
  };

  try_match(0);
  for (std::size_t t = 0; t < trace.steps.size(); ++t) {
    x.flip(trace.steps[t].var);
    try_match(t + 1);
  }
  for (std::size_t r = next; r < table.size(); ++r) {
    DeltaRowCheck missing;
    missing.row = r + 1;
    missing.P = table[r].P;
    missing.Q = table[r].Q;
    missing.state = table[r].state;
    rep.rows.push_back(missing);
    rep.entries_checked += 8;
  }
  rep.all_match = rep.entries_checked == rep.entries_matched && next == table.size();
  return rep;
}

}  // namespace pbland
