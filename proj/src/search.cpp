#include "pbland/search.hpp"

#include <algorithm>
#include <random>

#include "pbland/checked.hpp"
#include "pbland/constructions.hpp"
#include "pbland/error.hpp"

namespace pbland {

std::string PivotRule::describe() const {
  switch (kind) {
    case PivotKind::FirstImprovement:
      return "first";
    case PivotKind::Steepest:
      return "steepest";
    case PivotKind::RandomImprovement:
      return "random";
  }
  return "?";
}

PivotKind parse_pivot_kind(std::string_view s) {
  if (s == "first") return PivotKind::FirstImprovement;
  if (s == "steepest") return PivotKind::Steepest;
  if (s == "random") return PivotKind::RandomImprovement;
  throw Error(ErrorKind::InvalidArgument, "unknown pivot rule '" + std::string(s) + "'");
}

std::string_view to_string(Audit a) {
  switch (a) {
    case Audit::Yes:
      return "yes";
    case Audit::No:
      return "no";
    case Audit::NotAudited:
      return "not-audited";
  }
  return "?";
}

namespace {

// Uniform index in [0, n) by rejection on raw 64-bit draws; independent of the
// standard library's distribution implementation.
std::size_t uniform_index(std::mt19937_64& rng, std::size_t n) {
  const std::uint64_t bound = n;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return static_cast<std::size_t>(r % bound);
}

}  // namespace

AscentTrace run_ascent(const VcspInstance& instance, const Assignment& start, const PivotRule& rule,
                       std::int64_t max_steps, bool audit) {
  if (start.size() != instance.num_vars()) {
    throw Error(ErrorKind::LengthMismatch, "start has " + std::to_string(start.size()) + " bits, instance has " +
                                               std::to_string(instance.num_vars()) + " variables");
  }
  if (max_steps < 0) throw Error(ErrorKind::InvalidArgument, "max_steps must be >= 0");

  const std::size_t d = instance.num_vars();
  AscentTrace trace;
  trace.start = start;
  trace.rule = rule.describe();
  trace.start_fitness = evaluate(instance, start);
  if (audit) trace.audited_unique = Audit::Yes;

  // Variables sharing a constraint with v, v included.
  std::vector<std::vector<std::size_t>> touched(d);
  for (std::size_t v = 0; v < d; ++v) {
    auto& list = touched[v];
    list.push_back(v);
    for (auto ci : instance.constraints_of(VariableId{v})) {
      for (auto w : instance.constraints()[ci].scope) list.push_back(w.index);
    }
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }

  Assignment x = start;
  std::vector<std::int64_t> delta(d);
  for (std::size_t v = 0; v < d; ++v) delta[v] = flip_delta(instance, x, VariableId{v});

  std::mt19937_64 rng(rule.seed);
  std::vector<std::size_t> improving;
  std::int64_t fitness = trace.start_fitness;

  while (true) {
    improving.clear();
    for (std::size_t v = 0; v < d; ++v) {
      if (delta[v] > 0) improving.push_back(v);
    }
    if (improving.empty()) break;
    if (static_cast<std::int64_t>(trace.steps.size()) >= max_steps) {
      trace.truncated = true;
      break;
    }
    if (audit && improving.size() != 1) {
      trace.audited_unique = Audit::No;
      if (!trace.first_violation) trace.first_violation = AuditViolation{trace.steps.size(), improving.size()};
      ++trace.violation_count;
    }

    std::size_t pick = improving.front();
    if (rule.kind == PivotKind::Steepest) {
      for (auto v : improving) {
        if (delta[v] > delta[pick]) pick = v;
      }
    } else if (rule.kind == PivotKind::RandomImprovement) {
      pick = improving[uniform_index(rng, improving.size())];
    }

    const std::int64_t gain = delta[pick];
    fitness = checked_add(fitness, gain);
    x.flip(VariableId{pick});
    for (auto w : touched[pick]) delta[w] = flip_delta(instance, x, VariableId{w});
    trace.steps.push_back(AscentStep{VariableId{pick}, gain, fitness, improving.size()});
  }
  if (audit && trace.truncated && trace.audited_unique == Audit::Yes) trace.audited_unique = Audit::No;
  trace.end = std::move(x);
  return trace;
}

UniquenessResult audit_uniqueness(const VcspInstance& instance, const Assignment& start, std::int64_t max_steps) {
  UniquenessResult r;
  r.trace = run_ascent(instance, start, PivotRule::first(), max_steps, true);
  r.unique = r.trace.audited_unique == Audit::Yes && !r.trace.truncated;
  return r;
}

std::array<std::int64_t, 8> delta_row(const VcspInstance& instance, const Assignment& x, int k) {
  if (x.size() != instance.num_vars()) throw Error(ErrorKind::LengthMismatch, "assignment length mismatch");
  std::array<std::int64_t, 8> row{};
  for (std::size_t i = 0; i < kCdSlots.size(); ++i) {
    auto v = instance.find(k, kCdSlots[i]);
    if (!v) {
      throw Error(ErrorKind::UnknownGadget,
                  "instance has no variable (" + std::to_string(k) + "," + std::string(kCdSlots[i]) + ")");
    }
    row[i] = flip_delta(instance, x, *v);
  }
  return row;
}

}  // namespace pbland
