#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pbland/vcsp.hpp"

namespace pbland {

enum class PivotKind { FirstImprovement, Steepest, RandomImprovement };

struct PivotRule {
  PivotKind kind = PivotKind::FirstImprovement;
  /// Only read by RandomImprovement (mt19937_64).
  std::uint64_t seed = 0;

  static PivotRule first() { return {PivotKind::FirstImprovement, 0}; }
  static PivotRule steepest() { return {PivotKind::Steepest, 0}; }
  static PivotRule random(std::uint64_t seed) { return {PivotKind::RandomImprovement, seed}; }

  /// "first", "steepest", "random"
  std::string describe() const;
};

PivotKind parse_pivot_kind(std::string_view s);

struct AscentStep {
  VariableId var;
  std::int64_t delta = 0;
  std::int64_t fitness_after = 0;
  /// Improving moves available before this step.
  std::size_t improving_count = 0;

  friend bool operator==(const AscentStep&, const AscentStep&) = default;
};

enum class Audit { Yes, No, NotAudited };
std::string_view to_string(Audit a);

struct AuditViolation {
  std::size_t step = 0;
  std::size_t improving_count = 0;
};

struct AscentTrace {
  Assignment start;
  Assignment end;
  std::int64_t start_fitness = 0;
  std::vector<AscentStep> steps;
  Audit audited_unique = Audit::NotAudited;
  std::optional<AuditViolation> first_violation;
  std::size_t violation_count = 0;
  /// max_steps hit before a peak.
  bool truncated = false;
  std::string rule;

  std::int64_t end_fitness() const { return steps.empty() ? start_fitness : steps.back().fitness_after; }
};

/// Strict ascent from start. Stops at a peak or after max_steps flips (truncated).
AscentTrace run_ascent(const VcspInstance& instance, const Assignment& start, const PivotRule& rule,
                       std::int64_t max_steps, bool audit);

struct UniquenessResult {
  bool unique = false;
  AscentTrace trace;
};

/// Audited first-improvement walk; unique iff no violation and the walk reached a peak.
UniquenessResult audit_uniqueness(const VcspInstance& instance, const Assignment& start, std::int64_t max_steps);

/// Flip deltas of gadget k's variables in slot order 1..6,A,B. Throws UnknownGadget.
std::array<std::int64_t, 8> delta_row(const VcspInstance& instance, const Assignment& x, int k);

/// Budget used when nothing better is known.
inline constexpr std::int64_t kDefaultMaxSteps = 100'000'000;

}  // namespace pbland
