#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pbland/constructions.hpp"
#include "pbland/vcsp.hpp"

namespace pbland {

inline constexpr std::size_t kMaxEnumerateVars = 24;
inline constexpr std::size_t kDefaultNodeLimit = 10'000'000;

/// All local peaks, sorted canonically. Parallel over the assignment space.
/// Throws TooLarge above kMaxEnumerateVars.
std::vector<Assignment> enumerate_peaks(const VcspInstance& instance);

/// Single-threaded reference built on improving_moves.
std::vector<Assignment> enumerate_peaks_serial(const VcspInstance& instance);

struct AscentGraphReport {
  Assignment start;
  std::size_t reachable_count = 0;
  std::vector<Assignment> peaks_reached;  // sorted
  std::size_t max_out_degree = 0;
  bool unique_maximal_path = false;
  std::optional<std::size_t> path_length;
  std::size_t arcs = 0;
};

/// Every assignment reachable from start by improving flips. Throws BudgetExceeded
/// once more than node_limit assignments are discovered.
AscentGraphReport explore_ascent_graph(const VcspInstance& instance, const Assignment& start,
                                       std::size_t node_limit = kDefaultNodeLimit);

struct PeakTableCase {
  bool P = false, Q = false, R = false;
  std::vector<std::string> expected;  // gadget bit strings, slot order
  std::vector<std::string> actual;
  std::vector<std::string> missing;     // expected but not a peak
  std::vector<std::string> unexpected;  // peak but not expected
  bool match = false;
};

struct PeakTableReport {
  int n = 0, k = 0;
  BridgeConvention convention = BridgeConvention::ASide;
  /// Boundary bit x_(k-1,1) is held at this value.
  bool S = false;
  std::vector<PeakTableCase> cases;  // (P,Q,R) in binary order
  bool all_match = false;
};

/// Brute-force peaks of the closed gadget against the peak table, for every (P,Q,R), S = 0.
PeakTableReport verify_peak_table(int n, int k, BridgeConvention convention = BridgeConvention::ASide);

/// Expected peak strings of the table for one boundary context.
std::vector<std::string> peak_table_rows(bool P, bool Q, bool R);

/// An entry a*m_k + b*s_k + c of the delta table.
struct DeltaFormula {
  std::int64_t a = 0, b = 0, c = 0;
  std::string text;

  std::int64_t eval(std::int64_t m, std::int64_t s) const;
};

struct DeltaTableRow {
  bool P = false, Q = false;
  std::string state;  // gadget k bits, slot order
  std::array<DeltaFormula, 8> entries;
};

/// The delta table transcribed row by row (26 rows).
const std::vector<DeltaTableRow>& delta_table_rows();

/// Parses "3", "-(m+s+7)", "s+1", "-(2m+15)" into coefficients.
DeltaFormula parse_delta_formula(const std::string& text);

struct DeltaEntryCheck {
  std::int64_t expected = 0;
  std::int64_t actual = 0;
  bool bridge = false;  // value involves the (k-1,B)-(k,A) or (k,B)-(k+1,A) edge
  bool match = false;   // exact, or same sign when bridge
};

struct DeltaRowCheck {
  std::size_t row = 0;
  bool P = false, Q = false;
  std::string state;
  std::optional<std::size_t> trajectory_step;  // position along the designated ascent
  std::array<DeltaEntryCheck, 8> entries{};
  bool match = false;
};

struct DeltaTableReport {
  int n = 0, k = 0;
  BridgeConvention convention = BridgeConvention::ASide;
  std::int64_t m_k = 0, s_k = 0;
  std::vector<DeltaRowCheck> rows;
  std::size_t entries_checked = 0;
  std::size_t entries_matched = 0;
  bool all_match = false;
};

/// Replays the designated P10 ascent of the chain with m = n and compares delta_row of
/// gadget k at the states the table lists, matched in order. Needs 2 <= k < n.
DeltaTableReport verify_delta_table(int n, int k, BridgeConvention convention = BridgeConvention::ASide);

}  // namespace pbland
