#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pbland {

class Graph;

struct VariableId {
  std::size_t index = 0;

  friend constexpr auto operator<=>(VariableId, VariableId) = default;
};

/// Structured name of a variable: gadget index plus slot ("1".."8", "A", "B").
struct VarLabel {
  int gadget = 0;
  std::string slot;

  /// Vertex name "<gadget>.<slot>" used by the width tooling.
  std::string name() const;

  friend bool operator==(const VarLabel&, const VarLabel&) = default;
};

struct Constraint {
  std::vector<VariableId> scope;  // sorted, distinct, nonempty
  std::int64_t weight = 0;

  friend bool operator==(const Constraint&, const Constraint&) = default;
};

/// Fixed-length bit vector over instance variables in canonical order.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(std::size_t size) : bits_(size, 0) {}
  explicit Assignment(std::vector<std::uint8_t> bits);

  static Assignment zeros(std::size_t size) { return Assignment(size); }
  static Assignment from_string(std::string_view bits);

  std::size_t size() const noexcept { return bits_.size(); }
  bool operator[](VariableId v) const { return bits_[v.index] != 0; }
  bool get(std::size_t i) const { return bits_[i] != 0; }
  void set(std::size_t i, bool value) { bits_[i] = value ? 1 : 0; }
  void flip(VariableId v) { bits_[v.index] ^= 1; }
  Assignment flipped(VariableId v) const {
    Assignment y = *this;
    y.flip(v);
    return y;
  }

  std::string to_string() const;
  std::span<const std::uint8_t> bits() const noexcept { return bits_; }

  friend bool operator==(const Assignment&, const Assignment&) = default;
  friend auto operator<=>(const Assignment& a, const Assignment& b) { return a.bits_ <=> b.bits_; }

 private:
  std::vector<std::uint8_t> bits_;
};

/// Immutable weighted-scope instance. Build through InstanceBuilder.
class VcspInstance {
 public:
  VcspInstance() = default;

  std::size_t num_vars() const noexcept { return num_vars_; }
  const std::vector<Constraint>& constraints() const noexcept { return constraints_; }
  /// Indices into constraints() of every constraint whose scope contains v.
  std::span<const std::size_t> constraints_of(VariableId v) const { return by_var_.at(v.index); }

  const std::optional<VarLabel>& label(VariableId v) const { return labels_.at(v.index); }
  bool has_labels() const noexcept;
  std::optional<VariableId> find(int gadget, std::string_view slot) const;
  /// Label name if present, otherwise "v<index>".
  std::string vertex_name(VariableId v) const;

  /// Free-form generator metadata (name and parameters of the builder that made it).
  const std::map<std::string, std::string>& attributes() const noexcept { return attributes_; }

  /// Rebuilds the per-variable index and compares; true iff consistent.
  bool index_consistent() const;

  friend bool operator==(const VcspInstance& a, const VcspInstance& b) {
    return a.num_vars_ == b.num_vars_ && a.constraints_ == b.constraints_ && a.labels_ == b.labels_ &&
           a.attributes_ == b.attributes_;
  }

 private:
  friend class InstanceBuilder;

  std::size_t num_vars_ = 0;
  std::vector<Constraint> constraints_;
  std::vector<std::optional<VarLabel>> labels_;
  std::vector<std::vector<std::size_t>> by_var_;
  std::map<std::string, std::string> attributes_;
};

/// Accumulates constraints; equal scopes (as sets) are merged by summing weights.
class InstanceBuilder {
 public:
  explicit InstanceBuilder(std::size_t num_vars);

  InstanceBuilder& add(std::vector<VariableId> scope, std::int64_t weight);
  InstanceBuilder& label(VariableId v, VarLabel label);
  InstanceBuilder& attribute(std::string key, std::string value);

  std::size_t num_vars() const noexcept { return num_vars_; }

  /// Constraints keep first-insertion order of their scope.
  VcspInstance build() const;

 private:
  std::size_t num_vars_;
  std::vector<Constraint> constraints_;
  std::map<std::vector<std::size_t>, std::size_t> index_;
  std::vector<std::optional<VarLabel>> labels_;
  std::map<std::string, std::string> attributes_;
};

struct Move {
  VariableId var;
  std::int64_t delta = 0;

  friend bool operator==(const Move&, const Move&) = default;
};

std::int64_t evaluate(const VcspInstance& instance, const Assignment& x);

/// evaluate(flip(x, v)) - evaluate(x), touching only constraints that contain v.
std::int64_t flip_delta(const VcspInstance& instance, const Assignment& x, VariableId v);

/// All variables with strictly positive flip delta, ascending by id.
std::vector<Move> improving_moves(const VcspInstance& instance, const Assignment& x);

/// 2-section of the constraint hypergraph, vertex names from labels.
Graph primal_graph(const VcspInstance& instance);

}  // namespace pbland
