#include "pbland/vcsp.hpp"

#include <algorithm>
#include <sstream>

#include "pbland/checked.hpp"
#include "pbland/error.hpp"
#include "pbland/graph.hpp"

namespace pbland {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::ArithmeticOverflow: return "ArithmeticOverflow";
    case ErrorKind::InvalidVariable: return "InvalidVariable";
    case ErrorKind::ParamOutOfRange: return "ParamOutOfRange";
    case ErrorKind::UnknownGadget: return "UnknownGadget";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::InterfaceMismatch: return "InterfaceMismatch";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IoFailure: return "IoFailure";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

std::string VarLabel::name() const { return std::to_string(gadget) + "." + slot; }

Assignment::Assignment(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto& b : bits_) {
    if (b > 1) throw Error(ErrorKind::InvalidArgument, "assignment bits must be 0 or 1");
  }
}

Assignment Assignment::from_string(std::string_view s) {
  std::vector<std::uint8_t> bits;
  bits.reserve(s.size());
  for (char c : s) {
    if (c == '0' || c == '1') {
      bits.push_back(static_cast<std::uint8_t>(c - '0'));
    } else if (c != ' ' && c != '_') {
      throw Error(ErrorKind::ParseError, "bit string contains '" + std::string(1, c) + "'");
    }
  }
  return Assignment(std::move(bits));
}

std::string Assignment::to_string() const {
  std::string s(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) s[i] = bits_[i] ? '1' : '0';
  return s;
}

bool VcspInstance::has_labels() const noexcept {
  return std::any_of(labels_.begin(), labels_.end(), [](const auto& l) { return l.has_value(); });
}

std::optional<VariableId> VcspInstance::find(int gadget, std::string_view slot) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] && labels_[i]->gadget == gadget && labels_[i]->slot == slot) return VariableId{i};
  }
  return std::nullopt;
}

std::string VcspInstance::vertex_name(VariableId v) const {
  const auto& l = labels_.at(v.index);
  return l ? l->name() : "v" + std::to_string(v.index);
}

bool VcspInstance::index_consistent() const {
  std::vector<std::vector<std::size_t>> rebuilt(num_vars_);
  for (std::size_t c = 0; c < constraints_.size(); ++c) {
    for (auto v : constraints_[c].scope) rebuilt.at(v.index).push_back(c);
  }
  return rebuilt == by_var_;
}

InstanceBuilder::InstanceBuilder(std::size_t num_vars) : num_vars_(num_vars), labels_(num_vars) {}

InstanceBuilder& InstanceBuilder::add(std::vector<VariableId> scope, std::int64_t weight) {
  if (scope.empty()) throw Error(ErrorKind::InvalidArgument, "constraint scope must be nonempty");
  std::sort(scope.begin(), scope.end());
  if (std::adjacent_find(scope.begin(), scope.end()) != scope.end())
    throw Error(ErrorKind::InvalidArgument, "constraint scope has a repeated variable");
  std::vector<std::size_t> key;
  key.reserve(scope.size());
  for (auto v : scope) {
    if (v.index >= num_vars_)
      throw Error(ErrorKind::InvalidVariable, "scope references variable " + std::to_string(v.index));
    key.push_back(v.index);
  }
  if (auto it = index_.find(key); it != index_.end()) {
    auto& c = constraints_[it->second];
    c.weight = checked_add(c.weight, weight);
  } else {
    index_.emplace(std::move(key), constraints_.size());
    constraints_.push_back(Constraint{std::move(scope), weight});
  }
  return *this;
}

InstanceBuilder& InstanceBuilder::label(VariableId v, VarLabel label) {
  if (v.index >= num_vars_) throw Error(ErrorKind::InvalidVariable, "label for variable " + std::to_string(v.index));
  labels_[v.index] = std::move(label);
  return *this;
}

InstanceBuilder& InstanceBuilder::attribute(std::string key, std::string value) {
  attributes_[std::move(key)] = std::move(value);
  return *this;
}

VcspInstance InstanceBuilder::build() const {
  VcspInstance inst;
  inst.num_vars_ = num_vars_;
  inst.constraints_ = constraints_;
  inst.labels_ = labels_;
  inst.attributes_ = attributes_;
  inst.by_var_.assign(num_vars_, {});
  for (std::size_t c = 0; c < inst.constraints_.size(); ++c) {
    for (auto v : inst.constraints_[c].scope) inst.by_var_[v.index].push_back(c);
  }
  return inst;
}

namespace {

void require_length(const VcspInstance& instance, const Assignment& x) {
  if (x.size() != instance.num_vars()) {
    std::ostringstream os;
    os << "assignment has " << x.size() << " bits, instance has " << instance.num_vars() << " variables";
    throw Error(ErrorKind::LengthMismatch, os.str());
  }
}

bool all_set(const Constraint& c, const Assignment& x) {
  return std::all_of(c.scope.begin(), c.scope.end(), [&](VariableId v) { return x[v]; });
}

}  // namespace

std::int64_t evaluate(const VcspInstance& instance, const Assignment& x) {
  require_length(instance, x);
  std::int64_t total = 0;
  for (const auto& c : instance.constraints()) {
    if (all_set(c, x)) total = checked_add(total, c.weight);
  }
  return total;
}

std::int64_t flip_delta(const VcspInstance& instance, const Assignment& x, VariableId v) {
  require_length(instance, x);
  if (v.index >= instance.num_vars())
    throw Error(ErrorKind::InvalidVariable, "variable " + std::to_string(v.index) + " out of range");
  // Sum of weights of constraints through v whose other scope bits are all set.
  std::int64_t gain = 0;
  for (auto ci : instance.constraints_of(v)) {
    const auto& c = instance.constraints()[ci];
    bool rest = std::all_of(c.scope.begin(), c.scope.end(), [&](VariableId u) { return u == v || x[u]; });
    if (rest) gain = checked_add(gain, c.weight);
  }
  return x[v] ? checked_neg(gain) : gain;
}

std::vector<Move> improving_moves(const VcspInstance& instance, const Assignment& x) {
  require_length(instance, x);
  std::vector<Move> moves;
  for (std::size_t i = 0; i < instance.num_vars(); ++i) {
    auto d = flip_delta(instance, x, VariableId{i});
    if (d > 0) moves.push_back(Move{VariableId{i}, d});
  }
  return moves;
}

Graph primal_graph(const VcspInstance& instance) {
  std::vector<std::string> names;
  names.reserve(instance.num_vars());
  for (std::size_t i = 0; i < instance.num_vars(); ++i) names.push_back(instance.vertex_name(VariableId{i}));
  Graph g(std::move(names));
  for (const auto& c : instance.constraints()) {
    for (std::size_t a = 0; a < c.scope.size(); ++a) {
      for (std::size_t b = a + 1; b < c.scope.size(); ++b) g.add_edge(c.scope[a].index, c.scope[b].index);
    }
  }
  return g;
}

}  // namespace pbland
