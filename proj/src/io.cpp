#include "pbland/io.hpp"

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "pbland/checked.hpp"
#include "pbland/error.hpp"

namespace pbland {

namespace {

template <typename F>
auto parse_guard(const char* what, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string(what) + ": " + e.what());
  }
}

json string_lists(const std::vector<std::vector<std::string>>& lists) {
  json out = json::array();
  for (const auto& l : lists) out.push_back(l);
  return out;
}

}  // namespace

json instance_to_json(const VcspInstance& instance) {
  json j;
  j["num_vars"] = instance.num_vars();
  json labels = json::array();
  for (std::size_t i = 0; i < instance.num_vars(); ++i) {
    const auto& l = instance.label(VariableId{i});
    if (l) labels.push_back({{"var", i}, {"gadget", l->gadget}, {"slot", l->slot}});
  }
  j["labels"] = std::move(labels);
  json cons = json::array();
  for (const auto& c : instance.constraints()) {
    json scope = json::array();
    for (auto v : c.scope) scope.push_back(v.index);
    cons.push_back({{"scope", std::move(scope)}, {"weight", c.weight}});
  }
  j["constraints"] = std::move(cons);
  json gen = json::object();
  for (const auto& [k, v] : instance.attributes()) gen[k] = v;
  j["generator"] = std::move(gen);
  return j;
}

VcspInstance instance_from_json(const json& j) {
  return parse_guard("instance", [&] {
    InstanceBuilder b(j.at("num_vars").get<std::size_t>());
    if (j.contains("labels")) {
      for (const auto& l : j.at("labels")) {
        const auto var = l.at("var").get<std::size_t>();
        if (var >= b.num_vars()) throw Error(ErrorKind::InvalidVariable, "label for variable " + std::to_string(var));
        b.label(VariableId{var}, VarLabel{l.at("gadget").get<int>(), l.at("slot").get<std::string>()});
      }
    }
    for (const auto& c : j.at("constraints")) {
      std::vector<VariableId> scope;
      for (const auto& v : c.at("scope")) scope.push_back(VariableId{v.get<std::size_t>()});
      b.add(std::move(scope), c.at("weight").get<std::int64_t>());
    }
    if (j.contains("generator")) {
      for (const auto& [k, v] : j.at("generator").items()) b.attribute(k, v.get<std::string>());
    }
    return b.build();
  });
}

json decomposition_to_json(const PathDecomposition& pd) { return {{"bins", string_lists(pd.bins)}}; }

PathDecomposition decomposition_from_json(const json& j) {
  return parse_guard("decomposition", [&] {
    PathDecomposition pd;
    pd.bins = j.at("bins").get<std::vector<std::vector<std::string>>>();
    return pd;
  });
}

json minor_to_json(const MinorCertificate& cert) {
  return {{"branch_sets", string_lists(cert.branch_sets)}, {"target", cert.target}};
}

MinorCertificate minor_from_json(const json& j) {
  return parse_guard("minor certificate", [&] {
    MinorCertificate c;
    c.branch_sets = j.at("branch_sets").get<std::vector<std::vector<std::string>>>();
    c.target = j.contains("target") ? j.at("target").get<int>() : static_cast<int>(c.branch_sets.size());
    return c;
  });
}

json report_to_json(const DecompositionReport& r) {
  return {{"valid", r.valid}, {"width", r.width}, {"edges_checked", r.edges_checked}, {"violations", r.violations}};
}

json report_to_json(const MinorReport& r) {
  return {{"valid", r.valid}, {"edges_checked", r.edges_checked}, {"violations", r.violations}};
}

json report_to_json(const AscentGraphReport& r) {
  json peaks = json::array();
  for (const auto& p : r.peaks_reached) peaks.push_back(p.to_string());
  json j{{"start", r.start.to_string()},
         {"reachable_count", r.reachable_count},
         {"arcs", r.arcs},
         {"peaks_reached", std::move(peaks)},
         {"max_out_degree", r.max_out_degree},
         {"unique_maximal_path", r.unique_maximal_path}};
  j["path_length"] = r.path_length ? json(*r.path_length) : json(nullptr);
  return j;
}

json report_to_json(const PeakTableReport& r) {
  json cases = json::array();
  for (const auto& c : r.cases) {
    cases.push_back({{"P", int(c.P)},
                     {"Q", int(c.Q)},
                     {"R", int(c.R)},
                     {"expected", c.expected},
                     {"actual", c.actual},
                     {"missing", c.missing},
                     {"unexpected", c.unexpected},
                     {"match", c.match}});
  }
  return {{"n", r.n},
          {"k", r.k},
          {"convention", std::string(to_string(r.convention))},
          {"assumption", "S = x_(k-1,1) held at 0"},
          {"cases", std::move(cases)},
          {"all_match", r.all_match}};
}

json report_to_json(const DeltaTableReport& r) {
  json rows = json::array();
  const auto& table = delta_table_rows();
  for (const auto& row : r.rows) {
    json entries = json::array();
    for (std::size_t i = 0; i < 8; ++i) {
      const auto& e = row.entries[i];
      entries.push_back({{"slot", std::string(kCdSlots[i])},
                         {"formula", table[row.row - 1].entries[i].text},
                         {"expected", e.expected},
                         {"actual", e.actual},
                         {"bridge", e.bridge},
                         {"match", e.match}});
    }
    json jr{{"row", row.row}, {"P", int(row.P)}, {"Q", int(row.Q)}, {"state", row.state}};
    jr["trajectory_step"] = row.trajectory_step ? json(*row.trajectory_step) : json(nullptr);
    jr["entries"] = std::move(entries);
    jr["match"] = row.match;
    rows.push_back(std::move(jr));
  }
  return {{"n", r.n},
          {"k", r.k},
          {"convention", std::string(to_string(r.convention))},
          {"m_k", r.m_k},
          {"s_k", r.s_k},
          {"entries_checked", r.entries_checked},
          {"entries_matched", r.entries_matched},
          {"rows", std::move(rows)},
          {"all_match", r.all_match}};
}

json trace_summary(const AscentTrace& trace) {
  json j{{"rule", trace.rule},
         {"start", trace.start.to_string()},
         {"end", trace.end.to_string()},
         {"steps", trace.steps.size()},
         {"start_fitness", trace.start_fitness},
         {"end_fitness", trace.end_fitness()},
         {"truncated", trace.truncated},
         {"audited_unique", std::string(to_string(trace.audited_unique))},
         {"violations", trace.violation_count}};
  if (trace.first_violation) {
    j["first_violation"] = {{"step", trace.first_violation->step},
                            {"improving_count", trace.first_violation->improving_count}};
  } else {
    j["first_violation"] = nullptr;
  }
  return j;
}

void write_trace_jsonl(std::ostream& out, const VcspInstance& instance, const AscentTrace& trace) {
  json header = trace_summary(trace);
  header["record"] = "header";
  out << header.dump() << '\n';
  for (std::size_t t = 0; t < trace.steps.size(); ++t) {
    const auto& s = trace.steps[t];
    json rec{{"step", t + 1}, {"var", s.var.index}};
    const auto& l = instance.label(s.var);
    rec["label"] = l ? json::array({l->gadget, l->slot}) : json(nullptr);
    rec["delta"] = s.delta;
    rec["fitness"] = s.fitness_after;
    rec["improving_count"] = s.improving_count;
    out << rec.dump() << '\n';
  }
}

void write_dot(std::ostream& out, const VcspInstance& instance) {
  std::map<std::pair<std::size_t, std::size_t>, std::int64_t> edge_weight;
  std::vector<std::int64_t> unary(instance.num_vars(), 0);
  for (const auto& c : instance.constraints()) {
    if (c.scope.size() == 1) {
      unary[c.scope[0].index] = checked_add(unary[c.scope[0].index], c.weight);
      continue;
    }
    for (std::size_t a = 0; a < c.scope.size(); ++a) {
      for (std::size_t b = a + 1; b < c.scope.size(); ++b) {
        auto& w = edge_weight[{c.scope[a].index, c.scope[b].index}];
        w = checked_add(w, c.weight);
      }
    }
  }
  out << "graph primal {\n";
  for (std::size_t v = 0; v < instance.num_vars(); ++v) {
    out << "  \"" << instance.vertex_name(VariableId{v}) << "\" [label=\"" << instance.vertex_name(VariableId{v})
        << "\\n" << unary[v] << "\"];\n";
  }
  for (const auto& [e, w] : edge_weight) {
    out << "  \"" << instance.vertex_name(VariableId{e.first}) << "\" -- \""
        << instance.vertex_name(VariableId{e.second}) << "\" [label=\"" << w << "\"];\n";
  }
  out << "}\n";
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoFailure, "cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::IoFailure, "cannot write '" + path + "'");
  out << text;
  if (!out) throw Error(ErrorKind::IoFailure, "write to '" + path + "' failed");
}

}  // namespace pbland
