// pbland: generate instances, run ascents, and check landscape and width claims.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "pbland/certificates.hpp"
#include "pbland/constructions.hpp"
#include "pbland/error.hpp"
#include "pbland/graphwidth.hpp"
#include "pbland/io.hpp"
#include "pbland/oracle.hpp"
#include "pbland/search.hpp"

using namespace pbland;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

constexpr const char* kOutDirEnv = "PBLAND_OUT_DIR";

struct ChainFlags {
  int n = 0;  // 0: same as m
  int m = 1;
  std::string variant = "p10";
  std::string convention = "a-side";

  CdParams params() const {
    return CdParams{n == 0 ? m : n, m, parse_variant(variant), parse_convention(convention)};
  }
};

void add_chain_flags(CLI::App* app, ChainFlags& f) {
  app->add_option("--n", f.n, "weight scale n (default: m)");
  app->add_option("--m", f.m, "number of gadgets");
  app->add_option("--variant", f.variant, "p10 or p00")->check(CLI::IsMember({"p10", "p00"}));
  app->add_option("--convention", f.convention, "bridge weight convention")
      ->check(CLI::IsMember({"a-side", "b-side"}));
}

// -o wins; otherwise $PBLAND_OUT_DIR/<fallback>; otherwise stdout.
std::optional<std::string> output_path(const std::string& flag, const std::string& fallback) {
  if (!flag.empty()) return flag;
  if (const char* dir = std::getenv(kOutDirEnv); dir && *dir) {
    std::filesystem::create_directories(dir);
    return (std::filesystem::path(dir) / fallback).string();
  }
  return std::nullopt;
}

void emit(const std::optional<std::string>& path, const std::string& text) {
  if (path) {
    write_text_file(*path, text);
  } else {
    std::cout << text;
  }
}

Assignment resolve_start(const VcspInstance& inst, const std::string& start) {
  if (start == "designated") {
    const auto& attrs = inst.attributes();
    auto gen = attrs.find("generator");
    if (gen == attrs.end() || gen->second != "cd-chain") {
      throw Error(ErrorKind::InvalidArgument, "designated start needs a cd-chain instance");
    }
    CdParams p{std::stoi(attrs.at("n")), std::stoi(attrs.at("m")), parse_variant(attrs.at("variant")),
               parse_convention(attrs.at("convention"))};
    return cd_start(p);
  }
  if (start == "zeros") return Assignment::zeros(inst.num_vars());
  auto x = Assignment::from_string(start);
  if (x.size() != inst.num_vars()) {
    throw Error(ErrorKind::LengthMismatch, "start has " + std::to_string(x.size()) + " bits, instance has " +
                                               std::to_string(inst.num_vars()));
  }
  return x;
}

std::int64_t default_budget(const VcspInstance& inst) {
  const auto& attrs = inst.attributes();
  auto gen = attrs.find("generator");
  if (gen != attrs.end() && gen->second == "cd-chain") return cd_default_max_steps(std::stoi(attrs.at("m")));
  return kDefaultMaxSteps;
}

int exit_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BudgetExceeded:
    case ErrorKind::TooLarge:
      return kExitBudget;
    case ErrorKind::ArithmeticOverflow:
    case ErrorKind::InterfaceMismatch:
      return kExitFailed;
    default:
      return kExitUsage;
  }
}

struct Source {
  std::string instance_file;
  ChainFlags chain;

  VcspInstance load() const {
    if (!instance_file.empty()) return instance_from_json(read_json_file(instance_file));
    return build_cd_chain(chain.params());
  }
};

void add_source(CLI::App* app, Source& s) {
  app->add_option("--instance", s.instance_file, "instance JSON (default: build a cd chain from the flags)");
  add_chain_flags(app, s.chain);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pseudo-Boolean VCSP landscape tools"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string out_flag;
  app.add_option("-o,--out", out_flag, "output file (default: $" + std::string(kOutDirEnv) + " or stdout)");

  int status = kExitOk;
  std::function<void()> action;

  // build -----------------------------------------------------------------
  auto* build = app.add_subcommand("build", "write an instance");
  build->require_subcommand(1);
  std::string build_format = "json";
  build->add_option("--format", build_format, "json or dot")->check(CLI::IsMember({"json", "dot"}));

  auto finish_build = [&](const VcspInstance& inst, const std::string& stem) {
    std::ostringstream text;
    if (build_format == "dot") {
      write_dot(text, inst);
    } else {
      text << instance_to_json(inst).dump() << '\n';
    }
    const auto path = output_path(out_flag, stem + (build_format == "dot" ? ".dot" : ".json"));
    emit(path, text.str());
    std::ostream& summary = path ? std::cout : std::cerr;
    summary << "variables=" << inst.num_vars() << " constraints=" << inst.constraints().size();
    for (const auto& [k, v] : inst.attributes()) summary << ' ' << k << '=' << v;
    if (path) summary << " path=" << *path;
    summary << '\n';
  };

  ChainFlags build_chain;
  auto* b_chain = build->add_subcommand("cd-chain", "controlled doubling chain");
  add_chain_flags(b_chain, build_chain);
  b_chain->callback([&] { action = [&] { finish_build(build_cd_chain(build_chain.params()), "cd-chain"); }; });

  int g_n = 1, g_k = 1, g_P = 0, g_Q = 0, g_R = 0, g_S = 0;
  std::string g_conv = "a-side";
  auto* b_gadget = build->add_subcommand("cd-gadget", "single closed gadget");
  b_gadget->add_option("--n", g_n)->required();
  b_gadget->add_option("--k", g_k)->required();
  b_gadget->add_option("--P", g_P, "x_(k+1,6)")->check(CLI::Range(0, 1));
  b_gadget->add_option("--Q", g_Q, "x_(k-1,B)")->check(CLI::Range(0, 1));
  b_gadget->add_option("--R", g_R, "x_(k+1,A)")->check(CLI::Range(0, 1));
  b_gadget->add_option("--S", g_S, "x_(k-1,1)")->check(CLI::Range(0, 1));
  b_gadget->add_option("--convention", g_conv)->check(CLI::IsMember({"a-side", "b-side"}));
  b_gadget->callback([&] {
    action = [&] {
      finish_build(build_cd_gadget(g_n, g_k, GadgetBoundary{g_P == 1, g_Q == 1, g_R == 1, g_S == 1},
                                   parse_convention(g_conv)),
                   "cd-gadget");
    };
  });

  int ms_n = 1;
  auto* b_ms = build->add_subcommand("ms-scopes", "scope structure with unit weights");
  b_ms->add_option("--n", ms_n)->required();
  b_ms->callback([&] { action = [&] { finish_build(build_ms_scopes(ms_n), "ms-scopes"); }; });

  // ascend ----------------------------------------------------------------
  auto* ascend = app.add_subcommand("ascend", "run a strict ascent");
  Source asc_src;
  add_source(ascend, asc_src);
  std::string rule = "first", start = "designated", trace_path;
  std::uint64_t seed = 0;
  std::int64_t max_steps = -1, expect_steps = -1;
  bool audit = false;
  ascend->add_option("--rule", rule)->check(CLI::IsMember({"first", "steepest", "random"}));
  ascend->add_option("--seed", seed, "seed for --rule random");
  ascend->add_option("--start", start, "designated, zeros, or a bit string");
  ascend->add_option("--max-steps", max_steps);
  ascend->add_flag("--audit", audit, "count improving moves at every step");
  ascend->add_option("--expect-steps", expect_steps);
  ascend->add_option("--trace", trace_path, "write the JSONL trace here");
  ascend->callback([&] {
    action = [&] {
      const auto inst = asc_src.load();
      const auto x0 = resolve_start(inst, start);
      PivotRule pr{parse_pivot_kind(rule), seed};
      const auto trace = run_ascent(inst, x0, pr, max_steps >= 0 ? max_steps : default_budget(inst), audit);
      if (const auto path = output_path(trace_path, "trace.jsonl")) {
        std::ostringstream t;
        write_trace_jsonl(t, inst, trace);
        write_text_file(*path, t.str());
      }
      auto summary = trace_summary(trace);
      if (audit) {
        std::size_t max_count = 0;
        for (const auto& s : trace.steps) max_count = std::max(max_count, s.improving_count);
        summary["max_improving_count"] = max_count;
        summary["improving_count_one_at_all_steps"] = trace.violation_count == 0;
      }
      bool ok = true;
      if (expect_steps >= 0) {
        summary["expected_steps"] = expect_steps;
        ok = ok && static_cast<std::int64_t>(trace.steps.size()) == expect_steps;
      }
      if (audit) ok = ok && trace.audited_unique == Audit::Yes;
      summary["pass"] = ok && !trace.truncated;
      emit(output_path(out_flag, "ascend.json"), dump(summary));
      status = trace.truncated ? kExitBudget : (ok ? kExitOk : kExitFailed);
    };
  });

  // verify ----------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "check a claim");
  verify->require_subcommand(1);

  int v_n = 0, v_k = 1;
  std::string v_conv = "a-side";
  auto* v_peaks = verify->add_subcommand("peaks", "peak table of a gadget, or all peaks of --instance");
  std::string peaks_instance;
  v_peaks->add_option("--instance", peaks_instance);
  v_peaks->add_option("--n", v_n);
  v_peaks->add_option("--k", v_k);
  v_peaks->add_option("--convention", v_conv)->check(CLI::IsMember({"a-side", "b-side"}));
  v_peaks->callback([&] {
    action = [&] {
      if (!peaks_instance.empty()) {
        const auto inst = instance_from_json(read_json_file(peaks_instance));
        json list = json::array();
        for (const auto& p : enumerate_peaks(inst)) list.push_back(p.to_string());
        emit(output_path(out_flag, "peaks.json"), dump({{"count", list.size()}, {"peaks", list}}));
        return;
      }
      const auto rep = verify_peak_table(v_n == 0 ? v_k : v_n, v_k, parse_convention(v_conv));
      emit(output_path(out_flag, "peaks.json"), dump(report_to_json(rep)));
      status = rep.all_match ? kExitOk : kExitFailed;
    };
  });

  auto* v_explore = verify->add_subcommand("explore", "exhaustive ascent graph from a start");
  Source exp_src;
  add_source(v_explore, exp_src);
  std::string exp_start = "designated";
  std::size_t node_limit = kDefaultNodeLimit;
  v_explore->add_option("--start", exp_start);
  v_explore->add_option("--node-limit", node_limit);
  v_explore->callback([&] {
    action = [&] {
      const auto inst = exp_src.load();
      const auto rep = explore_ascent_graph(inst, resolve_start(inst, exp_start), node_limit);
      emit(output_path(out_flag, "explore.json"), dump(report_to_json(rep)));
      status = rep.unique_maximal_path ? kExitOk : kExitFailed;
    };
  });

  std::string cert_name, cert_file, cert_instance;
  auto* v_dec = verify->add_subcommand("decomposition", "validate a path decomposition");
  v_dec->add_option("--cert", cert_name, "bundled certificate name");
  v_dec->add_option("--file", cert_file, "decomposition JSON");
  v_dec->add_option("--instance", cert_instance, "instance JSON for --file");
  v_dec->add_option("--k", v_k, "gadget index for bundled certificates");
  v_dec->callback([&] {
    action = [&] {
      DecompositionReport rep;
      json extra;
      if (!cert_file.empty()) {
        if (cert_instance.empty()) throw Error(ErrorKind::InvalidArgument, "--file needs --instance");
        const auto h = constraint_hypergraph(instance_from_json(read_json_file(cert_instance)));
        rep = validate_decomposition(h, decomposition_from_json(read_json_file(cert_file)));
      } else {
        const auto bundle = bundled_certificates(v_k);
        const auto* c = bundle.find_decomposition(cert_name);
        if (!c) throw Error(ErrorKind::InvalidArgument, "unknown decomposition '" + cert_name + "'");
        if (!c->edges_available) {
          rep = validate_decomposition_without_edges(c->decomposition);
        } else {
          const auto inst = cert_name == "prop3" ? build_cd_gadget(v_k, v_k, {}) : build_ms_scopes(v_k + 1);
          const auto h = constraint_hypergraph(inst).induced(c->decomposition.vertices());
          rep = validate_decomposition(h, c->decomposition, c->first_must_contain, c->last_must_contain);
        }
        extra = {{"certificate", c->name}, {"note", c->note}};
      }
      auto j = report_to_json(rep);
      if (!extra.is_null()) j.update(extra);
      emit(output_path(out_flag, "decomposition.json"), dump(j));
      status = rep.valid ? kExitOk : kExitFailed;
    };
  });

  auto* v_minor = verify->add_subcommand("minor", "validate a clique-minor certificate");
  v_minor->add_option("--cert", cert_name, "bundled certificate name");
  v_minor->add_option("--file", cert_file, "certificate JSON");
  v_minor->add_option("--instance", cert_instance, "instance JSON for --file");
  v_minor->add_option("--k", v_k, "gadget index for bundled certificates");
  v_minor->callback([&] {
    action = [&] {
      MinorReport rep;
      json extra;
      if (!cert_file.empty()) {
        if (cert_instance.empty()) throw Error(ErrorKind::InvalidArgument, "--file needs --instance");
        rep = validate_minor(primal_graph(instance_from_json(read_json_file(cert_instance))),
                             minor_from_json(read_json_file(cert_file)));
      } else {
        const auto bundle = bundled_certificates(v_k);
        const auto* c = bundle.find_minor(cert_name);
        if (!c) throw Error(ErrorKind::InvalidArgument, "unknown minor certificate '" + cert_name + "'");
        if (!c->edges_available) {
          rep = validate_minor_without_edges(c->certificate);
        } else {
          const auto inst = cert_name == "prop3-k4" ? build_cd_gadget(v_k, v_k, {}) : build_ms_scopes(v_k + 1);
          rep = validate_minor(primal_graph(inst), c->certificate);
        }
        extra = {{"certificate", c->name}, {"target", c->certificate.target}, {"note", c->note}};
      }
      auto j = report_to_json(rep);
      if (!extra.is_null()) j.update(extra);
      emit(output_path(out_flag, "minor.json"), dump(j));
      status = rep.valid ? kExitOk : kExitFailed;
    };
  });

  std::string pw_graph;
  int pw_n = 1;
  auto* v_pw = verify->add_subcommand("pathwidth", "exact pathwidth of a small primal graph");
  v_pw->add_option("--instance", cert_instance, "instance JSON");
  v_pw->add_option("--graph", pw_graph, "cd-gadget or ms-scopes")->check(CLI::IsMember({"cd-gadget", "ms-scopes"}));
  v_pw->add_option("--n", pw_n, "n for --graph");
  v_pw->add_option("--k", v_k, "gadget index for --graph cd-gadget");
  std::optional<int> expect_width;
  v_pw->add_option("--expect", expect_width, "exit 1 unless the width equals this");
  v_pw->callback([&] {
    action = [&] {
      VcspInstance inst;
      if (!cert_instance.empty()) {
        inst = instance_from_json(read_json_file(cert_instance));
      } else if (pw_graph == "cd-gadget") {
        inst = build_cd_gadget(std::max(pw_n, v_k), v_k, {});
      } else if (pw_graph == "ms-scopes") {
        inst = build_ms_scopes(pw_n);
      } else {
        throw Error(ErrorKind::InvalidArgument, "give --instance or --graph");
      }
      const auto g = primal_graph(inst);
      const auto res = exact_pathwidth_with_order(g);
      json order = json::array();
      for (auto v : res.order) order.push_back(g.name(v));
      json j{{"vertices", g.vertex_count()},
             {"edges", g.edge_count()},
             {"pathwidth", res.width},
             {"order", order},
             {"decomposition", decomposition_to_json(decomposition_from_order(g, res.order))}};
      if (expect_width) j["expected"] = *expect_width;
      emit(output_path(out_flag, "pathwidth.json"), dump(j));
      status = (!expect_width || *expect_width == res.width) ? kExitOk : kExitFailed;
    };
  });

  auto* v_delta = verify->add_subcommand("delta-table", "replay the designated ascent against the delta table");
  v_delta->add_option("--n", v_n)->required();
  v_delta->add_option("--k", v_k)->required();
  v_delta->add_option("--convention", v_conv)->check(CLI::IsMember({"a-side", "b-side"}));
  v_delta->callback([&] {
    action = [&] {
      const auto rep = verify_delta_table(v_n, v_k, parse_convention(v_conv));
      emit(output_path(out_flag, "delta-table.json"), dump(report_to_json(rep)));
      status = rep.all_match ? kExitOk : kExitFailed;
    };
  });

  auto* list = app.add_subcommand("certificates", "list bundled certificates");
  list->callback([&] {
    action = [&] {
      json j = json::array();
      const auto bundle = bundled_certificates(1);
      for (const auto& d : bundle.decompositions)
        j.push_back({{"name", d.name}, {"kind", "decomposition"}, {"width", d.decomposition.width()}, {"note", d.note}});
      for (const auto& m : bundle.minors)
        j.push_back({{"name", m.name}, {"kind", "minor"}, {"target", m.certificate.target}, {"note", m.note}});
      emit(output_path(out_flag, "certificates.json"), dump(j));
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (action) action();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return status;
}
