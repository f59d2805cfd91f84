#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "linkwidth/bounds.hpp"
#include "linkwidth/diagram_gen.hpp"
#include "linkwidth/errors.hpp"
#include "linkwidth/pd_code.hpp"
#include "linkwidth/report_json.hpp"
#include "linkwidth/selfcheck.hpp"
#include "linkwidth/triangulate.hpp"
#include "linkwidth/twist.hpp"
#include "linkwidth/width.hpp"

namespace lw = linkwidth;
using nlohmann::ordered_json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw lw::Error(lw::Errc::MalformedInput, "cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void emit(const ordered_json& env, const std::string& out_path) {
  std::string text = lw::dump_report(env);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw lw::Error(lw::Errc::MalformedInput, "cannot write file '" + out_path + "'");
    f << text;
  }
}

ordered_json profile_json(const lw::WidthProfile& wp) {
  ordered_json j;
  j["profile"] = wp.profile;
  j["width"] = wp.width;
  j["sumWidth"] = wp.sumWidth;
  j["lexWidth"] = wp.lexWidth;
  return j;
}

struct Pipeline {
  lw::CombinatorialMap m;
  lw::FaceSet fs;
  lw::TwistDecomposition td;
  lw::TwistGraph tg;
};

Pipeline run_pipeline(const lw::PDCode& pd) {
  Pipeline p;
  p.m = lw::build_map(pd);
  p.fs = lw::faces(p.m);
  p.td = lw::twist_decomposition(p.m, p.fs);
  p.tg = lw::twist_graph(p.td, p.m);
  return p;
}

ordered_json analyze_payload(const lw::PDCode& pd) {
  ordered_json j;
  j["c"] = pd.crossing_count();
  if (pd.crossing_count() == 0) {
    j["t"] = 0;
    j["cyclic"] = false;
    j["degenerate"] = false;
    j["blocks"] = ordered_json::array();
    j["twistGraph"] = {{"v", 0}, {"e", 0}, {"maxDegree", 0}};
    j["faceDegrees"] = ordered_json::object();
    return j;
  }
  Pipeline p = run_pipeline(pd);
  bool cyclic = false;
  ordered_json blocks = ordered_json::array();
  for (const lw::TwistBlock& b : p.td.blocks) {
    cyclic = cyclic || b.cyclic;
    blocks.push_back({{"size", b.crossings.size()},
                      {"cyclic", b.cyclic},
                      {"extraInternal", b.extra_internal}});
  }
  j["t"] = p.td.t();
  j["cyclic"] = cyclic;
  j["degenerate"] = p.td.any_degenerate();
  j["blocks"] = std::move(blocks);
  j["twistGraph"] = {{"v", p.tg.map.vertex_count},
                     {"e", p.tg.map.edge_count()},
                     {"maxDegree", p.tg.map.max_degree()}};
  std::map<int, int> hist;
  for (int d : p.fs.degrees()) hist[d]++;
  ordered_json fd = ordered_json::object();
  for (auto [deg, count] : hist) fd[std::to_string(deg)] = count;
  j["faceDegrees"] = std::move(fd);
  return j;
}

ordered_json order_payload(const lw::PDCode& pd, bool exact) {
  ordered_json j;
  if (pd.crossing_count() == 0) {
    lw::WidthProfile empty;
    j["twistOrdering"] = ordered_json::array();
    j["twistProfile"] = profile_json(empty);
    j["liftedOrdering"] = ordered_json::array();
    j["liftedProfile"] = profile_json(empty);
    j["widthBound"] = {{"value", 0.0}, {"holds", true}};
    j["exact"] = exact ? ordered_json({{"width", 0}, {"ordering", ordered_json::array()}})
                       : ordered_json(nullptr);
    return j;
  }
  Pipeline p = run_pipeline(pd);
  lw::VertexOrdering phiT = lw::separator_ordering(p.tg.map);
  lw::WidthProfile wT = lw::ordering_width(p.tg.map.to_graph(), phiT);
  lw::VertexOrdering phiG = lw::lift_ordering(phiT, p.td);
  lw::WidthProfile wG = lw::ordering_width(p.m.to_graph(), phiG);
  double bound = lw::BoundConstants::standard().k612 * p.tg.map.max_degree() *
                 std::sqrt(static_cast<double>(p.tg.map.vertex_count));
  j["twistOrdering"] = phiT;
  j["twistProfile"] = profile_json(wT);
  j["liftedOrdering"] = phiG;
  j["liftedProfile"] = profile_json(wG);
  j["widthBound"] = {{"value", lw::sig6(bound)}, {"holds", wT.width <= bound + 1e-9}};
  if (exact) {
    lw::ExactWidth ex = lw::exact_width(p.tg.map.to_graph());
    j["exact"] = {{"width", ex.width},
                  {"ordering", ex.ordering},
                  {"dominated", ex.width <= wT.width}};
  } else {
    j["exact"] = nullptr;
  }
  return j;
}

ordered_json separator_payload(const lw::PDCode& pd) {
  ordered_json j;
  if (pd.crossing_count() == 0) {
    j["n"] = 0;
    j["s"] = ordered_json::array();
    j["part1"] = ordered_json::array();
    j["part2"] = ordered_json::array();
    j["sizeBound"] = 0.0;
    j["holds"] = true;
    return j;
  }
  lw::CombinatorialMap m = lw::build_map(pd);
  lw::SeparatorResult r = lw::separate(m);
  j["n"] = m.vertex_count;
  j["s"] = r.s;
  j["part1"] = r.part1;
  j["part2"] = r.part2;
  j["sizeBound"] = lw::sig6(std::sqrt(8.0 * m.vertex_count));
  j["holds"] = lw::separator_invariants_ok(m, r);
  return j;
}

ordered_json oracle_payload(const lw::PDCode& pd) {
  ordered_json j;
  if (pd.crossing_count() == 0) {
    j["exactWidth"] = 0;
    j["exactOrdering"] = ordered_json::array();
    j["constructedWidth"] = 0;
    j["dominated"] = true;
    return j;
  }
  Pipeline p = run_pipeline(pd);
  lw::ExactWidth ex = lw::exact_width(p.m.to_graph());
  lw::VertexOrdering phiT = lw::separator_ordering(p.tg.map);
  lw::VertexOrdering phiG = lw::lift_ordering(phiT, p.td);
  lw::WidthProfile wG = lw::ordering_width(p.m.to_graph(), phiG);
  j["exactWidth"] = ex.width;
  j["exactOrdering"] = ex.ordering;
  j["constructedWidth"] = wG.width;
  j["dominated"] = ex.width <= wG.width;
  return j;
}

ordered_json cheeger_payload(const lw::PDCode& pd) {
  lw::CombinatorialMap m = lw::build_map(pd);
  lw::CheegerResult cr = lw::graph_cheeger(m.to_graph());
  ordered_json j;
  j["h"] = cr.h.str();
  j["hValue"] = lw::sig6(cr.h.value());
  j["witness"] = cr.witness;
  return j;
}

ordered_json bounds_payload(const lw::PDCode& pd, std::optional<double> volume,
                            const lw::ClassFlags& flags, std::vector<std::string>& warnings) {
  lw::BoundsReport r = lw::full_report(pd, volume, flags);
  warnings = r.warnings;
  return lw::bounds_report_json(r);
}

ordered_json gen_payload(const std::string& kind, int n, std::uint64_t seed) {
  ordered_json j;
  j["kind"] = kind;
  j["n"] = n;
  j["seed"] = seed;
  if (kind == "diagram") {
    lw::PDCode pd = lw::random_diagram(n, seed);
    j["pd"] = pd.labels;
  } else {
    lw::CombinatorialMap m = lw::random_triangulation(n, seed);
    j["sigma"] = m.sigma;
    j["vertexOf"] = m.vertex_of;
  }
  return j;
}

ordered_json selfcheck_payload(std::uint64_t seed, bool tamper_v3, bool& all_ok) {
  lw::BoundConstants bc = lw::BoundConstants::standard();
  if (tamper_v3) bc.v3 += 0.1;
  lw::SelfCheckReport rep = lw::run_selfcheck(seed, bc);
  all_ok = rep.all_ok;
  ordered_json checks = ordered_json::array();
  for (const lw::CheckResult& c : rep.checks)
    checks.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
  ordered_json j;
  j["seed"] = seed;
  j["tampered"] = tamper_v3;
  j["allOk"] = rep.all_ok;
  j["checks"] = std::move(checks);
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"link diagram width orderings and spectral bound reports"};
  app.require_subcommand(1);

  std::string out_path;
  std::string format = "pd";
  std::string path;
  bool exact = false;
  double volume_val = 0;
  std::vector<std::string> classes;
  std::string kind;
  int gen_n = 0;
  std::uint64_t seed = 271828;
  bool tamper_v3 = false;

  CLI::App* analyze = app.add_subcommand("analyze", "counts, twist regions, face histogram");
  analyze->add_option("path", path, "PD JSON file")->required();

  CLI::App* order = app.add_subcommand("order", "separator ordering of the twist graph and its lift");
  order->add_option("path", path, "PD JSON file")->required();
  order->add_flag("--exact", exact, "also run the exact-width oracle on the twist graph");

  CLI::App* bounds = app.add_subcommand("bounds", "full bounds report");
  bounds->add_option("path", path, "PD JSON file")->required();
  CLI::Option* volume_opt =
      bounds->add_option("--volume", volume_val, "hyperbolic volume of the complement");
  bounds->add_option("--class", classes, "diagram class attestation")
      ->check(CLI::IsMember({"alternating", "highly-twisted", "tangle-prime"}));

  CLI::App* separator = app.add_subcommand("separator", "planar separator of the diagram graph");
  separator->add_option("path", path, "PD JSON file")->required();

  CLI::App* oracle = app.add_subcommand("oracle", "exact width of the diagram graph (c <= 20)");
  oracle->add_option("path", path, "PD JSON file")->required();

  CLI::App* cheeger = app.add_subcommand("cheeger-graph", "Cheeger constant of the diagram graph (c <= 24)");
  cheeger->add_option("path", path, "PD JSON file")->required();

  CLI::App* gen = app.add_subcommand("gen", "seeded random diagram or triangulation");
  gen->add_option("--kind", kind, "diagram | triangulation")
      ->required()
      ->check(CLI::IsMember({"diagram", "triangulation"}));
  gen->add_option("--n", gen_n, "size (crossings or vertices)")->required();
  gen->add_option("--seed", seed, "generator seed")->required();

  CLI::App* selfcheck = app.add_subcommand("selfcheck", "constant identities and property suite");
  selfcheck->add_option("--seed", seed, "suite seed");
  selfcheck->add_flag("--tamper-v3", tamper_v3, "negative control: perturb v3 and expect failures");

  for (CLI::App* sub : {analyze, order, bounds, separator, oracle, cheeger, gen, selfcheck}) {
    sub->add_option("--out", out_path, "write the report to this file instead of stdout");
    sub->add_option("--format", format, "input format")->check(CLI::IsMember({"pd"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::string command;
  std::string digest;
  try {
    ordered_json payload;
    std::vector<std::string> warnings;
    int exit_code = 0;

    auto load = [&]() {
      std::string text = read_file(path);
      digest = lw::content_digest(text);
      return lw::parse_pd(text);
    };

    if (analyze->parsed()) {
      command = "analyze";
      payload = analyze_payload(load());
    } else if (order->parsed()) {
      command = "order";
      payload = order_payload(load(), exact);
    } else if (bounds->parsed()) {
      command = "bounds";
      lw::ClassFlags flags;
      for (const std::string& c : classes) {
        if (c == "alternating") flags.alternating = true;
        if (c == "highly-twisted") flags.highly_twisted = true;
        if (c == "tangle-prime") flags.tangle_prime_attested = true;
      }
      std::optional<double> volume;
      if (volume_opt->count() > 0) volume = volume_val;
      payload = bounds_payload(load(), volume, flags, warnings);
    } else if (separator->parsed()) {
      command = "separator";
      payload = separator_payload(load());
    } else if (oracle->parsed()) {
      command = "oracle";
      payload = oracle_payload(load());
    } else if (cheeger->parsed()) {
      command = "cheeger-graph";
      payload = cheeger_payload(load());
    } else if (gen->parsed()) {
      command = "gen";
      payload = gen_payload(kind, gen_n, seed);
    } else {
      command = "selfcheck";
      bool all_ok = true;
      payload = selfcheck_payload(seed, tamper_v3, all_ok);
      if (!all_ok) exit_code = 1;
    }

    emit(lw::report_envelope(command, digest, std::move(payload), warnings), out_path);
    return exit_code;
  } catch (const lw::Error& e) {
    ordered_json payload = {
        {"error", {{"code", lw::errc_name(e.code())}, {"message", e.what()}}}};
    emit(lw::report_envelope(command, digest, std::move(payload), {}), out_path);
    return e.code() == lw::Errc::HypothesisViolated ? 3 : 2;
  } catch (const std::exception& e) {
    ordered_json payload = {{"error", {{"code", "Internal"}, {"message", e.what()}}}};
    emit(lw::report_envelope(command, digest, std::move(payload), {}), out_path);
    return 2;
  }
}
