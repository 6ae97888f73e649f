#include "gqforge_cli/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "gqforge/catalog.hpp"
#include "gqforge/construction.hpp"
#include "gqforge/identities.hpp"
#include "gqforge/incidence.hpp"
#include "gqforge/json_io.hpp"
#include "gqforge/sieve.hpp"
#include "gqforge/suzuki.hpp"
#include "render.hpp"

namespace gqforge::cli {

namespace {

using nlohmann::json;

constexpr const char* kExitCodeHelp =
    "Exit codes: 0 pass or found, 1 negative result (not a GQ, axioms fail, no polarity, sieve survivors, ...), "
    "2 usage error or malformed input.";

struct Output {
  std::ostream* stream;
  bool text;

  void emit(const json& j) const {
    if (text) {
      render_text(j, *stream);
    } else {
      *stream << j.dump(2) << '\n';
    }
  }

  void emit_line(const json& j) const { *stream << (text ? render_line(j) : j.dump()) << '\n'; }
};

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotAGQ:
    case ErrorKind::AxiomsFail:
    case ErrorKind::OrderMismatch:
    case ErrorKind::OrderNotAdmissible:
    case ErrorKind::NotRegular:
    case ErrorKind::NotIncident:
    case ErrorKind::NotRegularPoint:
    case ErrorKind::HypothesisFail:
      return kExitNegative;
    default:
      return kExitUsage;
  }
}

SearchLimits limits_from_environment(std::optional<std::size_t> flag) {
  SearchLimits limits;
  if (const char* env = std::getenv("GQFORGE_SIZE_CAP"); env && *env) {
    char* end = nullptr;
    const auto value = std::strtoull(env, &end, 10);
    if (*end != '\0' || value == 0) throw Error(ErrorKind::InvalidInput, "GQFORGE_SIZE_CAP must be a positive integer");
    limits.max_vertices = static_cast<std::size_t>(value);
  }
  if (flag) limits.max_vertices = *flag;
  return limits;
}

IncidenceStructure load_gq(const std::string& path) { return json_io::incidence_from_json(json_io::load_file(path)); }

FiniteGroup load_group(const std::string& arg) {
  for (const char* prefix : {"cyclic:", "product:", "file:"}) {
    if (arg.rfind(prefix, 0) == 0) return json_io::parse_group_spec(arg);
  }
  return json_io::group_from_json(json_io::load_file(arg));
}

std::vector<Permutation> load_action(const std::string& path) { return json_io::action_from_json(json_io::load_file(path)); }

void write_json_file(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::InvalidInput, "cannot write " + path.string());
  out << j.dump(2) << '\n';
}

std::vector<Element> parse_index_list(const std::string& text) {
  std::vector<Element> result;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const auto value = std::stoul(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      result.push_back(static_cast<Element>(value));
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidInput, "'" + item + "' is not a non-negative integer");
    }
  }
  return result;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized quadrangles from group subsets, point-regular actions and order sieves.", "gqforge"};
  app.footer(kExitCodeHelp);
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  std::string output_path;
  std::optional<std::size_t> size_cap;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("-o,--output", output_path, "Write output to this file instead of standard output");
  app.add_option("--size-cap", size_cap, "Cap on points+lines for graph searches (default 200, or GQFORGE_SIZE_CAP)");

  std::string gq_path, gq_path_b, group_arg, sigma_text, point_action_path, line_action_path, action_path, profile_path;
  std::string fixture, mode = "points", out_dir, order_spec;
  std::string group_out, point_action_out, line_action_out;
  std::optional<Point> base_point_opt;
  std::optional<LineId> base_line_opt;
  std::size_t k = 0, max_results = 0;
  bool reduce = false;
  std::uint64_t from = 2, to = 2, s_param = 1, t_param = 1;
  std::string emit = "survivors";
  unsigned threads = 1, segment_bits = 22;

  auto* verify = app.add_subcommand("verify", "Check the generalized quadrangle axioms");
  verify->add_option("gq", gq_path, "Incidence JSON")->required();
  auto* dual_cmd = app.add_subcommand("dual", "Print the dual incidence structure");
  dual_cmd->add_option("gq", gq_path, "Incidence JSON")->required();
  auto* aut = app.add_subcommand("aut", "Collineation group generators and order");
  aut->add_option("gq", gq_path, "Incidence JSON")->required();
  auto* polarity = app.add_subcommand("polarity", "Search for a polarity");
  polarity->add_option("gq", gq_path, "Incidence JSON")->required();
  auto* iso = app.add_subcommand("iso", "Test two incidence structures for isomorphism");
  iso->add_option("a", gq_path, "First incidence JSON")->required();
  iso->add_option("b", gq_path_b, "Second incidence JSON")->required();

  auto* build = app.add_subcommand("build-sigma", "Build the quadrangle of a group subset Sigma");
  build->add_option("--group", group_arg, "Group spec: cyclic:n, product:SPEC,SPEC or file:path")->required();
  build->add_option("--sigma", sigma_text, "Comma-separated element indices, containing 0")->required();
  build->add_option("--group-out", group_out, "Also write the group JSON here");
  build->add_option("--point-action-out", point_action_out, "Also write the point action JSON here");
  build->add_option("--line-action-out", line_action_out, "Also write the line action JSON here");

  auto* extract = app.add_subcommand("extract-sigma", "Recover Sigma from a group regular on points and lines");
  extract->add_option("--gq", gq_path, "Incidence JSON")->required();
  extract->add_option("--group", group_arg, "Group JSON file or group spec")->required();
  extract->add_option("--point-action", point_action_path, "Point action JSON")->required();
  extract->add_option("--line-action", line_action_path, "Line action JSON")->required();
  extract->add_option("--base-point", base_point_opt, "Distinguished point (default 0)");
  extract->add_option("--base-line", base_line_opt, "Line through the base point (default: lexicographically smallest)");

  auto* search = app.add_subcommand("search-sigma", "Enumerate every Sigma of a group");
  search->add_option("--group", group_arg, "Group spec")->required();
  search->add_flag("--reduce", reduce, "One representative per automorphism orbit (order <= 16)");

  auto* catalog = app.add_subcommand("catalog", "Print a fixture: ordinary, w2, w3 or payne-w3");
  catalog->add_option("name", fixture, "Fixture name")->required()->check(CLI::IsMember(catalog_names()));

  auto* regular = app.add_subcommand("regular", "Subgroups of the collineation group acting regularly");
  regular->add_option("gq", gq_path, "Incidence JSON")->required();
  regular->add_option("--k", k, "Subgroup order (default: number of points)");
  regular->add_option("--mode", mode, "points or points-and-lines")->check(CLI::IsMember({"points", "points-and-lines"}));
  regular->add_option("--max", max_results, "Report at most this many subgroups (0 = all)");
  regular->add_option("--out-dir", out_dir, "Write group_i.json, point_action_i.json and line_action_i.json here");

  auto* delta = app.add_subcommand("delta", "Delta set of a point-regular action");
  delta->add_option("--gq", gq_path, "Incidence JSON")->required();
  delta->add_option("--group", group_arg, "Group JSON file or group spec")->required();
  delta->add_option("--action", action_path, "Point action JSON")->required();
  delta->add_option("--base", base_point_opt, "Distinguished point (default 0)");

  auto* yoshiara = app.add_subcommand("yoshiara", "Conjugacy-class and normal-subgroup checks on a Delta profile");
  yoshiara->add_option("--profile", profile_path, "Profile JSON written by 'delta'")->required();

  auto* sieve = app.add_subcommand("sieve", "Order conditions C1-C5 over a range of s (JSON lines)");
  sieve->add_option("--from", from, "First s (>= 2)")->required();
  sieve->add_option("--to", to, "Last s")->required();
  sieve->add_option("--emit", emit, "survivors or all")->check(CLI::IsMember({"survivors", "all"}));
  sieve->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1U, 256U));
  sieve->add_option("--segment-bits", segment_bits, "log2 of the segment length")->check(CLI::Range(4U, 30U));

  auto* feasibility = app.add_subcommand("feasibility", "Suzuki-factor filters for order s or (u^2, u^3)");
  feasibility->add_option("--order", order_spec, "s:N or uq:N")->required();

  auto* identities = app.add_subcommand("identities", "Verify the integer identities and bounds");

  auto* params = app.add_subcommand("params", "Necessary parameter conditions for order (s,t)");
  params->add_option("--s", s_param, "s >= 1")->required()->check(CLI::PositiveNumber);
  params->add_option("--t", t_param, "t >= 1")->required()->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << "run with --help for usage\n";
    return kExitUsage;
  }

  std::ofstream file_out;
  if (!output_path.empty()) {
    file_out.open(output_path);
    if (!file_out) {
      err << "error: cannot write " << output_path << '\n';
      return kExitUsage;
    }
  }
  const Output o{output_path.empty() ? &out : &file_out, format == "text"};

  try {
    const SearchLimits limits = limits_from_environment(size_cap);

    if (verify->parsed()) {
      const auto check = check_gq(load_gq(gq_path));
      o.emit(json_io::to_json(check));
      return std::holds_alternative<GQCertificate>(check) ? kExitPass : kExitNegative;
    }
    if (dual_cmd->parsed()) {
      o.emit(json_io::to_json(dual(load_gq(gq_path))));
      return kExitPass;
    }
    if (aut->parsed()) {
      o.emit(json_io::to_json(automorphisms(load_gq(gq_path), limits)));
      return kExitPass;
    }
    if (polarity->parsed()) {
      const auto found = find_polarity(load_gq(gq_path), limits);
      o.emit(found ? json_io::to_json(*found) : json{{"polarity", false}});
      return found ? kExitPass : kExitNegative;
    }
    if (iso->parsed()) {
      const auto found = isomorphic(load_gq(gq_path), load_gq(gq_path_b), limits);
      o.emit(found ? json_io::to_json(*found) : json{{"isomorphic", false}});
      return found ? kExitPass : kExitNegative;
    }
    if (build->parsed()) {
      const auto group = load_group(group_arg);
      const auto sigma = SigmaSet::of(group, parse_index_list(sigma_text));
      const auto report = check_sigma_axioms(group, sigma);
      if (!report.pass) {
        o.emit(json_io::to_json(report));
        return kExitNegative;
      }
      const auto built = build_gq_from_sigma(group, sigma);
      if (!group_out.empty()) write_json_file(group_out, json_io::to_json(group));
      if (!point_action_out.empty()) write_json_file(point_action_out, json_io::action_to_json(built.point_action));
      if (!line_action_out.empty()) write_json_file(line_action_out, json_io::action_to_json(built.line_action));
      o.emit(json_io::to_json(built.gq));
      return kExitPass;
    }
    if (extract->parsed()) {
      const auto q = load_gq(gq_path);
      const auto group = load_group(group_arg);
      const auto sigma = extract_sigma(q, group, load_action(point_action_path), load_action(line_action_path),
                                       base_point_opt.value_or(0), base_line_opt);
      o.emit(json_io::sigma_to_json(group, sigma));
      return kExitPass;
    }
    if (search->parsed()) {
      const auto group = load_group(group_arg);
      const auto found = search_sigma(group, reduce);
      json sigmas = json::array();
      for (const auto& sigma : found) sigmas.push_back(sigma.members());
      o.emit({{"group_order", group.order()},
              {"s", *sigma_order_parameter(group.order())},
              {"reduced", reduce},
              {"count", found.size()},
              {"sigmas", sigmas}});
      return found.empty() ? kExitNegative : kExitPass;
    }
    if (catalog->parsed()) {
      o.emit(json_io::to_json(catalog_fixture(fixture)));
      return kExitPass;
    }
    if (regular->parsed()) {
      const auto q = load_gq(gq_path);
      const auto regular_mode = mode == "points" ? RegularityMode::Points : RegularityMode::PointsAndLines;
      const auto found = regular_subgroups(q, k == 0 ? q.num_points() : k, regular_mode, limits);
      const std::size_t shown = max_results == 0 ? found.size() : std::min(max_results, found.size());
      json subgroups = json::array();
      for (std::size_t i = 0; i < shown; ++i) subgroups.push_back(json_io::to_json(found[i]));
      if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        for (std::size_t i = 0; i < shown; ++i) {
          const std::filesystem::path dir(out_dir);
          write_json_file(dir / ("group_" + std::to_string(i) + ".json"), json_io::to_json(found[i].group));
          write_json_file(dir / ("point_action_" + std::to_string(i) + ".json"), json_io::action_to_json(found[i].point_action));
          write_json_file(dir / ("line_action_" + std::to_string(i) + ".json"), json_io::action_to_json(found[i].line_action));
        }
      }
      o.emit({{"count", found.size()}, {"shown", shown}, {"subgroups", subgroups}});
      return found.empty() ? kExitNegative : kExitPass;
    }
    if (delta->parsed()) {
      const auto q = load_gq(gq_path);
      const auto group = load_group(group_arg);
      const auto profile = delta_profile(q, group, load_action(action_path), base_point_opt.value_or(0));
      o.emit(json_io::to_json(profile, group));
      return kExitPass;
    }
    if (yoshiara->parsed()) {
      const auto [profile, group] = json_io::delta_profile_from_json(json_io::load_file(profile_path));
      const auto report = yoshiara_checks(profile, group);
      o.emit(json_io::to_json(report));
      return report.pass ? kExitPass : kExitNegative;
    }
    if (sieve->parsed()) {
      SieveOptions options;
      options.emit = emit == "all" ? SieveEmit::All : SieveEmit::Survivors;
      options.threads = threads;
      options.segment_bits = segment_bits;
      const auto summary = sieve_range(from, to, options, [&](const SieveVerdict& v) { o.emit_line(json_io::to_json(v)); });
      return summary.survivors == 0 ? kExitPass : kExitNegative;
    }
    if (feasibility->parsed()) {
      const auto colon = order_spec.find(':');
      const std::string kind = order_spec.substr(0, colon);
      std::uint64_t value = 0;
      try {
        if (colon == std::string::npos) throw std::invalid_argument(order_spec);
        std::size_t used = 0;
        value = std::stoull(order_spec.substr(colon + 1), &used);
        if (used != order_spec.size() - colon - 1) throw std::invalid_argument(order_spec);
      } catch (const std::exception&) {
        throw Error(ErrorKind::InvalidInput, "--order expects s:N or uq:N");
      }
      FeasibilityReport report;
      if (kind == "s") {
        report = sz_feasibility(value);
      } else if (kind == "uq") {
        report = uq_feasibility(value);
      } else {
        throw Error(ErrorKind::InvalidInput, "--order expects s:N or uq:N");
      }
      o.emit(json_io::to_json(report));
      return report.empty ? kExitPass : kExitNegative;
    }
    if (identities->parsed()) {
      const auto report = verify_arithmetic_identities();
      o.emit(json_io::to_json(report));
      return report.pass() ? kExitPass : kExitNegative;
    }
    if (params->parsed()) {
      const auto check = parameter_feasible(s_param, t_param);
      o.emit(json_io::to_json(check, s_param, t_param));
      return check.feasible ? kExitPass : kExitNegative;
    }
  } catch (const NotAGQError& e) {
    o.emit(json_io::to_json(e.violation()));
    err << "error: " << e.what() << '\n';
    return kExitNegative;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  err << "error: no subcommand\n";
  return kExitUsage;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace gqforge::cli
