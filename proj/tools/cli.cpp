#include "cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "ppc/adapters.hpp"
#include "ppc/bounds.hpp"
#include "ppc/coloring.hpp"
#include "ppc/errors.hpp"
#include "ppc/feasibility.hpp"
#include "ppc/plane.hpp"
#include "ppc/region.hpp"
#include "ppc/solver.hpp"

namespace ppc::cli {
namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

// Raised for a loaded plane that breaks the axioms.
struct InvalidPlane : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::uint32_t q = 0;
  std::string output;
  std::string plane_file;
  std::string coloring_file;
  std::string s_file;
  std::string s_out;
  std::string partial_file;
  std::string register_file;
  std::string final_file;
  std::string svg_file;
  std::string region_csv = "region.csv";
  std::string mode = "full";
  std::uint32_t colors = 0;
  std::uint64_t seed = 0;
  std::uint32_t m = 0;
  std::uint64_t max_steps = 10'000'000;
  std::uint32_t runs = 1;
  std::uint32_t a = 1;
  std::uint32_t b = 4;
  double inclusion_prob = -1.0;
  std::size_t max_attempts = 1000;
  bool total = false;
  std::uint32_t m_max = 50;
  std::uint32_t d_min = 8;
  std::uint32_t d_max = 42;
  std::uint32_t a_max = 8;
  std::uint32_t b_max = 64;
  std::uint32_t region_m_max = 12;
  double tol = 0.01;
};

double seconds_since(Clock::time_point start) {
  const double s = std::chrono::duration<double>(Clock::now() - start).count();
  return std::round(s * 1e6) / 1e6;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  return out;
}

ProjectivePlane require_valid_plane(const std::string& path) {
  LoadedPlane loaded = load_plane(path);
  if (!loaded.report.pass)
    throw InvalidPlane(path + " violates the plane axioms (" + std::to_string(loaded.report.violation_count) +
                       " violations)");
  return std::move(loaded.plane);
}

Json pairs_json(const std::vector<LinePair>& pairs, std::size_t limit = 20) {
  Json arr = Json::array();
  for (std::size_t i = 0; i < pairs.size() && i < limit; ++i) arr.push_back({pairs[i].first, pairs[i].second});
  return arr;
}

bool all_pairs_dangerous(const ProjectivePlane& plane, std::size_t dangerous) {
  const std::size_t lines = plane.num_lines();
  return dangerous == lines * (lines - 1) / 2;
}

// ---- plane -------------------------------------------------------------

int cmd_plane_gen(const Options& o, Json& summary) {
  const ProjectivePlane plane = build_pg2(o.q);
  auto out = open_output(o.output);
  write_plane_json(plane, out);
  summary["order"] = plane.order();
  summary["points"] = plane.num_points();
  summary["lines"] = plane.num_lines();
  summary["output"] = o.output;
  return kOk;
}

int cmd_plane_validate(const Options& o, Json& summary) {
  const LoadedPlane loaded = load_plane(o.plane_file);
  summary["order"] = loaded.plane.order();
  summary["pass"] = loaded.report.pass;
  summary["violation_count"] = loaded.report.violation_count;
  Json vs = Json::array();
  for (const auto& v : loaded.report.violations)
    vs.push_back({{"axiom", v.axiom}, {"ids", v.ids}, {"detail", v.detail}});
  summary["violations"] = std::move(vs);
  return loaded.report.pass ? kOk : kDomainFailure;
}

// ---- color -------------------------------------------------------------

int cmd_color_sample(const Options& o, Json& summary) {
  const ProjectivePlane plane = require_valid_plane(o.plane_file);
  Rng rng(o.seed);
  summary["seed"] = o.seed;
  std::vector<PointId> members;
  if (!o.total) {
    const double p = o.inclusion_prob < 0 ? default_inclusion_prob(plane.order()) : o.inclusion_prob;
    const SampleSResult s = sample_S(plane, rng, p, o.max_attempts);
    members = s.set.members();
    summary["inclusion_prob"] = p;
    summary["attempts"] = s.attempts;
    summary["s_size"] = members.size();
    summary["s_size_bound"] = s.size_bound;
  }
  const PartialColoring partial = sample_partial(plane, members, o.colors, rng);
  auto out = open_output(o.output);
  write_coloring_json(partial, out);
  if (!o.s_out.empty()) save_sset(members, o.s_out);

  if (o.total) {
    const auto bad = find_bad_pairs(plane, partial);
    summary["bad_pairs"] = bad.size();
    summary["legitimate"] = bad.empty();
    return kOk;
  }
  const auto dangerous = find_dangerous_pairs(plane, partial);
  summary["dangerous_threshold"] = dangerous_threshold(plane.order());
  summary["dangerous_pairs"] = dangerous.size();
  const SSet s = SSet::make(plane, members);
  const Fact2Report f2 = fact2_check(plane, partial, s, o.a, o.b);
  summary["fact2"] = {{"pass", f2.pass},
                      {"a", o.a},
                      {"b", o.b},
                      {"worst_line_degree", f2.worst_line_degree},
                      {"worst_point_lines", f2.worst_point_lines}};
  if (all_pairs_dangerous(plane, dangerous.size()))
    summary["recommendation"] = "every line pair is dangerous at this order; use solve full";
  return kOk;
}

int cmd_color_verify(const Options& o, Json& summary) {
  const ProjectivePlane plane = require_valid_plane(o.plane_file);
  const PartialColoring coloring = load_coloring(o.coloring_file);
  if (coloring.size() != plane.num_points())
    throw ParseError("coloring has " + std::to_string(coloring.size()) + " entries, plane has " +
                     std::to_string(plane.num_points()) + " points");
  summary["total"] = coloring.is_total();
  if (!coloring.is_total()) {
    const auto dangerous = find_dangerous_pairs(plane, coloring);
    summary["uncolored"] = coloring.uncolored().size();
    summary["dangerous_pairs"] = dangerous.size();
    summary["legitimate"] = false;
    return kDomainFailure;
  }
  const auto bad = find_bad_pairs(plane, coloring);
  summary["bad_pairs"] = bad.size();
  summary["bad_pair_sample"] = pairs_json(bad);
  summary["legitimate"] = bad.empty();
  return bad.empty() ? kOk : kDomainFailure;
}

// ---- solve -------------------------------------------------------------

// Instance plus the plane coloring a solver configuration is embedded into.
struct Setup {
  PlaneProblem problem;
  PartialColoring base;
};

Setup make_full(const ProjectivePlane& plane, std::uint32_t colors, std::uint32_t m) {
  const std::uint32_t mm = m ? m : default_full_m(plane);
  return {build_full_problem(plane, colors, mm), PartialColoring(colors, plane.num_points())};
}

Setup make_extension(const ProjectivePlane& plane, const Options& o, std::uint32_t colors, Json& summary) {
  const PartialColoring partial = load_coloring(o.partial_file);
  if (partial.size() != plane.num_points()) throw ParseError("partial coloring does not match the plane");
  const SSet s = SSet::make(plane, load_sset(o.s_file));
  const auto dangerous = find_dangerous_pairs(plane, partial);
  summary["dangerous_pairs"] = dangerous.size();
  if (all_pairs_dangerous(plane, dangerous.size()))
    summary["recommendation"] = "every line pair is dangerous at this order; use solve full";
  const std::uint32_t capacity = extension_capacity(plane, s, partial);
  const std::uint32_t m = o.m ? o.m : default_extension_m(o.a, o.b, capacity);
  ExtensionProblem ext = build_extension_problem(plane, s, partial, colors, o.a, o.b, m);
  summary["capacity"] = ext.capacity;
  summary["d_m"] = ext.problem.instance.degree(m);
  return {std::move(ext.problem), partial};
}

int cmd_solve(const Options& o, bool extend, Json& summary) {
  const ProjectivePlane plane = require_valid_plane(o.plane_file);
  std::uint32_t colors = o.colors;
  if (extend && colors == 0) colors = load_coloring(o.partial_file).colors();
  if (colors == 0) throw std::invalid_argument("--colors must be at least 1");
  summary["mode"] = extend ? "extend" : "full";
  summary["colors"] = colors;
  summary["seed"] = o.seed;

  const Setup setup = extend ? make_extension(plane, o, colors, summary) : make_full(plane, colors, o.m);
  const ProblemInstance& instance = setup.problem.instance;
  summary["m"] = setup.problem.m;
  summary["variables"] = instance.num_vars();
  summary["events"] = instance.num_events();

  std::optional<RunResult> chosen;
  Json runs = Json::array();
  std::uint64_t successes = 0, success_steps = 0;
  for (std::uint32_t r = 0; r < o.runs; ++r) {
    RunResult result = run(instance, {.seed = o.seed + r, .max_steps = o.max_steps, .on_step = {}});
    const bool ok = result.status == RunStatus::Success;
    runs.push_back({{"seed", o.seed + r},
                    {"status", ok ? "Success" : "Exhausted"},
                    {"steps", result.steps},
                    {"violations", result.violations}});
    if (ok) {
      ++successes;
      success_steps += result.steps;
    }
    if (!chosen || (ok && chosen->status != RunStatus::Success)) chosen = std::move(result);
  }
  const RunResult& result = *chosen;
  const bool success = result.status == RunStatus::Success;
  summary["status"] = success ? "Success" : "Exhausted";
  summary["seed"] = result.reg.seed;
  summary["steps"] = result.steps;
  summary["violations"] = result.violations;
  if (o.runs > 1) {
    summary["runs"] = std::move(runs);
    summary["successes"] = successes;
    summary["steps_per_success"] = successes ? Json(double(success_steps) / double(successes)) : Json(nullptr);
  }

  const PartialColoring final_coloring = to_plane_coloring(instance, setup.base, result.reg.final_config);
  if (!o.output.empty()) {
    auto out = open_output(o.output);
    write_coloring_json(final_coloring, out);
  }
  if (!o.register_file.empty()) {
    auto out = open_output(o.register_file);
    write_register_jsonl(instance, result.reg, out);
  }
  if (!success) return kDomainFailure;

  // Independent check: the plane coloring itself, not the solver's event bookkeeping.
  const auto bad = find_bad_pairs(plane, final_coloring);
  summary["verified"] = bad.empty();
  if (!bad.empty()) {
    summary["status"] = "VerificationFailed";
    summary["bad_pair_sample"] = pairs_json(bad);
    return kDomainFailure;
  }
  return kOk;
}

// ---- decode ------------------------------------------------------------

int cmd_decode(const Options& o, Json& summary) {
  const ProjectivePlane plane = require_valid_plane(o.plane_file);
  const PartialColoring final_coloring = load_coloring(o.final_file);
  if (final_coloring.size() != plane.num_points()) throw ParseError("final coloring does not match the plane");
  Options solve_opts = o;
  solve_opts.colors = final_coloring.colors();
  Json scratch;
  const bool extend = o.mode == "extend";
  const Setup setup =
      extend ? make_extension(plane, solve_opts, solve_opts.colors, scratch) : make_full(plane, solve_opts.colors, o.m);
  const ProblemInstance& instance = setup.problem.instance;

  std::ifstream in(o.register_file, std::ios::binary);
  if (!in) throw IoError("cannot open " + o.register_file);
  RunRegister reg = read_register_jsonl(instance, in);
  reg.final_config = to_instance_values(instance, final_coloring);

  const History history = decode(instance, reg);
  const bool same = matches(reg, history);
  std::uint64_t records = 0;
  for (const auto& e : reg.entries) records += e.record.has_value();
  summary["mode"] = extend ? "extend" : "full";
  summary["m"] = setup.problem.m;
  summary["steps"] = reg.entries.size();
  summary["violations"] = records;
  summary["round_trip"] = same;
  return same ? kOk : kDomainFailure;
}

// ---- bounds / region ---------------------------------------------------

int cmd_bounds(const Options& o, Json& summary) {
  const OptimalM best = optimal_m(o.a, o.b, o.m_max);
  if (best.m > kMaxFreeSize) throw std::invalid_argument("optimal m exceeds 20; m! overflows the extension count");
  std::uint64_t m_factorial = 1;
  for (std::uint32_t i = 2; i <= best.m; ++i) m_factorial *= i;
  ExponentProfile profile;
  profile.per_l[best.m] = {std::uint64_t{o.a} * o.b, m_factorial};
  const BoundResult bound = theorem1_colors(profile);
  summary["a"] = o.a;
  summary["b"] = o.b;
  summary["tau"] = bound.tau;
  summary["gamma"] = bound.gamma;
  summary["colors"] = bound.colors;
  summary["m_opt"] = best.m;
  summary["value"] = best.value;
  return kOk;
}

int cmd_region(const Options& o, Json& summary) {
  SearchGrid grid;
  grid.a_max = o.a_max;
  grid.b_max = o.b_max;
  grid.m_max = o.region_m_max;
  grid.tol = o.tol;
  if (grid.a_max < grid.a_min || grid.b_max < grid.b_min || grid.m_max < grid.m_min || !(grid.tol > 0))
    throw std::invalid_argument("empty search grid or nonpositive tolerance");
  const auto rows = region_table(o.d_min, o.d_max, grid);
  {
    auto out = open_output(o.region_csv);
    write_region_csv(rows, out);
  }
  const std::string svg =
      o.svg_file.empty() ? std::filesystem::path(o.region_csv).replace_extension(".svg").string() : o.svg_file;
  {
    auto out = open_output(svg);
    emit_region_svg(rows, out);
  }
  std::size_t feasible_rows = 0;
  for (const auto& r : rows) feasible_rows += r.best.has_value();
  summary["rows"] = rows.size();
  summary["feasible_rows"] = feasible_rows;
  summary["csv"] = o.region_csv;
  summary["svg"] = svg;
  return kOk;
}

void emit(std::ostream& out, const Json& summary) { out << summary.dump(2) << '\n'; }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Projective plane colorings by entropy-compression resampling", "ppcolor"};
  app.require_subcommand(1);

  auto* plane = app.add_subcommand("plane", "Generate or validate planes");
  plane->require_subcommand(1);
  auto* plane_gen = plane->add_subcommand("gen", "Write PG(2,q) as plane JSON");
  plane_gen->add_option("--q", o.q, "Prime power order")->required();
  plane_gen->add_option("-o,--output", o.output, "Output plane JSON")->required();
  auto* plane_validate = plane->add_subcommand("validate", "Check the incidence axioms");
  plane_validate->add_option("file", o.plane_file, "Plane JSON")->required();

  auto* color = app.add_subcommand("color", "Sample or verify colorings");
  color->require_subcommand(1);
  auto* color_sample = color->add_subcommand("sample", "Sample an S-set and a random partial coloring");
  color_sample->add_option("--plane", o.plane_file)->required();
  color_sample->add_option("--colors", o.colors)->required()->check(CLI::Range(1u, 65535u));
  color_sample->add_option("--seed", o.seed);
  color_sample->add_option("--p", o.inclusion_prob, "S inclusion probability (default min(1, 6 ln n/(n+1)))");
  color_sample->add_option("--max-attempts", o.max_attempts);
  color_sample->add_option("--a", o.a);
  color_sample->add_option("--b", o.b);
  color_sample->add_flag("--total", o.total, "Color every point (no S-set)");
  color_sample->add_option("--s-out", o.s_out, "Output S-set JSON");
  color_sample->add_option("-o,--output", o.output, "Output coloring JSON")->required();
  auto* color_verify = color->add_subcommand("verify", "Check a coloring for bad line pairs");
  color_verify->add_option("--plane", o.plane_file)->required();
  color_verify->add_option("--coloring", o.coloring_file)->required();

  auto* solve = app.add_subcommand("solve", "Run the resampling solver");
  solve->require_subcommand(1);
  auto* solve_full = solve->add_subcommand("full", "Color every point");
  auto* solve_extend = solve->add_subcommand("extend", "Color the S-points of a partial coloring");
  for (auto* sub : {solve_full, solve_extend}) {
    sub->add_option("--plane", o.plane_file)->required();
    auto* c = sub->add_option("--colors", o.colors)->check(CLI::Range(1u, 65535u));
    if (sub == solve_full) c->required();
    sub->add_option("--seed", o.seed);
    sub->add_option("--m", o.m, "Free-set size (default: bound-optimal)");
    sub->add_option("--max-steps", o.max_steps);
    sub->add_option("--runs", o.runs, "Consecutive seeds to try")->check(CLI::PositiveNumber);
    sub->add_option("--register", o.register_file, "Output register JSONL");
    sub->add_option("-o,--output", o.output, "Output final coloring JSON");
  }
  solve_extend->add_option("--s", o.s_file)->required();
  solve_extend->add_option("--partial", o.partial_file)->required();
  solve_extend->add_option("--a", o.a);
  solve_extend->add_option("--b", o.b);

  auto* decode_cmd = app.add_subcommand("decode", "Rebuild a run from its register and final coloring");
  decode_cmd->add_option("--register", o.register_file)->required();
  decode_cmd->add_option("--final", o.final_file)->required();
  decode_cmd->add_option("--plane", o.plane_file)->required();
  decode_cmd->add_option("--m", o.m);
  decode_cmd->add_option("--mode", o.mode)->check(CLI::IsMember({"full", "extend"}));
  decode_cmd->add_option("--s", o.s_file);
  decode_cmd->add_option("--partial", o.partial_file);
  decode_cmd->add_option("--a", o.a);
  decode_cmd->add_option("--b", o.b);

  auto* bounds = app.add_subcommand("bounds", "Color bound for per-line degree a and per-point degree b");
  bounds->add_option("--a", o.a)->check(CLI::PositiveNumber);
  bounds->add_option("--b", o.b)->check(CLI::PositiveNumber);
  bounds->add_option("--m-max", o.m_max)->check(CLI::Range(2u, 170u));

  auto* region = app.add_subcommand("region", "Smallest feasible order per number of colors");
  region->add_option("--d-min", o.d_min)->check(CLI::Range(2u, 100000u));
  region->add_option("--d-max", o.d_max)->check(CLI::Range(2u, 100000u));
  region->add_option("--a-max", o.a_max)->check(CLI::PositiveNumber);
  region->add_option("--b-max", o.b_max)->check(CLI::PositiveNumber);
  region->add_option("--m-max", o.region_m_max)->check(CLI::Range(2u, 170u));
  region->add_option("--tol", o.tol);
  region->add_option("-o,--output", o.region_csv, "Output CSV (default region.csv)");
  region->add_option("--svg", o.svg_file, "Output SVG (default: CSV path with .svg)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  Json summary;
  int code = kOk;
  const auto start = Clock::now();
  auto command = [&](std::string name) { summary["command"] = std::move(name); };
  try {
    if (plane_gen->parsed()) {
      command("plane gen");
      code = cmd_plane_gen(o, summary);
    } else if (plane_validate->parsed()) {
      command("plane validate");
      code = cmd_plane_validate(o, summary);
    } else if (color_sample->parsed()) {
      command("color sample");
      code = cmd_color_sample(o, summary);
    } else if (color_verify->parsed()) {
      command("color verify");
      code = cmd_color_verify(o, summary);
    } else if (solve_full->parsed()) {
      command("solve full");
      code = cmd_solve(o, false, summary);
    } else if (solve_extend->parsed()) {
      command("solve extend");
      code = cmd_solve(o, true, summary);
    } else if (decode_cmd->parsed()) {
      command("decode");
      if (o.mode == "extend" && (o.s_file.empty() || o.partial_file.empty()))
        throw std::invalid_argument("decode --mode extend needs --s and --partial");
      code = cmd_decode(o, summary);
    } else if (bounds->parsed()) {
      command("bounds");
      code = cmd_bounds(o, summary);
    } else if (region->parsed()) {
      command("region");
      code = cmd_region(o, summary);
    }
  } catch (const Infeasible& e) {
    summary["status"] = "Infeasible";
    summary["error"] = {{"kind", "Infeasible"}, {"message", e.what()}};
    err << "Infeasible: " << e.what() << '\n';
    code = kDomainFailure;
  } catch (const InvalidPlane& e) {
    summary["status"] = "InvalidPlane";
    summary["error"] = {{"kind", "InvalidPlane"}, {"message", e.what()}};
    err << "InvalidPlane: " << e.what() << '\n';
    code = kDomainFailure;
  } catch (const DecodeError& e) {
    summary["status"] = "DecodeError";
    summary["round_trip"] = false;
    summary["error"] = {{"kind", "DecodeError"}, {"message", e.what()}, {"step", e.step()}};
    err << "DecodeError: " << e.what() << '\n';
    code = kDomainFailure;
  } catch (const IoError& e) {
    summary["status"] = "IoError";
    summary["error"] = {{"kind", "IoError"}, {"message", e.what()}};
    err << "IoError: " << e.what() << '\n';
    code = kUsage;
  } catch (const ParseError& e) {
    summary["status"] = "ParseError";
    summary["error"] = {{"kind", "ParseError"}, {"message", e.what()}};
    err << "ParseError: " << e.what() << '\n';
    code = kUsage;
  } catch (const std::invalid_argument& e) {
    summary["status"] = "InvalidArgument";
    summary["error"] = {{"kind", "InvalidArgument"}, {"message", e.what()}};
    err << "InvalidArgument: " << e.what() << '\n';
    code = kUsage;
  }
  if (!summary.contains("status")) summary["status"] = code == kOk ? "ok" : "failed";
  summary["exit_code"] = code;
  summary["wall_time_s"] = seconds_since(start);
  emit(out, summary);
  return code;
}

}  // namespace ppc::cli
