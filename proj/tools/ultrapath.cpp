// ultrapath: command-line front end for the ultrametric toolkit.
//
//   ultrapath <group> <verb> [options] [input]
//
// Spaces, schemes and paths are read as JSON from the input file, or from
// standard input when the file is omitted or "-". Output is JSON on stdout
// (DOT for `space tree --format dot`). Exit codes: 0 success, 1 domain error,
// 2 usage error.

#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ultra/embeddings.hpp"
#include "ultra/error.hpp"
#include "ultra/generators.hpp"
#include "ultra/json_io.hpp"
#include "ultra/monoid.hpp"
#include "ultra/path.hpp"
#include "ultra/ramsey.hpp"
#include "ultra/space.hpp"
#include "ultra/indivisibility.hpp"
#include "ultra/tree.hpp"

namespace {

using namespace ultra;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "json";
  std::uint64_t seed = 0;
  std::string input = "-";

  // gen / monoid
  std::string spec, levels, degrees;
  std::size_t width = 2;
  std::size_t family_cap = 2;
  std::string f, g;

  // space
  std::string at;

  // embed / ramsey
  std::string source, target, pattern;
  std::size_t k = 2;
  std::uint64_t guard = std::uint64_t{1} << 20;
  bool heuristic = false;
  std::uint64_t budget = std::uint64_t{1} << 16;

  // path
  std::string alpha = "inf";
  std::string beta = "0";
  std::string r;
  std::string p, q;
  bool with_space = false;
};

std::string read_text(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json load(const std::string& path) { return parse_json(read_text(path)); }

// Inline JSON when the argument starts with '{' or '[', else a file name.
Json inline_or_file(const std::string& arg, const char* what) {
  if (arg.empty()) throw UsageError(std::string("missing --") + what);
  const auto first = arg.find_first_not_of(" \t\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) {
    return parse_json(arg);
  }
  return load(arg);
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty() || !out.empty()) out.push_back(cur);
  return out;
}

std::vector<Rational> rational_list(const std::string& s, const char* what) {
  if (s.empty()) throw UsageError(std::string("missing --") + what);
  std::vector<Rational> out;
  for (const auto& t : split(s)) out.push_back(parse_rational(t));
  return out;
}

std::vector<Degree> degree_list(const std::string& s, std::size_t n) {
  if (s.empty()) return std::vector<Degree>(n, Degree::unbounded());
  std::vector<Degree> out;
  for (const auto& t : split(s)) {
    if (t == "u" || t == "unbounded") {
      out.push_back(Degree::unbounded());
    } else {
      try {
        out.push_back(Degree::finite(std::stoull(t)));
      } catch (const std::exception&) {
        throw ParseError("bad degree \"" + t + "\"");
      }
    }
  }
  return out;
}

std::vector<std::uint64_t> coord_list(const std::string& s, const char* what) {
  if (s.empty()) throw UsageError(std::string("missing --") + what);
  std::vector<std::uint64_t> out;
  for (const auto& t : split(s)) {
    try {
      out.push_back(std::stoull(t));
    } catch (const std::exception&) {
      throw ParseError("bad coordinate \"" + t + "\"");
    }
  }
  return out;
}

LevelSpec level_spec(const Options& o) {
  auto lv = rational_list(o.levels, "levels");
  return LevelSpec::make(lv, degree_list(o.degrees, lv.size()));
}

PointId resolve_point(const FiniteUltraSpace& s, const std::string& name) {
  for (PointId i = 0; i < s.size(); ++i)
    if (s.label(i) == name) return i;
  try {
    std::size_t pos = 0;
    auto v = std::stoull(name, &pos);
    if (pos == name.size() && v < s.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error("unknown point \"" + name + "\"");
}

// A space from either the distance-matrix form or the tree form.
FiniteUltraSpace read_space(const Json& j) {
  if (j.is_object() && j.contains("nodes")) return tree_to_space(tree_from_json(j));
  return space_from_json(j);
}

Json error_json(const std::string& msg, const std::vector<std::size_t>* witness) {
  Json out;
  out["error"] = msg;
  if (witness) out["witness"] = *witness;
  return out;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

void require_json(const Options& o) {
  if (o.format != "json") throw UsageError("--format dot applies to `space tree` only");
}

// --- verbs ------------------------------------------------------------------

void space_validate(const Options& o) {
  require_json(o);
  emit(to_json(read_space(load(o.input))));
}

void space_spectrum(const Options& o) {
  require_json(o);
  auto s = read_space(load(o.input));
  if (o.at.empty()) {
    emit(to_json(spectrum(s)));
  } else {
    emit(to_json(spectrum(s, resolve_point(s, o.at))));
  }
}

void space_nerve(const Options& o) {
  require_json(o);
  auto s = read_space(load(o.input));
  Json out = Json::array();
  for (const auto& b : nerve(s)) out.push_back(to_json(b));
  emit(out);
}

void space_tree(const Options& o) {
  auto t = space_to_tree(read_space(load(o.input)));
  if (o.format == "dot") {
    std::cout << t.to_dot();
  } else {
    emit(to_json(t));
  }
}

void gen_max(const Options& o) {
  require_json(o);
  emit(to_json(max_space(make_spectrum(rational_list(o.spec, "spec")))));
}

void gen_omega(const Options& o) {
  require_json(o);
  emit(to_json(omega_space(level_spec(o), o.width)));
}

void gen_ultv(const Options& o) {
  require_json(o);
  emit(to_json(ultv_approx(make_spectrum(rational_list(o.spec, "spec")), o.width)));
}

void gen_prop2(const Options& o) {
  require_json(o);
  emit(to_json(prop2_space(make_spectrum(rational_list(o.spec, "spec")), o.width, o.family_cap)));
}

void embed_find(const Options& o) {
  require_json(o);
  auto src = read_space(inline_or_file(o.source, "source"));
  auto tgt = read_space(inline_or_file(o.target, "target"));
  auto f = find_isometric_embedding(src, tgt);
  Json out;
  out["found"] = f.has_value();
  out["map"] = f ? to_json(*f) : Json(nullptr);
  emit(out);
}

void check_space(const Options& o) {
  require_json(o);
  auto s = read_space(load(o.input));
  Json out = to_json(check_extension_properties(s), s);
  out["point_homogeneous"] = is_point_homogeneous(s);
  emit(out);
}

void check_scheme(const Options& o) {
  require_json(o);
  auto scheme = scheme_from_json(load(o.input));
  auto s = scheme_materialize(scheme, o.width);
  auto rep = check_extension_properties(s);
  Json out;
  out["scheme"] = to_json(scheme.root());
  out["depth"] = scheme_depth(scheme);
  out["width"] = o.width;
  out["points"] = s.size();
  out["extension"] = to_json(rep, s);
  // Saturated: every pair reaches the truncation bound width - 1.
  out["multiplicity_saturated"] = multiplicity_at_least(rep, o.width - 1);
  emit(out);
}

void check_theorem4_verb(const Options& o) {
  require_json(o);
  auto j = load(o.input);
  if (j.is_object() && j.contains("diam")) {
    emit(to_json(check_theorem4(scheme_from_json(j))));
  } else {
    emit(to_json(check_theorem4(read_space(j))));
  }
}

void check_theorem6_verb(const Options& o) {
  require_json(o);
  emit(to_json(check_theorem6(scheme_from_json(load(o.input)))));
}

HostPtr load_host(const Options& o) { return PathHost::make(read_space(load(o.input))); }

void path_enum(const Options& o) {
  require_json(o);
  auto host = load_host(o);
  auto paths = enumerate_paths(host, parse_ext_rational(o.alpha), parse_rational(o.beta));
  Json list = Json::array();
  for (const auto& p : paths) list.push_back(to_json(p));
  Json out;
  out["count"] = paths.size();
  out["paths"] = std::move(list);
  if (o.with_space) out["space"] = to_json(path_space(paths));
  emit(out);
}

void path_dist(const Options& o) {
  require_json(o);
  auto host = load_host(o);
  auto p = path_from_json(inline_or_file(o.p, "p"), host);
  auto q = path_from_json(inline_or_file(o.q, "q"), host);
  Json out;
  out["distance"] = to_json(path_distance(p, q));
  emit(out);
}

void path_inf(const Options& o) {
  require_json(o);
  auto host = load_host(o);
  auto p = path_from_json(inline_or_file(o.p, "p"), host);
  auto q = path_from_json(inline_or_file(o.q, "q"), host);
  emit(to_json(path_infimum(p, q)));
}

void path_leq_verb(const Options& o) {
  require_json(o);
  auto host = load_host(o);
  auto p = alpha_path_from_json(inline_or_file(o.p, "p"), host);
  auto q = alpha_path_from_json(inline_or_file(o.q, "q"), host);
  Json out;
  out["leq"] = path_leq(p, q);
  emit(out);
}

void path_ball_verb(const Options& o) {
  require_json(o);
  if (o.r.empty()) throw UsageError("missing --r");
  auto host = load_host(o);
  auto p = alpha_path_from_json(inline_or_file(o.p, "p"), host);
  auto b = path_ball(p, parse_rational(o.r));
  Json members = Json::array();
  for (const auto& m : b.members) members.push_back(to_json(m));
  Json out;
  out["top"] = to_json(b.top);
  out["r"] = to_json(b.r);
  out["members"] = std::move(members);
  emit(out);
}

void monoid_embed(const Options& o) {
  require_json(o);
  auto s = read_space(load(o.input));
  auto e = embed_into_omega(s);
  Json lv = Json::array();
  for (const auto& w : *e.levels) lv.push_back(to_json(w));
  Json words = Json::array();
  for (PointId i = 0; i < s.size(); ++i) {
    words.push_back({{"point", s.label(i)}, {"word", to_json(e.words[i])}});
  }
  Json out;
  out["levels"] = std::move(lv);
  out["words"] = std::move(words);
  emit(out);
}

void monoid_add(const Options& o) {
  require_json(o);
  auto lv = make_levels(rational_list(o.levels, "levels"));
  auto f = make_word(lv, coord_list(o.f, "f"));
  auto g = make_word(lv, coord_list(o.g, "g"));
  Json out;
  out["sum"] = to_json(add_words(f, g));
  out["distance"] = to_json(word_distance(f, g));
  emit(out);
}

void monoid_pathsum(const Options& o) {
  require_json(o);
  auto window = WordWindow::make(level_spec(o), o.width);
  const auto& host = window->host();
  auto p = alpha_path_from_json(inline_or_file(o.p, "p"), host);
  auto q = alpha_path_from_json(inline_or_file(o.q, "q"), host);
  auto sum = path_sum(*window, p, q);
  Json out;
  out["defined"] = sum.has_value();
  out["sum"] = sum ? to_json(*sum) : Json(nullptr);
  emit(out);
}

void monoid_check(const Options& o) {
  require_json(o);
  auto window = WordWindow::make(level_spec(o), o.width);
  const auto alpha = parse_ext_rational(o.alpha);
  auto words = check_word_laws(*window);
  auto balls = check_ball_laws(*window, alpha);
  auto paths = check_path_laws(*window, alpha);
  Json out;
  out["points"] = window->size();
  out["words"] = to_json(words);
  out["balls"] = to_json(balls);
  out["paths"] = to_json(paths);
  out["holds"] = words.ok() && balls.ok() && paths.ok();
  emit(out);
}

void ramsey_dstar(const Options& o) {
  require_json(o);
  emit(to_json(subdominant_dstar(metric_from_json(load(o.input)))));
}

DivisibilityOptions div_options(const Options& o) {
  DivisibilityOptions d;
  d.guard = o.guard;
  d.heuristic = o.heuristic;
  d.budget = o.budget;
  return d;
}

void ramsey_divisible(const Options& o) {
  require_json(o);
  auto s = read_space(load(o.input));
  auto pat = read_space(inline_or_file(o.pattern, "pattern"));
  emit(to_json(check_divisible(s, pat, o.k, div_options(o))));
}

void ramsey_check(const Options& o) {
  require_json(o);
  auto s = read_space(load(o.input));
  emit(to_json(check_divisible(s, s, o.k, div_options(o))));
}

// --- wiring -----------------------------------------------------------------

using Handler = std::function<void(const Options&)>;

CLI::App* verb(CLI::App* group, const std::string& name, const std::string& desc,
               Handler* slot, Handler h, Options& o, bool takes_input = true) {
  auto* cmd = group->add_subcommand(name, desc);
  cmd->fallthrough();
  if (takes_input) cmd->add_option("input", o.input, "JSON input file, - for stdin");
  cmd->callback([slot, h] { *slot = h; });
  return cmd;
}

void add_window_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--levels", o.levels, "decreasing level weights, e.g. 2,1")->required();
  cmd->add_option("--degrees", o.degrees, "per-level degrees, u for unbounded");
  cmd->add_option("--width", o.width, "truncation width")->check(CLI::Range(2, 64));
}

void add_div_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--k", o.k, "number of colors")->check(CLI::Range(2, 16));
  cmd->add_option("--guard", o.guard, "exhaustive limit on k^n");
  cmd->add_flag("--heuristic", o.heuristic, "budgeted scan beyond the guard");
  cmd->add_option("--budget", o.budget, "colorings scanned in heuristic mode");
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  Handler run;
  CLI::App app{"Ultrametric spaces, path extensions and indivisibility checks", "ultrapath"};
  app.require_subcommand(1);
  app.add_option("--format", o.format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
  app.add_option("--seed", o.seed, "accepted for reproducibility; every verb is exhaustive");

  auto* space = app.add_subcommand("space", "validate and inspect spaces")->require_subcommand(1);
  space->fallthrough();
  verb(space, "validate", "canonical form of a valid space", &run, space_validate, o);
  verb(space, "spectrum", "spectrum of the space or of one point", &run, space_spectrum, o)
      ->add_option("--at", o.at, "point label or index");
  verb(space, "nerve", "nerve balls in canonical order", &run, space_nerve, o);
  verb(space, "tree", "valued tree of the space", &run, space_tree, o);

  auto* gen = app.add_subcommand("gen", "generate spaces")->require_subcommand(1);
  gen->fallthrough();
  verb(gen, "max", "max-space on V", &run, gen_max, o, false)
      ->add_option("--spec", o.spec, "V, comma separated")
      ->required();
  add_window_options(verb(gen, "omega", "truncated word space", &run, gen_omega, o, false), o);
  {
    auto* c = verb(gen, "ultv", "truncated Ult_V", &run, gen_ultv, o, false);
    c->add_option("--spec", o.spec, "V, comma separated")->required();
    c->add_option("--width", o.width, "truncation width")->check(CLI::Range(2, 64));
  }
  {
    auto* c = verb(gen, "prop2", "union of Ult_F blocks", &run, gen_prop2, o, false);
    c->add_option("--spec", o.spec, "V, comma separated")->required();
    c->add_option("--width", o.width, "truncation width")->check(CLI::Range(2, 64));
    c->add_option("--family-cap", o.family_cap, "number of families")->check(CLI::PositiveNumber);
  }

  auto* embed = app.add_subcommand("embed", "isometric embeddings")->require_subcommand(1);
  embed->fallthrough();
  {
    auto* c = verb(embed, "find", "least isometric embedding", &run, embed_find, o, false);
    c->add_option("--source", o.source, "source space (file or inline JSON)")->required();
    c->add_option("--target", o.target, "target space (file or inline JSON)")->required();
  }

  auto* check = app.add_subcommand("check", "criteria checkers")->require_subcommand(1);
  check->fallthrough();
  verb(check, "space", "extension properties of a finite space", &run, check_space, o);
  verb(check, "scheme", "extension properties of a materialized scheme", &run, check_scheme, o)
      ->add_option("--width", o.width, "truncation width")
      ->check(CLI::Range(2, 64));
  verb(check, "theorem4", "well-foundedness conditions", &run, check_theorem4_verb, o);
  verb(check, "theorem6", "indivisibility conditions on a scheme", &run, check_theorem6_verb, o);

  auto* path = app.add_subcommand("path", "alpha-path algebra")->require_subcommand(1);
  path->fallthrough();
  {
    auto* c = verb(path, "enum", "enumerate L_{alpha,beta}", &run, path_enum, o);
    c->add_option("--alpha", o.alpha, "threshold, inf or p/q");
    c->add_option("--beta", o.beta, "lower diameter bound");
    c->add_flag("--with-space", o.with_space, "include the path distance matrix");
  }
  for (auto [name, desc, h] : {std::tuple<const char*, const char*, Handler>{
                                   "dist", "path distance", path_dist},
                               {"inf", "path infimum", path_inf},
                               {"leq", "path order", path_leq_verb}}) {
    auto* c = verb(path, name, desc, &run, h, o);
    c->add_option("--p", o.p, "first path (file or inline JSON)")->required();
    c->add_option("--q", o.q, "second path (file or inline JSON)")->required();
  }
  {
    auto* c = verb(path, "ball", "path ball I * L_{r,0}", &run, path_ball_verb, o);
    c->add_option("--p", o.p, "path (file or inline JSON)")->required();
    c->add_option("--r", o.r, "radius")->required();
  }

  auto* monoid = app.add_subcommand("monoid", "word monoids and path sums")->require_subcommand(1);
  monoid->fallthrough();
  verb(monoid, "embed", "embedding into a word space", &run, monoid_embed, o);
  {
    auto* c = verb(monoid, "add", "sum of two words", &run, monoid_add, o, false);
    c->add_option("--levels", o.levels, "decreasing level weights")->required();
    c->add_option("--f", o.f, "first word, comma separated")->required();
    c->add_option("--g", o.g, "second word, comma separated")->required();
  }
  {
    auto* c = verb(monoid, "pathsum", "sum of two paths of a window", &run, monoid_pathsum, o,
                   false);
    add_window_options(c, o);
    c->add_option("--p", o.p, "first path (file or inline JSON)")->required();
    c->add_option("--q", o.q, "second path (file or inline JSON)")->required();
  }
  {
    auto* c = verb(monoid, "check", "law suite on a window", &run, monoid_check, o, false);
    add_window_options(c, o);
    c->add_option("--alpha", o.alpha, "path threshold");
  }

  auto* ramsey = app.add_subcommand("ramsey", "subdominant ultrametric and colorings")
                     ->require_subcommand(1);
  ramsey->fallthrough();
  verb(ramsey, "dstar", "subdominant ultrametric of a metric", &run, ramsey_dstar, o);
  {
    auto* c = verb(ramsey, "divisible", "divisibility against a pattern", &run,
                   ramsey_divisible, o);
    c->add_option("--pattern", o.pattern, "pattern space (file or inline JSON)")->required();
    add_div_options(c, o);
  }
  add_div_options(verb(ramsey, "check", "divisibility against itself", &run, ramsey_check, o), o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    run(o);
  } catch (const UsageError& e) {
    std::cerr << "ultrapath: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << error_json(e.what(), &e.witness()).dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << error_json(e.what(), nullptr).dump() << "\n";
    return 1;
  }
  return 0;
}
