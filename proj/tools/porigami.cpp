// porigami: command line front end for the origami engine.
//
// Exit codes: 0 success, 2 usage error, 3 a cap or limit was exceeded,
// 4 malformed or unusable input.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "porigami/errors.hpp"
#include "porigami/families.hpp"
#include "porigami/origami.hpp"
#include "porigami/pgroup_props.hpp"
#include "porigami/presentation.hpp"
#include "porigami/render.hpp"
#include "porigami/serialization.hpp"

namespace {

using nlohmann::json;
using namespace porigami;

constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;
constexpr int kExitInput = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json read_json(const std::string& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + scalar_text(v[i]);
    return out.empty() ? "-" : out;
  }
  return v.dump();
}

/// Aligned key/value table for a flat-ish JSON object.
void print_table(const json& obj, std::ostream& out) {
  std::size_t width = 0;
  for (const auto& [k, v] : obj.items()) width = std::max(width, k.size());
  for (const auto& [k, v] : obj.items()) {
    if (v.is_array() && !v.empty() && v.front().is_object()) {
      out << k << ":\n";
      for (const auto& row : v) {
        out << "  ";
        bool first = true;
        for (const auto& [rk, rv] : row.items()) {
          out << (first ? "" : "  ") << rk << "=" << scalar_text(rv);
          first = false;
        }
        out << "\n";
      }
      continue;
    }
    out << k << std::string(width - k.size() + 2, ' ') << scalar_text(v) << "\n";
  }
}

struct FamilyArgs {
  std::string name;
  unsigned p = 2, n = 3, k = 1, r = 4, l = 2, m = 1;
  std::int64_t a = -1;

  json to_json() const {
    json j = {{"kind", "family"}, {"name", name}};
    if (name == "strata") j.update({{"p", p}, {"n", n}, {"k", k}});
    else if (name == "semidirect") j.update({{"p", p}, {"l", l}, {"m", m}, {"a", a}});
    else if (name == "sylow_wreath") j.update({{"p", p}, {"r", r}});
    else if (name == "counterexample") j.update({{"p", p}});
    else j.update({{"n", n}});
    return j;
  }
};

void add_family_flags(CLI::App* cmd, FamilyArgs& f, bool name_flag) {
  if (name_flag) cmd->add_option("--family", f.name, "Family name");
  cmd->add_option("--p", f.p, "Prime");
  cmd->add_option("--n", f.n, "Exponent or level");
  cmd->add_option("--k", f.k, "Commutator exponent");
  cmd->add_option("--r", f.r, "Wreath depth");
  cmd->add_option("--l", f.l, "First cyclic factor exponent");
  cmd->add_option("--m", f.m, "Second cyclic factor exponent");
  cmd->add_option("--a", f.a, "Twist");
}

struct GroupInput {
  std::string file;
  FamilyArgs family;

  json group_json() const {
    if (!file.empty()) return read_json(file);
    if (family.name.empty()) throw CLI::RequiredError("a group file or --family");
    return family.to_json();
  }
};

std::pair<std::string, std::string> default_pair(const std::string& family) {
  if (family == "sylow_wreath") return {"e1", "e2"};
  for (const char* rs : {"strata", "semidirect", "dihedral", "quaternion", "semidihedral"})
    if (family == rs) return {"r", "s"};
  return {"x", "y"};
}

struct OrigamiInput {
  std::string file;
  FamilyArgs family;
  std::string x, y;

  json origami_json() const {
    if (!file.empty()) return read_json(file);
    if (family.name.empty()) throw CLI::RequiredError("an origami file or --family");
    json j = {{"group", family.to_json()}};
    const auto [dx, dy] = default_pair(family.name);
    j["x"] = x.empty() ? dx : x;
    j["y"] = y.empty() ? dy : y;
    return j;
  }
};

void add_origami_input(CLI::App* cmd, OrigamiInput& in) {
  cmd->add_option("file", in.file, "Origami JSON file");
  add_family_flags(cmd, in.family, true);
  cmd->add_option("--x", in.x, "Horizontal generator (cycles or word)");
  cmd->add_option("--y", in.y, "Vertical generator (cycles or word)");
}

json group_info(const NamedGroup& g, const Caps& caps) {
  json out = {{"degree", g.group.degree()}, {"order", g.group.order()}};
  json gens = json::object();
  for (std::size_t i = 0; i < g.names.size(); ++i) gens[g.names[i]] = g.generators[i].to_string();
  out["generators"] = gens;
  out["abelian"] = g.group.is_abelian();
  if (g.group.prime()) {
    out["prime"] = *g.group.prime();
    out["exponent"] = group_exponent(g.group, caps.element);
    const Group derived = derived_subgroup(g.group);
    out["derived_order"] = derived.order();
    out["derived_exponent"] = group_exponent(derived, caps.element);
    out["frattini_order"] = frattini_subgroup(g.group).order();
    const NilpotencyClass nc = nilpotency_class(g.group);
    out["nilpotency_class"] = nc.nilpotency_class;
    out["maximal_class"] = nc.maximal_class;
  }
  return out;
}

void emit(const json& j, bool as_json, std::ostream& out) {
  if (as_json)
    out << j.dump(2) << "\n";
  else
    print_table(j, out);
}

int run(int argc, char** argv) {
  CLI::App app{"Normal origamis from 2-generated p-groups", "porigami"};
  app.require_subcommand(1);
  app.fallthrough();  // --json may follow the subcommand
  bool as_json = false;
  app.add_flag("--json", as_json, "Emit JSON with sorted keys");

  Caps caps;
  if (const char* env = std::getenv("PORIGAMI_CAPS")) caps = Caps::parse(env);

  std::function<void()> action;

  // group ...
  auto* group = app.add_subcommand("group", "Group queries");
  group->require_subcommand(1);
  GroupInput gin;
  std::string strategy = "pruned";
  bool exhaustive_scan = false;
  unsigned parallel = 1;
  const std::pair<const char*, const char*> group_cmds[] = {
      {"info", "Order, exponent, class and generators"},
      {"property-c", "Commutator orders over generating pairs"},
      {"props", "Regularity, powerfulness and power closure"}};
  for (const auto& [name, about] : group_cmds) {
    auto* sub = group->add_subcommand(name, about);
    sub->add_option("file", gin.file, "Group JSON file");
    add_family_flags(sub, gin.family, true);
    const std::string which = name;
    if (which == "property-c") {
      sub->add_option("--strategy", strategy, "pruned or exhaustive")
          ->check(CLI::IsMember({"pruned", "exhaustive"}));
      sub->add_flag("--all-pairs", exhaustive_scan, "Scan every pair instead of stopping early");
      sub->add_option("--parallel", parallel, "Worker threads")->check(CLI::Range(1u, 256u));
    }
    sub->callback([&, which] {
      action = [&, which] {
        const NamedGroup g = group_from_json(gin.group_json(), caps);
        if (which == "info") {
          emit(group_info(g, caps), as_json, std::cout);
        } else if (which == "property-c") {
          PropertyCOptions opt;
          opt.strategy = strategy == "exhaustive" ? PairStrategy::kExhaustive : PairStrategy::kConjugationPruned;
          opt.early_exit = !exhaustive_scan;
          opt.workers = parallel;
          opt.element_cap = caps.element;
          emit(to_json(property_c(g.group, opt)), as_json, std::cout);
        } else {
          json out = {{"order", g.group.order()}};
          out["powerful"] = is_powerful(g.group, caps.element);
          out["weakly_power_closed"] = is_weakly_power_closed(g.group, caps.element);
          out["weakly_order_closed"] = is_weakly_order_closed(g.group, caps.element);
          out["regular"] = is_regular(g.group);
          const NilpotencyClass nc = nilpotency_class(g.group);
          out["nilpotency_class"] = nc.nilpotency_class;
          out["maximal_class"] = nc.maximal_class;
          const Group derived = derived_subgroup(g.group);
          out["derived_weakly_power_closed"] = is_weakly_power_closed(derived, caps.element);
          out["derived_weakly_order_closed"] = is_weakly_order_closed(derived, caps.element);
          if (g.group.order() <= 256) out["power_closed"] = is_power_closed(g.group);
          emit(out, as_json, std::cout);
        }
      };
    });
  }

  // origami ...
  auto* origami = app.add_subcommand("origami", "Origami queries");
  origami->require_subcommand(1);
  OrigamiInput oin, oin2;
  std::string direction = "horizontal";
  std::size_t orbit_max = 4096;
  std::string render_out;
  SvgStyle svg_style;

  auto* stratum = origami->add_subcommand("stratum", "Stratum, genus and singularities");
  add_origami_input(stratum, oin);
  stratum->callback([&] {
    action = [&] {
      const Origami o = origami_from_json(oin.origami_json(), caps);
      const SingularityData s = singularity_data(o);
      const VertexClasses vc = vertex_classes(o, caps.element);
      json j = to_json(s);
      j["vertex_classes"] = vc.count;
      if (as_json) {
        emit(j, true, std::cout);
      } else if (s.multiplicity == 1) {
        std::cout << s.stratum() << ", genus 1, no singularities\n";
      } else {
        std::cout << s.stratum() << ", genus " << s.genus << ", " << s.count << " singularities of multiplicity "
                  << s.multiplicity << "\n";
      }
    };
  });

  auto* cylinders = origami->add_subcommand("cylinders", "Cylinder decomposition");
  add_origami_input(cylinders, oin);
  cylinders->add_option("--direction", direction, "horizontal or vertical")
      ->check(CLI::IsMember({"horizontal", "vertical"}));
  cylinders->callback([&] {
    action = [&] {
      const Origami o = origami_from_json(oin.origami_json(), caps);
      const CylinderDecomposition c = cylinder_decomposition(
          o, direction == "vertical" ? Direction::kVertical : Direction::kHorizontal, caps.element);
      if (as_json) {
        emit(to_json(c), true, std::cout);
        return;
      }
      std::cout << c.cylinders.size() << " " << direction << " cylinders";
      if (!c.cylinders.empty()) std::cout << " of circumference " << c.cylinders.front().circumference;
      std::cout << "\n";
    };
  });

  auto* equal = origami->add_subcommand("equal", "Compare two origamis over one group");
  std::string equal_a, equal_b;
  equal->add_option("first", equal_a, "Origami JSON file")->required();
  equal->add_option("second", equal_b, "Origami JSON file")->required();
  equal->callback([&] {
    action = [&] {
      const auto [a, b] = origami_pair_from_json(read_json(equal_a), read_json(equal_b), caps);
      const bool same = origami_equal(a, b, caps.element);
      if (as_json)
        emit(json{{"equal", same}}, true, std::cout);
      else
        std::cout << (same ? "equal" : "different") << "\n";
    };
  });

  auto* orbit = origami->add_subcommand("orbit", "SL(2,Z) orbit representatives");
  add_origami_input(orbit, oin);
  orbit->add_option("--max", orbit_max, "Largest orbit to enumerate");
  orbit->callback([&] {
    action = [&] {
      const Origami o = origami_from_json(oin.origami_json(), caps);
      const auto reps = sl2_orbit(o, orbit_max, caps.element);
      json list = json::array();
      for (const auto& rep : reps) {
        const SingularityData s = singularity_data(rep);
        list.push_back({{"x", rep.x().to_string()}, {"y", rep.y().to_string()}, {"stratum", s.stratum()}});
      }
      json out = {{"size", reps.size()}, {"representatives", list}};
      emit(out, as_json, std::cout);
    };
  });

  auto* render = origami->add_subcommand("render", "Render as SVG");
  add_origami_input(render, oin);
  render->add_option("-o,--output", render_out, "Output file (default stdout)");
  render->add_option("--px", svg_style.square_px, "Square size in pixels")->check(CLI::Range(8, 512));
  render->add_option("--palette", svg_style.palette, "default or mono")
      ->check(CLI::IsMember({"default", "mono"}));
  render->callback([&] {
    action = [&] {
      const Origami o = origami_from_json(oin.origami_json(), caps);
      const std::string svg = emit_svg(layout_origami(o, caps.render), svg_style);
      if (render_out.empty()) {
        std::cout << svg;
      } else {
        std::ofstream out(render_out, std::ios::binary);
        if (!out) throw InputError("cannot write '" + render_out + "'");
        out << svg;
      }
    };
  });

  // family <name>
  auto* family = app.add_subcommand("family", "Build a family member");
  FamilyArgs fam;
  family->add_option("name", fam.name, "strata, semidirect, dihedral, quaternion, semidihedral, "
                                       "sylow_wreath, counterexample, wollmilchsau, alternating")
      ->required();
  add_family_flags(family, fam, false);
  family->callback([&] {
    action = [&] {
      const NamedGroup g = group_from_json(fam.to_json(), caps);
      json out = group_info(g, caps);
      out["family"] = fam.to_json();
      emit(out, as_json, std::cout);
    };
  });

  // tower <name>
  auto* tower = app.add_subcommand("tower", "Finite truncations of a tower");
  std::string tower_name;
  unsigned from = 0, to = 0, tower_p = 2;
  tower->add_option("name", tower_name, "dihedral_staircase, dihedral_cylinders, wollmilchsau, abelian")
      ->required()
      ->check(CLI::IsMember({"dihedral_staircase", "dihedral_cylinders", "wollmilchsau", "abelian"}));
  tower->add_option("--from", from, "First level")->required();
  tower->add_option("--to", to, "Last level")->required();
  tower->add_option("--p", tower_p, "Prime of the abelian tower");
  tower->callback([&] {
    action = [&] {
      TowerFamily f = TowerFamily::kDihedralStaircase;
      if (tower_name == "dihedral_cylinders") f = TowerFamily::kDihedralCylinders;
      if (tower_name == "wollmilchsau") f = TowerFamily::kWollmilchsau;
      if (tower_name == "abelian") f = TowerFamily::kAbelian;
      const TowerReport t = tower_report(f, from, to, tower_p, caps.coset);
      if (as_json) {
        emit(to_json(t), true, std::cout);
        return;
      }
      std::cout << "level  order  commutator_order  singularities  stratum\n";
      for (const auto& l : t.levels) {
        char line[160];
        std::snprintf(line, sizeof line, "%5u  %5llu  %16llu  %13llu  %s\n", l.level,
                      static_cast<unsigned long long>(l.order),
                      static_cast<unsigned long long>(l.commutator_order),
                      static_cast<unsigned long long>(l.singularity_count), l.stratum.c_str());
        std::cout << line;
      }
      std::cout << "trend: " << (t.diverging ? "diverging" : "stabilizing") << "\n";
    };
  });

  // search counterexample
  auto* search = app.add_subcommand("search", "Randomized searches");
  search->require_subcommand(1);
  auto* counter = search->add_subcommand("counterexample", "Pairs with ord([x,y]) != ord([x,y^(p+1)])");
  unsigned sp = 2, sr = 4;
  std::uint64_t seed = 1, max_iter = 100000;
  std::string predicate = "order_mismatch";
  counter->add_option("--p", sp, "Prime")->required();
  counter->add_option("--r", sr, "Wreath depth")->required();
  counter->add_option("--seed", seed, "Seed");
  counter->add_option("--max-iter", max_iter, "Iteration budget");
  counter->add_option("--predicate", predicate, "order_mismatch or order_mismatch_and_wpc_derived")
      ->check(CLI::IsMember({"order_mismatch", "order_mismatch_and_wpc_derived"}));
  counter->callback([&] {
    action = [&] {
      const SearchResult r = search_counterexample(
          sp, sr, seed, max_iter,
          predicate == "order_mismatch" ? SearchPredicate::kOrderMismatch
                                        : SearchPredicate::kOrderMismatchAndWeaklyPowerClosedDerived);
      if (as_json) {
        emit(to_json(r), true, std::cout);
      } else if (!r.found) {
        std::cout << "NotFound after " << r.iterations << " iterations\n";
      } else {
        print_table(to_json(r), std::cout);
      }
    };
  });

  // present tc <file>
  auto* present = app.add_subcommand("present", "Presentations");
  present->require_subcommand(1);
  auto* tc = present->add_subcommand("tc", "Todd-Coxeter over the trivial subgroup");
  std::string tc_file;
  tc->add_option("file", tc_file, "File holding a presentation such as <a,b | a^2, b^3>")->required();
  tc->callback([&] {
    action = [&] {
      const Presentation pres = parse_presentation(read_file(tc_file));
      const CosetTable table = todd_coxeter(pres, caps.coset);
      const auto gens = coset_realization(table);
      json images = json::object();
      for (std::size_t i = 0; i < gens.size(); ++i) images[pres.generators[i]] = gens[i].to_string();
      emit(json{{"cosets", table.cosets}, {"presentation", pres.to_string()}, {"generators", images}}, as_json,
           std::cout);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  try {
    if (action) action();
  } catch (const CLI::ParseError& e) {
    std::cerr << "porigami: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CapExceeded& e) {
    std::cerr << "porigami: " << e.what() << "\n";
    return kExitCap;
  } catch (const std::exception& e) {
    std::cerr << "porigami: " << e.what() << "\n";
    return kExitInput;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const porigami::InputError& e) {
    // Malformed PORIGAMI_CAPS.
    std::cerr << "porigami: " << e.what() << "\n";
    return kExitInput;
  }
}
