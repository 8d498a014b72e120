#include "porigami/serialization.hpp"

#include <charconv>

#include "porigami/errors.hpp"

namespace porigami {

using nlohmann::json;

Caps Caps::parse(std::string_view text) {
  Caps caps;
  std::size_t* fields[] = {&caps.element, &caps.coset, &caps.render};
  std::size_t field = 0;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = std::min(text.find(':', start), text.size());
    if (field == 3) throw InputError("caps take three fields: elem:coset:render");
    const std::string_view part = text.substr(start, end - start);
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (part.empty() || ec != std::errc() || ptr != part.data() + part.size() || value == 0)
      throw InputError("cap '" + std::string(part) + "' is not a positive integer");
    *fields[field++] = value;
    if (end == text.size()) break;
    start = end + 1;
  }
  if (field != 3) throw InputError("caps take three fields: elem:coset:render");
  return caps;
}

namespace {

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return j.at(key);
}

unsigned uint_field(const json& j, const char* key) {
  const json& v = member(j, key);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0 || v.get<std::int64_t>() > 1'000'000)
    throw InputError(std::string("field '") + key + "' must be a small nonnegative integer");
  return v.get<unsigned>();
}

std::int64_t int_field(const json& j, const char* key) {
  const json& v = member(j, key);
  if (!v.is_number_integer()) throw InputError(std::string("field '") + key + "' must be an integer");
  return v.get<std::int64_t>();
}

std::vector<std::string> string_list(const json& j, const char* key) {
  const json& v = member(j, key);
  if (!v.is_array()) throw InputError(std::string("field '") + key + "' must be an array");
  std::vector<std::string> out;
  for (const auto& s : v) {
    if (!s.is_string()) throw InputError(std::string("field '") + key + "' must hold strings");
    out.push_back(s.get<std::string>());
  }
  return out;
}

NamedGroup from_pair(const GroupWithPair& gp, const char* a, const char* b) {
  return {gp.group, {a, b}, {gp.x, gp.y}};
}

Group with_detected_prime(const Group& g) {
  if (g.prime() || g.is_trivial()) return g;
  try {
    return g.with_prime(require_prime(g));
  } catch (const NotPGroup&) {
    return g;
  }
}

NamedGroup family_from_json(const json& j, const Caps& caps) {
  const json& name_field = member(j, "name");
  if (!name_field.is_string()) throw InputError("family name must be a string");
  const std::string name = name_field.get<std::string>();
  if (name == "strata") return from_pair(strata_family(uint_field(j, "p"), uint_field(j, "n"), uint_field(j, "k")), "r", "s");
  if (name == "semidirect")
    return from_pair(semidirect_cyclic(uint_field(j, "p"), uint_field(j, "l"), uint_field(j, "m"), int_field(j, "a")),
                     "r", "s");
  if (name == "dihedral")
    return from_pair(maximal_class_family(MaximalClassKind::kDihedral, uint_field(j, "n"), caps.coset), "r", "s");
  if (name == "quaternion")
    return from_pair(maximal_class_family(MaximalClassKind::kQuaternion, uint_field(j, "n"), caps.coset), "r", "s");
  if (name == "semidihedral")
    return from_pair(maximal_class_family(MaximalClassKind::kSemidihedral, uint_field(j, "n"), caps.coset), "r", "s");
  if (name == "wollmilchsau") return from_pair(wollmilchsau_group(uint_field(j, "n"), caps.coset), "x", "y");
  if (name == "sylow_wreath") {
    const unsigned p = uint_field(j, "p");
    const unsigned r = uint_field(j, "r");
    NamedGroup out{sylow_group(p, r), {}, {}};
    for (unsigned i = 1; i <= r; ++i) {
      out.names.push_back("e" + std::to_string(i));
      out.generators.push_back(sylow_wreath_generator(p, r, i, 1));
    }
    return out;
  }
  if (name == "counterexample") {
    const unsigned p = uint_field(j, "p");
    const CounterexampleGenerators c = counterexample_generators(p);
    return {Group(std::vector<Permutation>{c.x, c.y}, p), {"x", "y", "xp"}, {c.x, c.y, c.x_prime}};
  }
  if (name == "alternating") {
    const AlternatingExample a = alternating_example(uint_field(j, "n"));
    return {a.group, {"x", "y", "u", "v"}, {a.first.first, a.first.second, a.second.first, a.second.second}};
  }
  throw InputError("unknown family '" + name + "'");
}

}  // namespace

NamedGroup group_from_json(const json& j, const Caps& caps) {
  const json& kind_field = member(j, "kind");
  if (!kind_field.is_string()) throw InputError("group kind must be a string");
  const std::string kind = kind_field.get<std::string>();
  NamedGroup out;
  if (kind == "permutation") {
    const std::vector<std::string> gens = string_list(j, "generators");
    std::size_t degree = j.contains("degree") ? uint_field(j, "degree") : 0;
    std::vector<Permutation> perms;
    for (const auto& s : gens) perms.push_back(Permutation::parse(s, degree));
    for (const auto& p : perms) degree = std::max(degree, p.degree());
    for (auto& p : perms) p = p.extended(degree);
    for (std::size_t i = 0; i < perms.size(); ++i) out.names.push_back("g" + std::to_string(i + 1));
    out.group = Group(degree, perms);
    out.generators = std::move(perms);
  } else if (kind == "presentation") {
    const std::vector<std::string> gens = string_list(j, "generators");
    const std::vector<std::string> rels = string_list(j, "relators");
    std::string text = "<";
    for (std::size_t i = 0; i < gens.size(); ++i) text += (i ? "," : "") + gens[i];
    text += " |";
    for (std::size_t i = 0; i < rels.size(); ++i) text += (i ? ", " : " ") + rels[i];
    text += ">";
    RealizedPresentation rp = realize(parse_presentation(text), caps.coset);
    out = {rp.group, gens, rp.generators};
  } else if (kind == "family") {
    out = family_from_json(j, caps);
  } else {
    throw InputError("unknown group kind '" + kind + "'");
  }
  out.group = with_detected_prime(out.group);
  return out;
}

Permutation element_from_text(const NamedGroup& g, std::string_view text) {
  const std::size_t first = text.find_first_not_of(" \t");
  if (first != std::string_view::npos && text[first] == '(') {
    Permutation p = Permutation::parse(text, g.group.degree());
    return p.extended(g.group.degree());
  }
  return parse_word(text, g.names).evaluate(g.generators, g.group.degree());
}

namespace {

Origami origami_over(const NamedGroup& g, const json& j) {
  const json& x = member(j, "x");
  const json& y = member(j, "y");
  if (!x.is_string() || !y.is_string()) throw InputError("origami x and y must be strings");
  return make_origami(g.group, element_from_text(g, x.get<std::string>()),
                      element_from_text(g, y.get<std::string>()));
}

}  // namespace

Origami origami_from_json(const json& j, const Caps& caps) {
  return origami_over(group_from_json(member(j, "group"), caps), j);
}

std::pair<Origami, Origami> origami_pair_from_json(const json& a, const json& b, const Caps& caps) {
  if (member(a, "group") != member(b, "group"))
    throw InputError("origamis must share one group description to be compared");
  const NamedGroup g = group_from_json(a.at("group"), caps);
  return {origami_over(g, a), origami_over(g, b)};
}

json to_json(const Group& g) {
  json gens = json::array();
  for (const auto& p : g.generators()) gens.push_back(p.to_string());
  return {{"kind", "permutation"}, {"degree", g.degree()}, {"generators", gens}};
}

json to_json(const Origami& o) {
  return {{"group", to_json(o.group())}, {"x", o.x().to_string()}, {"y", o.y().to_string()}};
}

json to_json(const SingularityData& s) {
  return {{"multiplicity", s.multiplicity},
          {"singularities", s.count},
          {"genus", s.genus},
          {"stratum", s.stratum()}};
}

json to_json(const CylinderDecomposition& c) {
  json cyls = json::array();
  for (const auto& cyl : c.cylinders)
    cyls.push_back({{"circumference", cyl.circumference}, {"squares", cyl.squares}});
  return {{"direction", to_string(c.direction)}, {"count", c.cylinders.size()}, {"cylinders", cyls}};
}

json to_json(const PropertyCReport& r) {
  json witnesses = json::array();
  for (const auto& w : r.witnesses)
    witnesses.push_back({{"x", w.x.to_string()},
                         {"y", w.y.to_string()},
                         {"x_index", w.x_index},
                         {"y_index", w.y_index},
                         {"commutator_order", w.commutator_order}});
  return {{"holds", r.holds},
          {"orders", std::vector<std::uint64_t>(r.orders_found.begin(), r.orders_found.end())},
          {"pairs_examined", r.pairs_examined},
          {"strategy", to_string(r.strategy)},
          {"witnesses", witnesses}};
}

json to_json(const TowerReport& t) {
  json levels = json::array();
  for (const auto& l : t.levels)
    levels.push_back({{"level", l.level},
                      {"order", l.order},
                      {"commutator_order", l.commutator_order},
                      {"singularities", l.singularity_count},
                      {"stratum", l.stratum}});
  return {{"family", to_string(t.family)},
          {"trend", t.diverging ? "diverging" : "stabilizing"},
          {"levels", levels}};
}

json to_json(const SearchResult& s) {
  json out = {{"found", s.found}, {"iterations", s.iterations}};
  if (s.found) {
    out["x"] = s.x->to_string();
    out["y"] = s.y->to_string();
    out["commutator_order"] = s.commutator_order;
    out["shifted_commutator_order"] = s.shifted_commutator_order;
  }
  return out;
}

json to_json(const CosetTable& t) {
  json rows = json::array();
  for (const auto& row : t.action) {
    std::vector<std::uint32_t> one_based(row.begin(), row.end());
    for (auto& v : one_based) ++v;
    rows.push_back(one_based);
  }
  return {{"cosets", t.cosets}, {"table", rows}};
}

}  // namespace porigami
