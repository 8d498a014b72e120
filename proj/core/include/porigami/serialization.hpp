#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "porigami/families.hpp"
#include "porigami/origami.hpp"
#include "porigami/pgroup_props.hpp"
#include "porigami/presentation.hpp"
#include "porigami/render.hpp"

namespace porigami {

struct Caps {
  std::size_t element = kDefaultElementCap;
  std::size_t coset = kDefaultCosetCap;
  std::size_t render = kDefaultRenderCap;

  /// "elem:coset:render", all positive integers. Throws InputError.
  static Caps parse(std::string_view text);
};

/// A group with the generator names words may use: the presentation's
/// names, the family's pair names, or g1..gN for permutation generators.
struct NamedGroup {
  Group group;
  std::vector<std::string> names;
  std::vector<Permutation> generators;  // image of each name
};

/// Accepts {"kind":"permutation",...}, {"kind":"presentation",...} and
/// {"kind":"family","name":...}. Throws InputError on malformed JSON shape,
/// ParseError on malformed cycles or relators, family errors unchanged.
NamedGroup group_from_json(const nlohmann::json& j, const Caps& caps = {});

/// Cycle notation when the text starts with '(', otherwise a word over the
/// group's generator names.
Permutation element_from_text(const NamedGroup& g, std::string_view text);

Origami origami_from_json(const nlohmann::json& j, const Caps& caps = {});
/// Two origamis over one realization of the same group JSON.
std::pair<Origami, Origami> origami_pair_from_json(const nlohmann::json& a, const nlohmann::json& b,
                                                   const Caps& caps = {});

nlohmann::json to_json(const Group& g);
nlohmann::json to_json(const Origami& o);
nlohmann::json to_json(const SingularityData& s);
nlohmann::json to_json(const CylinderDecomposition& c);
nlohmann::json to_json(const PropertyCReport& r);
nlohmann::json to_json(const TowerReport& t);
nlohmann::json to_json(const SearchResult& s);
nlohmann::json to_json(const CosetTable& t);

}  // namespace porigami
