#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "porigami/group.hpp"
#include "porigami/permutation.hpp"

namespace porigami {

struct Letter {
  std::size_t generator;
  std::int64_t exponent;
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Freely reduced word: adjacent letters have distinct generators and
/// exponents are nonzero.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);  // reduces

  std::span<const Letter> letters() const noexcept { return letters_; }
  bool empty() const noexcept { return letters_.empty(); }

  Word operator*(const Word& rhs) const;
  Word inverse() const;
  Word pow(std::int64_t e) const;

  /// Evaluates with generator k mapped to images[k] (left-to-right product).
  Permutation evaluate(std::span<const Permutation> images, std::size_t degree) const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  /// Text form in the input grammar, e.g. "<r,s | r^4, s^2, s^-1*r*s*r>".
  std::string to_string() const;
};

/// Parses "<a,b | rel, u=v, ...>"; the angle brackets may be ASCII or
/// U+27E8/U+27E9 and are optional. Throws ParseError (with byte offset) on
/// syntax errors and unknown generators, InputError on duplicate names.
Presentation parse_presentation(std::string_view text);

/// Parses a word over the given generator names.
Word parse_word(std::string_view text, const std::vector<std::string>& names);

inline constexpr std::size_t kDefaultCosetCap = std::size_t{1} << 16;

/// Closed coset table of the trivial subgroup: the regular action.
/// Cosets are 0-based internally; coset 0 is the subgroup itself and the
/// numbering is standardized (breadth-first over the columns).
struct CosetTable {
  std::size_t cosets = 0;
  /// action[g][c] = c * g, inverse_action[g][c] = c * g^-1.
  std::vector<std::vector<std::uint32_t>> action;
  std::vector<std::vector<std::uint32_t>> inverse_action;
};

/// HLT coset enumeration over the trivial subgroup with deferred
/// coincidence processing. Throws CapExceeded when more than `max_cosets`
/// cosets are alive at once.
CosetTable todd_coxeter(const Presentation& pres, std::size_t max_cosets = kDefaultCosetCap);

/// One permutation per generator acting on cosets 1..cosets.
std::vector<Permutation> coset_realization(const CosetTable& table);

/// Todd-Coxeter followed by coset_realization, as a Group.
struct RealizedPresentation {
  Group group;
  std::vector<Permutation> generators;  // images of the named generators
};

RealizedPresentation realize(const Presentation& pres, std::size_t max_cosets = kDefaultCosetCap,
                             std::optional<unsigned> prime = {});

}  // namespace porigami
