#include "porigami/presentation.hpp"

#include <algorithm>
#include <cctype>

#include "porigami/errors.hpp"

namespace porigami {

Word::Word(std::vector<Letter> letters) {
  for (const auto& l : letters) {
    if (l.exponent == 0) continue;
    if (!letters_.empty() && letters_.back().generator == l.generator) {
      letters_.back().exponent += l.exponent;
      if (letters_.back().exponent == 0) letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }
}

Word Word::operator*(const Word& rhs) const {
  std::vector<Letter> all = letters_;
  all.insert(all.end(), rhs.letters_.begin(), rhs.letters_.end());
  return Word(std::move(all));
}

Word Word::inverse() const {
  std::vector<Letter> inv;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    inv.push_back({it->generator, -it->exponent});
  return Word(std::move(inv));
}

Word Word::pow(std::int64_t e) const {
  if (letters_.size() == 1) return Word({{letters_[0].generator, letters_[0].exponent * e}});
  const Word base = e < 0 ? inverse() : *this;
  Word out;
  for (std::int64_t k = 0; k < (e < 0 ? -e : e); ++k) out = out * base;
  return out;
}

Permutation Word::evaluate(std::span<const Permutation> images, std::size_t degree) const {
  Permutation result(degree);
  for (const auto& l : letters_) {
    if (l.generator >= images.size()) throw InputError("word uses an unbound generator");
    result *= images[l.generator].pow(l.exponent);
  }
  return result;
}

namespace {

constexpr std::string_view kOpenAngle = "\xE2\x9F\xA8";   // U+27E8
constexpr std::string_view kCloseAngle = "\xE2\x9F\xA9";  // U+27E9

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ == text_.size();
  }

  bool accept(std::string_view token) {
    skip_ws();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view token) {
    if (!accept(token)) throw ParseError("expected '" + std::string(token) + "'", pos_);
  }

  std::string identifier() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ >= text_.size() || !std::isalpha(static_cast<unsigned char>(text_[pos_])))
      throw ParseError("expected an identifier", pos_);
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::int64_t integer() {
    skip_ws();
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
      skip_ws();
    }
    const std::size_t start = pos_;
    std::int64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > (std::int64_t{1} << 40)) throw ParseError("exponent too large", start);
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected an integer", pos_);
    return negative ? -v : v;
  }

  Word word(const std::vector<std::string>& names) {
    Word w = factor(names);
    while (accept("*")) w = w * factor(names);
    return w;
  }

  Word factor(const std::vector<std::string>& names) {
    skip_ws();
    Word base;
    if (accept("(")) {
      base = word(names);
      expect(")");
    } else if (pos_ < text_.size() && text_[pos_] == '1') {
      ++pos_;
    } else {
      const std::size_t at = pos_;
      const std::string name = identifier();
      auto it = std::find(names.begin(), names.end(), name);
      if (it == names.end()) throw ParseError("unknown generator '" + name + "'", at);
      base = Word({{static_cast<std::size_t>(it - names.begin()), 1}});
    }
    if (accept("^")) base = base.pow(integer());
    return base;
  }

  Word relator(const std::vector<std::string>& names) {
    Word lhs = word(names);
    if (accept("=")) return lhs * word(names).inverse();
    return lhs;
  }

  std::size_t pos() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Presentation parse_presentation(std::string_view text) {
  Parser in(text);
  Presentation pres;
  const bool unicode = in.accept(kOpenAngle);
  const bool ascii = !unicode && in.accept("<");
  in.skip_ws();
  if (!in.accept("|")) {
    do {
      const std::size_t at = in.pos();
      std::string name = in.identifier();
      if (std::find(pres.generators.begin(), pres.generators.end(), name) != pres.generators.end())
        throw InputError("duplicate generator '" + name + "' at position " + std::to_string(at));
      pres.generators.push_back(std::move(name));
    } while (in.accept(","));
    in.expect("|");
  }
  const auto closes = [&] {
    if (unicode) return in.accept(kCloseAngle);
    if (ascii) return in.accept(">");
    return in.at_end();
  };
  if (!closes()) {
    do {
      pres.relators.push_back(in.relator(pres.generators));
    } while (in.accept(","));
    if (unicode)
      in.expect(kCloseAngle);
    else if (ascii)
      in.expect(">");
  }
  if (!in.at_end()) throw ParseError("trailing input", in.pos());
  return pres;
}

Word parse_word(std::string_view text, const std::vector<std::string>& names) {
  Parser in(text);
  Word w = in.relator(names);
  if (!in.at_end()) throw ParseError("trailing input", in.pos());
  return w;
}

std::string Presentation::to_string() const {
  std::string s = "<";
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (i) s += ",";
    s += generators[i];
  }
  s += " | ";
  for (std::size_t r = 0; r < relators.size(); ++r) {
    if (r) s += ", ";
    const auto letters = relators[r].letters();
    if (letters.empty()) s += "1";
    for (std::size_t k = 0; k < letters.size(); ++k) {
      if (k) s += "*";
      s += generators[letters[k].generator];
      if (letters[k].exponent != 1) s += "^" + std::to_string(letters[k].exponent);
    }
  }
  return s + ">";
}

namespace {

class CosetEnumerator {
 public:
  CosetEnumerator(std::size_t generators, std::size_t cap)
      : columns_(2 * generators), cap_(cap) {
    new_coset();
  }

  static std::size_t inverse_column(std::size_t col) { return col ^ 1u; }

  std::int64_t& entry(std::size_t coset, std::size_t col) { return table_[coset * columns_ + col]; }

  bool alive(std::size_t c) const { return parent_[c] == c; }
  std::size_t allocated() const { return parent_.size(); }

  std::size_t new_coset() {
    if (live_ >= cap_) throw CapExceeded("coset enumeration", cap_);
    const std::size_t c = parent_.size();
    parent_.push_back(c);
    table_.resize(table_.size() + columns_, -1);
    ++live_;
    return c;
  }

  void define(std::size_t c, std::size_t col) {
    const std::size_t d = new_coset();
    entry(c, col) = static_cast<std::int64_t>(d);
    entry(d, inverse_column(col)) = static_cast<std::int64_t>(c);
  }

  void scan_and_fill(std::size_t c, const std::vector<std::size_t>& w) {
    if (w.empty()) return;
    std::size_t f = c, b = c;
    std::ptrdiff_t i = 0;
    std::ptrdiff_t j = static_cast<std::ptrdiff_t>(w.size()) - 1;
    while (true) {
      while (i <= j && entry(f, w[i]) >= 0) {
        f = static_cast<std::size_t>(entry(f, w[i]));
        ++i;
      }
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && entry(b, inverse_column(w[j])) >= 0) {
        b = static_cast<std::size_t>(entry(b, inverse_column(w[j])));
        --j;
      }
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        // Deduction: exactly one gap left.
        entry(f, w[i]) = static_cast<std::int64_t>(b);
        entry(b, inverse_column(w[i])) = static_cast<std::int64_t>(f);
        return;
      }
      define(f, w[i]);
    }
  }

  std::size_t rep(std::size_t c) {
    std::size_t r = c;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[c] != r) {
      const std::size_t next = parent_[c];
      parent_[c] = r;
      c = next;
    }
    return r;
  }

  void merge(std::size_t k, std::size_t l, std::vector<std::size_t>& queue) {
    k = rep(k);
    l = rep(l);
    if (k == l) return;
    if (k > l) std::swap(k, l);
    parent_[l] = k;
    queue.push_back(l);
    --live_;
  }

  void coincidence(std::size_t a, std::size_t b) {
    std::vector<std::size_t> queue;
    merge(a, b, queue);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const std::size_t e = queue[qi];
      for (std::size_t x = 0; x < columns_; ++x) {
        if (entry(e, x) < 0) continue;
        const std::size_t f = static_cast<std::size_t>(entry(e, x));
        const std::size_t xi = inverse_column(x);
        if (entry(f, xi) == static_cast<std::int64_t>(e)) entry(f, xi) = -1;
        const std::size_t e1 = rep(e);
        const std::size_t f1 = rep(f);
        if (entry(e1, x) >= 0) {
          merge(f1, static_cast<std::size_t>(entry(e1, x)), queue);
        } else if (entry(f1, xi) >= 0) {
          merge(e1, static_cast<std::size_t>(entry(f1, xi)), queue);
        } else {
          entry(e1, x) = static_cast<std::int64_t>(f1);
          entry(f1, xi) = static_cast<std::int64_t>(e1);
        }
      }
    }
  }

  std::size_t columns() const { return columns_; }

 private:
  std::size_t columns_;
  std::size_t cap_;
  std::size_t live_ = 0;
  std::vector<std::size_t> parent_;
  std::vector<std::int64_t> table_;
};

std::vector<std::size_t> relator_columns(const Word& w) {
  std::vector<std::size_t> cols;
  for (const auto& l : w.letters()) {
    const std::size_t col = 2 * l.generator + (l.exponent < 0 ? 1 : 0);
    for (std::int64_t k = 0; k < (l.exponent < 0 ? -l.exponent : l.exponent); ++k)
      cols.push_back(col);
  }
  return cols;
}

}  // namespace

CosetTable todd_coxeter(const Presentation& pres, std::size_t max_cosets) {
  if (max_cosets == 0) throw CapExceeded("coset enumeration", max_cosets);
  const std::size_t ngens = pres.generators.size();
  std::vector<std::vector<std::size_t>> rels;
  for (const auto& r : pres.relators) rels.push_back(relator_columns(r));

  CosetEnumerator en(ngens, max_cosets);
  for (std::size_t c = 0; c < en.allocated(); ++c) {
    for (const auto& r : rels) {
      if (!en.alive(c)) break;
      en.scan_and_fill(c, r);
    }
    if (!en.alive(c)) continue;
    for (std::size_t x = 0; x < en.columns(); ++x)
      if (en.entry(c, x) < 0) en.define(c, x);
  }

  // Standardize: breadth-first renumbering of live cosets from coset 0.
  std::vector<std::int64_t> label(en.allocated(), -1);
  std::vector<std::size_t> order{0};
  label[0] = 0;
  for (std::size_t k = 0; k < order.size(); ++k)
    for (std::size_t x = 0; x < en.columns(); ++x) {
      const std::size_t d = en.rep(static_cast<std::size_t>(en.entry(order[k], x)));
      if (label[d] < 0) {
        label[d] = static_cast<std::int64_t>(order.size());
        order.push_back(d);
      }
    }

  CosetTable table;
  table.cosets = order.size();
  table.action.assign(ngens, std::vector<std::uint32_t>(order.size()));
  table.inverse_action.assign(ngens, std::vector<std::uint32_t>(order.size()));
  for (std::size_t k = 0; k < order.size(); ++k)
    for (std::size_t g = 0; g < ngens; ++g) {
      table.action[g][k] = static_cast<std::uint32_t>(
          label[en.rep(static_cast<std::size_t>(en.entry(order[k], 2 * g)))]);
      table.inverse_action[g][k] = static_cast<std::uint32_t>(
          label[en.rep(static_cast<std::size_t>(en.entry(order[k], 2 * g + 1)))]);
    }
  return table;
}

std::vector<Permutation> coset_realization(const CosetTable& table) {
  std::vector<Permutation> perms;
  for (const auto& row : table.action) {
    std::vector<Point> images(row.size());
    for (std::size_t c = 0; c < row.size(); ++c) images[c] = row[c] + 1;
    perms.push_back(Permutation::from_images(images));
  }
  return perms;
}

RealizedPresentation realize(const Presentation& pres, std::size_t max_cosets,
                             std::optional<unsigned> prime) {
  const CosetTable table = todd_coxeter(pres, max_cosets);
  std::vector<Permutation> gens = coset_realization(table);
  return {Group(table.cosets, gens, prime), gens};
}

}  // namespace porigami
