#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace prop {

/// One factor x_gen^exp of a word. Exponent is never zero inside a GroupWord.
struct Syllable {
  std::uint32_t gen = 0;
  std::int64_t exp = 1;

  friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

/// A freely reduced element of the free group on generators 0, 1, 2, ...
///
/// Adjacent syllables always carry distinct generators and no exponent is
/// zero, so two words are equal as group elements iff they compare equal.
class GroupWord {
 public:
  GroupWord() = default;

  /// Reduces an arbitrary syllable sequence (zero exponents allowed).
  explicit GroupWord(std::span<const Syllable> syllables);
  GroupWord(std::initializer_list<Syllable> syllables);

  static GroupWord generator(std::uint32_t gen, std::int64_t exp = 1);

  std::span<const Syllable> syllables() const noexcept { return syllables_; }
  bool is_identity() const noexcept { return syllables_.empty(); }
  std::size_t num_syllables() const noexcept { return syllables_.size(); }
  /// Sum of |exponent| over syllables.
  std::uint64_t length() const noexcept;
  /// One past the largest generator index used, 0 for the identity.
  std::uint32_t generator_bound() const noexcept;

  GroupWord inverse() const;
  GroupWord pow(std::int64_t e) const;

  /// Exponent sum of each generator; the vector has `num_generators` entries.
  std::vector<std::int64_t> exponent_sums(std::uint32_t num_generators) const;

  friend GroupWord operator*(const GroupWord& a, const GroupWord& b);
  GroupWord& operator*=(const GroupWord& other);

  friend auto operator<=>(const GroupWord&, const GroupWord&) = default;
  friend bool operator==(const GroupWord&, const GroupWord&) = default;

 private:
  // Appends one syllable, cancelling against the tail.
  void push(Syllable s);

  std::vector<Syllable> syllables_;
};

GroupWord multiply(const GroupWord& a, const GroupWord& b);
GroupWord invert(const GroupWord& w);
/// [u, v] = u^-1 v^-1 u v.
GroupWord commutator(const GroupWord& u, const GroupWord& v);

/// Replaces every generator g by images[g] and reduces.
GroupWord substitute(const GroupWord& w, std::span<const GroupWord> images);

/// Default generator names x1, x2, ... as used when no presentation is at hand.
std::vector<std::string> default_generator_names(std::uint32_t count);

/// Renders "x1^2*x2^-1"; the identity renders as "1".
std::string to_string(const GroupWord& w, std::span<const std::string> names,
                      std::string_view separator = "*");
std::string to_string(const GroupWord& w);

/// A finite presentation of a pro-p group: prime, named generators, relators.
class Presentation {
 public:
  /// Validates: p prime (< 2^16), names distinct and non-empty, every relator
  /// non-trivial and within range.
  Presentation(std::uint32_t p, std::vector<std::string> generator_names,
               std::vector<GroupWord> relators);

  std::uint32_t prime() const noexcept { return p_; }
  std::uint32_t num_generators() const noexcept {
    return static_cast<std::uint32_t>(names_.size());
  }
  std::size_t num_relators() const noexcept { return relators_.size(); }
  const std::vector<std::string>& generator_names() const noexcept { return names_; }
  const std::vector<GroupWord>& relators() const noexcept { return relators_; }

  /// Index of a named generator; throws InputError if unknown.
  std::uint32_t generator_index(std::string_view name) const;

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  std::uint32_t p_;
  std::vector<std::string> names_;
  std::vector<GroupWord> relators_;
};

/// Parses the presentation DSL:
///
///     pres := "p" "=" INT "gens" ":" ident ("," ident)* "rels" ":" word (";" word)*
///     word := term+     term := atom ("^" SIGNED_INT)?
///     atom := ident | "(" word ")" | "[" word "," word "]"
///
/// Juxtaposition (or an explicit "*") multiplies, "1" denotes the identity and
/// "#" starts a comment running to end of line. The relator list may be empty
/// ("rels:" followed by nothing). Throws ParseError with line/column on syntax
/// errors and InputError on semantic ones (non-prime p, zero exponent, unknown
/// generator, trivial relator).
Presentation parse_presentation(std::string_view text);

/// Parses a single word over the given generator names.
GroupWord parse_word(std::string_view text, std::span<const std::string> names);

/// Renders DSL text that parse_presentation reads back to an equal value.
std::string to_string(const Presentation& pres);

}  // namespace prop
