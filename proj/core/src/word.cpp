#include "prop/word.hpp"

#include <algorithm>
#include <set>

#include "prop/error.hpp"
#include "prop/fp.hpp"

namespace prop {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw InputError("word exponent overflows 64 bits");
  return out;
}

std::int64_t checked_neg(std::int64_t a) {
  if (a == INT64_MIN) throw InputError("word exponent overflows 64 bits");
  return -a;
}

}  // namespace

GroupWord::GroupWord(std::span<const Syllable> syllables) {
  syllables_.reserve(syllables.size());
  for (const Syllable& s : syllables) push(s);
}

GroupWord::GroupWord(std::initializer_list<Syllable> syllables)
    : GroupWord(std::span<const Syllable>(syllables.begin(), syllables.size())) {}

GroupWord GroupWord::generator(std::uint32_t gen, std::int64_t exp) {
  GroupWord w;
  w.push({gen, exp});
  return w;
}

void GroupWord::push(Syllable s) {
  if (s.exp == 0) return;
  if (!syllables_.empty() && syllables_.back().gen == s.gen) {
    std::int64_t e = checked_add(syllables_.back().exp, s.exp);
    if (e == 0)
      syllables_.pop_back();
    else
      syllables_.back().exp = e;
    return;
  }
  syllables_.push_back(s);
}

std::uint64_t GroupWord::length() const noexcept {
  std::uint64_t total = 0;
  for (const Syllable& s : syllables_)
    total += s.exp < 0 ? std::uint64_t{0} - static_cast<std::uint64_t>(s.exp)
                       : static_cast<std::uint64_t>(s.exp);
  return total;
}

std::uint32_t GroupWord::generator_bound() const noexcept {
  std::uint32_t bound = 0;
  for (const Syllable& s : syllables_) bound = std::max(bound, s.gen + 1);
  return bound;
}

GroupWord GroupWord::inverse() const {
  GroupWord w;
  w.syllables_.reserve(syllables_.size());
  for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it)
    w.syllables_.push_back({it->gen, checked_neg(it->exp)});
  return w;
}

GroupWord GroupWord::pow(std::int64_t e) const {
  GroupWord base = e < 0 ? inverse() : *this;
  std::uint64_t n = e < 0 ? std::uint64_t{0} - static_cast<std::uint64_t>(e)
                          : static_cast<std::uint64_t>(e);
  GroupWord result;
  // Reduction merges c x^a c^-1 squares into c x^2a c^-1, so large powers of
  // conjugates of a single syllable stay short.
  while (n != 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n != 0) base = base * base;
  }
  return result;
}

std::vector<std::int64_t> GroupWord::exponent_sums(std::uint32_t num_generators) const {
  std::vector<std::int64_t> sums(num_generators, 0);
  for (const Syllable& s : syllables_) {
    if (s.gen >= num_generators) throw InputError("generator index out of range");
    sums[s.gen] = checked_add(sums[s.gen], s.exp);
  }
  return sums;
}

GroupWord operator*(const GroupWord& a, const GroupWord& b) {
  GroupWord out = a;
  out *= b;
  return out;
}

GroupWord& GroupWord::operator*=(const GroupWord& other) {
  if (this == &other) {
    GroupWord copy = other;
    return *this *= copy;
  }
  for (const Syllable& s : other.syllables_) push(s);
  return *this;
}

GroupWord multiply(const GroupWord& a, const GroupWord& b) { return a * b; }

GroupWord invert(const GroupWord& w) { return w.inverse(); }

GroupWord commutator(const GroupWord& u, const GroupWord& v) {
  return u.inverse() * v.inverse() * u * v;
}

GroupWord substitute(const GroupWord& w, std::span<const GroupWord> images) {
  GroupWord out;
  for (const Syllable& s : w.syllables()) {
    if (s.gen >= images.size()) throw InputError("substitution misses a generator image");
    out *= images[s.gen].pow(s.exp);
  }
  return out;
}

std::vector<std::string> default_generator_names(std::uint32_t count) {
  std::vector<std::string> names;
  names.reserve(count);
  for (std::uint32_t i = 0; i < count; ++i) names.push_back("x" + std::to_string(i + 1));
  return names;
}

std::string to_string(const GroupWord& w, std::span<const std::string> names,
                      std::string_view separator) {
  if (w.is_identity()) return "1";
  std::string out;
  bool first = true;
  for (const Syllable& s : w.syllables()) {
    if (!first) out += separator;
    first = false;
    out += s.gen < names.size() ? names[s.gen] : "g" + std::to_string(s.gen);
    if (s.exp != 1) out += "^" + std::to_string(s.exp);
  }
  return out;
}

std::string to_string(const GroupWord& w) {
  auto names = default_generator_names(w.generator_bound());
  return to_string(w, names);
}

Presentation::Presentation(std::uint32_t p, std::vector<std::string> generator_names,
                           std::vector<GroupWord> relators)
    : p_(p), names_(std::move(generator_names)), relators_(std::move(relators)) {
  PrimeField field(p_);  // validates p
  std::set<std::string_view> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw InputError("empty generator name");
    if (!seen.insert(n).second) throw InputError("duplicate generator name '" + n + "'");
  }
  for (std::size_t i = 0; i < relators_.size(); ++i) {
    if (relators_[i].is_identity())
      throw InputError("relator " + std::to_string(i) + " reduces to the identity");
    if (relators_[i].generator_bound() > names_.size())
      throw InputError("relator " + std::to_string(i) + " uses an undeclared generator");
  }
}

std::uint32_t Presentation::generator_index(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw InputError("unknown generator '" + std::string(name) + "'");
  return static_cast<std::uint32_t>(it - names_.begin());
}

std::string to_string(const Presentation& pres) {
  std::string out = "p=" + std::to_string(pres.prime()) + " gens: ";
  const auto& names = pres.generator_names();
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i != 0) out += ", ";
    out += names[i];
  }
  out += " rels:";
  for (std::size_t i = 0; i < pres.relators().size(); ++i) {
    out += i == 0 ? " " : "; ";
    out += to_string(pres.relators()[i], names, " ");
  }
  return out;
}

}  // namespace prop
