#pragma once

// Random generators and independent oracles shared by the test programs.

#include <cstdint>
#include <random>
#include <vector>

#include "prop/fox.hpp"
#include "prop/fpmatrix.hpp"
#include "prop/ncseries.hpp"
#include "prop/word.hpp"

namespace prop::testing {

using Rng = std::mt19937_64;

inline std::uint32_t uniform(Rng& rng, std::uint32_t lo, std::uint32_t hi) {
  return std::uniform_int_distribution<std::uint32_t>(lo, hi)(rng);
}

inline GroupWord x(std::uint32_t i, std::int64_t e = 1) { return GroupWord::generator(i, e); }

/// Unreduced letter sequence of length <= max_len.
inline std::vector<Syllable> random_letters(Rng& rng, std::uint32_t d, std::uint32_t max_len) {
  std::vector<Syllable> letters;
  const std::uint32_t len = uniform(rng, 0, max_len);
  for (std::uint32_t i = 0; i < len; ++i)
    letters.push_back({uniform(rng, 0, d - 1), uniform(rng, 0, 1) ? 1 : -1});
  return letters;
}

inline GroupWord random_word(Rng& rng, std::uint32_t d, std::uint32_t max_len) {
  return GroupWord(random_letters(rng, d, max_len));
}

inline GroupWord random_nontrivial_word(Rng& rng, std::uint32_t d, std::uint32_t max_len) {
  while (true) {
    GroupWord w = random_word(rng, d, max_len);
    if (!w.is_identity()) return w;
  }
}

/// Random word with syllable exponents in [-max_exp, max_exp].
inline GroupWord random_syllable_word(Rng& rng, std::uint32_t d, std::uint32_t syllables,
                                      std::int64_t max_exp) {
  std::vector<Syllable> s;
  for (std::uint32_t i = 0; i < syllables; ++i) {
    std::int64_t e = 0;
    while (e == 0) e = std::uniform_int_distribution<std::int64_t>(-max_exp, max_exp)(rng);
    s.push_back({uniform(rng, 0, d - 1), e});
  }
  return GroupWord(s);
}

inline TruncatedSeries random_series(Rng& rng, SeriesShape shape, std::size_t terms) {
  TruncatedSeries s(shape);
  for (std::size_t t = 0; t < terms; ++t) {
    std::vector<std::uint32_t> letters(uniform(rng, 0, shape.N));
    for (auto& l : letters) l = uniform(rng, 0, shape.d - 1);
    s.add_term(Monomial(letters), static_cast<Coef>(uniform(rng, 1, shape.p - 1)));
  }
  return s;
}

/// Flattens a word into its +-1 letters.
inline std::vector<Syllable> expand_letters(const GroupWord& w) {
  std::vector<Syllable> out;
  for (const Syllable& s : w.syllables())
    for (std::int64_t k = 0; k < (s.exp > 0 ? s.exp : -s.exp); ++k)
      out.push_back({s.gen, s.exp > 0 ? 1 : -1});
  return out;
}

/// Magnus expansion letter by letter: x -> 1 + X, x^-1 -> sum_k (-X)^k.
inline TruncatedSeries naive_magnus(const GroupWord& w, SeriesShape shape) {
  TruncatedSeries acc = TruncatedSeries::one(shape);
  const PrimeField f(shape.p);
  for (const Syllable& l : expand_letters(w)) {
    TruncatedSeries factor = TruncatedSeries::one(shape);
    if (l.exp > 0) {
      factor.add_term(Monomial::letter(l.gen), 1);
    } else {
      for (std::uint32_t k = 1; k <= shape.N; ++k)
        factor.add_term(Monomial::letter(l.gen, k), k % 2 ? f.neg(1) : 1);
    }
    acc = acc * factor;
  }
  return acc;
}

/// Fox derivative letter by letter: d(ux)/dx = du/dx + u, d(ux^-1)/dx = du/dx - u x^-1.
inline GroupRingElement naive_fox(const GroupWord& w, std::uint32_t j, std::uint32_t p) {
  GroupRingElement out(p);
  GroupWord prefix;
  for (const Syllable& l : expand_letters(w)) {
    const GroupWord letter = GroupWord::generator(l.gen, l.exp);
    if (l.gen == j) {
      if (l.exp > 0)
        out += GroupRingElement(p, prefix);
      else
        out -= GroupRingElement(p, prefix * letter);
    }
    prefix *= letter;
  }
  return out;
}

/// Textbook Gaussian elimination rank, kept separate from the library's.
inline std::size_t naive_rank(std::uint32_t p, std::vector<std::vector<std::int64_t>> rows) {
  const PrimeField f(p);
  std::vector<std::vector<Coef>> m;
  for (const auto& r : rows) {
    std::vector<Coef> v;
    for (auto e : r) v.push_back(f.reduce(e));
    m.push_back(v);
  }
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    const Coef inv = f.inv(m[rank][c]);
    for (auto& e : m[rank]) e = f.mul(e, inv);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const Coef factor = m[r][c];
      for (std::size_t k = 0; k < cols; ++k) m[r][k] = f.sub(m[r][k], f.mul(factor, m[rank][k]));
    }
    ++rank;
  }
  return rank;
}

inline FpMatrix random_matrix(Rng& rng, std::uint32_t p, std::size_t rows, std::size_t cols) {
  FpMatrix m(p, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = static_cast<Coef>(uniform(rng, 0, p - 1));
  return m;
}

inline Presentation random_presentation(Rng& rng, std::uint32_t max_gens, std::uint32_t max_rels,
                                        std::uint32_t max_len) {
  const std::uint32_t d = uniform(rng, 1, max_gens);
  const std::uint32_t r = uniform(rng, 1, max_rels);
  const std::uint32_t primes[] = {2, 3, 5, 7};
  std::vector<GroupWord> rels;
  for (std::uint32_t i = 0; i < r; ++i) rels.push_back(random_nontrivial_word(rng, d, max_len));
  return Presentation(primes[uniform(rng, 0, 3)], default_generator_names(d), std::move(rels));
}

}  // namespace prop::testing
