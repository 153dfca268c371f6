#include <nlohmann/json.hpp>

#include "prop/error.hpp"
#include "prop/simplicial.hpp"

namespace prop {

std::string SimplicialSkeleton::generator_label(std::uint32_t level, std::uint32_t gen) const {
  if (gen < num_base) return base_names[gen];
  std::uint32_t local = gen - num_base;
  std::uint32_t relator = local / level;
  std::uint32_t step = local % level + 1;
  std::string values(level + 1, '1');
  for (std::uint32_t j = 0; j < step; ++j) values[j] = '0';
  return "y" + std::to_string(relator + 1) + "_" + values;
}

std::vector<std::string> SimplicialSkeleton::generator_labels(std::uint32_t level) const {
  std::vector<std::string> labels;
  for (std::uint32_t g = 0; g < num_generators(level); ++g)
    labels.push_back(generator_label(level, g));
  return labels;
}

GroupWord SimplicialSkeleton::face(std::uint32_t level, std::uint32_t i, const GroupWord& w) const {
  if (level < 1 || level > top_level || i > level) throw InputError("face operator out of range");
  return substitute(w, faces[level][i]);
}

GroupWord SimplicialSkeleton::degeneracy(std::uint32_t level, std::uint32_t i,
                                         const GroupWord& w) const {
  if (level >= top_level || i > level) throw InputError("degeneracy operator out of range");
  return substitute(w, degeneracies[level][i]);
}

SimplicialSkeleton build_one_skeleton(const Presentation& pres, std::uint32_t L) {
  if (L < 1) throw InputError("skeleton needs at least one level above 0");
  SimplicialSkeleton sk;
  sk.num_base = pres.num_generators();
  sk.num_relators = static_cast<std::uint32_t>(pres.num_relators());
  sk.top_level = L;
  sk.base_names = pres.generator_names();
  sk.relators = pres.relators();

  const std::uint32_t d = sk.num_base;
  auto base_images = [&](std::vector<GroupWord>& images) {
    for (std::uint32_t g = 0; g < d; ++g) images.push_back(GroupWord::generator(g));
  };

  sk.faces.resize(L + 1);
  for (std::uint32_t n = 1; n <= L; ++n) {
    sk.faces[n].resize(n + 1);
    for (std::uint32_t i = 0; i <= n; ++i) {
      auto& images = sk.faces[n][i];
      base_images(images);
      for (std::uint32_t l = 0; l < sk.num_relators; ++l) {
        for (std::uint32_t s = 1; s <= n; ++s) {
          // u = t o delta_i has its step at s-1 when i < s, else at s.
          if (i < s) {
            images.push_back(s == 1 ? GroupWord{}
                                    : GroupWord::generator(sk.relator_generator(n - 1, l, s - 1)));
          } else if (s == n) {
            // u is constant 0: the relator, embedded by degeneracies of level 0.
            images.push_back(sk.relators[l]);
          } else {
            images.push_back(GroupWord::generator(sk.relator_generator(n - 1, l, s)));
          }
        }
      }
    }
  }

  sk.degeneracies.resize(L);
  for (std::uint32_t n = 0; n < L; ++n) {
    sk.degeneracies[n].resize(n + 1);
    for (std::uint32_t i = 0; i <= n; ++i) {
      auto& images = sk.degeneracies[n][i];
      base_images(images);
      for (std::uint32_t l = 0; l < sk.num_relators; ++l)
        for (std::uint32_t s = 1; s <= n; ++s)
          // u = t o sigma_i moves the step right iff i < s.
          images.push_back(
              GroupWord::generator(sk.relator_generator(n + 1, l, i < s ? s + 1 : s)));
    }
  }
  return sk;
}

IdentityReport check_simplicial_identities(const SimplicialSkeleton& sk) {
  IdentityReport report;
  const std::uint32_t L = sk.top_level;
  auto check = [&](bool equal, const char* name, std::uint32_t level, std::uint32_t gen,
                   std::uint32_t i, std::uint32_t j) {
    ++report.checks;
    if (!equal) report.violations.push_back({name, level, sk.generator_label(level, gen), i, j});
  };

  for (std::uint32_t n = 0; n <= L; ++n) {
    for (std::uint32_t g = 0; g < sk.num_generators(n); ++g) {
      const GroupWord x = GroupWord::generator(g);
      // d_i d_j = d_{j-1} d_i, i < j.
      if (n >= 2)
        for (std::uint32_t j = 1; j <= n; ++j)
          for (std::uint32_t i = 0; i < j; ++i)
            check(sk.face(n - 1, i, sk.face(n, j, x)) == sk.face(n - 1, j - 1, sk.face(n, i, x)),
                  "d_i d_j = d_{j-1} d_i", n, g, i, j);
      // s_i s_j = s_{j+1} s_i, i <= j.
      if (n + 2 <= L)
        for (std::uint32_t j = 0; j <= n; ++j)
          for (std::uint32_t i = 0; i <= j; ++i)
            check(sk.degeneracy(n + 1, i, sk.degeneracy(n, j, x)) ==
                      sk.degeneracy(n + 1, j + 1, sk.degeneracy(n, i, x)),
                  "s_i s_j = s_{j+1} s_i", n, g, i, j);
      if (n + 1 > L) continue;
      for (std::uint32_t j = 0; j <= n; ++j) {
        const GroupWord sj = sk.degeneracy(n, j, x);
        // d_j s_j = d_{j+1} s_j = id.
        check(sk.face(n + 1, j, sj) == x, "d_j s_j = id", n, g, j, j);
        check(sk.face(n + 1, j + 1, sj) == x, "d_{j+1} s_j = id", n, g, j + 1, j);
        if (n < 1) continue;
        // d_i s_j = s_{j-1} d_i, i < j.
        for (std::uint32_t i = 0; i < j; ++i)
          check(sk.face(n + 1, i, sj) == sk.degeneracy(n - 1, j - 1, sk.face(n, i, x)),
                "d_i s_j = s_{j-1} d_i", n, g, i, j);
        // d_i s_j = s_j d_{i-1}, i > j + 1.
        for (std::uint32_t i = j + 2; i <= n + 1; ++i)
          check(sk.face(n + 1, i, sj) == sk.degeneracy(n - 1, j, sk.face(n, i - 1, x)),
                "d_i s_j = s_j d_{i-1}", n, g, i, j);
      }
    }
  }
  return report;
}

GroupWord peiffer_commutator(const GroupWord& a, const GroupWord& b,
                             const SimplicialSkeleton& sk) {
  if (sk.top_level < 1) throw InputError("Peiffer commutator needs level 1");
  const GroupWord g = sk.degeneracy(0, 0, sk.face(1, 1, a));
  return a * b * a.inverse() * (g * b * g.inverse()).inverse();
}

GroupWord peiffer_lifting(const GroupWord& x, const GroupWord& y, const SimplicialSkeleton& sk) {
  if (sk.top_level < 2) throw InputError("Peiffer lifting needs a skeleton with L >= 2");
  const GroupWord s0x = sk.degeneracy(1, 0, x);
  const GroupWord s1x = sk.degeneracy(1, 1, x);
  const GroupWord s1y = sk.degeneracy(1, 1, y);
  return commutator(s0x, s1y) * commutator(s1y, s1x);
}

PeifferLiftingResult peiffer_lifting_check(const GroupWord& x, const GroupWord& y,
                                           const SimplicialSkeleton& sk) {
  if (sk.top_level < 2) throw InputError("Peiffer lifting needs a skeleton with L >= 2");
  if (!sk.face(1, 0, x).is_identity() || !sk.face(1, 0, y).is_identity())
    throw InputError("Peiffer lifting arguments must lie in the kernel of d_0 at level 1");
  const GroupWord lift = peiffer_lifting(x, y, sk);
  PeifferLiftingResult result;
  result.d0_trivial = sk.face(2, 0, lift).is_identity();
  result.d1_trivial = sk.face(2, 1, lift).is_identity();
  result.d2_matches =
      sk.face(2, 2, lift) == peiffer_commutator(x.inverse(), y.inverse(), sk).inverse();
  return result;
}

nlohmann::json to_json(const SimplicialSkeleton& sk) {
  nlohmann::json levels = nlohmann::json::array();
  for (std::uint32_t n = 0; n <= sk.top_level; ++n) {
    const auto labels = sk.generator_labels(n);
    const auto below = n > 0 ? sk.generator_labels(n - 1) : std::vector<std::string>{};
    const auto above =
        n < sk.top_level ? sk.generator_labels(n + 1) : std::vector<std::string>{};
    nlohmann::json gens = nlohmann::json::array();
    for (std::uint32_t g = 0; g < sk.num_generators(n); ++g) {
      nlohmann::json faces = nlohmann::json::array();
      if (n > 0)
        for (std::uint32_t i = 0; i <= n; ++i) faces.push_back(to_string(sk.faces[n][i][g], below));
      nlohmann::json degens = nlohmann::json::array();
      if (n < sk.top_level)
        for (std::uint32_t i = 0; i <= n; ++i)
          degens.push_back(to_string(sk.degeneracies[n][i][g], above));
      gens.push_back({{"label", labels[g]}, {"faces", faces}, {"degeneracies", degens}});
    }
    levels.push_back({{"level", n}, {"generators", gens}});
  }
  return {{"L", sk.top_level}, {"levels", levels}};
}

}  // namespace prop
