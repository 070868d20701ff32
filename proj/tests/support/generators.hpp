#pragma once

// Hand-rolled random generators for property tests. Everything is driven by
// a seeded std::mt19937_64 so failures are reproducible.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "ivq/constructions.hpp"
#include "ivq/group.hpp"
#include "ivq/quandle.hpp"

namespace gen {

using Rng = std::mt19937_64;

inline std::vector<ivq::Element> random_permutation(Rng& rng, std::size_t n) {
  std::vector<ivq::Element> p(n);
  std::iota(p.begin(), p.end(), 0u);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

/// Trivial quandle x * y = y.
inline ivq::Quandle trivial(std::size_t n) {
  return ivq::Quandle::checked(ivq::MagmaTable::from_function(n, [](auto, auto y) { return y; }));
}

/// Componentwise product of two involutory quandles.
inline ivq::Quandle product(const ivq::Quandle& a, const ivq::Quandle& b) {
  const std::size_t m = b.size();
  return ivq::Quandle::checked(ivq::MagmaTable::from_function(a.size() * m, [&](ivq::Element x, ivq::Element y) {
    return a(x / m, y / m) * m + b(x % m, y % m);
  }));
}

/// Small involutory quandle drawn from cores, conjugation quandles and
/// products, then randomly relabeled.
inline ivq::Quandle random_kei(Rng& rng, std::size_t max_order = 12) {
  static const std::vector<ivq::GroupTable> groups = {
      ivq::symmetric_group(3), ivq::dihedral_group(4), ivq::dihedral_group(5), ivq::quaternion_group(),
      ivq::symmetric_group(4), ivq::alternating_group(4)};
  for (;;) {
    ivq::Quandle q = trivial(1);
    switch (std::uniform_int_distribution<int>(0, 4)(rng)) {
      case 0:
        q = ivq::abelian_core({std::uniform_int_distribution<unsigned>(1, static_cast<unsigned>(max_order))(rng)});
        break;
      case 1:
        q = ivq::abelian_core({std::uniform_int_distribution<unsigned>(2, 3)(rng),
                               std::uniform_int_distribution<unsigned>(2, 4)(rng)});
        break;
      case 2:
        q = ivq::conj_involutions(groups[rng() % groups.size()]).quandle;
        break;
      case 3:
        q = ivq::core_of_group(groups[rng() % 3]);
        break;
      default:
        q = product(ivq::abelian_core({std::uniform_int_distribution<unsigned>(1, 4)(rng)}),
                    trivial(std::uniform_int_distribution<std::size_t>(1, 3)(rng)));
    }
    if (q.size() > max_order) continue;
    const auto p = random_permutation(rng, q.size());
    return ivq::relabel(q, p);
  }
}

}  // namespace gen
