#pragma once

#include <random>
#include <vector>

#include "oracles/oracles.hpp"
#include "plethysm/partition.hpp"
#include "plethysm/tabloid.hpp"

namespace testing_support {

inline oracle::Parts parts(const plethysm::Partition& p) { return p.parts(); }

inline oracle::Nested to_nested(const plethysm::PlethysticShape& shape, const plethysm::PlethysticTabloid& t) {
  std::vector<int> flat(t.entries.begin(), t.entries.end());
  return oracle::nest(shape.outer.parts(), shape.inner.parts(), flat);
}

inline plethysm::Permutation random_permutation(int n, std::mt19937& rng) {
  plethysm::Permutation p(n);
  for (int i = 0; i < n; ++i) p[i] = i + 1;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// All (nu, mu) with nonempty nu, mu and |nu||mu| = degree.
inline std::vector<std::pair<plethysm::Partition, plethysm::Partition>> shape_pairs(int degree) {
  std::vector<std::pair<plethysm::Partition, plethysm::Partition>> out;
  for (int n = 1; n <= degree; ++n) {
    if (degree % n) continue;
    for (const auto& nu : plethysm::enumerate_partitions(n))
      for (const auto& mu : plethysm::enumerate_partitions(degree / n)) out.emplace_back(nu, mu);
  }
  return out;
}

}  // namespace testing_support
