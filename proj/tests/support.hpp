#pragma once

#include <memory>
#include <random>
#include <vector>

#include "affcell/weyl.hpp"

namespace affcell::testing {

inline std::shared_ptr<const AffineWeylGroup> make_group(CartanType t, int n, std::vector<int> p) {
  return std::make_shared<const AffineWeylGroup>(WeightSystem::create({t, n, std::move(p)}));
}

inline std::shared_ptr<const AffineWeylGroup> a2_group() { return make_group(CartanType::A, 2, {1, 1, 1}); }

inline GroupElement random_element(const AffineWeylGroup& g, std::mt19937& rng, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), gen(0, g.num_generators() - 1),
      pi(0, g.pi_order() - 1);
  GroupElement x = g.pi(pi(rng));
  int l = len(rng);
  for (int i = 0; i < l; ++i) x = g.multiply(x, g.generator(gen(rng)));
  return x;
}

}  // namespace affcell::testing
