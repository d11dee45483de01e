#include <doctest.h>

#include <algorithm>

#include "affcell/paths.hpp"
#include "support.hpp"

using namespace affcell;
using affcell::testing::make_group;

namespace {

std::shared_ptr<CellularAlgebra> type_a(int n) {
  auto H = std::make_shared<const HeckeAlgebra>(make_group(CartanType::A, n, std::vector<int>(n + 1, 1)), 40);
  return std::make_shared<CellularAlgebra>(std::make_shared<const LowestCell>(H));
}

// Every sequence over {1..n} of length N.
std::vector<PathType> all_types(int n, int N) {
  std::vector<PathType> out{{}};
  for (int l = 0; l < N; ++l) {
    std::vector<PathType> next;
    for (const auto& m : out)
      for (int i = 1; i <= n; ++i) {
        next.push_back(m);
        next.back().push_back(i);
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("small path counts") {
  auto A = type_a(2);
  PathCounter pc(A->group().weight_system());
  const auto& ws = pc.weights();
  Weight w1 = ws.fundamental_weight(1), w2 = ws.fundamental_weight(2);
  CHECK(pc.count({}, Weight{}) == 1);
  CHECK(pc.count({1}, -w1) == 1);
  CHECK(pc.count({2}, -w2) == 1);
  CHECK(pc.count({1, 1, 2, 2}, -(w1 + w2)) == 4);
  CHECK(pc.full_profile({1}) == PathProfile{{-w1, 1}});
  PathProfile expect{{-(2 * w1 + 2 * w2), 1}, {-(3 * w1), 1}, {-(3 * w2), 1}, {-(w1 + w2), 4}, {Weight{}, 2}};
  CHECK(pc.full_profile({1, 1, 2, 2}) == expect);
  CHECK_THROWS_AS(pc.count({1}, w1), std::invalid_argument);
  CHECK_THROWS_AS(pc.full_profile({3}), std::invalid_argument);
  auto C = make_group(CartanType::C, 2, {1, 1, 1});
  CHECK_THROWS_AS(PathCounter(C->weight_system()), std::invalid_argument);
}

TEST_CASE("dynamic program agrees with brute force") {
  for (int n : {1, 2}) {
    PathCounter pc(make_group(CartanType::A, n, std::vector<int>(n + 1, 1))->weight_system());
    size_t orbit_max = 0;
    for (int i = 1; i <= n; ++i) orbit_max = std::max(orbit_max, pc.weights().orbit(pc.weights().fundamental_weight(i)).size());
    for (int N = 0; N <= 5; ++N)
      for (const auto& m : all_types(n, N)) {
        auto p = pc.full_profile(m);
        CHECK(p == pc.full_profile_brute(m));
        Integer mass = 0, cap = 1;
        for (const auto& [g, c] : p) {
          CHECK(pc.weights().is_antidominant(g));
          mass += c;
        }
        for (int l = 0; l < N; ++l) cap *= static_cast<int>(orbit_max);
        CHECK(mass <= cap);
      }
  }
}

TEST_CASE("witnesses stay antidominant and match the counts") {
  PathCounter pc(make_group(CartanType::A, 2, {1, 1, 1})->weight_system());
  const auto& ws = pc.weights();
  for (const PathType& m : {PathType{1, 1, 2, 2}, PathType{2, 1, 2, 1, 1}, PathType{1, 2, 1, 2, 1, 2}}) {
    for (const auto& [g, c] : pc.full_profile(m)) {
      auto paths = pc.witnesses(m, g);
      CHECK(Integer(paths.size()) == c);
      for (const auto& path : paths) {
        REQUIRE(path.size() == m.size() + 1);
        CHECK(path.front() == Weight{});
        for (size_t l = 0; l < m.size(); ++l) {
          CHECK(ws.is_antidominant(path[l + 1]));
          auto orb = ws.orbit(ws.fundamental_weight(m[l]));
          CHECK(std::find(orb.begin(), orb.end(), path[l] - path[l + 1]) != orb.end());
        }
      }
    }
  }
  CHECK_THROWS_AS(pc.witnesses(PathType(7, 1), Weight{}), std::invalid_argument);
}

TEST_CASE("profile does not depend on the order of the steps") {
  PathCounter pc(make_group(CartanType::A, 2, {1, 1, 1})->weight_system());
  PathType m{1, 1, 2, 2, 1};
  auto ref = pc.full_profile(m);
  std::sort(m.begin(), m.end());
  do CHECK(pc.full_profile(m) == ref);
  while (std::next_permutation(m.begin(), m.end()));
}

TEST_CASE("path profiles agree with the Hecke side") {
  auto A1 = type_a(1);
  for (int k = 0; k <= 4; ++k) CHECK(cross_check(*A1, k * A1->weights().fundamental_weight(1)));
  auto A2 = type_a(2);
  for (const auto& tau : A2->cell().dominant_weights(4)) CHECK(cross_check(*A2, tau));
  CHECK_THROWS_AS(cross_check(CellularAlgebra(std::make_shared<const LowestCell>(std::make_shared<const HeckeAlgebra>(
                                  make_group(CartanType::C, 2, {1, 1, 1})))),
                              Weight{}),
                  std::invalid_argument);
}

TEST_CASE("without nu the asymmetric types disagree") {
  auto A2 = type_a(2);
  PathCounter pc(A2->group().weight_system());
  const auto& ws = A2->weights();
  Weight w1 = ws.fundamental_weight(1);
  auto hecke = A2->decompose_P_tau(w1);
  auto literal = pc.full_profile(path_type(ws, w1));
  REQUIRE(literal.size() == 1);
  CHECK(hecke.count(literal.begin()->first) == 0);
  CHECK(path_type(ws, 2 * w1 + ws.fundamental_weight(2)) == PathType{1, 1, 2});
  CHECK(nu_type({1, 1, 2}, 2) == PathType{2, 2, 1});
}
