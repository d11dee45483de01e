#include <doctest.h>

#include <random>
#include <thread>

#include "affcell/hecke.hpp"
#include "support.hpp"

using namespace affcell;
using affcell::testing::make_group;
using affcell::testing::random_element;

namespace {

struct Setup {
  const char* name;
  CartanType type;
  int rank;
  std::vector<int> params;
};

const std::vector<Setup> kSetups = {
    {"A1", CartanType::A, 1, {1, 1}},
    {"A2", CartanType::A, 2, {1, 1, 1}},
    {"C2(1,1,1)", CartanType::C, 2, {1, 1, 1}},
    {"C2(2,1,1)", CartanType::C, 2, {2, 1, 1}},
    {"C2(3,2,1)", CartanType::C, 2, {3, 2, 1}},
};

HeckeAlgebra algebra(const Setup& s, int bound = 40) {
  return HeckeAlgebra(make_group(s.type, s.rank, s.params), bound);
}

HeckeElt random_elt(const HeckeAlgebra& H, std::mt19937& rng, int support, int max_len) {
  std::uniform_int_distribution<int> coef(-3, 3), ex(-2, 2);
  HeckeElt h;
  for (int k = 0; k < support; ++k)
    h.add(random_element(H.group(), rng, max_len), LaurentPoly::monomial(ex(rng), coef(rng)));
  return h;
}

bool lower_part_negative(const HeckeAlgebra& H, const GroupElement& w) {
  for (const auto& [y, p] : H.C(w).terms()) {
    if (y == w) {
      if (p != LaurentPoly(1)) return false;
    } else if (!p.in_strictly_negative()) {
      return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("quadratic relation and generator rule") {
  for (const auto& s : kSetups) {
    HeckeAlgebra H = algebra(s);
    const auto& W = H.group();
    for (int i = 0; i < W.num_generators(); ++i) {
      LaurentPoly x = xi(W.weights().generator_weight(i));
      HeckeElt ss = H.mul_gen(Side::Left, i, H.T(W.generator(i)));
      HeckeElt want = H.T(W.identity());
      want.add(W.generator(i), x);
      CHECK(ss == want);
    }
    std::mt19937 rng(7);
    for (int k = 0; k < 50; ++k) {
      GroupElement w = random_element(W, rng, 6);
      int i = static_cast<int>(rng() % W.num_generators());
      GroupElement sw = W.multiply(W.generator(i), w);
      if (W.length(sw) > W.length(w)) CHECK(H.mul_gen(Side::Left, i, H.T(w)) == H.T(sw));
      // T_s^2 = xi_s T_s + 1 as operators on both sides.
      HeckeElt h = random_elt(H, rng, 3, 5);
      LaurentPoly x = xi(W.weights().generator_weight(i));
      for (Side side : {Side::Left, Side::Right}) {
        HeckeElt once = H.mul_gen(side, i, h);
        CHECK(H.mul_gen(side, i, once) == x * once + h);
      }
    }
  }
}

TEST_CASE("multiplication axioms") {
  for (const auto& s : kSetups) {
    HeckeAlgebra H = algebra(s);
    const auto& W = H.group();
    std::mt19937 rng(11);
    for (int k = 0; k < 50; ++k) {
      GroupElement x = random_element(W, rng, 5), y = random_element(W, rng, 5);
      GroupElement xy = W.multiply(x, y);
      if (W.length(xy) == W.length(x) + W.length(y)) CHECK(H.mul(H.T(x), H.T(y)) == H.T(xy));
    }
    for (int k = 0; k < 30; ++k) {
      HeckeElt a = random_elt(H, rng, 3, 4), b = random_elt(H, rng, 3, 4), c = random_elt(H, rng, 3, 4);
      CHECK(H.mul(a, H.T(W.identity())) == a);
      CHECK(H.mul(H.mul(a, b), c) == H.mul(a, H.mul(b, c)));
      // Left and right routes of mul agree.
      HeckeElt left;
      for (const auto& [x, coef] : a.terms()) left.add_scaled(H.mul_T(Side::Left, x, b), coef);
      HeckeElt right;
      for (const auto& [y, coef] : b.terms()) right.add_scaled(H.mul_T(Side::Right, y, a), coef);
      CHECK(left == right);
    }
  }
}

TEST_CASE("bar involution") {
  for (const auto& s : kSetups) {
    HeckeAlgebra H = algebra(s);
    const auto& W = H.group();
    CHECK(H.bar(H.T(W.identity())) == H.T(W.identity()));
    for (int i = 0; i < W.num_generators(); ++i) {
      LaurentPoly x = xi(W.weights().generator_weight(i));
      HeckeElt want = H.T(W.generator(i));
      want.add(W.identity(), -x);
      CHECK(H.bar_T(W.generator(i)) == want);
      // bar(T_s) is the inverse of T_s.
      CHECK(H.mul(H.T(W.generator(i)), want) == H.T(W.identity()));
    }
    std::mt19937 rng(3);
    for (int k = 0; k < 50; ++k) {
      HeckeElt h = random_elt(H, rng, 3, 5);
      CHECK(H.bar(H.bar(h)) == h);
      HeckeElt g = random_elt(H, rng, 2, 4);
      CHECK(H.bar(H.mul(h, g)) == H.mul(H.bar(h), H.bar(g)));
    }
    for (int k = 0; k < W.pi_order(); ++k) CHECK(H.bar_T(W.pi(k)) == H.T(W.pi(k)));
  }
}

TEST_CASE("flat antiautomorphism") {
  for (const auto& s : kSetups) {
    HeckeAlgebra H = algebra(s);
    const auto& W = H.group();
    std::mt19937 rng(5);
    for (int k = 0; k < 30; ++k) {
      GroupElement w = random_element(W, rng, 6);
      CHECK(H.flat(H.T(w)) == H.T(W.inverse(w)));
      HeckeElt a = random_elt(H, rng, 3, 4), b = random_elt(H, rng, 3, 4);
      CHECK(H.flat(H.mul(a, b)) == H.mul(H.flat(b), H.flat(a)));
    }
    for (const auto& w : W.enumerate(4)) CHECK(H.flat(H.C(w)) == H.C(W.inverse(w)));
  }
}

TEST_CASE("KL basis closed forms") {
  for (const auto& s : kSetups) {
    HeckeAlgebra H = algebra(s);
    const auto& W = H.group();
    CHECK(H.C(W.identity()) == H.T(W.identity()));
    for (int i = 0; i < W.num_generators(); ++i) CHECK(H.C(W.generator(i)) == H.C_gen(i));
    // C_{w0} = sum_v q^{L(v)-L(w0)} T_v
    GroupElement w0 = W.w0();
    int lw0 = W.weight_length(w0);
    HeckeElt want;
    for (int u = 0; u < W.weights().w0_order(); ++u) {
      GroupElement v = W.finite(u);
      want.add(v, q_power(W.weight_length(v) - lw0));
    }
    CHECK_MESSAGE(H.C(w0) == want, std::string(s.name));
    CHECK(H.bar(want) == want);
  }
}

TEST_CASE("KL axioms on all short elements") {
  for (const auto& s : kSetups) {
    HeckeAlgebra H = algebra(s);
    const auto& W = H.group();
    const int bound = s.rank == 1 ? 7 : 5;
    auto elems = W.enumerate(bound);
    for (const auto& w : elems) {
      const HeckeElt& c = H.C(w);
      CHECK(H.bar(c) == c);
      CHECK(lower_part_negative(H, w));
      for (const auto& [y, p] : c.terms()) {
        CHECK(W.bruhat_leq(y, w));
        CHECK(H.P(W.inverse(y), W.inverse(w)) == p);
      }
    }
    // T_t C_v = q^{L(t)} C_v for finite generators t with tv < v.
    for (const auto& v : elems) {
      for (int t = 1; t < W.num_generators(); ++t) {
        if (!W.left_descent(v, t)) continue;
        CHECK(H.mul_gen(Side::Left, t, H.C(v)) == q_power(W.weights().generator_weight(t)) * H.C(v));
      }
    }
  }
}

TEST_CASE("nu automorphism") {
  for (const auto& s : kSetups) {
    HeckeAlgebra H = algebra(s);
    const auto& W = H.group();
    for (const auto& w : W.enumerate(4)) {
      GroupElement v = H.nu(w);
      CHECK(W.weight_length(v) == W.weight_length(w));
      CHECK(H.nu(v) == w);
      CHECK(H.nu(H.C(w)) == H.C(v));
    }
  }
}

TEST_CASE("no nonzero bar-invariant element in the negative part") {
  // Any bar-invariant h decomposes as sum a_z C_z with bar-invariant a_z, so
  // its top coefficient is bar-invariant and never strictly negative.
  for (const auto& s : kSetups) {
    HeckeAlgebra H = algebra(s);
    const auto& W = H.group();
    std::mt19937 rng(17);
    for (int k = 0; k < 40; ++k) {
      HeckeElt g = random_elt(H, rng, 3, 4);
      // Keep only negative powers to bias towards H_{<0}.
      HeckeElt neg;
      for (const auto& [w, c] : g.terms()) neg.add(w, c.negative_part());
      HeckeElt h = neg + H.bar(neg);
      if (h.is_zero()) continue;
      bool all_negative = true;
      for (const auto& [w, c] : h.terms()) all_negative &= c.in_strictly_negative();
      CHECK_FALSE(all_negative);
      Coefficients dec = H.kl_decompose(h);
      for (const auto& [z, a] : dec) CHECK(a.bar() == a);
      HeckeElt back;
      for (const auto& [z, a] : dec) back.add_scaled(H.C(z), a);
      CHECK(back == h);
      (void)W;
    }
  }
}

TEST_CASE("h constants") {
  for (const auto& s : kSetups) {
    HeckeAlgebra H = algebra(s);
    const auto& W = H.group();
    std::mt19937 rng(19);
    for (int k = 0; k < 15; ++k) {
      GroupElement y = random_element(W, rng, 4);
      Coefficients e = H.h_constants(W.identity(), y);
      CHECK(e.size() == 1);
      CHECK(e.begin()->first == y);
      CHECK(e.begin()->second == LaurentPoly(1));
      GroupElement x = random_element(W, rng, 3);
      Coefficients h = H.h_constants(x, y);
      Coefficients hi = H.h_constants(W.inverse(y), W.inverse(x));
      CHECK(h.size() == hi.size());
      for (const auto& [z, c] : h) {
        CHECK(c.bar() == c);
        CHECK(hi[W.inverse(z)] == c);
      }
    }
  }
}

TEST_CASE("f constants by two routes") {
  for (const auto& s : kSetups) {
    HeckeAlgebra H = algebra(s);
    const auto& W = H.group();
    for (int i = 0; i < W.num_generators(); ++i) {
      GroupElement g = W.generator(i);
      Coefficients f = H.f_constants(g, g);
      CHECK(f.size() == 2);
      CHECK(f[W.identity()] == LaurentPoly(1));
      CHECK(f[g] == xi(W.weights().generator_weight(i)));
    }
    std::mt19937 rng(23);
    for (int k = 0; k < 100; ++k) {
      GroupElement x = random_element(W, rng, 4), y = random_element(W, rng, 6);
      Coefficients a = H.f_constants(x, y);
      Coefficients b = H.f_constants_subsets(x, y);
      CHECK(a == b);
      GroupElement xy = W.multiply(x, y);
      if (W.length(xy) == W.length(x) + W.length(y)) {
        CHECK(a.size() == 1);
        CHECK(a[xy] == LaurentPoly(1));
      }
      GroupElement yi = W.inverse(y);
      DegreeData d = H.degree_data(x, y);
      for (const auto& [z, c] : a) {
        CHECK(W.bruhat_leq(W.multiply(z, yi), x));
        CHECK(c.degree() <= d.c);
      }
    }
  }
}

TEST_CASE("degree data") {
  HeckeAlgebra H = algebra(kSetups[3]);
  const auto& W = H.group();
  std::mt19937 rng(29);
  for (int k = 0; k < 20; ++k) {
    DegreeData d = H.degree_data(W.identity(), random_element(W, rng, 6));
    CHECK(d.hyperplanes.empty());
    CHECK(d.c == 0);
  }
  // T_s T_s: the only common hyperplane is the wall of s.
  for (int i = 0; i < W.num_generators(); ++i) {
    GroupElement g = W.generator(i);
    DegreeData d = H.degree_data(g, g);
    CHECK(d.hyperplanes.size() == 1);
    CHECK(d.c == W.weights().generator_weight(i));
  }
  for (int k = 0; k < 50; ++k) {
    DegreeData d = H.degree_data(random_element(W, rng, 5), random_element(W, rng, 5));
    int sum = 0;
    for (int r : d.directions) sum += d.c_per_alpha.at(r);
    CHECK(sum == d.c);
    for (const auto& [r, lev] : d.hyperplanes) CHECK(W.weights().hyperplane_weight(r, lev) <= d.c_per_alpha.at(r));
  }
}

TEST_CASE("same profile") {
  HeckeAlgebra H = algebra(kSetups[1]);
  const auto& W = H.group();
  GroupElement s1 = W.generator(1);
  // Both y have s1 as a left ascent, so T_{s1} T_y = T_{s1 y}.
  CHECK(H.same_profile(s1, W.identity(), W.generator(2)));
  CHECK_FALSE(H.same_profile(s1, W.identity(), s1));
}

TEST_CASE("cell preorder graph") {
  for (const auto& s : {kSetups[1], kSetups[3]}) {
    HeckeAlgebra H = algebra(s);
    const auto& W = H.group();
    const int bound = 4;
    CellPreorderGraph g = H.cell_preorder_graph(bound);
    for (const auto& w : g.elements) {
      for (const auto& x : W.enumerate(2)) {
        GroupElement xw = W.multiply(x, w);
        if (W.length(xw) != W.length(x) + W.length(w) || W.length(xw) > bound) continue;
        CHECK(g.leq_L(xw, w));
        GroupElement wx = W.multiply(w, x);
        if (W.length(wx) == W.length(x) + W.length(w) && W.length(wx) <= bound) CHECK(g.leq_R(wx, w));
      }
      for (int k = 0; k < W.pi_order(); ++k) {
        CHECK(g.leq_L(w, W.multiply(W.pi(k), w)));
        CHECK(g.leq_L(W.multiply(W.pi(k), w), w));
      }
    }
    // The identity is the top of the preorder.
    for (const auto& w : g.elements) CHECK(g.leq_LR(w, W.identity()));
  }
}

TEST_CASE("length bound and concurrent cache") {
  HeckeAlgebra H(make_group(CartanType::A, 2, {1, 1, 1}), 3);
  const auto& W = H.group();
  CHECK_THROWS_AS(H.C(W.from_letters({0, 1, 2, 0})), BoundExceeded);
  CHECK_NOTHROW(H.C(W.w0()));

  HeckeAlgebra fresh(make_group(CartanType::A, 2, {1, 1, 1}), 40);
  HeckeAlgebra serial(make_group(CartanType::A, 2, {1, 1, 1}), 40);
  auto elems = fresh.group().enumerate(5);
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t)
    threads.emplace_back([&, t] {
      for (std::size_t k = t; k < elems.size(); k += 2) fresh.C(elems[k]);
    });
  for (auto& th : threads) th.join();
  for (const auto& w : elems) CHECK(fresh.C(w) == serial.C(w));
  CHECK(fresh.cached_kl_count() >= elems.size());
}
