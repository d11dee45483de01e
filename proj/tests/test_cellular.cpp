#include <doctest.h>

#include <set>
#include <string>

#include "affcell/cellular.hpp"
#include "support.hpp"

using namespace affcell;
using affcell::testing::make_group;

namespace {

struct Setup {
  const char* name;
  CartanType type;
  int rank;
  std::vector<int> params;
  int bound;  // basis keys up to this reassembled length
};

const std::vector<Setup> kSetups = {
    {"A1", CartanType::A, 1, {1, 1}, 6},
    {"A2", CartanType::A, 2, {1, 1, 1}, 6},
    {"C2(1,1,1)", CartanType::C, 2, {1, 1, 1}, 7},
    {"C2(2,1,1)", CartanType::C, 2, {2, 1, 1}, 7},
    {"C2(3,2,1)", CartanType::C, 2, {3, 2, 1}, 7},
};

std::shared_ptr<CellularAlgebra> algebra(CartanType t, int n, std::vector<int> p) {
  auto H = std::make_shared<const HeckeAlgebra>(make_group(t, n, std::move(p)), 60);
  return std::make_shared<CellularAlgebra>(std::make_shared<const LowestCell>(H));
}

std::shared_ptr<CellularAlgebra> algebra(const Setup& s) { return algebra(s.type, s.rank, s.params); }

// Antidominant L-weights with L-coordinates in [-k, 0].
std::vector<Weight> antidominant_box(const WeightSystem& ws, int k) {
  std::vector<Weight> out;
  std::array<int, kMaxRank> a{};
  for (a[0] = -k; a[0] <= 0; ++a[0])
    for (a[1] = (ws.rank() > 1 ? -k : 0); a[1] <= 0; ++a[1]) out.push_back(ws.from_l_coordinates(a));
  return out;
}

}  // namespace

TEST_CASE("monoid algebra arithmetic and nu") {
  auto A = algebra(CartanType::A, 2, {1, 1, 1});
  const auto& ws = A->weights();
  Weight w1 = ws.fundamental_weight(1), w2 = ws.fundamental_weight(2);
  auto a = MonoidAlgebraElt::e(w1, q_power(1));
  auto b = MonoidAlgebraElt::e(Weight{}, 2);
  b.add(w2, -1);
  auto ab = a * b;
  CHECK(ab.coeff(w1) == LaurentPoly(2) * q_power(1));
  CHECK(ab.coeff(w1 + w2) == -q_power(1));
  CHECK(ab.terms().size() == 2);
  CHECK(ab.nu(ws).coeff(w1 + w2) == -q_power(1));
  CHECK(ab.nu(ws).coeff(w2) == LaurentPoly(2) * q_power(1));
  CHECK(ab.nu(ws).nu(ws) == ab);
  b.add(w2, 1);
  CHECK(b == MonoidAlgebraElt::e(Weight{}, 2));
}

TEST_CASE("phi in rank one") {
  auto A = algebra(CartanType::A, 1, {1, 1});
  auto e = A->group().identity();
  CHECK(A->phi_form(e, e) == MonoidAlgebraElt::e(Weight{}, q_power(1) + q_power(-1)));
  // The other element of B_0 is the length zero element; it pairs with e through e^0 alone.
  for (const auto& z : A->cell().B0())
    for (const auto& zp : A->cell().B0()) {
      const auto& phi = A->phi_form(z, zp);
      CHECK(!phi.is_zero());
      for (const auto& [tau, c] : phi.terms()) CHECK(c == c.bar());
    }
}

TEST_CASE("Phi is an algebra homomorphism on bounded basis pairs") {
  for (const auto& s : kSetups) {
    auto A = algebra(s);
    auto keys = A->basis_up_to(s.bound);
    const int lw0 = A->group().length(A->group().w0());
    int pairs = 0;
    for (const auto& k1 : keys)
      for (const auto& k2 : keys) {
        if (A->key_length(k1) + A->key_length(k2) > s.bound + lw0 + 1) continue;
        auto a = CellularElt::basis(k1), b = CellularElt::basis(k2);
        CHECK_MESSAGE(A->Phi(A->mul(a, b)) == A->hecke().mul(A->Phi(a), A->Phi(b)), std::string(s.name));
        ++pairs;
      }
    CHECK(pairs > 0);
  }
}

TEST_CASE("cellular multiplication is associative") {
  auto A = algebra(CartanType::A, 2, {1, 1, 1});
  auto keys = A->basis_up_to(5);
  REQUIRE(keys.size() >= 3);
  for (size_t i = 0; i < keys.size(); i += 3)
    for (size_t j = 1; j < keys.size(); j += 4)
      for (size_t k = 2; k < keys.size(); k += 5) {
        auto a = CellularElt::basis(keys[i]), b = CellularElt::basis(keys[j]), c = CellularElt::basis(keys[k]);
        CHECK(A->mul(A->mul(a, b), c) == A->mul(a, A->mul(b, c)));
      }
}

TEST_CASE("involution compatibility and a wrong nu is detected") {
  for (const auto& s : kSetups) {
    auto A = algebra(s);
    for (const auto& k : A->basis_up_to(s.bound))
      CHECK_MESSAGE(A->involution_check(CellularElt::basis(k)), std::string(s.name));
  }
  auto A = algebra(CartanType::A, 2, {1, 1, 1});
  auto identity = [](const Weight& t) { return t; };
  bool caught = false;
  for (const auto& k : A->basis_up_to(7)) caught |= !A->involution_check(CellularElt::basis(k), identity);
  CHECK(caught);
}

TEST_CASE("unitriangularity and injectivity of Phi") {
  for (const auto& s : kSetups) {
    auto A = algebra(s);
    std::set<GroupElement> tops;
    auto keys = A->basis_up_to(s.bound);
    for (const auto& k : keys) {
      CHECK_MESSAGE(A->unitriangular(k), std::string(s.name));
      tops.insert(A->reassemble(k));
    }
    CHECK(tops.size() == keys.size());
  }
}

TEST_CASE("Phi inverse and the bimodule action") {
  for (const auto& s : kSetups) {
    auto A = algebra(s);
    const auto& H = A->hecke();
    const auto& W = A->group();
    for (const auto& k : A->basis_up_to(s.bound - 1)) {
      auto back = A->Phi_inverse(A->Phi_basis(k));
      REQUIRE(back.has_value());
      CHECK(*back == CellularElt::basis(k));
      for (int i = 0; i < W.num_generators(); ++i) {
        for (Side side : {Side::Left, Side::Right}) {
          HeckeElt h = H.mul_gen(side, i, A->Phi_basis(k));
          auto pre = A->Phi_inverse(h);
          REQUIRE_MESSAGE(pre.has_value(), std::string(s.name));
          CHECK(A->Phi(*pre) == h);
        }
      }
    }
    CHECK(!A->Phi_inverse(H.C(W.identity())).has_value());
  }
}

TEST_CASE("P(tau) C_w0 decomposition by factors matches the direct expansion") {
  for (const auto& s : kSetups) {
    auto A = algebra(s);
    for (const auto& tau : A->cell().dominant_weights(3)) {
      auto it = A->decompose_P_tau(tau);
      CHECK_MESSAGE(it == A->decompose_P_tau_direct(tau), std::string(s.name));
      CHECK(all_integer(it));
      for (const auto& [lambda, c] : it) {
        CHECK(A->is_antidominant_L(lambda));
        CHECK(c.coeff(0) > 0);
      }
    }
  }
}

TEST_CASE("A2 example for 2 omega_1 + 2 omega_2") {
  auto A = algebra(CartanType::A, 2, {1, 1, 1});
  const auto& ws = A->weights();
  Weight w1 = ws.fundamental_weight(1), w2 = ws.fundamental_weight(2);
  WeightCoeffs expect{{-(2 * w1 + 2 * w2), 1}, {-(3 * w1), 1}, {-(3 * w2), 1}, {-(w1 + w2), 4}, {Weight{}, 2}};
  CHECK(A->decompose_P_tau(2 * w1 + 2 * w2) == expect);
  // The single factor lands on -nu(omega_1), not -omega_1.
  CHECK(A->decompose_P_tau(w1) == WeightCoeffs{{-w2, 1}});
}

TEST_CASE("P(omega) C_{w0 p_lambda}: leading term, integrality and support") {
  for (const auto& s : kSetups) {
    auto A = algebra(s);
    const auto& ws = A->weights();
    const int w0 = ws.longest_element();
    for (int i = 1; i <= s.rank; ++i) {
      Weight om = ws.fundamental_weight(i);
      for (const auto& lambda : antidominant_box(ws, 2)) {
        auto d = A->decompose_P_omega(i, lambda);
        CHECK_MESSAGE(d.count(om) == 1, std::string(s.name));
        if (d.count(om)) CHECK(d.at(om) == LaurentPoly(1));
        CHECK(all_integer(d));
        for (const auto& [alpha, c] : d) {
          CHECK(ws.in_P(alpha));
          CHECK(A->is_antidominant_L(lambda + ws.act(alpha, w0)));
        }
      }
    }
  }
}

TEST_CASE("type A: P(omega) C_{w0 p_lambda} is the orbit indicator") {
  for (int n : {1, 2}) {
    auto A = algebra(CartanType::A, n, std::vector<int>(n + 1, 1));
    const auto& ws = A->weights();
    const int w0 = ws.longest_element();
    for (int i = 1; i <= n; ++i)
      for (const auto& lambda : antidominant_box(ws, 3)) {
        WeightCoeffs expect;
        for (const auto& rho : ws.orbit(ws.fundamental_weight(i)))
          if (A->is_antidominant_L(lambda + ws.act(rho, w0))) expect[rho] = 1;
        CHECK(A->decompose_P_omega(i, lambda) == expect);
      }
  }
}

TEST_CASE("m_alpha and walls") {
  auto A = algebra(CartanType::A, 2, {1, 1, 1});
  for (int i = 1; i <= 2; ++i)
    for (int r = 0; r < A->weights().num_positive_roots(); ++r) CHECK(A->m_alpha(i, r) == 1);
  const auto& ws = A->weights();
  Weight w1 = ws.fundamental_weight(1), w2 = ws.fundamental_weight(2);
  CHECK(A->reduce_lambda(-(5 * w1 + 5 * w2), 1) == -(w1 + w2));
  CHECK(A->reduce_lambda(-(5 * w1), 1) == -w1);
  CHECK(A->reduce_lambda(Weight{}, 2) == Weight{});
  CHECK(A->far_from_wall(-w1, 1, ws.simple_root_index(1)));
  CHECK(!A->far_from_wall(-w1, 1, ws.simple_root_index(2)));
  for (const auto& s : kSetups) {
    auto B = algebra(s);
    for (int i = 1; i <= s.rank; ++i)
      for (int r = 0; r < B->weights().num_positive_roots(); ++r) CHECK(B->m_alpha(i, r) >= 1);
  }
}

TEST_CASE("far from the walls the decomposition only sees the near coordinates") {
  for (const auto& s : kSetups) {
    auto A = algebra(s);
    const auto& ws = A->weights();
    const auto& W = A->group();
    for (int i = 1; i <= s.rank; ++i)
      for (const auto& lambda : antidominant_box(ws, 3)) {
        Weight red = A->reduce_lambda(lambda, i);
        for (int j = 1; j <= s.rank; ++j) {
          int r = ws.simple_root_index(j);
          if (A->far_from_wall(lambda, i, r)) CHECK(-ws.pairing(red, r) <= A->m_alpha(i, r) + ws.b(j) - 1);
        }
        CHECK_MESSAGE(A->decompose_P_omega(i, lambda) == A->decompose_P_omega(i, red), std::string(s.name));
        if (red == lambda) continue;
        GroupElement y = W.multiply(W.w0(), W.translation(lambda));
        GroupElement y2 = W.multiply(W.w0(), W.translation(red));
        for (const auto& x : W.lower_interval(W.translation(ws.fundamental_weight(i))))
          CHECK(A->hecke().same_profile(x, y, y2));
      }
  }
}
