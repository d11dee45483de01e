#include "affcell/lowestcell.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>

namespace affcell {

LowestCell::LowestCell(std::shared_ptr<const HeckeAlgebra> hecke) : H_(std::move(hecke)) {
  for (int i = 1; i < group().num_generators(); ++i) finite_gens_.push_back(i);
  build_B0();
}

bool LowestCell::in_B0(const GroupElement& z) const {
  const auto& W = group();
  for (int i = 1; i <= W.rank(); ++i) {
    int k = W.alcove_floor(z, weights().simple_root_index(i));
    if (k < 0 || k >= weights().b(i)) return false;
  }
  return true;
}

void LowestCell::build_B0() {
  // The box is convex, so its alcoves are connected through shared faces;
  // s.g is the neighbour of A_0 g across its face of type s.
  const auto& W = group();
  std::set<GroupElement> seen;
  std::queue<GroupElement> q;
  for (int k = 0; k < W.pi_order(); ++k) {
    seen.insert(W.pi(k));
    q.push(W.pi(k));
  }
  while (!q.empty()) {
    GroupElement g = q.front();
    q.pop();
    for (int i = 0; i < W.num_generators(); ++i) {
      GroupElement h = W.multiply(W.generator(i), g);
      if (seen.count(h) || !in_B0(h)) continue;
      seen.insert(h);
      q.push(h);
    }
  }
  b0_.assign(seen.begin(), seen.end());
  W.sort_shortlex(b0_);
}

bool LowestCell::is_in_X0(const GroupElement& x) const {
  for (int i : finite_gens_)
    if (group().right_descent(x, i)) return false;
  return true;
}

bool LowestCell::c0_membership(const GroupElement& w) const {
  // w = x.w_0.y iff some right weak prefix of w has every s in S_0 as a right
  // descent; the suffix is then automatically in X_0^-1.
  const auto& W = group();
  std::set<GroupElement> seen{w};
  std::vector<GroupElement> stack{w};
  while (!stack.empty()) {
    GroupElement v = stack.back();
    stack.pop_back();
    bool all = true;
    for (int i : finite_gens_) all &= W.right_descent(v, i);
    if (all) return true;
    for (int i = 0; i < W.num_generators(); ++i) {
      if (!W.right_descent(v, i)) continue;
      GroupElement p = W.multiply(v, W.generator(i));
      // Prefixes shorter than w_0 cannot end in w_0.
      if (W.length(p) < W.length(W.w0())) continue;
      if (seen.insert(p).second) stack.push_back(p);
    }
    // Length zero factors move freely across the end of the suffix.
    for (int k = 1; k < W.pi_order(); ++k) {
      GroupElement p = W.multiply(v, W.pi(k));
      if (seen.insert(p).second) stack.push_back(p);
    }
  }
  return false;
}

GroupElement LowestCell::reassemble(const CellFactorization& f) const {
  const auto& W = group();
  GroupElement g = W.multiply(f.z, W.translation(f.tau));
  g = W.multiply(g, W.w0());
  return W.multiply(g, W.inverse(f.zprime));
}

CellFactorization LowestCell::factorize(const GroupElement& w) const {
  const auto& W = group();
  if (!c0_membership(w)) throw NotInLowestCell(W.to_string(w) + " is not in the lowest two-sided cell");
  const int lw = W.length(w);
  const int lw0 = W.length(W.w0());
  std::vector<CellFactorization> found;
  for (const auto& z : b0_) {
    GroupElement left = W.multiply(W.inverse(z), w);
    for (const auto& zp : b0_) {
      GroupElement t = W.multiply(W.multiply(left, zp), W.w0());
      if (t.u != 0 || !weights().in_P(t.lambda) || !weights().is_dominant(t.lambda)) continue;
      if (W.length(z) + W.length(t) + lw0 + W.length(zp) != lw) continue;
      found.push_back({z, t.lambda, zp});
    }
  }
  if (found.size() != 1)
    throw std::logic_error("factorization of " + W.to_string(w) + " found " + std::to_string(found.size()) +
                           " candidates");
  return found.front();
}

GroupElement LowestCell::descend_to_lowest(const GroupElement& z) const {
  const auto& W = group();
  GroupElement cur = z;
  for (;;) {
    bool moved = false;
    for (int i : finite_gens_) {
      if (!W.left_descent(cur, i)) {
        cur = W.multiply(W.generator(i), cur);
        moved = true;
        break;
      }
    }
    if (!moved) return cur;
  }
}

std::vector<Weight> LowestCell::dominant_weights(int max_total) const {
  const int n = group().rank();
  std::vector<Weight> out;
  std::array<int, kMaxRank> a{};
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n) {
      out.push_back(weights().from_l_coordinates(a));
      return;
    }
    for (int k = 0; k <= left; ++k) {
      a[i] = k;
      rec(i + 1, left - k);
    }
    a[i] = 0;
  };
  rec(0, max_total);
  std::sort(out.begin(), out.end(), [&](const Weight& x, const Weight& y) {
    auto cx = weights().l_coordinates(x), cy = weights().l_coordinates(y);
    int sx = 0, sy = 0;
    for (int i = 0; i < n; ++i) sx += cx[i], sy += cy[i];
    if (sx != sy) return sx < sy;
    return cx < cy;
  });
  return out;
}

HeckeElt LowestCell::module_gen(int i, const HeckeElt& v) const {
  const auto& W = group();
  const GroupElement s = W.generator(i);
  const int L = weights().generator_weight(i);
  HeckeElt out;
  for (const auto& [x, c] : v.terms()) {
    GroupElement sx = W.multiply(s, x);
    if (W.length(sx) < W.length(x)) {
      out.add(sx, c);
      out.add(x, c * xi(L));
    } else if (is_in_X0(sx)) {
      out.add(sx, c);
    } else {
      // sx = x t with t in S_0 and T_t C_{w_0 y} = q^{L(t)} C_{w_0 y}.
      out.add(x, c * q_power(L));
    }
  }
  return out;
}

HeckeElt LowestCell::module_T(const GroupElement& x, const HeckeElt& v) const {
  const auto& W = group();
  ReducedWord w = W.reduced_word(x);
  HeckeElt cur = v;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) cur = module_gen(*it, cur);
  if (w.pi == 0) return cur;
  HeckeElt out;
  for (const auto& [y, c] : cur.terms()) out.add(W.multiply(W.pi(w.pi), y), c);
  return out;
}

const HeckeElt& LowestCell::module_bar_basis(const GroupElement& x) const {
  std::lock_guard<std::recursive_mutex> lock(mutex_);
  auto it = bar_cache_.find(x);
  if (it != bar_cache_.end()) return it->second;
  const auto& W = group();
  if (!is_in_X0(x)) throw std::invalid_argument(W.to_string(x) + " is not in X_0");
  HeckeElt value;
  if (W.length(x) == 0) {
    value = m(x);
  } else {
    int s = -1;
    for (int i = 0; i < W.num_generators() && s < 0; ++i)
      if (W.left_descent(x, i)) s = i;
    // bar(m_x) = (T_s - xi_s) bar(m_{sx})
    const HeckeElt& prev = module_bar_basis(W.multiply(W.generator(s), x));
    value = module_gen(s, prev);
    value.add_scaled(prev, -xi(weights().generator_weight(s)));
  }
  return bar_cache_.emplace(x, std::move(value)).first->second;
}

HeckeElt LowestCell::module_bar(const HeckeElt& v) const {
  HeckeElt out;
  for (const auto& [x, c] : v.terms()) out.add_scaled(module_bar_basis(x), c.bar());
  return out;
}

const Coefficients& LowestCell::relative_kl(const GroupElement& x) const {
  std::lock_guard<std::recursive_mutex> lock(mutex_);
  auto it = rel_cache_.find(x);
  if (it != rel_cache_.end()) return it->second;
  const auto& W = group();
  if (!is_in_X0(x)) throw std::invalid_argument(W.to_string(x) + " is not in X_0");
  std::vector<GroupElement> interval;
  for (const auto& y : W.lower_interval(x))
    if (is_in_X0(y)) interval.push_back(y);
  std::map<GroupElement, LaurentPoly> acc;
  Coefficients out;
  for (auto y = interval.rbegin(); y != interval.rend(); ++y) {
    LaurentPoly p;
    if (*y == x) {
      p = 1;
    } else {
      auto a = acc.find(*y);
      if (a == acc.end()) continue;
      p = a->second.negative_part();
      if (!(a->second - p + p.bar()).is_zero())
        throw std::logic_error("relative KL recursion produced a non-antisymmetric remainder");
      acc.erase(a);
      if (p.is_zero()) continue;
    }
    out[*y] = p;
    LaurentPoly pb = p.bar();
    for (const auto& [x2, r] : module_bar_basis(*y).terms()) {
      if (x2 == *y) continue;
      acc[x2] += r * pb;
    }
  }
  return rel_cache_.emplace(x, std::move(out)).first->second;
}

HeckeElt LowestCell::P_box(const GroupElement& z) const {
  if (!in_B0(z)) throw std::invalid_argument(group().to_string(z) + " is not in B_0");
  HeckeElt h;
  for (const auto& [x, p] : relative_kl(z)) h.add(x, p);
  return h;
}

HeckeElt LowestCell::P_omega(int i) const {
  if (i < 1 || i > group().rank()) throw std::invalid_argument("fundamental weight index out of range");
  HeckeElt h;
  for (const auto& [x, p] : relative_kl(group().translation(weights().fundamental_weight(i)))) h.add(x, p);
  return h;
}

HeckeElt LowestCell::P_tau(const Weight& tau) const {
  if (!weights().in_P(tau) || !weights().is_dominant(tau))
    throw std::invalid_argument(weight_to_string(tau, group().rank()) + " is not a dominant L-weight");
  auto a = weights().l_coordinates(tau);
  HeckeElt out = HeckeElt::basis(group().identity());
  for (int i = 1; i <= group().rank(); ++i) {
    if (a[i - 1] == 0) continue;
    HeckeElt p = P_omega(i);
    for (int k = 0; k < a[i - 1]; ++k) out = H_->mul(out, p);
  }
  return out;
}

bool LowestCell::in_ideal_basis(const GroupElement& w, IdealKind kind, const GroupElement& param) const {
  const auto& W = group();
  switch (kind) {
    case IdealKind::Left:  // w = x w_0 y with x in X_0
      return is_in_X0(W.multiply(W.multiply(w, W.inverse(param)), W.w0()));
    case IdealKind::Right:  // w = z w_0 x with x in X_0^-1
      return is_in_X0_inverse(W.multiply(W.multiply(W.w0(), W.inverse(param)), w));
    case IdealKind::Plus: {  // w = p_tau w_0
      GroupElement t = W.multiply(w, W.w0());
      return t.u == 0 && weights().in_P(t.lambda) && weights().is_dominant(t.lambda);
    }
    case IdealKind::Lowest:
      return c0_membership(w);
  }
  return false;
}

IdealMembership LowestCell::ideal_membership(const HeckeElt& h, IdealKind kind,
                                             const GroupElement& param) const {
  IdealMembership r;
  r.coefficients = H_->kl_decompose(h);
  for (const auto& [z, c] : r.coefficients)
    if (!in_ideal_basis(z, kind, param)) r.residual.add(z, c);
  r.member = r.residual.is_zero();
  return r;
}

}  // namespace affcell
