#include "affcell/hecke.hpp"

#include <algorithm>
#include <functional>
#include <queue>

namespace affcell {

HeckeElt HeckeElt::basis(const GroupElement& w, const LaurentPoly& c) {
  HeckeElt h;
  h.add(w, c);
  return h;
}

LaurentPoly HeckeElt::coeff(const GroupElement& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void HeckeElt::add(const GroupElement& w, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void HeckeElt::add_scaled(const HeckeElt& h, const LaurentPoly& c) {
  if (c.is_zero()) return;
  for (const auto& [w, a] : h.terms_) add(w, a * c);
}

HeckeElt& HeckeElt::operator+=(const HeckeElt& h) {
  for (const auto& [w, a] : h.terms_) add(w, a);
  return *this;
}

HeckeElt& HeckeElt::operator-=(const HeckeElt& h) {
  for (const auto& [w, a] : h.terms_) add(w, -a);
  return *this;
}

HeckeElt operator*(const LaurentPoly& c, const HeckeElt& h) {
  HeckeElt out;
  if (c.is_zero()) return out;
  for (const auto& [w, a] : h.terms_) out.terms_.emplace_hint(out.terms_.end(), w, a * c);
  return out;
}

bool CellPreorderGraph::reach(int from, int to, bool left, bool right) const {
  std::vector<char> seen(elements.size(), 0);
  std::queue<int> q;
  q.push(from);
  seen[from] = 1;
  while (!q.empty()) {
    int y = q.front();
    q.pop();
    if (y == to) return true;
    auto visit = [&](const std::vector<int>& next) {
      for (int z : next)
        if (!seen[z]) {
          seen[z] = 1;
          q.push(z);
        }
    };
    if (left) visit(left_below[y]);
    if (right) visit(right_below[y]);
  }
  return false;
}

namespace {

int lookup(const CellPreorderGraph& g, const GroupElement& w) {
  auto it = g.index.find(w);
  if (it == g.index.end()) throw std::out_of_range("element outside the bounded preorder graph");
  return it->second;
}

}  // namespace

bool CellPreorderGraph::leq_L(const GroupElement& z, const GroupElement& y) const {
  return reach(lookup(*this, y), lookup(*this, z), true, false);
}

bool CellPreorderGraph::leq_R(const GroupElement& z, const GroupElement& y) const {
  return reach(lookup(*this, y), lookup(*this, z), false, true);
}

bool CellPreorderGraph::leq_LR(const GroupElement& z, const GroupElement& y) const {
  return reach(lookup(*this, y), lookup(*this, z), true, true);
}

HeckeAlgebra::HeckeAlgebra(std::shared_ptr<const AffineWeylGroup> group, int length_bound)
    : group_(std::move(group)), length_bound_(length_bound) {
  for (int i = 0; i < group_->num_generators(); ++i) xi_.push_back(xi(weights().generator_weight(i)));
}

HeckeElt HeckeAlgebra::mul_gen(Side side, int i, const HeckeElt& h) const {
  const AffineWeylGroup& W = *group_;
  const GroupElement& s = W.generator(i);
  HeckeElt out;
  for (const auto& [x, c] : h.terms()) {
    GroupElement y = side == Side::Left ? W.multiply(s, x) : W.multiply(x, s);
    out.add(y, c);
    if (W.length(y) < W.length(x)) out.add(x, c * xi_[i]);
  }
  return out;
}

HeckeElt HeckeAlgebra::mul_T(Side side, const GroupElement& x, const HeckeElt& h) const {
  const AffineWeylGroup& W = *group_;
  ReducedWord w = W.reduced_word(x);
  const GroupElement pi = W.pi(w.pi);
  auto shift_pi = [&](const HeckeElt& e) {
    if (w.pi == 0) return e;
    HeckeElt out;
    for (const auto& [y, c] : e.terms()) out.add(side == Side::Left ? W.multiply(pi, y) : W.multiply(y, pi), c);
    return out;
  };
  HeckeElt cur = h;
  if (side == Side::Left) {
    // T_pi T_{s_1} ... T_{s_m} h: apply the letters from the right end.
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) cur = mul_gen(Side::Left, *it, cur);
    return shift_pi(cur);
  }
  cur = shift_pi(cur);
  for (int i : w.letters) cur = mul_gen(Side::Right, i, cur);
  return cur;
}

HeckeElt HeckeAlgebra::mul(const HeckeElt& a, const HeckeElt& b) const {
  const AffineWeylGroup& W = *group_;
  long long cost_right = 0, cost_left = 0;
  for (const auto& [y, c] : b.terms()) cost_right += W.length(y) + 1;
  for (const auto& [x, c] : a.terms()) cost_left += W.length(x) + 1;
  cost_right *= static_cast<long long>(a.size());
  cost_left *= static_cast<long long>(b.size());
  HeckeElt out;
  if (cost_right <= cost_left) {
    for (const auto& [y, c] : b.terms()) out.add_scaled(mul_T(Side::Right, y, a), c);
  } else {
    for (const auto& [x, c] : a.terms()) out.add_scaled(mul_T(Side::Left, x, b), c);
  }
  return out;
}

const HeckeElt& HeckeAlgebra::bar_T(const GroupElement& w) const {
  std::lock_guard<std::recursive_mutex> lock(mutex_);
  auto it = bar_cache_.find(w);
  if (it != bar_cache_.end()) return it->second;
  const AffineWeylGroup& W = *group_;
  const int len = W.length(w);
  HeckeElt value;
  if (len == 0) {
    value = T(w);
  } else {
    int s = -1;
    for (int i = 0; i < W.num_generators() && s < 0; ++i)
      if (W.length(W.multiply(w, W.generator(i))) < len) s = i;
    // bar(T_w) = bar(T_{ws}) (T_s - xi_s)
    const HeckeElt& prev = bar_T(W.multiply(w, W.generator(s)));
    value = mul_gen(Side::Right, s, prev);
    value.add_scaled(prev, -xi_[s]);
  }
  return bar_cache_.emplace(w, std::move(value)).first->second;
}

HeckeElt HeckeAlgebra::bar(const HeckeElt& h) const {
  HeckeElt out;
  for (const auto& [w, c] : h.terms()) out.add_scaled(bar_T(w), c.bar());
  return out;
}

HeckeElt HeckeAlgebra::flat(const HeckeElt& h) const {
  HeckeElt out;
  for (const auto& [w, c] : h.terms()) out.add(group_->inverse(w), c);
  return out;
}

GroupElement HeckeAlgebra::nu(const GroupElement& w) const {
  const WeightSystem& ws = weights();
  return {ws.nu(w.lambda), ws.nu_on_group(w.u)};
}

HeckeElt HeckeAlgebra::nu(const HeckeElt& h) const {
  HeckeElt out;
  for (const auto& [w, c] : h.terms()) out.add(nu(w), c);
  return out;
}

void HeckeAlgebra::check_bound(const GroupElement& w) const {
  int len = group_->length(w);
  if (len > length_bound_)
    throw BoundExceeded("KL element of length " + std::to_string(len) + " exceeds the length bound " +
                        std::to_string(length_bound_));
}

const HeckeElt& HeckeAlgebra::C(const GroupElement& w) const {
  std::lock_guard<std::recursive_mutex> lock(mutex_);
  auto it = kl_cache_.find(w);
  if (it != kl_cache_.end()) return it->second;
  check_bound(w);
  HeckeElt value = compute_C(w);
  return kl_cache_.emplace(w, std::move(value)).first->second;
}

HeckeElt HeckeAlgebra::compute_C(const GroupElement& w) const {
  const AffineWeylGroup& W = *group_;
  std::vector<GroupElement> interval = W.lower_interval(w);  // ascending length
  // P_x - bar(P_x) = sum_{x < y <= w} bar(P_y) r_{x,y} where bar(T_y) = sum r_{x,y} T_x.
  std::map<GroupElement, LaurentPoly> acc;
  HeckeElt out;
  for (auto it = interval.rbegin(); it != interval.rend(); ++it) {
    const GroupElement& y = *it;
    LaurentPoly p;
    if (y == w) {
      p = 1;
    } else {
      auto a = acc.find(y);
      if (a == acc.end()) continue;
      p = a->second.negative_part();
      if (!(a->second - p + p.bar()).is_zero())
        throw std::logic_error("KL recursion produced a non-antisymmetric remainder");
      acc.erase(a);
      if (p.is_zero()) continue;
    }
    out.add(y, p);
    LaurentPoly pb = p.bar();
    for (const auto& [x, r] : bar_T(y).terms()) {
      if (x == y) continue;
      acc[x] += r * pb;
    }
  }
  return out;
}

HeckeElt HeckeAlgebra::C_gen(int i) const {
  HeckeElt h = T(group_->generator(i));
  h.add(group_->identity(), q_power(-weights().generator_weight(i)));
  return h;
}

Coefficients HeckeAlgebra::kl_decompose(const HeckeElt& h) const {
  const AffineWeylGroup& W = *group_;
  Coefficients out;
  HeckeElt rest = h;
  while (!rest.is_zero()) {
    const GroupElement* top = nullptr;
    int best = -1;
    for (const auto& [w, c] : rest.terms()) {
      int l = W.length(w);
      if (l > best) {
        best = l;
        top = &w;
      }
    }
    GroupElement z = *top;
    LaurentPoly a = rest.coeff(z);
    out[z] = a;
    rest.add_scaled(C(z), -a);
  }
  return out;
}

Coefficients HeckeAlgebra::h_constants(const GroupElement& x, const GroupElement& y) const {
  return kl_decompose(mul(C(x), C(y)));
}

Coefficients HeckeAlgebra::f_constants(const GroupElement& x, const GroupElement& y) const {
  HeckeElt prod = mul_T(Side::Right, y, T(x));
  return {prod.terms().begin(), prod.terms().end()};
}

Coefficients HeckeAlgebra::f_constants_subsets(const GroupElement& x, const GroupElement& y) const {
  const AffineWeylGroup& W = *group_;
  ReducedWord w = W.reduced_word(x);
  const GroupElement pi = W.pi(w.pi);
  HeckeElt out;
  // T_{s_j} T_z: at a left descent either take the letter or keep z with a
  // factor xi; at an ascent the letter is always taken.
  std::function<void(int, const GroupElement&, const LaurentPoly&)> go =
      [&](int j, const GroupElement& z, const LaurentPoly& c) {
        if (j < 0) {
          out.add(W.multiply(pi, z), c);
          return;
        }
        int s = w.letters[j];
        GroupElement sz = W.multiply(W.generator(s), z);
        if (W.length(sz) < W.length(z)) {
          go(j - 1, sz, c);
          go(j - 1, z, c * xi_[s]);
        } else {
          go(j - 1, sz, c);
        }
      };
  go(static_cast<int>(w.letters.size()) - 1, y, LaurentPoly(1));
  return {out.terms().begin(), out.terms().end()};
}

Coefficients HeckeAlgebra::profile(const GroupElement& x, const GroupElement& y) const {
  const AffineWeylGroup& W = *group_;
  GroupElement yi = W.inverse(y);
  Coefficients out;
  for (const auto& [z, c] : f_constants_subsets(x, y)) out[W.multiply(z, yi)] = c;
  return out;
}

bool HeckeAlgebra::same_profile(const GroupElement& x, const GroupElement& y,
                                const GroupElement& y2) const {
  return profile(x, y) == profile(x, y2);
}

DegreeData HeckeAlgebra::degree_data(const GroupElement& x, const GroupElement& y) const {
  const AffineWeylGroup& W = *group_;
  DegreeData d;
  d.x = x;
  d.y = y;
  auto first = W.separating_hyperplanes(W.identity(), y);
  auto second = W.separating_hyperplanes(y, W.multiply(x, y));
  std::set_intersection(first.begin(), first.end(), second.begin(), second.end(),
                        std::inserter(d.hyperplanes, d.hyperplanes.end()));
  for (const auto& [r, k] : d.hyperplanes) {
    d.directions.insert(r);
    int lh = weights().hyperplane_weight(r, k);
    auto [it, inserted] = d.c_per_alpha.try_emplace(r, lh);
    if (!inserted) it->second = std::max(it->second, lh);
  }
  for (const auto& [r, c] : d.c_per_alpha) d.c += c;
  return d;
}

CellPreorderGraph HeckeAlgebra::cell_preorder_graph(int bound) const {
  const AffineWeylGroup& W = *group_;
  CellPreorderGraph g;
  g.elements = W.enumerate(bound);
  for (int k = 0; k < static_cast<int>(g.elements.size()); ++k) g.index[g.elements[k]] = k;
  const int m = static_cast<int>(g.elements.size());
  g.left_below.assign(m, {});
  g.right_below.assign(m, {});
  for (int k = 0; k < m; ++k) {
    const GroupElement& y = g.elements[k];
    std::set<int> left, right;
    for (int i = 0; i < W.num_generators(); ++i) {
      // C_s C_y = T_s C_y + q^-L(s) C_y, and symmetrically on the right.
      const HeckeElt& cy = C(y);
      HeckeElt l = mul_gen(Side::Left, i, cy);
      l.add_scaled(cy, q_power(-weights().generator_weight(i)));
      HeckeElt r = mul_gen(Side::Right, i, cy);
      r.add_scaled(cy, q_power(-weights().generator_weight(i)));
      // Truncation: terms past the bound are dropped, which only removes edges.
      auto keep = [&](const HeckeElt& h, std::set<int>& into) {
        HeckeElt inside;
        for (const auto& [z, c] : h.terms())
          if (W.length(z) <= bound) inside.add(z, c);
        HeckeElt outside = h - inside;
        if (!outside.is_zero()) return;  // decomposition would need longer elements
        for (const auto& [z, c] : kl_decompose(inside))
          if (!c.is_zero() && g.index.count(z)) into.insert(g.index.at(z));
      };
      keep(l, left);
      keep(r, right);
    }
    for (int p = 1; p < W.pi_order(); ++p) {
      left.insert(g.index.at(W.multiply(W.pi(p), y)));
      right.insert(g.index.at(W.multiply(y, W.pi(p))));
    }
    g.left_below[k].assign(left.begin(), left.end());
    g.right_below[k].assign(right.begin(), right.end());
  }
  return g;
}

std::size_t HeckeAlgebra::cached_kl_count() const {
  std::lock_guard<std::recursive_mutex> lock(mutex_);
  return kl_cache_.size();
}

}  // namespace affcell
