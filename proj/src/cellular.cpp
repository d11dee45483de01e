#include "affcell/cellular.hpp"

#include <algorithm>
#include <functional>

namespace affcell {

MonoidAlgebraElt MonoidAlgebraElt::e(const Weight& tau, const LaurentPoly& c) {
  MonoidAlgebraElt m;
  m.add(tau, c);
  return m;
}

LaurentPoly MonoidAlgebraElt::coeff(const Weight& tau) const {
  auto it = terms_.find(tau);
  return it == terms_.end() ? LaurentPoly{} : it->second;
}

void MonoidAlgebraElt::add(const Weight& tau, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(tau, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

MonoidAlgebraElt MonoidAlgebraElt::nu(const WeightSystem& ws) const {
  MonoidAlgebraElt out;
  for (const auto& [tau, c] : terms_) out.add(ws.nu(tau), c);
  return out;
}

MonoidAlgebraElt operator*(const MonoidAlgebraElt& a, const MonoidAlgebraElt& b) {
  MonoidAlgebraElt out;
  for (const auto& [s, c] : a.terms_)
    for (const auto& [t, d] : b.terms_) out.add(s + t, c * d);
  return out;
}

CellularElt CellularElt::basis(const CellKey& k, const LaurentPoly& c) {
  CellularElt a;
  a.add(k, c);
  return a;
}

LaurentPoly CellularElt::coeff(const CellKey& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? LaurentPoly{} : it->second;
}

void CellularElt::add(const CellKey& k, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(k, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void CellularElt::add_scaled(const CellularElt& a, const LaurentPoly& c) {
  for (const auto& [k, d] : a.terms_) add(k, d * c);
}

bool all_integer(const WeightCoeffs& c) {
  for (const auto& [w, p] : c)
    if (p.degree() != 0 || p.low_degree() != 0) return false;
  return true;
}

CellularAlgebra::CellularAlgebra(std::shared_ptr<const LowestCell> cell) : cell_(std::move(cell)) {}

bool CellularAlgebra::is_antidominant_L(const Weight& lambda) const {
  return weights().in_P(lambda) && weights().is_antidominant(lambda);
}

namespace {

// Longest element of a KL support; ties broken by the map order.
GroupElement longest_term(const AffineWeylGroup& W, const Coefficients& c) {
  auto best = c.begin();
  int bl = W.length(best->first);
  for (auto it = std::next(c.begin()); it != c.end(); ++it) {
    int l = W.length(it->first);
    if (l > bl) best = it, bl = l;
  }
  return best->first;
}

void subtract_scaled(Coefficients& acc, const Coefficients& c, const LaurentPoly& k) {
  for (const auto& [w, p] : c) {
    LaurentPoly& slot = acc[w];
    slot -= p * k;
    if (slot.is_zero()) acc.erase(w);
  }
}

}  // namespace

const HeckeElt& CellularAlgebra::P_tau_C_w0(const Weight& tau) const {
  std::lock_guard<std::recursive_mutex> lock(mutex_);
  auto it = ptau_cache_.find(tau);
  if (it != ptau_cache_.end()) return it->second;
  HeckeElt v = hecke().mul(cell_->P_tau(tau), hecke().C(group().w0()));
  return ptau_cache_.emplace(tau, std::move(v)).first->second;
}

const MonoidAlgebraElt& CellularAlgebra::phi_form(const GroupElement& z, const GroupElement& zprime) const {
  std::lock_guard<std::recursive_mutex> lock(mutex_);
  auto key = std::make_pair(z, zprime);
  auto it = phi_cache_.find(key);
  if (it != phi_cache_.end()) return it->second;
  const auto& W = group();
  if (!cell_->in_B0(z) || !cell_->in_B0(zprime)) throw std::invalid_argument("phi_form arguments must lie in B_0");
  const GroupElement w0 = W.w0();
  HeckeElt prod = hecke().mul(hecke().C(W.multiply(w0, W.inverse(z))), hecke().C(W.multiply(zprime, w0)));
  Coefficients rest = hecke().kl_decompose(prod);
  // P(tau) C_{w_0} = C_{p_tau w_0} + shorter terms of M_+, so peel from the top.
  MonoidAlgebraElt out;
  while (!rest.empty()) {
    GroupElement y = longest_term(W, rest);
    GroupElement t = W.multiply(y, w0);
    if (t.u != 0 || !weights().in_P(t.lambda) || !weights().is_dominant(t.lambda))
      throw std::logic_error("C_{w_0 z^-1} C_{z' w_0} left M_+ at " + W.to_string(y));
    LaurentPoly a = rest.at(y);
    out.add(t.lambda, a);
    subtract_scaled(rest, hecke().kl_decompose(P_tau_C_w0(t.lambda)), a);
  }
  return phi_cache_.emplace(key, std::move(out)).first->second;
}

CellularElt CellularAlgebra::mul(const CellularElt& a, const CellularElt& b) const {
  CellularElt out;
  for (const auto& [k1, c1] : a.terms())
    for (const auto& [k2, c2] : b.terms()) {
      LaurentPoly c12 = c1 * c2;
      for (const auto& [t, c] : phi_form(k1.zprime, k2.z).terms())
        out.add({k1.z, k1.tau + t + k2.tau, k2.zprime}, c12 * c);
    }
  return out;
}

GroupElement CellularAlgebra::reassemble(const CellKey& k) const {
  return cell_->reassemble({k.z, k.tau, k.zprime});
}

std::vector<CellKey> CellularAlgebra::basis_up_to(int bound) const {
  const auto& W = group();
  const int lw0 = W.length(W.w0());
  std::vector<std::pair<int, CellKey>> keyed;
  for (const auto& tau : cell_->dominant_weights(std::max(bound, 0))) {
    int lt = W.length(W.translation(tau)) + lw0;
    if (lt > bound) continue;
    for (const auto& z : cell_->B0())
      for (const auto& zp : cell_->B0()) {
        int l = lt + W.length(z) + W.length(zp);
        if (l <= bound) keyed.push_back({l, CellKey{z, tau, zp}});
      }
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<CellKey> out;
  for (auto& [l, k] : keyed) out.push_back(k);
  return out;
}

const HeckeElt& CellularAlgebra::Phi_basis(const CellKey& k) const {
  std::lock_guard<std::recursive_mutex> lock(mutex_);
  auto it = phi_basis_cache_.find(k);
  if (it != phi_basis_cache_.end()) return it->second;
  HeckeElt v = hecke().mul(cell_->P_box(k.z), hecke().mul(P_tau_C_w0(k.tau), cell_->P_R_box(k.zprime)));
  return phi_basis_cache_.emplace(k, std::move(v)).first->second;
}

HeckeElt CellularAlgebra::Phi(const CellularElt& a) const {
  HeckeElt out;
  for (const auto& [k, c] : a.terms()) out.add_scaled(Phi_basis(k), c);
  return out;
}

std::optional<CellularElt> CellularAlgebra::Phi_inverse(const HeckeElt& h) const {
  const auto& W = group();
  Coefficients rest = hecke().kl_decompose(h);
  CellularElt out;
  while (!rest.empty()) {
    GroupElement y = longest_term(W, rest);
    if (!cell_->c0_membership(y)) return std::nullopt;
    CellFactorization f = cell_->factorize(y);
    CellKey k{f.z, f.tau, f.zprime};
    LaurentPoly a = rest.at(y);
    out.add(k, a);
    subtract_scaled(rest, hecke().kl_decompose(Phi_basis(k)), a);
  }
  return out;
}

bool CellularAlgebra::involution_check(const CellularElt& a,
                                       const std::function<Weight(const Weight&)>& nu) const {
  auto apply_nu = [&](const Weight& t) { return nu ? nu(t) : weights().nu(t); };
  CellularElt swapped;
  for (const auto& [k, c] : a.terms()) {
    Weight t = apply_nu(k.tau);
    if (!weights().in_P(t) || !weights().is_dominant(t)) return false;
    swapped.add({k.zprime, t, k.z}, c);
  }
  return hecke().flat(Phi(a)) == Phi(swapped);
}

bool CellularAlgebra::unitriangular(const CellKey& k) const {
  const auto& W = group();
  const GroupElement top = reassemble(k);
  Coefficients c = hecke().kl_decompose(Phi_basis(k));
  auto it = c.find(top);
  if (it == c.end() || !(it->second == LaurentPoly(1))) return false;
  for (const auto& [y, p] : c)
    if (y != top && !W.bruhat_leq(y, top)) return false;
  return true;
}

WeightCoeffs CellularAlgebra::decompose_P_omega(int i, const Weight& lambda) const {
  const auto& W = group();
  if (!is_antidominant_L(lambda))
    throw std::invalid_argument(weight_to_string(lambda, W.rank()) + " is not an antidominant L-weight");
  const GroupElement w0 = W.w0();
  HeckeElt h = hecke().mul(cell_->P_omega(i), hecke().C(W.multiply(w0, W.translation(lambda))));
  WeightCoeffs out;
  const GroupElement back = W.multiply(W.translation(-lambda), w0);
  for (const auto& [z, c] : hecke().kl_decompose(h)) {
    GroupElement t = W.multiply(z, back);
    if (t.u != 0) throw std::logic_error("KL term " + W.to_string(z) + " is not of the form p_alpha w_0 p_lambda");
    out[t.lambda] = c;
  }
  return out;
}

WeightCoeffs CellularAlgebra::decompose_P_tau(const Weight& tau) const {
  if (!weights().in_P(tau) || !weights().is_dominant(tau))
    throw std::invalid_argument(weight_to_string(tau, group().rank()) + " is not a dominant L-weight");
  const int w0 = weights().longest_element();
  auto a = weights().l_coordinates(tau);
  WeightCoeffs state{{Weight{}, LaurentPoly(1)}};
  // P(tau) = P(omega_1)^{a_1} ... P(omega_n)^{a_n}; the rightmost factor acts first.
  for (int i = group().rank(); i >= 1; --i)
    for (int k = 0; k < a[i - 1]; ++k) {
      WeightCoeffs next;
      for (const auto& [lambda, c] : state)
        for (const auto& [alpha, d] : decompose_P_omega(i, lambda)) {
          // p_alpha w_0 p_lambda = w_0 p_{lambda + alpha w_0}
          LaurentPoly& slot = next[lambda + weights().act(alpha, w0)];
          slot += c * d;
        }
      state.clear();
      for (auto& [l, c] : next)
        if (!c.is_zero()) state.emplace(l, std::move(c));
    }
  return state;
}

WeightCoeffs CellularAlgebra::decompose_P_tau_direct(const Weight& tau) const {
  const auto& W = group();
  WeightCoeffs out;
  for (const auto& [z, c] : hecke().kl_decompose(P_tau_C_w0(tau))) {
    GroupElement t = W.multiply(W.w0(), z);
    if (t.u != 0) throw std::logic_error("KL term " + W.to_string(z) + " is not of the form w_0 p_lambda");
    out[t.lambda] = c;
  }
  return out;
}

int CellularAlgebra::m_alpha(int i, int r) const {
  std::lock_guard<std::recursive_mutex> lock(mutex_);
  auto key = std::make_pair(i, r);
  auto it = m_alpha_cache_.find(key);
  if (it != m_alpha_cache_.end()) return it->second;
  const auto& W = group();
  int best = 0;
  for (const auto& x : W.lower_interval(W.translation(weights().fundamental_weight(i))))
    for (int v = 0; v < weights().w0_order(); ++v) {
      int f = W.alcove_floor(W.multiply(x, W.finite(v)), r);
      // A_0 sits between H_{alpha,0} and H_{alpha,1}.
      int k = f >= 1 ? f : (f < 0 ? -f - 1 : 0);
      best = std::max(best, k);
    }
  m_alpha_cache_[key] = best;
  return best;
}

bool CellularAlgebra::far_from_wall(const Weight& lambda, int i, int r) const {
  return weights().pairing(lambda, r) <= -m_alpha(i, r);
}

Weight CellularAlgebra::reduce_lambda(const Weight& lambda, int i) const {
  const int n = group().rank();
  const int np = weights().num_positive_roots();
  if (!is_antidominant_L(lambda))
    throw std::invalid_argument(weight_to_string(lambda, n) + " is not an antidominant L-weight");
  std::vector<bool> far(np);
  for (int r = 0; r < np; ++r) far[r] = far_from_wall(lambda, i, r);
  auto coords = weights().l_coordinates(lambda);
  std::optional<Weight> best;
  int best_norm = 0;
  std::array<int, kMaxRank> c{};
  std::function<void(int, int)> rec = [&](int j, int norm) {
    if (j == n) {
      Weight cand = weights().from_l_coordinates(c);
      for (int r = 0; r < np; ++r) {
        if (far[r] ? !far_from_wall(cand, i, r) : weights().pairing(cand, r) != weights().pairing(lambda, r))
          return;
      }
      // Enumeration runs in increasing lexicographic order, so only a
      // strictly smaller norm replaces the incumbent.
      if (!best || norm < best_norm) best = cand, best_norm = norm;
      return;
    }
    for (int k = coords[j]; k <= 0; ++k) {
      c[j] = k;
      rec(j + 1, norm - k);
    }
    c[j] = 0;
  };
  rec(0, 0);
  return *best;  // lambda itself always qualifies
}

}  // namespace affcell
