#include "affcell/paths.hpp"

#include <functional>
#include <stdexcept>

namespace affcell {

PathCounter::PathCounter(WeightSystemPtr ws) : ws_(std::move(ws)) {
  if (ws_->type() != CartanType::A) throw std::invalid_argument("path counting is only defined in type A");
  orbits_.resize(ws_->rank() + 1);
  for (int i = 1; i <= ws_->rank(); ++i) orbits_[i] = ws_->orbit(ws_->fundamental_weight(i));
}

void PathCounter::check_type(const PathType& m) const {
  for (int i : m)
    if (i < 1 || i > ws_->rank()) throw std::invalid_argument("path step index " + std::to_string(i) + " out of range");
}

PathProfile PathCounter::full_profile(const PathType& m) const {
  check_type(m);
  PathProfile cur{{Weight{}, Integer(1)}};
  for (int i : m) {
    PathProfile next;
    for (const auto& [x, c] : cur)
      for (const auto& rho : orbits_[i]) {
        Weight y = x - rho;
        if (ws_->is_antidominant(y)) next[y] += c;
      }
    cur = std::move(next);
  }
  return cur;
}

Integer PathCounter::count(const PathType& m, const Weight& gamma) const {
  if (!ws_->in_P(gamma) || !ws_->is_antidominant(gamma))
    throw std::invalid_argument(weight_to_string(gamma, ws_->rank()) + " is not antidominant");
  PathProfile p = full_profile(m);
  auto it = p.find(gamma);
  return it == p.end() ? Integer(0) : it->second;
}

PathProfile PathCounter::full_profile_brute(const PathType& m) const {
  check_type(m);
  PathProfile out;
  std::function<void(size_t, const Weight&)> rec = [&](size_t l, const Weight& x) {
    if (l == m.size()) {
      out[x] += 1;
      return;
    }
    for (const auto& rho : orbits_[m[l]]) {
      Weight y = x - rho;
      if (ws_->is_antidominant(y)) rec(l + 1, y);
    }
  };
  rec(0, Weight{});
  return out;
}

std::vector<std::vector<Weight>> PathCounter::witnesses(const PathType& m, const Weight& gamma) const {
  check_type(m);
  if (static_cast<int>(m.size()) > kMaxWitnessSteps)
    throw std::invalid_argument("witness listing is limited to " + std::to_string(kMaxWitnessSteps) + " steps");
  std::vector<std::vector<Weight>> out;
  std::vector<Weight> path{Weight{}};
  std::function<void()> rec = [&]() {
    size_t l = path.size() - 1;
    if (l == m.size()) {
      if (path.back() == gamma) out.push_back(path);
      return;
    }
    for (const auto& rho : orbits_[m[l]]) {
      Weight y = path.back() - rho;
      if (!ws_->is_antidominant(y)) continue;
      path.push_back(y);
      rec();
      path.pop_back();
    }
  };
  rec();
  return out;
}

PathType path_type(const WeightSystem& ws, const Weight& tau) {
  if (!ws.in_P(tau) || !ws.is_dominant(tau))
    throw std::invalid_argument(weight_to_string(tau, ws.rank()) + " is not dominant");
  auto a = ws.l_coordinates(tau);
  PathType m;
  for (int i = 1; i <= ws.rank(); ++i) m.insert(m.end(), a[i - 1], i);
  return m;
}

PathType nu_type(const PathType& m, int rank) {
  PathType out;
  for (int i : m) out.push_back(rank + 1 - i);
  return out;
}

bool cross_check(const CellularAlgebra& A, const Weight& tau) {
  const auto& ws = A.weights();
  if (ws.type() != CartanType::A) throw std::invalid_argument("cross_check is only defined in type A");
  PathCounter counter(A.group().weight_system());
  PathProfile paths = counter.full_profile(nu_type(path_type(ws, tau), ws.rank()));
  WeightCoeffs hecke = A.decompose_P_tau(tau);
  if (paths.size() != hecke.size()) return false;
  for (const auto& [lambda, c] : hecke) {
    auto it = paths.find(lambda);
    if (it == paths.end() || !(c == LaurentPoly(it->second))) return false;
  }
  return true;
}

}  // namespace affcell
