#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "affcell/lowestcell.hpp"

namespace affcell {

// Element of the monoid algebra A[P+], stored as tau -> coefficient of e^tau.
class MonoidAlgebraElt {
public:
  using Map = std::map<Weight, LaurentPoly>;

  MonoidAlgebraElt() = default;
  static MonoidAlgebraElt e(const Weight& tau, const LaurentPoly& c = 1);

  bool is_zero() const { return terms_.empty(); }
  const Map& terms() const { return terms_; }
  LaurentPoly coeff(const Weight& tau) const;
  void add(const Weight& tau, const LaurentPoly& c);
  MonoidAlgebraElt nu(const WeightSystem& ws) const;

  friend MonoidAlgebraElt operator*(const MonoidAlgebraElt& a, const MonoidAlgebraElt& b);
  friend bool operator==(const MonoidAlgebraElt& a, const MonoidAlgebraElt& b) { return a.terms_ == b.terms_; }

private:
  Map terms_;
};

// Basis element v_z (x) e^tau (x) v_zprime.
struct CellKey {
  GroupElement z;
  Weight tau;
  GroupElement zprime;
  friend auto operator<=>(const CellKey&, const CellKey&) = default;
};

class CellularElt {
public:
  using Map = std::map<CellKey, LaurentPoly>;

  CellularElt() = default;
  static CellularElt basis(const CellKey& k, const LaurentPoly& c = 1);

  bool is_zero() const { return terms_.empty(); }
  const Map& terms() const { return terms_; }
  LaurentPoly coeff(const CellKey& k) const;
  void add(const CellKey& k, const LaurentPoly& c);
  void add_scaled(const CellularElt& a, const LaurentPoly& c);
  friend bool operator==(const CellularElt& a, const CellularElt& b) { return a.terms_ == b.terms_; }

private:
  Map terms_;
};

// Coefficients keyed by a weight, e.g. lambda -> m_lambda for C_{w_0 p_lambda}.
using WeightCoeffs = std::map<Weight, LaurentPoly>;

bool all_integer(const WeightCoeffs& c);

class CellularAlgebra {
public:
  explicit CellularAlgebra(std::shared_ptr<const LowestCell> cell);

  const LowestCell& cell() const { return *cell_; }
  const HeckeAlgebra& hecke() const { return cell_->hecke(); }
  const AffineWeylGroup& group() const { return cell_->group(); }
  const WeightSystem& weights() const { return cell_->weights(); }

  // phi(v_z, v_z') from C_{w_0 z^-1} C_{z' w_0} = sum a_tau P(tau) C_{w_0}.
  const MonoidAlgebraElt& phi_form(const GroupElement& z, const GroupElement& zprime) const;
  CellularElt mul(const CellularElt& a, const CellularElt& b) const;

  GroupElement reassemble(const CellKey& k) const;
  int key_length(const CellKey& k) const { return group().length(reassemble(k)); }
  // All basis keys whose reassembled element has length at most bound.
  std::vector<CellKey> basis_up_to(int bound) const;

  // P(tau) C_{w_0}, memoized.
  const HeckeElt& P_tau_C_w0(const Weight& tau) const;
  // P(z) P(tau) C_{w_0} P_R(z'^-1), memoized.
  const HeckeElt& Phi_basis(const CellKey& k) const;
  HeckeElt Phi(const CellularElt& a) const;
  // Inverse on M_0 by elimination at the longest KL term; nullopt when h has a
  // KL component outside c_0.
  std::optional<CellularElt> Phi_inverse(const HeckeElt& h) const;

  // Phi(v (x) b (x) w)^flat == Phi(w (x) nu(b) (x) v); nu may be replaced to
  // check that the test detects a wrong involution.
  bool involution_check(const CellularElt& a,
                        const std::function<Weight(const Weight&)>& nu = {}) const;
  // Phi(k) = C_{reassemble(k)} + strictly Bruhat-lower KL terms.
  bool unitriangular(const CellKey& k) const;

  // alpha -> a_alpha with P(omega_i) C_{w_0 p_lambda} = sum a_alpha C_{p_alpha w_0 p_lambda}.
  WeightCoeffs decompose_P_omega(int i, const Weight& lambda) const;
  // lambda -> m_lambda with P(tau) C_{w_0} = sum m_lambda C_{w_0 p_lambda}, by
  // applying the factors P(omega_i) one at a time.
  WeightCoeffs decompose_P_tau(const Weight& tau) const;
  // Same association read off a single KL expansion of P(tau) C_{w_0}.
  WeightCoeffs decompose_P_tau_direct(const Weight& tau) const;

  // m_alpha(omega_i) for the positive root with index r.
  int m_alpha(int i, int r) const;
  bool far_from_wall(const Weight& lambda, int i, int r) const;
  // Smallest lambda' in P- that keeps every near coordinate of lambda and is
  // still far from every wall lambda is far from.
  Weight reduce_lambda(const Weight& lambda, int i) const;

  bool is_antidominant_L(const Weight& lambda) const;

private:
  std::shared_ptr<const LowestCell> cell_;
  mutable std::recursive_mutex mutex_;
  mutable std::map<std::pair<GroupElement, GroupElement>, MonoidAlgebraElt> phi_cache_;
  mutable std::map<Weight, HeckeElt> ptau_cache_;
  mutable std::map<CellKey, HeckeElt> phi_basis_cache_;
  mutable std::map<std::pair<int, int>, int> m_alpha_cache_;
};

}  // namespace affcell
