#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "affcell/hecke.hpp"

namespace affcell {

// Raised by factorize() for elements outside c_0.
class NotInLowestCell : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// w = z . p_tau . w_0 . zprime^-1 with additive lengths.
struct CellFactorization {
  GroupElement z;
  Weight tau;
  GroupElement zprime;
  friend bool operator==(const CellFactorization&, const CellFactorization&) = default;
};

enum class IdealKind { Left, Right, Plus, Lowest };  // M_y, M^R_z, M_+, M_0

struct IdealMembership {
  bool member = false;
  Coefficients coefficients;  // full KL expansion of the input
  HeckeElt residual;          // KL terms outside the ideal, as C_z with coefficient
};

class LowestCell {
public:
  explicit LowestCell(std::shared_ptr<const HeckeAlgebra> hecke);

  const HeckeAlgebra& hecke() const { return *H_; }
  const AffineWeylGroup& group() const { return H_->group(); }
  const WeightSystem& weights() const { return H_->weights(); }

  // Elements whose alcove lies in the box 0 < <x, alpha_i> < b_i, shortlex order.
  const std::vector<GroupElement>& B0() const { return b0_; }
  bool in_B0(const GroupElement& z) const;
  bool is_in_X0(const GroupElement& x) const;
  bool is_in_X0_inverse(const GroupElement& y) const { return is_in_X0(group().inverse(y)); }

  bool c0_membership(const GroupElement& w) const;
  CellFactorization factorize(const GroupElement& w) const;
  GroupElement reassemble(const CellFactorization& f) const;
  // Left ascent by finite generators until every s in S_0 is a left descent.
  GroupElement descend_to_lowest(const GroupElement& z) const;

  // Dominant L-weights with L-coordinate sum at most max_total.
  std::vector<Weight> dominant_weights(int max_total) const;

  // Relative KL module with basis m_x = T_x C_{w_0 y}, x in X_0.
  HeckeElt module_gen(int i, const HeckeElt& m) const;
  HeckeElt module_T(const GroupElement& x, const HeckeElt& m) const;
  const HeckeElt& module_bar_basis(const GroupElement& x) const;
  HeckeElt module_bar(const HeckeElt& m) const;
  // x' -> p_{x',x} including p_{x,x} = 1.
  const Coefficients& relative_kl(const GroupElement& x) const;

  HeckeElt P_box(const GroupElement& z) const;
  HeckeElt P_omega(int i) const;  // i in 1..n, fundamental L-weight
  // Ordered product over fundamental L-weights in ascending index.
  HeckeElt P_tau(const Weight& tau) const;
  // P_R(z^-1) = P(z)^flat, and P_R(-tau) = P(tau)^flat.
  HeckeElt P_R_box(const GroupElement& z) const { return H_->flat(P_box(z)); }
  HeckeElt P_R_tau(const Weight& tau) const { return H_->flat(P_tau(tau)); }

  bool in_ideal_basis(const GroupElement& w, IdealKind kind, const GroupElement& param) const;
  IdealMembership ideal_membership(const HeckeElt& h, IdealKind kind,
                                   const GroupElement& param = GroupElement{}) const;

private:
  void build_B0();
  HeckeElt m(const GroupElement& x) const { return HeckeElt::basis(x); }

  std::shared_ptr<const HeckeAlgebra> H_;
  std::vector<GroupElement> b0_;
  std::vector<int> finite_gens_;
  mutable std::recursive_mutex mutex_;
  mutable std::map<GroupElement, HeckeElt> bar_cache_;
  mutable std::map<GroupElement, Coefficients> rel_cache_;
};

}  // namespace affcell
