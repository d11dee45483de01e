#include "affcell/serialize.hpp"

#include <algorithm>
#include <sstream>

namespace affcell {

Json weight_json(const Weight& w, int rank) {
  Json a = Json::array();
  for (int i = 0; i < rank; ++i) a.push_back(w[i]);
  return a;
}

namespace {

std::vector<GroupElement> ordered_support(const AffineWeylGroup& W, const HeckeElt& h) {
  std::vector<GroupElement> v;
  for (const auto& [g, c] : h.terms()) v.push_back(g);
  W.sort_shortlex(v);
  return v;
}

}  // namespace

Json hecke_json(const AffineWeylGroup& W, const HeckeElt& h) {
  Json a = Json::array();
  for (const auto& g : ordered_support(W, h))
    a.push_back({{"element", W.to_string(g)}, {"length", W.length(g)}, {"coeff", h.coeff(g).to_string()}});
  return a;
}

Json factorization_json(const AffineWeylGroup& W, const CellFactorization& f) {
  return {{"z", W.to_string(f.z)}, {"tau", weight_json(f.tau, W.rank())}, {"zprime", W.to_string(f.zprime)}};
}

Json weight_coeffs_json(int rank, const WeightCoeffs& c) {
  Json a = Json::array();
  for (const auto& [w, p] : c) a.push_back({{"weight", weight_json(w, rank)}, {"coeff", p.to_string()}});
  return a;
}

Json monoid_json(int rank, const MonoidAlgebraElt& m) { return weight_coeffs_json(rank, m.terms()); }

Json path_profile_json(int rank, const PathProfile& p) {
  Json a = Json::array();
  for (const auto& [w, c] : p) a.push_back({{"weight", weight_json(w, rank)}, {"count", c.str()}});
  return a;
}

Json report_json(const SuiteReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json j{{"name", c.name}, {"passed", c.passed}, {"cases", c.cases}};
    if (!c.passed) j["first_failure"] = c.detail;
    checks.push_back(j);
  }
  return {{"suite", r.suite}, {"setting", r.setting}, {"passed", r.passed()}, {"checks", checks}};
}

std::string hecke_text(const AffineWeylGroup& W, const HeckeElt& h) {
  std::ostringstream os;
  for (const auto& g : ordered_support(W, h)) os << h.coeff(g).to_string() << " * T_" << W.to_string(g) << "\n";
  return os.str();
}

std::string report_text(const SuiteReport& r) {
  std::ostringstream os;
  os << r.suite << " on " << r.setting << ": " << (r.passed() ? "PASS" : "FAIL") << "\n";
  for (const auto& c : r.checks) {
    os << "  " << (c.passed ? "ok   " : "FAIL ") << c.name << " (" << c.cases << " cases)";
    if (!c.passed) os << " first failure: " << c.detail;
    os << "\n";
  }
  return os.str();
}

}  // namespace affcell
