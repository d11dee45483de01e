#include "affcell/laurent.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace affcell {

LaurentPoly::LaurentPoly(long long c) {
  if (c != 0) terms_.emplace_back(0, Integer(c));
}

LaurentPoly::LaurentPoly(const Integer& c) {
  if (c != 0) terms_.emplace_back(0, c);
}

LaurentPoly LaurentPoly::monomial(int exponent, const Integer& coeff) {
  LaurentPoly p;
  if (coeff != 0) p.terms_.emplace_back(exponent, coeff);
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  LaurentPoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
      if (p.terms_.back().second == 0) p.terms_.pop_back();
    } else if (t.second != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0);
}

int LaurentPoly::degree() const {
  return terms_.empty() ? kDegreeNegInfinity : terms_.back().first;
}

int LaurentPoly::low_degree() const {
  return terms_.empty() ? std::numeric_limits<int>::max() : terms_.front().first;
}

Integer LaurentPoly::coeff(int exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == exponent) return it->second;
  return 0;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly p;
  p.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
    p.terms_.emplace_back(-it->first, it->second);
  return p;
}

LaurentPoly LaurentPoly::shifted(int e) const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.first += e;
  return p;
}

bool LaurentPoly::in_strictly_negative() const {
  return terms_.empty() || terms_.back().first < 0;
}

bool LaurentPoly::in_nonpositive() const {
  return terms_.empty() || terms_.back().first <= 0;
}

LaurentPoly LaurentPoly::negative_part() const {
  LaurentPoly p;
  for (const auto& t : terms_) {
    if (t.first >= 0) break;
    p.terms_.push_back(t);
  }
  return p;
}

namespace {

// Merge two sorted term lists, with b scaled by sign.
std::vector<LaurentPoly::Term> merge(const std::vector<LaurentPoly::Term>& a,
                                     const std::vector<LaurentPoly::Term>& b,
                                     bool subtract) {
  std::vector<LaurentPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, subtract ? Integer(-b[j].second) : b[j].second);
      ++j;
    } else {
      Integer c = a[i].second;
      if (subtract)
        c -= b[j].second;
      else
        c += b[j].second;
      if (c != 0) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& r) {
  if (r.terms_.empty()) return *this;
  if (terms_.empty()) {
    terms_ = r.terms_;
    return *this;
  }
  terms_ = merge(terms_, r.terms_, false);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& r) {
  if (r.terms_.empty()) return *this;
  terms_ = merge(terms_, r.terms_, true);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.terms_.empty() || b.terms_.empty()) return {};
  if (b.terms_.size() == 1) {
    LaurentPoly p;
    p.terms_.reserve(a.terms_.size());
    const auto& [e, c] = b.terms_[0];
    for (const auto& t : a.terms_) p.terms_.emplace_back(t.first + e, t.second * c);
    return p;
  }
  if (a.terms_.size() == 1) return b * a;
  int lo = a.terms_.front().first + b.terms_.front().first;
  int hi = a.terms_.back().first + b.terms_.back().first;
  std::vector<Integer> dense(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) dense[x.first + y.first - lo] += x.second * y.second;
  LaurentPoly p;
  for (std::size_t k = 0; k < dense.size(); ++k)
    if (dense[k] != 0) p.terms_.emplace_back(lo + static_cast<int>(k), std::move(dense[k]));
  return p;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& r) {
  *this = *this * r;
  return *this;
}

void LaurentPoly::add_scaled(const LaurentPoly& r, const LaurentPoly& c) {
  if (c.is_zero() || r.is_zero()) return;
  *this += r * c;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Integer c = it->second;
    const int e = it->first;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c << "*";
    os << "q";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

LaurentPoly xi(int weight) {
  if (weight <= 0) throw std::invalid_argument("xi: generator weight must be positive");
  return LaurentPoly::from_terms({{weight, 1}, {-weight, -1}});
}

}  // namespace affcell
