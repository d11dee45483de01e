#pragma once

#include <json.hpp>
#include <string>

#include "affcell/cellular.hpp"
#include "affcell/paths.hpp"
#include "affcell/verify.hpp"

namespace affcell {

using Json = nlohmann::ordered_json;

// Coordinates in omega basis, trimmed to the rank.
Json weight_json(const Weight& w, int rank);
// [{"element", "coeff"}] ordered by length, then shortlex.
Json hecke_json(const AffineWeylGroup& W, const HeckeElt& h);
Json factorization_json(const AffineWeylGroup& W, const CellFactorization& f);
// [{"weight", "coeff"}] in weight order.
Json weight_coeffs_json(int rank, const WeightCoeffs& c);
Json monoid_json(int rank, const MonoidAlgebraElt& m);
Json path_profile_json(int rank, const PathProfile& p);
Json report_json(const SuiteReport& r);

// One line per term, "coeff * T_element".
std::string hecke_text(const AffineWeylGroup& W, const HeckeElt& h);
std::string report_text(const SuiteReport& r);

}  // namespace affcell
