#include "hadlat/serialize.hpp"

#include <sstream>

namespace hadlat {

std::string to_string(const BigInt& x) { return x.str(); }

std::string to_string(const BigRational& x) { return x.str(); }

Json to_json(const DensityEstimate& estimate) {
  Json j;
  j["n"] = uint64_t(1) << estimate.spec.m;
  j["d"] = estimate.d;
  j["c"] = estimate.spec.support.size();
  j["D"] = estimate.spec.radius;
  j["samples"] = estimate.samples;
  j["inside"] = estimate.inside;
  j["fraction"] = estimate.fraction;
  if (estimate.hoeffding_bound) {
    j["hoeffding_bound"] = *estimate.hoeffding_bound;
  } else {
    j["hoeffding_bound"] = nullptr;
  }
  j["condition_holds"] = estimate.condition_holds;
  j["seed"] = estimate.seed;
  return j;
}

Json to_json(const BoundReport& report) {
  Json j;
  j["n"] = report.n;
  j["d"] = report.d;
  j["epsilon"] = rational_to_double(report.epsilon);
  j["regime"] = std::string(regime_name(report.regime));
  j["bound_log2"] = report.bound_log2;
  if (report.exact_bound) j["exact_bound"] = to_string(*report.exact_bound);
  j["notes"] = report.notes;
  return j;
}

Json point_to_json(const LatticePoint& v) {
  Json j = Json::array();
  for (int64_t x : v.coords()) j.push_back(x);
  return j;
}

std::string point_to_csv(const LatticePoint& v) {
  std::ostringstream out;
  const auto& c = v.coords();
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) out << ',';
    out << c[i];
  }
  return out.str();
}

}  // namespace hadlat
