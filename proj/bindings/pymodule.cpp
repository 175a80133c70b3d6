#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <bit>

#include "hadlat/bounds.hpp"
#include "hadlat/errors.hpp"
#include "hadlat/gf2.hpp"
#include "hadlat/hadamard.hpp"
#include "hadlat/lattice_enum.hpp"
#include "hadlat/serialize.hpp"

namespace py = pybind11;
using namespace hadlat;

namespace {

py::object big_to_py(const BigInt& x) {
  return py::reinterpret_steal<py::object>(
      PyLong_FromString(x.str().c_str(), nullptr, 10));
}

int log_dim_of(size_t count) {
  if (count == 0 || (count & (count - 1)) != 0) {
    throw DomainError("coordinate count must be a power of two");
  }
  return std::bit_width(count) - 1;
}

LatticePoint point_of(const std::vector<int64_t>& coords, int64_t level) {
  return LatticePoint(log_dim_of(coords.size()), coords, level);
}

py::dict density_to_dict(const DensityEstimate& e) {
  py::dict out;
  out["n"] = uint64_t(1) << e.spec.m;
  out["d"] = e.d;
  out["c"] = e.spec.support.size();
  out["D"] = e.spec.radius;
  out["support"] = e.spec.support;
  out["samples"] = e.samples;
  out["inside"] = e.inside;
  out["fraction"] = e.fraction;
  out["condition_holds"] = e.condition_holds;
  if (e.hoeffding_bound) {
    out["hoeffding_bound"] = *e.hoeffding_bound;
  } else {
    out["hoeffding_bound"] = py::none();
  }
  out["seed"] = e.seed;
  return out;
}

}  // namespace

PYBIND11_MODULE(_hadlat, mod) {
  mod.doc() =
      "Integer points of the Hadamard polytope and its dilates: exact "
      "counting, enumeration, and certified lower bounds";

  py::register_exception<BudgetError>(mod, "BudgetError", PyExc_RuntimeError);
  py::register_exception<InfeasibleError>(mod, "InfeasibleError",
                                          PyExc_ValueError);
  py::register_exception<DomainError>(mod, "DomainError", PyExc_ValueError);
  py::register_exception<PreconditionError>(mod, "PreconditionError",
                                            PyExc_ValueError);

  mod.def(
      "gaussian_binomial",
      [](int m, int k) { return big_to_py(gaussian_binomial(m, k)); },
      py::arg("m"), py::arg("k"),
      "Number of k-dimensional subspaces of F_2^m.");

  mod.def(
      "unit_count",
      [](int m) { return big_to_py(cor1_count_formula(m)); }, py::arg("m"),
      "Closed-form number of integer points of the polytope.");

  mod.def(
      "count_dilate",
      [](int m, int64_t d, const std::string& method, uint64_t budget) {
        CountMethod cm;
        if (method == "oracle") {
          cm = CountMethod::kOracle;
        } else if (method == "bijection") {
          cm = CountMethod::kBijection;
        } else {
          throw DomainError("method must be 'oracle' or 'bijection'");
        }
        return big_to_py(count_dilate(m, d, cm, budget));
      },
      py::arg("m"), py::arg("d"), py::arg("method") = "oracle",
      py::arg("budget") = kDefaultNodeBudget,
      "Number of integer points of the d-fold dilate.");

  mod.def(
      "enumerate_unit_points",
      [](int m) {
        std::vector<std::vector<int64_t>> out;
        UnitPointStream stream(m);
        while (auto v = stream.next()) out.push_back(v->coords());
        return out;
      },
      py::arg("m"), "All integer points of the polytope, one per coset.");

  mod.def(
      "enumerate_dilate_points",
      [](int m, int64_t d, uint64_t budget) {
        std::vector<std::vector<int64_t>> out;
        DilatePointStream stream(m, d, budget);
        while (auto v = stream.next()) out.push_back(v->coords());
        return out;
      },
      py::arg("m"), py::arg("d"), py::arg("budget") = kDefaultNodeBudget,
      "All integer points of the d-fold dilate, by pruned search.");

  mod.def(
      "fwht",
      [](const std::vector<int64_t>& coords) {
        return fwht(point_of(coords, 0)).scaled;
      },
      py::arg("coords"), "Exact Walsh-Hadamard transform.");

  mod.def(
      "dilate_membership",
      [](const std::vector<int64_t>& coords, int64_t d) {
        return dilate_membership(point_of(coords, d), d);
      },
      py::arg("coords"), py::arg("d"),
      "Exact membership of an integer vector in the d-fold dilate.");

  mod.def(
      "ehrhart_coefficients",
      [](int m, const std::vector<std::pair<int64_t, int64_t>>& counts) {
        std::vector<EhrhartSample> samples;
        for (auto [d, c] : counts) samples.push_back({d, BigInt(c)});
        std::vector<std::string> out;
        for (const BigRational& c : ehrhart_interpolate(m, samples)) {
          out.push_back(c.str());
        }
        return out;
      },
      py::arg("m"), py::arg("counts"),
      "Counting-polynomial coefficients (ascending) as rational strings.");

  mod.def(
      "case1_count_lower_bound",
      [](int m, int64_t d) {
        Case1Count c = case1_count_lower_bound(m, d);
        py::dict out;
        out["exact"] = big_to_py(c.exact);
        out["central_dims"] = c.central_dims;
        out["crude_log2"] = c.crude_log2;
        return out;
      },
      py::arg("m"), py::arg("d"),
      "Exact certificate-family count and the crude comparison bound.");

  mod.def(
      "case1_verify_injectivity",
      [](int m, int64_t d, uint64_t budget) {
        InjectivityReport r = case1_verify_injectivity(m, d, budget);
        py::dict out;
        out["distinct"] = r.distinct;
        out["sums_member"] = r.sums_member;
        out["family_count"] = r.family_count;
        return out;
      },
      py::arg("m"), py::arg("d"), py::arg("budget") = kDefaultFamilyBudget,
      "Checks all family sums are distinct members of the dilate.");

  mod.def(
      "case3_sample_density",
      [](int m, int64_t d, int64_t c, int64_t radius, uint64_t samples,
         uint64_t seed, unsigned threads) {
        return density_to_dict(
            case3_sample_density(m, d, c, radius, samples, seed, threads));
      },
      py::arg("m"), py::arg("d"), py::arg("c"), py::arg("D"),
      py::arg("samples"), py::arg("seed"), py::arg("threads") = 1,
      "Sampled density of a random punctured hypercube inside the dilate.");

  mod.def(
      "case3_lower_bound_value",
      [](int64_t n, int64_t d, int64_t c, int64_t radius) {
        Case3Bound b = case3_lower_bound_value(n, d, c, radius);
        py::dict out;
        out["exact"] = big_to_py(b.exact);
        out["log2"] = b.log2_value;
        return out;
      },
      py::arg("n"), py::arg("d"), py::arg("c"), py::arg("D"),
      "Certified count (1/2) C(n,c) (2D)^c once density >= 1/2.");

  mod.def(
      "theorem1_bound",
      [](int64_t n, int64_t d, const std::string& eps) {
        BoundReport r = theorem1_bound(n, d, rational_from_string(eps));
        py::dict out;
        out["n"] = r.n;
        out["d"] = r.d;
        out["epsilon"] = rational_to_double(r.epsilon);
        out["regime"] = std::string(regime_name(r.regime));
        out["bound_log2"] = r.bound_log2;
        if (r.exact_bound) {
          out["exact_bound"] = big_to_py(*r.exact_bound);
        } else {
          out["exact_bound"] = py::none();
        }
        out["notes"] = r.notes;
        return out;
      },
      py::arg("n"), py::arg("d"), py::arg("eps"),
      "Regime-classified lower bound for the d-fold dilate.");
}
