// Python bindings: the main exact operations, with rationals rendered as
// "p/q" strings and dimensions as plain ints.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "genmat/gl_action.hpp"
#include "genmat/grassmann.hpp"
#include "genmat/multiplicities.hpp"
#include "genmat/special.hpp"
#include "genmat/version.hpp"

namespace py = pybind11;
using namespace genmat;

namespace {

RingId ring_from(const std::string& kind, int m, int n) {
  RingId id{ring_kind_parse(kind), m, n};
  id.validate();
  return id;
}

}  // namespace

PYBIND11_MODULE(_genmat, mod) {
  mod.doc() = "exact invariants and identities of generic matrix rings";
  mod.attr("__version__") = kVersion;

  mod.def("gr_dim", &gr_dim, py::arg("m"), py::arg("N"),
          "dimension of the Grassmannian of m-planes in N-space");

  mod.def("kostka", &kostka_number, py::arg("lam"), py::arg("mu"),
          "Kostka number: semistandard tableaux of shape lam and content mu");

  mod.def(
      "weight_space_dim",
      [](const std::string& ring, int m, int n, const MultiDegree& mu) {
        return weight_space_dim(ring_from(ring, m, n), mu);
      },
      py::arg("ring"), py::arg("m"), py::arg("n"), py::arg("mu"),
      "dimension of one multidegree component");

  mod.def(
      "invariant_dim",
      [](const std::string& ring, int m, int n, int r) {
        return static_cast<std::int64_t>(sl_invariants(ring_from(ring, m, n), r).dimension());
      },
      py::arg("ring"), py::arg("m"), py::arg("n"), py::arg("r"),
      "dimension of the determinant-one invariants in total degree r*m");

  mod.def(
      "invariant_basis",
      [](const std::string& ring, int m, int n, int r) {
        auto b = sl_invariants(ring_from(ring, m, n), r);
        std::vector<std::string> out;
        for (std::size_t k = 0; k < b.basis.size(); ++k) out.push_back(b.combo_str(k));
        return out;
      },
      py::arg("ring"), py::arg("m"), py::arg("n"), py::arg("r"),
      "basis of the invariants, one symbol combination per line");

  mod.def(
      "multiplicity_table",
      [](const std::string& ring, int m, int n, std::int64_t degree) {
        auto table = multiplicity_table(ring_from(ring, m, n), degree);
        std::vector<std::pair<Partition, long long>> out(table.mult.begin(), table.mult.end());
        return out;
      },
      py::arg("ring"), py::arg("m"), py::arg("n"), py::arg("degree"),
      "(partition, multiplicity) pairs for one total degree");

  mod.def(
      "dimension_series",
      [](const std::string& ring, int m, int n, int rmax) {
        auto rep = invariant_dim_series(ring_from(ring, m, n), rmax);
        py::dict d;
        d["dims_by_invariants"] = rep.hw_dims;
        d["dims_by_multiplicity"] = rep.mult_dims;
        d["consistent"] = rep.consistent;
        d["reference_exponent"] = rep.exponent;
        return d;
      },
      py::arg("ring"), py::arg("m"), py::arg("n"), py::arg("rmax"),
      "invariant dimension series along both computation paths");

  mod.def("reference_exponent", &reference_exponent, py::arg("m"), py::arg("n"));

  mod.def(
      "amitsur_levitzki_zero",
      [](int m, int n) { return amitsur_levitzki_check(m, n).f_is_zero; },
      py::arg("m"), py::arg("n"), "is the standard evaluation f_{m,n} identically zero");

  mod.def(
      "trace_identity_ok",
      [](int n, int trials, std::uint64_t seed) {
        int cap = n >= 3 ? 3 : 2;
        auto rep = trace_identity_check(n, trials, seed, cap);
        return rep.symbolic_ok && rep.numeric_ok;
      },
      py::arg("n") = 2, py::arg("trials") = 10, py::arg("seed") = 1,
      "tr(Y(A) Z) == Delta(A, Z), symbolically and at random points");

  mod.def(
      "delta_membership",
      [](int n, int power) {
        auto rep = delta_power_membership(n, power);
        py::dict d;
        d["member"] = rep.member;
        d["certified"] = rep.certified;
        d["word_count"] = rep.word_count;
        return d;
      },
      py::arg("n") = 2, py::arg("power") = 1,
      "is Delta^power inside the span of the matching multilinear words");

  mod.def(
      "lemma_elem_ok",
      [](int max_r, std::int64_t max_val) { return lemma_elem_check(max_r, max_val).ok(); },
      py::arg("max_r") = 4, py::arg("max_val") = 6);

  mod.def(
      "prop_grass_ok",
      [](std::int64_t max_sum) { return prop_grass_sweep(max_sum).ok(); },
      py::arg("max_sum") = 10);

  mod.def(
      "lemma5_ok",
      [](int max_n, std::int64_t max_q) { return lemma5_check(max_n, max_q).ok(); },
      py::arg("max_n") = 4, py::arg("max_q") = 8);
}
