// SPDX-License-Identifier: Apache-2.0
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "dicke/dicke_algebra.hpp"
#include "dicke/npt_witness.hpp"
#include "dicke/oracle.hpp"
#include "dicke/report_io.hpp"
#include "dicke/version.hpp"

namespace py = pybind11;

namespace {

dicke::OccupationIndex make_index(const std::vector<int>& entries) {
  return dicke::OccupationIndex(entries);
}

py::object as_fraction(const dicke::Rational& value) {
  static py::object fraction =
      py::module_::import("fractions").attr("Fraction");
  return fraction(dicke::rational_to_string(value));
}

py::tuple as_tuple(const dicke::OccupationIndex& index) {
  return py::tuple(py::cast(index.entries()));
}

py::dict witness_dict(const dicke::WitnessChoice& choice) {
  py::dict out;
  out["m_hat"] = as_tuple(choice.m_hat);
  out["k_hat"] = as_tuple(choice.k_hat);
  out["k_hat_prime"] = as_tuple(choice.k_hat_prime);
  out["delta"] = py::tuple(py::cast(choice.delta));
  out["pos_plus"] = choice.pos_plus;
  out["pos_minus"] = choice.pos_minus;
  return out;
}

py::dict form_dict(const dicke::HermitianForm2& form) {
  py::dict out;
  out["A"] = as_fraction(form.A);
  out["B"] = as_fraction(form.B);
  out["C_squared"] = as_fraction(form.C_squared);
  out["discriminant"] = as_fraction(dicke::discriminant(form));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, module) {
  module.doc() =
      "Exact negativity certificates for subsystems of symmetric qudit states";
  module.attr("__version__") = dicke::kVersion;

  module.def(
      "multinomial",
      [](const std::vector<int>& occupation) {
        static py::object py_int = py::module_::import("builtins").attr("int");
        return py_int(dicke::multinomial(make_index(occupation)).str());
      },
      py::arg("occupation"),
      "Number of site words with the given occupation numbers");

  module.def(
      "enumerate_full",
      [](int dimension, int norm) {
        py::list out;
        for (const auto& index : dicke::enumerate_full(dimension, norm)) {
          out.append(as_tuple(index));
        }
        return out;
      },
      py::arg("dimension"), py::arg("norm"));

  module.def(
      "enumerate_restricted",
      [](int m, const std::vector<int>& bound) {
        py::list out;
        for (const auto& index :
             dicke::enumerate_restricted(m, make_index(bound))) {
          out.append(as_tuple(index));
        }
        return out;
      },
      py::arg("m"), py::arg("bound"));

  module.def(
      "qubit_bounds",
      [](int n, int e, int m) {
        const auto bounds = dicke::qubit_bounds(n, e, m);
        return py::make_tuple(bounds.l_min, bounds.l_max);
      },
      py::arg("n"), py::arg("e"), py::arg("m"));

  module.def(
      "schmidt_coefficient",
      [](const std::vector<int>& parent, const std::vector<int>& part) {
        return as_fraction(
            dicke::schmidt_coefficient(make_index(parent), make_index(part)));
      },
      py::arg("parent"), py::arg("part"));

  module.def(
      "schmidt_decomposition",
      [](const std::vector<int>& parent, int m) {
        py::list out;
        for (const auto& term :
             dicke::schmidt_decomposition(make_index(parent), m)) {
          out.append(py::make_tuple(as_tuple(term.part),
                                    as_fraction(term.weight)));
        }
        return out;
      },
      py::arg("parent"), py::arg("m"));

  module.def(
      "reduced_state",
      [](const std::vector<int>& parent, int m) {
        const auto state = dicke::reduced_state(make_index(parent), m);
        py::list out;
        for (int i = 0; i < state.support.size(); ++i) {
          out.append(py::make_tuple(as_tuple(state.support[i]),
                                    as_fraction(state.weights[i])));
        }
        return out;
      },
      py::arg("parent"), py::arg("m"));

  module.def(
      "bipartite_matrix",
      [](const std::vector<int>& parent, int m, int k) {
        return dicke::bipartite_operator(make_index(parent), m, k).to_dense();
      },
      py::arg("parent"), py::arg("m"), py::arg("k"),
      "Reduction on the split product basis, as a dense array");

  module.def(
      "ppt_spectrum",
      [](const std::vector<int>& parent, int m, int k) {
        const auto transposed = dicke::partial_transpose(
            dicke::bipartite_operator(make_index(parent), m, k));
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
            transposed.to_dense(), Eigen::EigenvaluesOnly);
        return Eigen::VectorXd(solver.eigenvalues());
      },
      py::arg("parent"), py::arg("m"), py::arg("k"),
      "Ascending eigenvalues of the partially transposed reduction");

  module.def(
      "spectral_min",
      [](const std::vector<int>& parent, int m, int k) {
        return dicke::spectral_min(make_index(parent), m, k);
      },
      py::arg("parent"), py::arg("m"), py::arg("k"));

  module.def(
      "choose_witness",
      [](const std::vector<int>& parent, int m, int k) {
        return witness_dict(dicke::choose_witness(make_index(parent), m, k));
      },
      py::arg("parent"), py::arg("m"), py::arg("k"));

  module.def(
      "hermitian_form",
      [](const std::vector<int>& parent, int m, int k) {
        const auto index = make_index(parent);
        const auto choice = dicke::choose_witness(index, m, k);
        const auto form = dicke::hermitian_form(index, choice);
        py::dict out = form_dict(form);
        out["witness"] = witness_dict(choice);
        out["witness_value"] = dicke::optimal_amplitudes(form).value;
        return out;
      },
      py::arg("parent"), py::arg("m"), py::arg("k"),
      "The 2x2 certificate block for the deterministic witness of a cut");

  module.def(
      "certify_json",
      [](const std::vector<int>& parent, int threads) {
        return dicke::to_json(dicke::certify(make_index(parent), threads));
      },
      py::arg("parent"), py::arg("threads") = 1,
      "Certification report as a JSON document");

  module.def(
      "dense_dicke",
      [](const std::vector<int>& occupation, long long dense_limit) {
        dicke::oracle::DenseLimits limits;
        limits.max_vector_dim = dense_limit;
        return Eigen::VectorXcd(
            dicke::oracle::dense_dicke(make_index(occupation), limits)
                .amplitudes);
      },
      py::arg("occupation"),
      py::arg("dense_limit") = dicke::oracle::DenseLimits{}.max_vector_dim);

  module.def(
      "dense_partial_trace",
      [](const Eigen::VectorXcd& amplitudes, int d, int sites, int keep) {
        dicke::oracle::DenseVector state{d, sites, amplitudes};
        return Eigen::MatrixXcd(
            dicke::oracle::dense_partial_trace(state, keep).matrix);
      },
      py::arg("amplitudes"), py::arg("d"), py::arg("sites"), py::arg("keep"));

  module.def(
      "dense_partial_transpose",
      [](const Eigen::MatrixXcd& matrix, int d, int sites, int k) {
        dicke::oracle::DenseHermitian op{d, sites, matrix};
        return Eigen::MatrixXcd(
            dicke::oracle::dense_partial_transpose(op, k).matrix);
      },
      py::arg("matrix"), py::arg("d"), py::arg("sites"), py::arg("k"));

  module.def(
      "dense_min_eigenvalue",
      [](const Eigen::MatrixXcd& matrix, int d, int sites) {
        dicke::oracle::DenseHermitian op{d, sites, matrix};
        return dicke::oracle::dense_min_eigenvalue(op);
      },
      py::arg("matrix"), py::arg("d"), py::arg("sites"));

  module.def(
      "verify_schmidt_identity",
      [](const std::vector<int>& parent, int m) {
        const auto report =
            dicke::oracle::verify_schmidt_identity(make_index(parent), m);
        py::dict out;
        out["coefficients_all_one"] = report.coefficients_all_one;
        out["supports_disjoint"] = report.supports_disjoint;
        out["parent_covered"] = report.parent_covered;
        out["terms_contained"] = report.terms_contained;
        out["sum_matches"] = report.sum_matches;
        out["ok"] = report.ok();
        return out;
      },
      py::arg("parent"), py::arg("m"));
}
