// SPDX-License-Identifier: Apache-2.0
#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "dicke/dicke_algebra.hpp"
#include "dicke/npt_witness.hpp"
#include "dicke/oracle.hpp"
#include "dicke/report_io.hpp"
#include "dicke/version.hpp"

namespace {

using nlohmann::json;

struct GlobalOptions {
  std::string format;
  std::string output;
  long long dense_limit = dicke::oracle::DenseLimits{}.max_vector_dim;
  int threads = 1;
};

dicke::oracle::DenseLimits dense_limits(const GlobalOptions& options) {
  dicke::oracle::DenseLimits limits;
  limits.max_vector_dim = options.dense_limit;
  return limits;
}

void emit(const GlobalOptions& options, const std::string& text) {
  if (options.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(options.output);
  if (!out) throw std::runtime_error("cannot open '" + options.output + "'");
  out << text;
}

std::string join_csv_field(const dicke::OccupationIndex& index) {
  std::string body;
  for (int i = 0; i < index.dimension(); ++i) {
    if (i > 0) body += ',';
    body += std::to_string(index[i]);
  }
  return '"' + body + '"';
}

int run_certify(const GlobalOptions& options, const std::string& occupation) {
  const auto parent = dicke::parse_occupation(occupation);
  const auto report = dicke::certify(parent, options.threads);
  if (options.format == "json") {
    emit(options, dicke::to_json(report));
  } else if (options.format == "csv") {
    emit(options, dicke::to_csv(report));
  } else {
    emit(options, dicke::to_text(report));
  }
  return report.verdict == dicke::Verdict::FullySeparable ? 2 : 0;
}

int run_reduce(const GlobalOptions& options, const std::string& occupation,
               int m) {
  const auto parent = dicke::parse_occupation(occupation);
  const auto state = dicke::reduced_state(parent, m);

  if (options.format == "json") {
    json weights = json::array();
    for (int i = 0; i < state.support.size(); ++i) {
      weights.push_back({{"index", state.support[i].entries()},
                         {"weight", dicke::rational_to_string(state.weights[i])}});
    }
    const json document{{"occupation", parent.entries()},
                        {"m", m},
                        {"weights", std::move(weights)}};
    emit(options, document.dump(2) + "\n");
  } else if (options.format == "csv") {
    std::ostringstream out;
    out << "index,weight\n";
    for (int i = 0; i < state.support.size(); ++i) {
      out << join_csv_field(state.support[i]) << ','
          << dicke::rational_to_string(state.weights[i]) << '\n';
    }
    emit(options, out.str());
  } else {
    std::ostringstream out;
    for (int i = 0; i < state.support.size(); ++i) {
      if (i > 0) out << ", ";
      out << state.support[i].to_string() << ": "
          << dicke::rational_to_string(state.weights[i]);
    }
    out << "\n";
    emit(options, out.str());
  }
  return 0;
}

int run_ppt(const GlobalOptions& options, const std::string& occupation, int m,
            int k) {
  const auto parent = dicke::parse_occupation(occupation);
  const auto transposed =
      dicke::partial_transpose(dicke::bipartite_operator(parent, m, k));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(transposed.to_dense(),
                                                        Eigen::EigenvaluesOnly);
  const auto& values = solver.eigenvalues();

  if (options.format == "json") {
    json spectrum = json::array();
    for (Eigen::Index i = 0; i < values.size(); ++i) spectrum.push_back(values(i));
    const json document{{"occupation", parent.entries()},
                        {"m", m},
                        {"k", k},
                        {"spectrum", std::move(spectrum)},
                        {"spectral_min", values(0)}};
    emit(options, document.dump(2) + "\n");
  } else if (options.format == "csv") {
    std::ostringstream out;
    out << "eigenvalue\n";
    for (Eigen::Index i = 0; i < values.size(); ++i) {
      out << dicke::format_double(values(i)) << '\n';
    }
    emit(options, out.str());
  } else {
    std::ostringstream out;
    for (Eigen::Index i = 0; i < values.size(); ++i) {
      out << dicke::format_double(values(i)) << '\n';
    }
    emit(options, out.str());
  }
  return 0;
}

int run_enumerate(const GlobalOptions& options, int dimension, int norm,
                  const std::string& bound) {
  std::vector<dicke::OccupationIndex> members;
  if (bound.empty()) {
    members = dicke::enumerate_full(dimension, norm);
  } else {
    members = dicke::enumerate_restricted(norm, dicke::parse_occupation(bound));
  }

  if (options.format == "json") {
    json indices = json::array();
    for (const auto& member : members) indices.push_back(member.entries());
    const json document{{"count", members.size()},
                        {"indices", std::move(indices)}};
    emit(options, document.dump(2) + "\n");
  } else if (options.format == "csv") {
    std::ostringstream out;
    out << "occupation\n";
    for (const auto& member : members) out << join_csv_field(member) << '\n';
    emit(options, out.str());
  } else {
    std::ostringstream out;
    for (const auto& member : members) out << member.to_string() << '\n';
    emit(options, out.str());
  }
  return 0;
}

struct OracleCheck {
  std::string name;
  long long cases = 0;
  double max_error = 0;
  bool pass = true;
};

int run_oracle_check(const GlobalOptions& options, int max_d, int max_n) {
  const auto limits = dense_limits(options);
  OracleCheck reduction{"reduction matches dense partial trace"};
  OracleCheck spectra{"transposed spectra match"};
  OracleCheck identity{"subsystem expansion is exact"};
  OracleCheck singular{"singular values match weights"};
  OracleCheck rank{"cut rank matches restricted set size"};

  for (int d = 2; d <= max_d; ++d) {
    for (int n = 2; n <= max_n; ++n) {
      for (const auto& parent : dicke::enumerate_full(d, n)) {
        const auto dense_state = dicke::oracle::dense_dicke(parent, limits);
        for (int m = 1; m <= n; ++m) {
          const auto traced =
              dicke::oracle::dense_partial_trace(dense_state, m, limits);

          const auto embedded =
              dicke::embed_dense(dicke::reduced_state(parent, m), limits);
          const double trace_error =
              (embedded.matrix - traced.matrix).cwiseAbs().maxCoeff();
          reduction.max_error = std::max(reduction.max_error, trace_error);
          if (trace_error > 1e-12) reduction.pass = false;
          ++reduction.cases;

          const auto report = dicke::oracle::verify_schmidt_identity(
              parent, m, limits);
          if (!report.ok()) identity.pass = false;
          ++identity.cases;

          if (m < n) {
            const auto values = dicke::oracle::dense_schmidt_singular_values(
                dense_state, m, limits);
            std::vector<double> expected;
            for (const auto& part : dicke::enumerate_restricted(m, parent)) {
              expected.push_back(std::sqrt(dicke::to_double(
                  dicke::schmidt_coefficient(parent, part))));
            }
            std::sort(expected.begin(), expected.end(), std::greater<>());
            expected.resize(values.size(), 0.0);
            double sv_error = 0;
            for (std::size_t i = 0; i < values.size(); ++i) {
              sv_error = std::max(sv_error, std::abs(values[i] - expected[i]));
            }
            singular.max_error = std::max(singular.max_error, sv_error);
            if (sv_error > 1e-10) singular.pass = false;
            ++singular.cases;

            const auto significant = std::count_if(
                values.begin(), values.end(),
                [](double v) { return v > 1e-10; });
            if (significant !=
                static_cast<long long>(
                    dicke::enumerate_restricted(m, parent).size())) {
              rank.pass = false;
            }
            ++rank.cases;
          }

          if (m < 2) continue;
          for (int k = 1; k <= m - 1; ++k) {
            const auto pair_form = dicke::partial_transpose(
                dicke::bipartite_operator(parent, m, k));
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> pair_solver(
                pair_form.to_dense(), Eigen::EigenvaluesOnly);
            const auto dense_form =
                dicke::oracle::dense_partial_transpose(traced, k);
            auto dense_values = dicke::oracle::dense_spectrum(dense_form, limits);

            std::vector<double> pair_values(
                pair_solver.eigenvalues().data(),
                pair_solver.eigenvalues().data() +
                    pair_solver.eigenvalues().size());
            pair_values.resize(dense_values.size(), 0.0);
            std::sort(pair_values.begin(), pair_values.end());
            std::sort(dense_values.begin(), dense_values.end());
            double spec_error = 0;
            for (std::size_t i = 0; i < dense_values.size(); ++i) {
              spec_error = std::max(spec_error,
                                    std::abs(pair_values[i] - dense_values[i]));
            }
            spectra.max_error = std::max(spectra.max_error, spec_error);
            if (spec_error > 1e-10) spectra.pass = false;
            ++spectra.cases;
          }
        }
      }
    }
  }

  const std::vector<OracleCheck> checks{reduction, spectra, identity, singular,
                                        rank};
  const bool ok =
      std::all_of(checks.begin(), checks.end(),
                  [](const OracleCheck& check) { return check.pass; });

  if (options.format == "json") {
    json entries = json::array();
    for (const auto& check : checks) {
      entries.push_back({{"name", check.name},
                         {"cases", check.cases},
                         {"max_error", check.max_error},
                         {"pass", check.pass}});
    }
    const json document{{"max_d", max_d},
                        {"max_n", max_n},
                        {"checks", std::move(entries)},
                        {"ok", ok}};
    emit(options, document.dump(2) + "\n");
  } else {
    std::ostringstream out;
    for (const auto& check : checks) {
      out << (check.pass ? "pass" : "FAIL") << "  " << check.name << " ("
          << check.cases << " cases, max error " << check.max_error << ")\n";
    }
    emit(options, out.str());
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact negativity certificates for subsystems of symmetric "
               "qudit states"};
  app.set_version_flag("--version", dicke::kVersion);
  app.require_subcommand(1);

  GlobalOptions options;
  if (const char* env = std::getenv("DICKE_DENSE_LIMIT")) {
    try {
      options.dense_limit = std::stoll(env);
    } catch (const std::exception&) {
      std::cerr << "error: DICKE_DENSE_LIMIT is not a number\n";
      return 1;
    }
  }
  app.add_option("--format", options.format,
                 "Output format (certify defaults to json, others to text)")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--output", options.output, "Write output to a file");
  app.add_option("--dense-limit", options.dense_limit,
                 "Largest dense state size the oracle may allocate")
      ->capture_default_str();
  app.add_option("--threads", options.threads,
                 "Worker threads for certification (0 = all cores)")
      ->capture_default_str();

  std::string occupation;
  int m = 0;
  int k = 0;
  int dimension = 0;
  int norm = 0;
  std::string bound;
  int max_d = 3;
  int max_n = 6;

  auto* certify = app.add_subcommand(
      "certify", "Certify every bipartite cut of every subsystem");
  certify->fallthrough();
  certify->add_option("--occupation", occupation, "Occupation numbers, e.g. 1,2")
      ->required();

  auto* reduce =
      app.add_subcommand("reduce", "Weights of a subsystem reduction");
  reduce->fallthrough();
  reduce->add_option("--occupation", occupation, "Occupation numbers")
      ->required();
  reduce->add_option("-m,--subsystem", m, "Subsystem size")->required();

  auto* ppt = app.add_subcommand(
      "ppt", "Spectrum of the partially transposed reduction");
  ppt->fallthrough();
  ppt->add_option("--occupation", occupation, "Occupation numbers")->required();
  ppt->add_option("-m,--subsystem", m, "Subsystem size")->required();
  ppt->add_option("-k,--split", k, "Sites transposed")->required();

  auto* enumerate =
      app.add_subcommand("enumerate", "List occupation indices of a given norm");
  enumerate->fallthrough();
  enumerate->add_option("-d,--dimension", dimension, "Number of levels");
  enumerate->add_option("-n,--norm", norm, "Total occupation")->required();
  enumerate->add_option("--bound", bound,
                        "Componentwise bound; lists the restricted set");

  auto* oracle_check = app.add_subcommand(
      "oracle-check", "Cross-validate against the dense representation");
  oracle_check->fallthrough();
  oracle_check->add_option("--max-d", max_d, "Largest local dimension")
      ->capture_default_str();
  oracle_check->add_option("--max-n", max_n, "Largest particle count")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (options.format.empty()) {
      options.format = certify->parsed() ? "json" : "text";
    }
    if (certify->parsed()) return run_certify(options, occupation);
    if (reduce->parsed()) return run_reduce(options, occupation, m);
    if (ppt->parsed()) return run_ppt(options, occupation, m, k);
    if (enumerate->parsed()) {
      if (bound.empty() && dimension == 0) {
        throw std::invalid_argument("enumerate needs -d or --bound");
      }
      return run_enumerate(options, dimension, norm, bound);
    }
    if (oracle_check->parsed()) return run_oracle_check(options, max_d, max_n);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
