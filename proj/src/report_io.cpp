// SPDX-License-Identifier: Apache-2.0
#include "dicke/report_io.hpp"

#include <nlohmann/json.hpp>

#include <cctype>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "dicke/version.hpp"

namespace dicke {

namespace {

using nlohmann::json;

constexpr const char* kSchemaName = "dicke-npt/certification-report";
constexpr int kSchemaVersion = 1;

json occupation_to_json(const OccupationIndex& index) {
  return json(index.entries());
}

OccupationIndex occupation_from_json(const json& value) {
  return OccupationIndex(value.get<std::vector<int>>());
}

json record_to_json(const CertificationRecord& record) {
  json witness{
      {"m_hat", occupation_to_json(record.witness.m_hat)},
      {"k_hat", occupation_to_json(record.witness.k_hat)},
      {"k_hat_prime", occupation_to_json(record.witness.k_hat_prime)},
      {"delta", record.witness.delta},
      {"positions",
       {{"plus", record.witness.pos_plus}, {"minus", record.witness.pos_minus}}},
  };
  json form{
      {"A", rational_to_string(record.form.A)},
      {"B", rational_to_string(record.form.B)},
      {"C_squared", rational_to_string(record.form.C_squared)},
      {"conditions",
       {{"minus_in_parent_set", record.form.minus_in_parent_set},
        {"minus_split_ok", record.form.minus_split_ok},
        {"plus_in_parent_set", record.form.plus_in_parent_set},
        {"plus_split_ok", record.form.plus_split_ok}}},
  };
  return json{
      {"m", record.m},
      {"k", record.k},
      {"witness", std::move(witness)},
      {"form", std::move(form)},
      {"discriminant", rational_to_string(record.discriminant)},
      {"witness_value", record.witness_value},
      {"spectral_min", record.spectral_min},
      {"is_npt", record.is_npt},
      {"spectral_npt", record.spectral_npt},
      {"time_ms", record.time_ms},
  };
}

CertificationRecord record_from_json(const json& value) {
  CertificationRecord record;
  record.m = value.at("m").get<int>();
  record.k = value.at("k").get<int>();

  const json& witness = value.at("witness");
  record.witness.m_hat = occupation_from_json(witness.at("m_hat"));
  record.witness.k_hat = occupation_from_json(witness.at("k_hat"));
  record.witness.k_hat_prime = occupation_from_json(witness.at("k_hat_prime"));
  record.witness.delta = witness.at("delta").get<std::vector<int>>();
  record.witness.pos_plus = witness.at("positions").at("plus").get<int>();
  record.witness.pos_minus = witness.at("positions").at("minus").get<int>();

  const json& form = value.at("form");
  record.form.A = rational_from_string(form.at("A").get<std::string>());
  record.form.B = rational_from_string(form.at("B").get<std::string>());
  record.form.C_squared =
      rational_from_string(form.at("C_squared").get<std::string>());
  const json& conditions = form.at("conditions");
  record.form.minus_in_parent_set =
      conditions.at("minus_in_parent_set").get<bool>();
  record.form.minus_split_ok = conditions.at("minus_split_ok").get<bool>();
  record.form.plus_in_parent_set =
      conditions.at("plus_in_parent_set").get<bool>();
  record.form.plus_split_ok = conditions.at("plus_split_ok").get<bool>();

  record.discriminant =
      rational_from_string(value.at("discriminant").get<std::string>());
  record.witness_value = value.at("witness_value").get<double>();
  record.spectral_min = value.at("spectral_min").get<double>();
  record.is_npt = value.at("is_npt").get<bool>();
  record.spectral_npt = value.at("spectral_npt").get<bool>();
  record.time_ms = value.at("time_ms").get<double>();
  return record;
}

Verdict verdict_from_string(const std::string& text) {
  if (text == verdict_string(Verdict::NptGmeAllSubsystems)) {
    return Verdict::NptGmeAllSubsystems;
  }
  if (text == verdict_string(Verdict::FullySeparable)) {
    return Verdict::FullySeparable;
  }
  throw std::invalid_argument("unknown verdict: '" + text + "'");
}

}  // namespace

std::string format_double(double value) { return json(value).dump(); }

OccupationIndex parse_occupation(const std::string& text) {
  std::string body = text;
  if (!body.empty() && body.front() == '(' && body.back() == ')') {
    body = body.substr(1, body.size() - 2);
  }
  std::vector<int> entries;
  std::istringstream in(body);
  std::string piece;
  while (std::getline(in, piece, ',')) {
    std::size_t used = 0;
    int entry;
    try {
      entry = std::stoi(piece, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed occupation list: '" + text + "'");
    }
    while (used < piece.size() && std::isspace(static_cast<unsigned char>(piece[used]))) {
      ++used;
    }
    if (used != piece.size()) {
      throw std::invalid_argument("malformed occupation list: '" + text + "'");
    }
    entries.push_back(entry);
  }
  if (entries.empty()) {
    throw std::invalid_argument("empty occupation list: '" + text + "'");
  }
  return OccupationIndex(std::move(entries));
}

std::string to_json(const CertificationReport& report, int indent) {
  json records = json::array();
  for (const auto& record : report.records) {
    records.push_back(record_to_json(record));
  }
  const json document{
      {"schema", kSchemaName},
      {"schema_version", kSchemaVersion},
      {"tool_version", kVersion},
      {"occupation", occupation_to_json(report.parent)},
      {"verdict", verdict_string(report.verdict)},
      {"records", std::move(records)},
  };
  return document.dump(indent) + "\n";
}

CertificationReport from_json(const std::string& text) {
  const json document = json::parse(text);
  if (document.at("schema").get<std::string>() != kSchemaName) {
    throw std::invalid_argument("not a certification report document");
  }
  if (document.at("schema_version").get<int>() != kSchemaVersion) {
    throw std::invalid_argument("unsupported schema version");
  }
  CertificationReport report{
      occupation_from_json(document.at("occupation")),
      verdict_from_string(document.at("verdict").get<std::string>()),
      {}};
  for (const json& value : document.at("records")) {
    report.records.push_back(record_from_json(value));
  }
  return report;
}

std::string to_csv(const CertificationReport& report) {
  std::ostringstream out;
  out << "m,k,discriminant,witness_value,spectral_min,is_npt\n";
  for (const auto& record : report.records) {
    out << record.m << ',' << record.k << ','
        << rational_to_string(record.discriminant) << ','
        << format_double(record.witness_value) << ','
        << format_double(record.spectral_min) << ','
        << (record.is_npt ? "true" : "false") << '\n';
  }
  return out.str();
}

std::string to_text(const CertificationReport& report) {
  std::ostringstream out;
  out << "state " << report.parent.to_string() << "\n"
      << "verdict: " << verdict_string(report.verdict) << "\n";
  if (report.records.empty()) return out.str();

  out << "\n"
      << std::left << std::setw(4) << "m" << std::setw(4) << "k"
      << std::setw(18) << "discriminant" << std::setw(24) << "witness_value"
      << std::setw(24) << "spectral_min" << "npt" << "\n";
  for (const auto& record : report.records) {
    out << std::left << std::setw(4) << record.m << std::setw(4) << record.k
        << std::setw(18) << rational_to_string(record.discriminant)
        << std::setw(24) << format_double(record.witness_value)
        << std::setw(24) << format_double(record.spectral_min)
        << (record.is_npt ? "yes" : "no") << "\n";
  }
  return out.str();
}

}  // namespace dicke
