// Copyright 2026 The seuclid Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "seuclid/analysis.hpp"
#include "seuclid/forms.hpp"

namespace seuclid::cli {

using Json = nlohmann::json;

inline constexpr int kFormatVersion = 1;

enum ExitCode : int { kOk = 0, kError = 1, kUndecided = 2, kReplayFailure = 3 };

struct PrimeSpec {
  Integer p;
  std::optional<std::vector<int>> places;  // indices into places_above(p)
};

struct Params {
  std::optional<Rational> t;
  Rational gap = Rational(1, 100);
  Integer denom_bound = 20;
  std::size_t budget = 100000;
  unsigned workers = 1;
};

struct RunConfig {
  ZPoly poly;
  std::vector<PrimeSpec> primes;
  std::vector<FieldElement> ideal_gens;
  std::optional<std::vector<FieldElement>> unit_gens;
  std::optional<FieldElement> xi;
  std::optional<BinaryQuadraticForm> form;
  std::optional<RationalPoint> point;
  Params params;

  // Built objects.
  std::shared_ptr<NumberField> field;
  std::shared_ptr<FundamentalDomain> domain;
  std::shared_ptr<FractionalIdeal> ideal;

  Json echo() const;
};

// Parses and validates; errors carry the JSON path of the offending field.
RunConfig parse_config(const std::string& text);

inline const std::vector<std::string>& commands() {
  static const std::vector<std::string> names{"info", "snorm", "m",    "search", "cover",      "M",
                                              "decide", "form", "orbit", "dual",  "verify-cert"};
  return names;
}

struct Outcome {
  Json doc;
  int exit_code = kOk;
};

// `cert` is the parsed report or certificate document for verify-cert.
Outcome run_command(const RunConfig& cfg, const std::string& command, const Json* cert = nullptr);

// Fills format version and digest; timing goes to its own section.
Json finalize(Json doc, const Json& timing);

// FNV-1a 64 over the canonical serialization of everything except timing/digest.
std::string digest(const Json& doc);

std::string serialize(const Json& doc);
// Writes to `path` or standard output when path is empty or "-".
void emit_report(const Json& doc, const std::string& path);

Json certificate_to_json(const FundamentalDomain& d, const CoveringCertificate& cert);
CoveringCertificate certificate_from_json(const FundamentalDomain& d, const Json& j);

Json element_to_json(const FieldElement& x);
FieldElement element_from_json(const Json& j, int degree, const std::string& path);

}  // namespace seuclid::cli
