// Copyright 2026 The seuclid Authors
// SPDX-License-Identifier: Apache-2.0

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cli.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw seuclid::Error(seuclid::Errc::IoError, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  using namespace seuclid;
  using cli::Json;

  CLI::App app{"S-Euclidean minima, coverings and certificates"};
  std::string config_path, command, output, cert_path, t, gap, denom_bound;
  std::size_t budget = 0;
  unsigned workers = 0;
  app.add_option("--config", config_path, "JSON run configuration");
  app.add_option("--command", command, "command to run")->required()->check(CLI::IsMember(cli::commands()));
  app.add_option("--t", t, "covering threshold, e.g. 21/100");
  app.add_option("--gap", gap, "target gap for M");
  app.add_option("--denom-bound", denom_bound, "largest denominator searched");
  app.add_option("--budget", budget, "maximum number of boxes processed");
  app.add_option("--workers", workers, "worker threads for coverings");
  app.add_option("--output,-o", output, "report path (default: standard output)");
  app.add_option("--cert", cert_path, "report or certificate to verify");
  CLI11_PARSE(app, argc, argv);

  Json cfg_echo;
  try {
    std::optional<Json> cert;
    if (!cert_path.empty()) {
      try {
        cert = Json::parse(slurp(cert_path));
      } catch (const Json::parse_error& e) {
        throw Error(Errc::ParseError, "cert: " + std::string(e.what()));
      }
    }
    std::string text;
    if (!config_path.empty()) {
      text = slurp(config_path);
    } else if (cert && cert->contains("config")) {
      text = (*cert)["config"].dump();
    } else {
      throw Error(Errc::InvalidArgument, "--config is required");
    }
    cli::RunConfig cfg = cli::parse_config(text);
    if (!t.empty()) cfg.params.t = parse_rational(t);
    if (!gap.empty()) cfg.params.gap = parse_rational(gap);
    if (!denom_bound.empty()) cfg.params.denom_bound = Integer(denom_bound);
    if (budget) cfg.params.budget = budget;
    if (workers) cfg.params.workers = workers;
    if (cfg.params.t && *cfg.params.t <= 0) throw Error(Errc::ValidationError, "--t: must be positive");
    if (cfg.params.gap <= 0) throw Error(Errc::ValidationError, "--gap: must be positive");
    cfg_echo = cfg.echo();

    const auto start = std::chrono::steady_clock::now();
    cli::Outcome out = cli::run_command(cfg, command, cert ? &*cert : nullptr);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    Json timing;
    timing["seconds"] = secs;
    timing["workers"] = cfg.params.workers;
    cli::emit_report(cli::finalize(out.doc, timing), output);
    return out.exit_code;
  } catch (const Error& e) {
    std::cerr << "seuclid: " << e.what() << "\n";
    Json doc;
    doc["command"] = command;
    if (!cfg_echo.is_null()) doc["config"] = cfg_echo;
    doc["error"] = {{"code", std::string(errc_name(e.code()))}, {"message", e.what()}};
    try {
      cli::emit_report(cli::finalize(doc, Json::object()), output);
    } catch (const Error&) {
    }
    return cli::kError;
  } catch (const std::exception& e) {
    std::cerr << "seuclid: " << e.what() << "\n";
    return cli::kError;
  }
}
