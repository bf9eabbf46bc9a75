// Command-line front end: spectrum reports for the three focal manifolds and
// the consistency-check battery, in text or JSON.

#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "focal/report.hpp"
#include "focal/verify.hpp"

namespace {

focal::FocalSpaceId parse_space(const std::string& s) {
  if (s == "cp2") return focal::FocalSpaceId::CP2;
  if (s == "hp2") return focal::FocalSpaceId::HP2;
  return focal::FocalSpaceId::OP2;
}

int run_spectrum(const std::string& space_name, const std::string& format,
                 const std::string& margin_str, long long dim_guard) {
  focal::Rat margin;
  try {
    margin = focal::parse_rational(margin_str);
  } catch (const std::invalid_argument&) {
    std::cerr << "error: --margin must be a rational like 8 or 16/3\n";
    return 2;
  }
  if (margin < focal::Rat(0)) {
    std::cerr << "error: --margin must be nonnegative\n";
    return 2;
  }
  const focal::FocalSpace& space = focal::focal_space(parse_space(space_name));
  const focal::SpectrumReport report = focal::compute_spectrum(space, margin, dim_guard);
  if (format == "json")
    std::cout << focal::report_to_json(report).dump(2) << "\n";
  else
    std::cout << focal::report_to_text(report);
  return 0;
}

int run_verify(bool as_json) {
  const auto checks = focal::verification_checks();
  nlohmann::ordered_json results = nlohmann::ordered_json::array();
  int failures = 0;
  for (const auto& check : checks) {
    const bool ok = check.run();
    if (!ok) ++failures;
    if (as_json) {
      results.push_back({{"name", check.name}, {"pass", ok}});
    } else {
      std::cout << (ok ? "OK   " : "FAIL ") << check.name << "\n";
    }
  }
  if (as_json) {
    nlohmann::ordered_json j;
    j["checks"] = std::move(results);
    j["passed"] = static_cast<int>(checks.size()) - failures;
    j["failed"] = failures;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << (checks.size() - failures) << "/" << checks.size() << " checks passed\n";
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Index, nullity and Killing nullity of the cubic focal manifolds"};
  app.require_subcommand(1);

  std::string space_name;
  std::string format = "text";
  std::string margin = "0";
  long long dim_guard = 100000;
  CLI::App* spectrum = app.add_subcommand("spectrum", "Jacobi-operator spectrum report");
  spectrum->add_option("--space", space_name, "Focal manifold")
      ->required()
      ->check(CLI::IsMember({"cp2", "hp2", "op2"}));
  spectrum->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  spectrum->add_option("--margin", margin,
                       "Extra Casimir headroom above 2d (rational, e.g. 16/3)");
  spectrum->add_option("--dim-guard", dim_guard, "Representation dimension guard")
      ->check(CLI::PositiveNumber);

  bool verify_json = false;
  CLI::App* verify = app.add_subcommand("verify", "Run the consistency-check battery");
  verify->add_flag("--json", verify_json, "Machine-readable pass/fail list");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (spectrum->parsed()) return run_spectrum(space_name, format, margin, dim_guard);
    return run_verify(verify_json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
