#pragma once

#include <functional>
#include <string>
#include <vector>

namespace focal {

/// One named consistency check of the pipeline's constants and totals.
struct VerifyCheck {
  std::string name;
  std::function<bool()> run;
};

/// The full battery of checks: metric constants, strange-formula factors,
/// representation dimensions, slice Casimirs, spectrum totals, Clifford
/// identities, eigenvalue tables.
std::vector<VerifyCheck> verification_checks();

}  // namespace focal
