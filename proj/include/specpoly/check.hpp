#pragma once

#include <string>
#include <utility>

namespace specpoly {

/// Outcome of an identity check. Converts to bool; on failure `detail`
/// names the identity and where it broke.
struct CheckResult {
  bool ok = true;
  std::string detail;

  static CheckResult pass() { return {}; }
  static CheckResult fail(std::string why) { return {false, std::move(why)}; }

  explicit operator bool() const { return ok; }
};

}  // namespace specpoly
