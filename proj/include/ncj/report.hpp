#pragma once

#include "ncj/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ncj {

/// Pass/fail verdict for one identity or relation battery. On failure the
/// witness names the first offending basis tuple (lexicographic order) and
/// the exact residual, so reports are reproducible goldens.
struct CheckReport {
  bool passed = true;
  std::string identity_name;

  struct Witness {
    std::vector<std::size_t> indices;
    Vec residual;
    std::string detail;
  };
  std::optional<Witness> witness;

  static CheckReport pass(std::string name) {
    CheckReport r;
    r.passed = true;
    r.identity_name = std::move(name);
    return r;
  }

  static CheckReport fail(std::string name, std::vector<std::size_t> idx, Vec residual,
                          std::string detail = {}) {
    CheckReport r;
    r.passed = false;
    r.identity_name = std::move(name);
    r.witness = Witness{std::move(idx), std::move(residual), std::move(detail)};
    return r;
  }

  std::string summary() const {
    std::string s = identity_name + ": " + (passed ? "PASS" : "FAIL");
    if (witness) {
      s += " at (";
      for (std::size_t i = 0; i < witness->indices.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(witness->indices[i]);
      }
      s += ")";
      if (!witness->detail.empty()) s += " " + witness->detail;
    }
    return s;
  }
};

}  // namespace ncj
