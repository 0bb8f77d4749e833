#pragma once

#include <string>
#include <vector>

#include "ellbr/lmfdb/fetch.hpp"
#include "json.hpp"

namespace ellbr {

struct ReportItem {
  std::string scope, item, expected, computed;
  bool pass() const { return expected == computed; }
};

struct Report {
  std::string scope;
  std::vector<ReportItem> items;
  bool ok() const;
  std::string text() const;
  nlohmann::json to_json() const;
};

// Scopes: all, p2, p3, fq, zp. q = 0 runs the finite-field scope for q in {3, 5, 7, 9, 25}.
Report reproduce_report(const std::string& scope, const FetchOptions& fetch, long q = 0);

// The three witness curves at 2.
std::vector<std::string> witness_labels();

}  // namespace ellbr
