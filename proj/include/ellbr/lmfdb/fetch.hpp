#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ellbr/lmfdb/record.hpp"

namespace ellbr {

struct FetchOptions {
  bool offline = false;
  bool use_fixtures = true;
  std::string cache_dir;  // empty: no cache
  std::string endpoint = "https://www.lmfdb.org/api/ec_curvedata/";
  int timeout_seconds = 10;
  int retry_backoff_ms = 500;
};

// Defaults overridden by ELLBR_CACHE_DIR, ELLBR_LMFDB_URL and ELLBR_LMFDB_TIMEOUT.
FetchOptions fetch_options_from_environment();
std::string default_cache_dir();

// Bundled fixture, then the cache, then the API (one retry with backoff); network records are
// validated before they are cached.
CurveRecord fetch_curve(const std::string& label, const FetchOptions& options);

std::optional<CurveRecord> fixture_curve(const std::string& label);
std::vector<std::string> fixture_labels();

std::optional<CurveRecord> read_cached_curve(const std::string& dir, const std::string& label);
void write_cached_curve(const std::string& dir, const CurveRecord& record);

}  // namespace ellbr
