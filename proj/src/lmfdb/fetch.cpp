#include "ellbr/lmfdb/fetch.hpp"

#include <unistd.h>

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

#include "httplib.h"

namespace ellbr {

const std::map<std::string, std::string>& fixture_sources();

namespace fs = std::filesystem;

std::string default_cache_dir() {
  if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return std::string(x) + "/ellbrauer";
  if (const char* h = std::getenv("HOME"); h && *h) return std::string(h) + "/.cache/ellbrauer";
  return ".ellbrauer-cache";
}

FetchOptions fetch_options_from_environment() {
  FetchOptions o;
  o.cache_dir = default_cache_dir();
  if (const char* c = std::getenv("ELLBR_CACHE_DIR"); c && *c) o.cache_dir = c;
  if (const char* u = std::getenv("ELLBR_LMFDB_URL"); u && *u) o.endpoint = u;
  if (const char* t = std::getenv("ELLBR_LMFDB_TIMEOUT"); t && *t) o.timeout_seconds = std::max(1, std::atoi(t));
  return o;
}

std::vector<std::string> fixture_labels() {
  std::vector<std::string> out;
  for (auto& [label, text] : fixture_sources()) out.push_back(label);
  return out;
}

std::optional<CurveRecord> fixture_curve(const std::string& label) {
  auto it = fixture_sources().find(label);
  if (it == fixture_sources().end()) return std::nullopt;
  return parse_curve_record(nlohmann::json::parse(it->second), CurveSource::fixture, label);
}

namespace {

fs::path cache_path(const std::string& dir, const std::string& label) {
  if (!valid_curve_label(label)) throw std::invalid_argument("invalid curve label '" + label + "'");
  return fs::path(dir) / (label + ".json");
}

}  // namespace

std::optional<CurveRecord> read_cached_curve(const std::string& dir, const std::string& label) {
  if (dir.empty()) return std::nullopt;
  fs::path p = cache_path(dir, label);
  std::ifstream in(p);
  if (!in) return std::nullopt;
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw DataIntegrityError("corrupt cache entry " + p.string() + ": " + e.what());
  }
  return parse_curve_record(j, CurveSource::cache, label);
}

void write_cached_curve(const std::string& dir, const CurveRecord& record) {
  if (dir.empty()) return;
  fs::path target = cache_path(dir, record.label);
  fs::create_directories(target.parent_path());
  static std::atomic<long> counter{0};
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    out << record.to_json().dump() << "\n";
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
  }
  fs::rename(tmp, target);
}

namespace {

struct Endpoint {
  std::string origin, path;
};

Endpoint split_endpoint(const std::string& url) {
  auto scheme = url.find("://");
  if (scheme == std::string::npos) throw std::invalid_argument("endpoint must be an http(s) URL: " + url);
  auto slash = url.find('/', scheme + 3);
  if (slash == std::string::npos) return {url, "/"};
  return {url.substr(0, slash), url.substr(slash)};
}

CurveRecord fetch_network(const std::string& label, const FetchOptions& options) {
  Endpoint ep = split_endpoint(options.endpoint);
  std::string key = label.find('.') == std::string::npos ? "Clabel" : "lmfdb_label";
  std::string path = ep.path + "?" + key + "=" + label + "&_format=json";
  std::string failure;
  for (int attempt = 0; attempt < 2; ++attempt) {
    if (attempt > 0) std::this_thread::sleep_for(std::chrono::milliseconds(options.retry_backoff_ms));
    httplib::Client client(ep.origin);
    client.set_connection_timeout(options.timeout_seconds, 0);
    client.set_read_timeout(options.timeout_seconds, 0);
    client.set_follow_location(true);
    auto res = client.Get(path);
    if (!res) {
      failure = httplib::to_string(res.error());
      continue;
    }
    if (res->status >= 500) {
      failure = "HTTP " + std::to_string(res->status);
      continue;
    }
    if (res->status != 200) throw DataIntegrityError(label + ": HTTP " + std::to_string(res->status) + " from " + options.endpoint);
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(res->body);
    } catch (const nlohmann::json::exception& e) {
      throw DataIntegrityError(label + ": response is not JSON: " + e.what());
    }
    if (j.is_object() && j.contains("data") && j["data"].is_array() && j["data"].empty())
      throw DataIntegrityError(label + ": no such curve at " + options.endpoint);
    return parse_curve_record(j, CurveSource::network, label);
  }
  throw OfflineError("cannot fetch " + label + " from " + options.endpoint + " (" + failure + ") and it is not cached");
}

}  // namespace

CurveRecord fetch_curve(const std::string& label, const FetchOptions& options) {
  if (!valid_curve_label(label)) throw std::invalid_argument("invalid curve label '" + label + "'");
  if (options.use_fixtures)
    if (auto f = fixture_curve(label)) return *f;
  if (auto c = read_cached_curve(options.cache_dir, label)) return *c;
  if (options.offline) throw OfflineError(label + " is neither bundled nor cached and the network is disabled");
  CurveRecord r = fetch_network(label, options);
  write_cached_curve(options.cache_dir, r);
  return r;
}

}  // namespace ellbr
