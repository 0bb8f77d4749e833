#include <atomic>
#include <filesystem>
#include <fstream>
#include <thread>

#include "doctest.h"
#include "ellbr/lmfdb/fetch.hpp"
#include "ellbr/lmfdb/report.hpp"
#include "httplib.h"

using namespace ellbr;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
  fs::path d = fs::temp_directory_path() / ("ellbr-test-" + name + "-" + std::to_string(::getpid()));
  fs::remove_all(d);
  return d;
}

// A stand-in for the curve API with a few canned answers.
struct FakeApi {
  httplib::Server server;
  std::thread thread;
  int port = 0;
  std::atomic<int> requests{0};
  std::atomic<int> flaky_calls{0};

  FakeApi() {
    server.Get("/api/ec_curvedata/", [this](const httplib::Request& req, httplib::Response& res) {
      ++requests;
      std::string label = req.get_param_value("Clabel");
      std::string body;
      if (label == "37a1")
        body = R"({"data": [{"Clabel": "37a1", "ainvs": [0, 0, 1, -1, 0], "signD": 1, "absD": 37, "conductor": 37}]})";
      else if (label == "43a1") {
        if (flaky_calls++ == 0) {
          res.status = 503;
          return;
        }
        body = R"({"data": [{"Clabel": "43a1", "ainvs": [0, 1, 1, 0, 0], "disc": -43, "conductor": 43}]})";
      } else if (label == "14a1")
        body = R"({"data": [{"Clabel": "14a1", "ainvs": [1, 0, 1, 4], "disc": -21952}]})";
      else if (label == "19a1")
        body = R"({"data": [{"Clabel": "19a1", "ainvs": [0, 1, 1, -9, -15], "disc": 19}]})";
      else if (label == "20a1")
        body = R"({"data": [{"Clabel": "20a1", "ainvs": [0, 1, 0, 4, 1.5], "disc": -6400}]})";
      else if (label == "21a1")
        body = R"({"data": [{"Clabel": "26b1", "ainvs": [1, -1, 1, -3, 3], "disc": -2548}]})";
      else
        body = R"({"data": []})";
      res.set_content(body, "application/json");
    });
    port = server.bind_to_any_port("127.0.0.1");
    thread = std::thread([this] { server.listen_after_bind(); });
    server.wait_until_ready();
  }
  ~FakeApi() {
    server.stop();
    thread.join();
  }

  FetchOptions options(const fs::path& cache) const {
    FetchOptions o;
    o.cache_dir = cache.string();
    o.endpoint = "http://127.0.0.1:" + std::to_string(port) + "/api/ec_curvedata/";
    o.timeout_seconds = 2;
    o.retry_backoff_ms = 10;
    o.use_fixtures = false;
    return o;
  }
};

}  // namespace

TEST_CASE("curve labels") {
  CHECK(valid_curve_label("11a3"));
  CHECK(valid_curve_label("11.a3"));
  CHECK(valid_curve_label("5077a1"));
  CHECK_FALSE(valid_curve_label("11"));
  CHECK_FALSE(valid_curve_label("../etc/passwd"));
  CHECK_THROWS_AS(fetch_curve("a/b", FetchOptions{}), std::invalid_argument);
}

TEST_CASE("bundled fixtures") {
  CHECK(fixture_labels() == std::vector<std::string>{"11a3", "15a8", "53a1"});
  const std::map<std::string, long> disc{{"11a3", -11}, {"15a8", -15}, {"53a1", -53}};
  for (auto& [label, d] : disc) {
    auto r = fixture_curve(label);
    REQUIRE(r);
    CHECK(r->source == CurveSource::fixture);
    CHECK(r->discriminant == d);
    CHECK(r->curve().discriminant() == d);
    CHECK(r->conductor == Integer(-d));
  }
  CHECK_FALSE(fixture_curve("37a1"));
  FetchOptions o;
  o.offline = true;
  CHECK(fetch_curve("53a1", o).ainvs[3] == 0);
}

TEST_CASE("record validation") {
  using nlohmann::json;
  CHECK(parse_curve_record(json::parse(R"({"label": "37a1", "ainvs": ["0","0","1","-1","0"]})"), CurveSource::network).discriminant == 37);
  CHECK_THROWS_AS(parse_curve_record(json::parse(R"({"label": "37a1", "ainvs": [0, 0, 1, -1]})"), CurveSource::network),
                  DataIntegrityError);
  CHECK_THROWS_AS(parse_curve_record(json::parse(R"({"label": "37a1", "ainvs": [0, 0, 1, -1, 0], "disc": -37})"), CurveSource::network),
                  DataIntegrityError);
  CHECK_THROWS_AS(parse_curve_record(json::parse(R"({"label": "37a1", "ainvs": [0, 0, 1, -1, 0]})"), CurveSource::network, "11a1"),
                  DataIntegrityError);
  // Singular: y^2 = x^3.
  CHECK_THROWS_AS(parse_curve_record(json::parse(R"({"label": "37a1", "ainvs": [0, 0, 0, 0, 0]})"), CurveSource::network),
                  DataIntegrityError);
}

TEST_CASE("network fetch, cache and round trip") {
  FakeApi api;
  fs::path cache = fresh_dir("cache");
  FetchOptions o = api.options(cache);

  CurveRecord first = fetch_curve("37a1", o);
  CHECK(first.source == CurveSource::network);
  CHECK(first.discriminant == 37);
  CHECK(first.conductor == Integer(37));
  CHECK(fs::exists(cache / "37a1.json"));
  CHECK(api.requests == 1);

  CurveRecord second = fetch_curve("37a1", o);
  CHECK(second.source == CurveSource::cache);
  CHECK(second.same_data(first));
  CHECK(second.to_json() == first.to_json());
  CHECK(api.requests == 1);

  FetchOptions off = o;
  off.offline = true;
  CHECK(fetch_curve("37a1", off).same_data(first));

  // No leftover temporary files from the atomic write.
  int files = 0;
  for (auto& e : fs::directory_iterator(cache)) files += e.is_regular_file();
  CHECK(files == 1);
  fs::remove_all(cache);
}

TEST_CASE("one retry after a server error") {
  FakeApi api;
  fs::path cache = fresh_dir("retry");
  CurveRecord r = fetch_curve("43a1", api.options(cache));
  CHECK(r.discriminant == -43);
  CHECK(api.requests == 2);
  fs::remove_all(cache);
}

TEST_CASE("bad network data is rejected and never cached") {
  FakeApi api;
  fs::path cache = fresh_dir("bad");
  FetchOptions o = api.options(cache);
  CHECK_THROWS_AS(fetch_curve("14a1", o), DataIntegrityError);  // four ainvs
  CHECK_THROWS_AS(fetch_curve("19a1", o), DataIntegrityError);  // stored discriminant is wrong
  CHECK_THROWS_AS(fetch_curve("20a1", o), DataIntegrityError);  // non-integral ainvs
  CHECK_THROWS_AS(fetch_curve("21a1", o), DataIntegrityError);  // another curve's record
  CHECK_THROWS_AS(fetch_curve("99a1", o), DataIntegrityError);  // unknown label
  bool cached_anything = fs::exists(cache) && !fs::is_empty(cache);
  CHECK_FALSE(cached_anything);

  fs::create_directories(cache);
  std::ofstream(cache / "37a1.json") << "{not json";
  CHECK_THROWS_AS(fetch_curve("37a1", o), DataIntegrityError);
  fs::remove_all(cache);
}

TEST_CASE("offline errors") {
  fs::path cache = fresh_dir("offline");
  FetchOptions o;
  o.cache_dir = cache.string();
  o.offline = true;
  CHECK_THROWS_AS(fetch_curve("37a1", o), OfflineError);

  // Nothing listens on the port of a server that has been shut down.
  int port;
  {
    FakeApi api;
    port = api.port;
  }
  o.offline = false;
  o.use_fixtures = false;
  o.endpoint = "http://127.0.0.1:" + std::to_string(port) + "/api/ec_curvedata/";
  o.timeout_seconds = 1;
  o.retry_backoff_ms = 10;
  CHECK_THROWS_AS(fetch_curve("11a3", o), OfflineError);
  CHECK_FALSE(fs::exists(cache / "11a3.json"));
  fs::remove_all(cache);
}

TEST_CASE("reproduction report") {
  FetchOptions o;
  o.offline = true;
  Report all = reproduce_report("all", o);
  CHECK(all.ok());
  CHECK(all.items.size() == 28);
  for (auto& item : all.items) CHECK_MESSAGE(item.pass(), item.scope << ": " << item.item);
  CHECK(reproduce_report("all", o).text() == all.text());
  CHECK(reproduce_report("all", o).to_json().dump() == all.to_json().dump());

  Report p2 = reproduce_report("p2", o);
  CHECK(p2.items.size() == 11);
  CHECK(p2.items.back().computed == "0");
  CHECK(reproduce_report("p3", o).items.size() == 4);
  CHECK(reproduce_report("fq", o, 49).items.at(0).computed == "Z/12");
  CHECK_THROWS_AS(reproduce_report("p5", o), std::invalid_argument);

  Report broken = p2;
  broken.items[1].computed = "+1";
  CHECK_FALSE(broken.ok());
  CHECK(broken.text().find("FAIL") != std::string::npos);
  CHECK(broken.to_json()["ok"] == false);
}
