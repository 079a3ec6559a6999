#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "potmono/cli.hpp"

using namespace potmono;
using json = nlohmann::json;

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "potmono");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int status = cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(POTMONO_TEST_DATA) + "/" + name; }

json structured(const std::string& command, const std::string& spec, const std::string& window = "-20:20") {
  auto r = run_cli({command, "--spec", data(spec), "--format", "structured", "--no-timestamp", "--window", window});
  return json::parse(r.out);
}

}  // namespace

TEST_CASE("reorder on translation by 2") {
  auto r = run_cli({"reorder", "--spec", data("translate2.spec"), "--format", "structured", "--no-timestamp"});
  CHECK(r.status == 0);
  auto j = json::parse(r.out);
  CHECK(j["schema_version"] == 1);
  CHECK(j["command"] == "reorder");
  CHECK(j["status"] == "ok");
  CHECK(j["result"]["k"] == "2");
  CHECK_FALSE(j["result"]["sample_labels"].empty());
  for (const auto& v : j["verification"]) CHECK(v["passed"] == true);
  CHECK(j["input"]["digest"].get<std::string>().rfind("sha256:", 0) == 0);
  CHECK_FALSE(j.contains("timestamp"));
}

TEST_CASE("reorder on the swap is refused and names the cycle") {
  auto r = run_cli({"reorder", "--spec", data("swap01.spec")});
  CHECK(r.status == 1);
  CHECK(r.err.find("[0, 1]") != std::string::npos);
  auto j = structured("reorder", "swap01.spec");
  CHECK(j["error"]["kind"] == "periodic_point_found");
  CHECK(j["error"]["details"]["cycle"] == json::array({"0", "1"}));
}

TEST_CASE("conjugacy on the paired shift") {
  auto j = structured("conjugacy", "paired_shift.spec");
  CHECK(j["exit_code"] == 0);
  CHECK(j["result"]["decision"] == "not_conjugate");
  CHECK(j["result"]["reason"] == "infinitely_many_orbits");
}

TEST_CASE("every command succeeds on the valid examples") {
  for (const char* command : {"validate", "orbits", "reorder", "color", "conjugacy", "verify"}) {
    for (const char* spec : {"translate1.spec", "translate2.spec", "patched3.spec", "composed.spec", "paired_shift.spec"}) {
      CAPTURE(command);
      CAPTURE(spec);
      auto r = run_cli({command, "--spec", data(spec), "--window=-30:30"});
      CHECK(r.status == 0);
      CHECK(r.err.empty());
    }
  }
}

TEST_CASE("input errors exit 2 with a diagnostic") {
  for (const char* spec : {"bad_syntax.spec", "not_bijective.spec", "missing.spec"}) {
    CAPTURE(spec);
    auto r = run_cli({"validate", "--spec", data(spec)});
    CHECK(r.status == 2);
    CHECK(r.err.find(spec) != std::string::npos);
  }
  auto j = structured("validate", "bad_syntax.spec");
  CHECK(j["error"]["kind"] == "syntax_error");
  CHECK(j["error"]["details"]["line"] == 1);
  CHECK(run_cli({"validate"}).status == 2);
  CHECK(run_cli({"nonsense", "--spec", data("translate1.spec")}).status == 2);
  CHECK(run_cli({"validate", "--spec", data("translate1.spec"), "--window", "5:5"}).status == 2);
  CHECK(run_cli({"validate", "--spec", data("translate1.spec"), "--window", "abc"}).status == 2);
  CHECK(run_cli({"validate", "--spec", data("translate1.spec"), "--window", "0:50000"}).status == 2);
  CHECK(run_cli({"validate", "--spec", data("translate1.spec"), "--format", "xml"}).status == 2);
}

TEST_CASE("analysis of a mixed presentation is refused") {
  std::filesystem::path p = std::filesystem::temp_directory_path() / "potmono_mixed.spec";
  std::ofstream(p) << "compose(paired_shift, map{tail+=1;tail-=1;patch{}})\n";
  CHECK(run_cli({"validate", "--spec", p.string()}).status == 0);
  auto r = run_cli({"orbits", "--spec", p.string()});
  CHECK(r.status == 1);
  CHECK(r.err.find("unsupported") != std::string::npos);
}

TEST_CASE("structured output is deterministic without the timestamp") {
  auto a = run_cli({"verify", "--spec", data("patched3.spec"), "--format", "structured", "--no-timestamp"});
  auto b = run_cli({"verify", "--spec", data("patched3.spec"), "--format", "structured", "--no-timestamp"});
  CHECK(a.out == b.out);
  auto c = run_cli({"verify", "--spec", data("patched3.spec"), "--format", "structured"});
  CHECK(json::parse(c.out).contains("timestamp"));
}

TEST_CASE("orbit diagrams") {
  auto t1 = presentation::load("map{tail+=1;tail-=1;patch{}}");
  auto d1 = cli::orbit_diagram(t1, Window{-3, 3});
  CHECK(d1.find("\"-3\" -> \"-2\"") != std::string::npos);
  CHECK(d1.find("\"2\" -> \"3\"") != std::string::npos);
  CHECK(d1.find("\"3\" -> ") == std::string::npos);
  std::size_t edges = 0;
  for (std::size_t pos = 0; (pos = d1.find("->", pos)) != std::string::npos; ++pos) ++edges;
  CHECK(edges == 6);

  auto swap = presentation::load("map{tail+=0;tail-=0;patch{0->1,1->0}}");
  auto d2 = cli::orbit_diagram(swap, Window{-2, 2});
  CHECK(d2.find("\"0\" -> \"1\"") != std::string::npos);
  CHECK(d2.find("\"1\" -> \"0\"") != std::string::npos);
  CHECK(d2.find("\"2\" -> \"2\"") != std::string::npos);
  CHECK(d2.find("fillcolor") == std::string::npos);

  auto ps = presentation::load("paired_shift");
  auto d3 = cli::orbit_diagram(ps, Window{-10, 10});
  CHECK(d3.find("fillcolor") != std::string::npos);

  auto path = (std::filesystem::temp_directory_path() / "potmono_diagram.dot").string();
  auto r = run_cli({"orbits", "--spec", data("translate1.spec"), "--window", "-3:3", "--emit-diagram", path});
  CHECK(r.status == 0);
  std::ifstream in(path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(text.find("digraph") == 0);

  auto bad = run_cli({"orbits", "--spec", data("translate1.spec"), "--emit-diagram", "/nonexistent/dir/x.dot"});
  CHECK(bad.status == 2);
  CHECK(bad.err.find("/nonexistent/dir/x.dot") != std::string::npos);
}
