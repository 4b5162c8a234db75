#include "doctest.h"

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "cli/check.hpp"
#include "cli/commands.hpp"
#include "cli/render.hpp"
#include "dyckdiv/words.hpp"

using namespace dyckdiv;
using namespace dyckdiv::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

std::vector<PathPoint> pts(std::initializer_list<std::pair<long, long>> xs) {
  std::vector<PathPoint> out;
  for (auto [x, y] : xs) out.push_back({x, y});
  return out;
}

}  // namespace

TEST_CASE("word command reproduces the reference words for 126") {
  CHECK(first_line(invoke({"word", "126", "--lambda", "2"}).out) == "aabaababbabb");
  CHECK(first_line(invoke({"word", "126", "--lambda", "2", "--kind", "hooley"}).out) == "acabcaabccabbcabcb");
  CHECK(first_line(invoke({"word", "126", "--lambda", "2", "--kind", "right-limit"}).out) ==
        "aabababaababababbabababb");
  CHECK(first_line(invoke({"word", "126", "--lambda", "2.001"}).out) == "aabababaababababbabababb");
  CHECK(first_line(invoke({"--lambda", "2", "word", "--set", "1,2,5,10"}).out) == "abab");
}

TEST_CASE("word command JSON round-trips through the word operations") {
  for (const char* kind : {"class", "hooley", "right-limit"})
    for (const char* n : {"1", "10", "126", "360", "1001"})
      for (const char* lambda : {"3/2", "2", "2.001", "7/3"}) {
        const auto r = invoke({"word", n, "--lambda", lambda, "--kind", kind, "--format", "json"});
        REQUIRE(r.code == 0);
        const auto j = nlohmann::json::parse(r.out);
        CHECK(j["kind"] == kind);
        CHECK(j["n"] == std::stoull(n));
        const TriWord w(j["word"].get<std::string>());
        CHECK(j["length"] == w.size());
        if (std::string(kind) == "hooley") {
          CHECK(j["theta"] == theta(w));
          CHECK(j["height"] == height(w));
        } else {
          CHECK(j["omega"] == omega(gamma(w)));
          CHECK(j["height"] == height(gamma(w)));
          CHECK(j["components"] == omega(gamma(w)));
        }
        CHECK(j.contains("regular"));
        CHECK(j.contains("densely_divisible"));
        CHECK(j["lambda"] == Rational::parse(lambda).to_string());
      }
}

TEST_CASE("dense command exit protocol") {
  auto r = invoke({"dense", "126", "--lambda", "2"});
  CHECK(r.code == kExitYes);
  CHECK(r.out == "yes (3/3 deciders agree)\n");
  r = invoke({"dense", "10", "--lambda", "2"});
  CHECK(r.code == kExitNo);
  CHECK(r.out == "no (3/3 deciders agree)\n");
  r = invoke({"dense", "1", "--lambda", "3/2"});
  CHECK(r.code == kExitYes);
  CHECK(first_line(r.out).rfind("yes", 0) == 0);
  r = invoke({"dense", "10", "--lambda", "2", "--format", "json"});
  CHECK(r.code == kExitNo);
  CHECK(nlohmann::json::parse(r.out)["densely_divisible"] == false);
}

TEST_CASE("usage errors") {
  CHECK(invoke({"dense", "10"}).code == kExitUsage);
  CHECK(invoke({"dense", "10", "--lambda", "1"}).code == kExitUsage);
  CHECK(invoke({"dense", "0", "--lambda", "2"}).code == kExitUsage);
  CHECK(invoke({"dense", "x", "--lambda", "2"}).code == kExitUsage);
  CHECK(invoke({"dense", "--set", "1,2", "--lambda", "2"}).code == kExitUsage);
  CHECK(invoke({"word", "10", "--lambda", "2,5"}).code == kExitUsage);
  CHECK(invoke({"word", "10", "--lambda", "2", "--kind", "other"}).code == kExitUsage);
  CHECK(invoke({"word", "--set", "1,-2", "--lambda", "2"}).code == kExitUsage);
  CHECK(invoke({"render", "abd"}).code == kExitUsage);
  CHECK(invoke({"render", ""}).code == kExitUsage);
  CHECK(invoke({"factor", "ba"}).code == kExitUsage);
  CHECK(invoke({"check", "10", "--lambdas", "1"}).code == kExitUsage);
  CHECK(invoke({"bogus"}).code == kExitUsage);
  CHECK(invoke({}).code == kExitUsage);
  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("delta and components commands") {
  auto r = invoke({"delta", "126", "--lambda", "2", "--format", "json"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["delta"] == 3);
  CHECK(j["delta_bruteforce"] == 3);

  r = invoke({"components", "10", "--lambda", "2", "--format", "json"});
  CHECK(r.code == 0);
  j = nlohmann::json::parse(r.out);
  CHECK(j["components"] == 2);
  CHECK(j["omega"] == 2);
  CHECK(j["spans"][1]["start"] == "5");
  CHECK(j["spans"][1]["upper"] == "20");
  CHECK(first_line(invoke({"components", "10", "--lambda", "2"}).out) == "2 components (omega 2)");
}

TEST_CASE("scan command") {
  auto r = invoke({"scan", "10", "--format", "json"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["breakpoints"] == nlohmann::json::array({"2", "5/2", "5", "10"}));
  std::vector<int> omegas;
  for (const auto& row : j["intervals"]) {
    omegas.push_back(row["omega"]);
    CHECK(row["omega"] == row["components"]);
  }
  CHECK(omegas == std::vector<int>{4, 2, 1, 1, 1});
  CHECK(j["consistent"] == true);

  r = invoke({"scan", "1", "--format", "json"});
  j = nlohmann::json::parse(r.out);
  CHECK(j["breakpoints"].empty());
  CHECK(j["intervals"].size() == 1);
  CHECK(j["intervals"][0]["omega"] == 1);

  r = invoke({"scan", "126", "--format", "json"});
  j = nlohmann::json::parse(r.out);
  for (const auto& row : j["intervals"])
    if (Rational::parse(row["from"].get<std::string>()) >= Rational(2)) CHECK(row["omega"] == 1);
}

TEST_CASE("factor command") {
  auto r = invoke({"factor", "abab", "--format", "json"});
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["factors"] == nlohmann::json::array({"ab", "ab"}));
  CHECK(j["omega"] == 2);
  r = invoke({"factor", "acbacb", "--format", "json"});
  j = nlohmann::json::parse(r.out);
  CHECK(j["factors"] == nlohmann::json::array({"acb", "acb"}));
  CHECK(j["theta"] == 2);
  r = invoke({"factor", "10", "--lambda", "2"});
  CHECK(r.out == "abab = ab · ab\nomega 2\n");
}

TEST_CASE("path rendering") {
  CHECK(render({TriWord("ab"), RenderFormat::Ascii, 20}) == "/\\\n");
  CHECK(path_points(TriWord("aabaababbabb")) ==
        pts({{0, 0}, {1, 1}, {2, 2}, {3, 1}, {4, 2}, {5, 3}, {6, 2}, {7, 3}, {8, 2}, {9, 1}, {10, 2}, {11, 1}, {12, 0}}));
  CHECK(path_points(TriWord("acb")) == pts({{0, 0}, {1, 1}, {2, 1}, {3, 0}}));

  const std::string svg = render({TriWord("aabaababbabb"), RenderFormat::Svg, 10});
  CHECK(svg.find("points=\"0,0 1,1 2,2 3,1 4,2 5,3 6,2 7,3 8,2 9,1 10,2 11,1 12,0\"") != std::string::npos);
  std::size_t polylines = 0;
  for (auto pos = svg.find("<polyline"); pos != std::string::npos; pos = svg.find("<polyline", pos + 1)) ++polylines;
  CHECK(polylines == 1);
  CHECK(render({TriWord("acb"), RenderFormat::Svg, 10}).find("points=\"0,0 1,1 2,1 3,0\"") != std::string::npos);

  CHECK(render_ascii(TriWord("aabaababbabb")) == "    /\\/\\\n /\\/    \\/\\\n/          \\\n");
  CHECK(render_ascii(TriWord("acb")) == " _\n/ \\\n");
  CHECK(render_ascii(TriWord("ba")) == "\\/\n");
  CHECK_THROWS_AS(render({TriWord(""), RenderFormat::Ascii, 20}), std::invalid_argument);

  // pure: identical input gives identical bytes
  CHECK(invoke({"render", "126", "--lambda", "2", "--kind", "hooley", "--format", "svg"}).out ==
        invoke({"render", "126", "--lambda", "2", "--kind", "hooley", "--format", "svg"}).out);
  CHECK(invoke({"render", "ab"}).out == "/\\\n");
}

TEST_CASE("check command") {
  auto r = invoke({"check", "1", "--lambdas", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("checks passed") != std::string::npos);
  r = invoke({"check", "200", "--lambdas", "3/2,2,7/3", "--threads", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("all ", 0) == 0);

  const auto summary = run_check_battery(60, {Rational(2), Rational(3)}, 1);
  CHECK_FALSE(summary.failure.has_value());
  CHECK(summary.checks > 0);
}
