#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "fermat/cli.hpp"
#include "fermat/gfe.hpp"
#include "fermat/json_io.hpp"

using namespace fermat;
using fermat::json::Json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Run invoke_json(std::vector<std::string> args) {
  args.insert(args.begin(), {"--format", "json"});
  return invoke(std::move(args));
}

// Keys and scalar leaves in document order.
void flatten(const Json& j, std::vector<std::string>& tokens) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      tokens.push_back(k);
      flatten(v, tokens);
    }
  } else if (j.is_array()) {
    for (const auto& e : j) flatten(e, tokens);
  } else {
    tokens.push_back(j.is_string() ? j.get<std::string>() : j.dump());
  }
}

// Every token of the JSON document appears in the text output, in order.
bool same_content(const std::vector<std::string>& args) {
  const Run text = invoke(args);
  const Run js = invoke_json(args);
  if (text.code != 0 || js.code != 0) return false;
  std::vector<std::string> tokens;
  flatten(Json::parse(js.out), tokens);
  std::size_t pos = 0;
  for (const auto& t : tokens) {
    pos = text.out.find(t, pos);
    if (pos == std::string::npos) return false;
    pos += t.size();
  }
  return true;
}

const std::vector<std::vector<std::string>> kCommands{
    {"snf", "--matrix", "2,-3,0;0,3,-7;-2,0,7"},
    {"group-structure", "--signature", "4,4,2"},
    {"weights", "--signature", "2,3,7"},
    {"h1", "--primes", "2", "--n", "4"},
    {"stack-point", "--q", "9/1", "--signature", "2,3,7", "--primes", ""},
    {"stack-point", "--q", "1:2", "--signature", "4,4,2", "--primes", ""},
    {"chi", "--signature", "2,3,7"},
    {"classify", "--signature", "2,3,5"},
    {"enumerate", "--signature", "4,4,2", "--coeffs", "1,1,-1", "--bound", "30"},
    {"jmap", "--signature", "2,3,7", "--solution", "3,-2,-1"},
    {"recover", "--q", "9", "--signature", "2,3,7", "--primes", ""},
    {"verify-inclusion", "--signature", "2,3,7", "--bound", "10"},
    {"twist", "--d", "-4"},
    {"torsion", "--d", "-4", "--height", "5"},
    {"sieve442", "--bound", "50"},
};

}  // namespace

TEST_CASE("snf example") {
  const Run r = invoke_json({"snf", "--matrix", "2,-3,0;0,3,-7;-2,0,7"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["diagonal"] == Json::array({"1", "1", "0"}));
  CHECK(j["D"] == Json::parse(R"([["1","0","0"],["0","1","0"],["0","0","0"]])"));
}

TEST_CASE("sieve442 example") {
  const Run r = invoke_json({"sieve442", "--bound", "100"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  const auto sols = json::parse_solutions(j["solutions"]);
  CHECK(sols.size() == 8);
  CHECK(sols == enumerate_primitive_solutions(GFE({4, 4, 2}, 1, 1, -1), 100));
  CHECK(j["admissible_twists"] == Json::array({"-1", "-4"}));
  bool rejected = false;
  for (const auto& c : j["candidates"])
    if (c["point"] == Json::array({"1", "2"})) rejected = c["verdict"] == "rejected";
  CHECK(rejected);
}

TEST_CASE("stack-point example") {
  const Run r = invoke_json({"stack-point", "--q", "9/1", "--signature", "2,3,7", "--primes", ""});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["accepted"] == true);
  CHECK(j["roots"] == Json::array({"3", "2", "1"}));
  CHECK(j["automorphism_order"] == "1");
}

TEST_CASE("json output round-trips and uses decimal strings") {
  for (const auto& args : kCommands) {
    CAPTURE(args[0]);
    const Run r = invoke_json(args);
    REQUIRE(r.code == 0);
    REQUIRE(r.err.empty());
    const Json j = Json::parse(r.out);
    REQUIRE(Json::parse(j.dump()) == j);
    std::vector<std::string> tokens;
    flatten(j, tokens);
    std::function<void(const Json&)> no_numbers = [&](const Json& v) {
      REQUIRE_FALSE(v.is_number());
      if (v.is_structured())
        for (const auto& e : v) no_numbers(e);
    };
    no_numbers(j);
  }
}

TEST_CASE("text and json carry the same data") {
  for (const auto& args : kCommands) {
    CAPTURE(args[0]);
    REQUIRE(same_content(args));
  }
}

TEST_CASE("invalid input exits 1 with no output") {
  const std::vector<std::vector<std::string>> bad{
      {"chi", "--signature", "1,3,7"},
      {"chi", "--signature", "2,3"},
      {"enumerate", "--signature", "2,3,7", "--coeffs", "1,0,1"},
      {"stack-point", "--q", "0/0", "--signature", "2,3,7", "--primes", ""},
      {"stack-point", "--q", "1/x", "--signature", "2,3,7", "--primes", ""},
      {"stack-point", "--q", "1", "--signature", "2,3,7", "--primes", "4"},
      {"snf", "--matrix", "1,2;3"},
      {"enumerate", "--signature", "2,3,7", "--bound", "0"},
      {"twist", "--d", "0"},
      {"jmap", "--signature", "2,3,7", "--solution", "1,1,1"},
      {"frobnicate"},
      {},
  };
  for (const auto& args : bad) {
    CAPTURE(args.empty() ? std::string() : args[0]);
    const Run r = invoke(args);
    REQUIRE(r.code == 1);
    REQUIRE(r.out.empty());
    REQUIRE_FALSE(r.err.empty());
  }
  const Run r = invoke({"twist", "--d", "0"});
  CHECK(r.err.find("error[SingularCurve]") != std::string::npos);
}

TEST_CASE("work limit exits 2") {
  // 4 d^3 is far beyond the factorization size bound.
  const std::string huge = "1" + std::string(120, '7');
  const Run r = invoke({"torsion", "--d", huge});
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  CHECK(r.err.find("error[WorkLimitExceeded]") != std::string::npos);
}

TEST_CASE("exit code mapping") {
  CHECK(cli::exit_code(ErrorCode::InvalidInput) == 1);
  CHECK(cli::exit_code(ErrorCode::ZeroPoint) == 1);
  CHECK(cli::exit_code(ErrorCode::NotAStackPoint) == 1);
  CHECK(cli::exit_code(ErrorCode::WorkLimitExceeded) == 2);
  CHECK(cli::exit_code(ErrorCode::PipelineMismatch) == 3);
}
