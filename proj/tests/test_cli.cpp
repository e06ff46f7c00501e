#include "doctest.h"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "lrs/cli.hpp"
#include "lrs/text.hpp"

using namespace lrs;
using namespace lrs::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(const std::vector<std::string>& args, std::optional<std::string> env = std::nullopt) {
  std::ostringstream out, err;
  const int code = main_entry(args, env, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path, std::ios::binary) << content;
  return path;
}

}  // namespace

TEST_CASE("cli: parse_invocation examples") {
  const auto mul = parse_invocation({"mul", "--field", "GF(2)", "x^2+x+1", "x^2+x+1"});
  CHECK(mul.command == Command::kMul);
  CHECK(mul.field->name() == "GF(2)");
  CHECK(mul.polys.size() == 2);

  const auto w = parse_invocation({"wedge", "--char", "2", "2", "2"});
  CHECK(w.command == Command::kWedge);
  CHECK(w.characteristic == 2);
  CHECK(w.integers == std::vector<std::uint64_t>{2, 2});

  CHECK_THROWS_WITH_AS(parse_invocation({"mul", "--field", "GF(4)", "x+1"}),
                       doctest::Contains("at least two polynomials"), UsageError);
  CHECK_THROWS_WITH_AS(parse_invocation({"frobnicate"}), doctest::Contains("unknown command 'frobnicate'"), UsageError);
  CHECK_THROWS_WITH_AS(parse_invocation({"mul", "--field", "GF(6)", "x", "x"}), doctest::Contains("GF(6)"), UsageError);
  CHECK_THROWS_WITH_AS(parse_invocation({"mul", "--field", "Q", "x", "x^2+*x"}),
                       doctest::Contains("polynomial #2"), UsageError);
  CHECK_THROWS_AS(parse_invocation({"wedge", "--char", "4", "1", "1"}), UsageError);
  CHECK_THROWS_AS(parse_invocation({"wedge", "--char", "2", "1"}), UsageError);
  CHECK_THROWS_AS(parse_invocation({"wedge", "--char", "2", "1", "z"}), UsageError);
  CHECK_THROWS_AS(parse_invocation({"mul", "x", "x"}), UsageError);
  CHECK_THROWS_AS(parse_invocation({}), UsageError);
}

TEST_CASE("cli: seeds from flag and environment") {
  const std::vector<std::string> args{"factor", "--field", "GF(3)", "x^2+1"};
  CHECK(parse_invocation(args).seed == 0);
  CHECK(parse_invocation(args, "17").seed == 17);
  auto with_flag = args;
  with_flag.insert(with_flag.end(), {"--seed", "5"});
  CHECK(parse_invocation(with_flag, "17").seed == 5);
  CHECK_THROWS_AS(parse_invocation(args, "seven"), UsageError);
}

TEST_CASE("cli: wedge and table") {
  auto r = call({"wedge", "--char", "0", "5", "7"});
  CHECK(r.code == 0);
  CHECK(r.out == "11\n");
  r = call({"wedge", "--char", "3", "5", "7", "--explain"});
  CHECK(r.out.find("q = 2") != std::string::npos);
  r = call({"table", "--char", "2", "2", "3"});
  CHECK(r.out == " ^ 1 2 3\n 1 1 2 3\n 2 2 2 4\n");
  const auto j = nlohmann::json::parse(call({"table", "--char", "2", "2", "2", "--json"}).out);
  CHECK(j["values"] == nlohmann::json::parse("[[1,2],[2,2]]"));
}

TEST_CASE("cli: mul reports rho, theta and the classes") {
  const auto r = call({"mul", "--field", "GF(2)", "x^2*(x+1)", "x^3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("product: x^3\n") != std::string::npos);
  CHECK(r.out.find("rho: 3\n") != std::string::npos);
  CHECK(r.out.find("theta: {2}\n") != std::string::npos);

  const auto j = nlohmann::json::parse(call({"mul", "--field", "GF(2)", "x^2+x+1", "x^2+x+1", "--json"}).out);
  CHECK(j["result"] == "x^3+1");
  CHECK(j["factored"] == "(x+1)*(x^2+x+1)");
  CHECK(j["classes"].size() == 3);
  CHECK(j["splitting_field"] == "GF(2^2)");
  CHECK(j["tuple_count"] == 4);
}

TEST_CASE("cli: verify") {
  auto r = call({"verify", "--field", "GF(2)", "x^2+x+1", "x^2+x+1"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("EQUAL\n", 0) == 0);
  CHECK(r.out.find("x^3+1") != std::string::npos);
  const auto j = nlohmann::json::parse(call({"verify", "--field", "Q", "x-2", "x-3", "--json"}).out);
  CHECK(j["status"] == "EQUAL");
  CHECK(j["oracle"] == "x-6");
  r = call({"verify", "--field", "GF(2)", "x^30", "x^30", "--budget", "100"});
  CHECK(r.code == 1);
  CHECK(r.err.find("budget") != std::string::npos);
  const auto e = nlohmann::json::parse(call({"verify", "--field", "GF(2)", "x^30", "x^30", "--budget", "100", "--json"}).out);
  CHECK(e["ok"] == false);
  CHECK(e["error"]["kind"] == "budget");
}

TEST_CASE("cli: factor") {
  const auto j = nlohmann::json::parse(call({"factor", "--field", "Q", "2*x^3-4*x", "--json"}).out);
  CHECK(j["factored"] == "2*x*(x^2-2)");
  CHECK(j["remainder"] == "x^2-2");
  const auto r = call({"factor", "--field", "GF(2)", "x^4+x^2"});
  CHECK(r.out.find("factored: x^2*(x+1)^2\n") != std::string::npos);
}

TEST_CASE("cli: usage errors exit 2 with a caret") {
  const auto r = call({"mul", "--field", "Q", "x^2+*x", "x"});
  CHECK(r.code == 2);
  CHECK(r.err.find("x^2+*x\n      ^") != std::string::npos);
  CHECK(call({"mul", "--field", "GF(4)", "x+1"}).code == 2);
  CHECK(call({"--help"}).code == 0);
  CHECK(call({"mul", "--help"}).out.find("--cap") != std::string::npos);
}

TEST_CASE("cli: batch") {
  const auto good = write_temp("lrs_batch_good.txt",
                               "# named\r\nGF(2) ; x^2+x+1 ; x^2+x+1\r\n\r\nQ ; x-2 ; x-3  # trailing\n"
                               "GF(3) ; (x-1)^2 ; (x-1)^2\n");
  auto r = call({"batch", good.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("3 cases: 3 EQUAL, 0 DIFFER, 0 FAILED") != std::string::npos);
  CHECK(r.out.find("line 2: EQUAL") != std::string::npos);
  CHECK(r.out.find("line 4: EQUAL") != std::string::npos);

  const auto bad = write_temp("lrs_batch_bad.txt", "GF(2) ; x+1 ; x\nGF(2) ; x^2+*x ; x\nGF(6) ; x ; x\nQ ; x-1\n");
  r = call({"batch", bad.string(), "--jobs", "3"});
  CHECK(r.code == 1);
  CHECK(r.out.find("line 1: EQUAL") != std::string::npos);
  CHECK(r.out.find("line 2: FAILED") != std::string::npos);
  CHECK(r.out.find("line 3: FAILED") != std::string::npos);
  CHECK(r.out.find("line 4: FAILED") != std::string::npos);
  const auto j = nlohmann::json::parse(call({"batch", bad.string(), "--json"}).out);
  CHECK(j["summary"]["failed"] == 3);
  CHECK(j["cases"][0]["status"] == "EQUAL");

  const auto empty = write_temp("lrs_batch_empty.txt", "");
  r = call({"batch", empty.string()});
  CHECK(r.code == 0);
  CHECK(r.out == "0 cases: 0 EQUAL, 0 DIFFER, 0 FAILED\n");
  CHECK(call({"batch", "/nonexistent/lrs.batch"}).code == 2);
}

TEST_CASE("cli: identical invocations give identical output") {
  const std::vector<std::string> args{"mul", "--field", "GF(3)", "x^3+2*x+1", "(x^2+1)*x", "--json"};
  CHECK(call(args).out == call(args).out);
  const std::vector<std::string> batch_args{"batch", write_temp("lrs_batch_det.txt", "GF(2) ; x^3+x+1 ; x^2+x+1\nGF(5) ; x^2+2 ; x^2+3\n").string()};
  auto jobs = batch_args;
  jobs.insert(jobs.end(), {"--jobs", "4"});
  CHECK(call(batch_args).out == call(jobs).out);
}

TEST_CASE("cli: factored strings re-parse") {
  const auto f = make_field(3);
  for (const char* text : {"x^4+x^2", "2*x^3+x", "x^6+2", "1", "2"}) {
    const auto p = parse_polynomial(text, f);
    CHECK(parse_polynomial(factored_string(p), f) == p);
  }
}
