#include <doctest.h>

#include <json.hpp>

#include <random>
#include <sstream>

#include "cli.hpp"
#include "ezeta/records.hpp"

using namespace ezeta;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_SUITE("cli value") {
  TEST_CASE("golden plain outputs") {
    auto a = run({"value", "--s", "2", "--method", "new-theorem", "--format", "plain"});
    CHECK(a.code == 0);
    CHECK(a.out == "zeta_E(4) = 7/720 * pi^4\n");
    CHECK(a.err.empty());

    auto b = run({"value", "--s", "1", "--method", "closed-form", "--format", "plain"});
    CHECK(b.out == "zeta_E(2) = 1/12 * pi^2\n");

    auto c = run({"value", "--s", "2", "--method", "leeryoo-printed", "--format", "plain"});
    CHECK(c.code == 0);
    CHECK(c.out == "zeta_E(4) = 5/336 * pi^4\n");
    CHECK(c.err.find("warning:") == 0);
  }

  TEST_CASE("decimal rendering") {
    auto a = run({"value", "--s", "1", "--digits", "16"});
    CHECK(a.out == "zeta_E(2) = 1/12 * pi^2 ~ 0.8224670334241132\n");
    auto b = run({"value", "--s", "1", "--decimal", "--format", "json"});
    const auto j = nlohmann::json::parse(b.out);
    CHECK(j["digits"] == 30);
    CHECK(j["decimal"] == "0.822467033424113218236207583323");
  }

  TEST_CASE("usage errors exit 2") {
    CHECK(run({"value", "--s", "0"}).code == 2);
    CHECK(run({"value", "--s", "2", "--method", "nope"}).code == 2);
    CHECK(run({"value", "--s", "2", "--digits", "0"}).code == 2);
    CHECK(run({"value", "--s", "2", "--format", "xml"}).code == 2);
    CHECK(run({"value"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"--help"}).code == 0);
  }
}

TEST_SUITE("cli table") {
  TEST_CASE("csv closed form") {
    auto a = run({"table", "--s-max", "3", "--methods", "closed-form", "--format", "csv"});
    CHECK(a.code == 0);
    CHECK(a.out ==
          "s,method,numerator,denominator,pi_power,decimal\n"
          "1,closed-form,1,12,2,\n"
          "2,closed-form,7,720,4,\n"
          "3,closed-form,31,30240,6,\n");
  }

  TEST_CASE("two methods at s = 1 give identical coefficients") {
    auto a = run({"table", "--s-max", "1", "--methods", "new-theorem,corollary", "--format", "csv"});
    const auto rows = lines(a.out);
    REQUIRE(rows.size() == 3);
    const auto r1 = parse_csv_row(rows[1]);
    const auto r2 = parse_csv_row(rows[2]);
    CHECK(r1.exact == r2.exact);
    CHECK(r1.method == "new-theorem");
    CHECK(r2.method == "corollary");
  }

  TEST_CASE("json all methods") {
    auto a = run({"table", "--s-max", "2", "--methods", "all", "--format", "json"});
    const auto j = nlohmann::json::parse(a.out);
    REQUIRE(j.is_array());
    CHECK(j.size() == 10);
    CHECK(j[0]["method"] == "new-theorem");
    CHECK(j[4]["method"] == "closed-form");
    for (const auto& item : j) {
      const auto rec = parse_json(item.dump());
      CHECK(to_json(rec) == item.dump());
    }
  }

  TEST_CASE("csv rows round-trip to identical records") {
    auto a = run({"table", "--s-max", "6", "--methods", "all", "--format", "csv", "--digits", "25"});
    const auto rows = lines(a.out);
    REQUIRE(rows.size() == 31);
    CHECK(rows[0] == kCsvHeader);
    for (std::size_t i = 1; i < rows.size(); ++i) {
      const auto rec = parse_csv_row(rows[i]);
      CHECK(rec.digits == 25U);
      CHECK(to_csv_row(rec) == rows[i]);
      CHECK(parse_json(to_json(rec)) == rec);
    }
  }

  TEST_CASE("bad method list") {
    CHECK(run({"table", "--s-max", "2", "--methods", "closed-form,bogus"}).code == 2);
    CHECK(run({"table", "--s-max", "0"}).code == 2);
  }
}

TEST_SUITE("cli verify / identities / bench") {
  TEST_CASE("verify") {
    auto a = run({"verify", "--s-max", "16"});
    CHECK(a.code == 0);
    CHECK(a.out.find("FAIL") == std::string::npos);
    CHECK(a.out.find("PASS documented-erratum") != std::string::npos);
    CHECK(run({"verify", "--s-max", "1"}).code == 2);
  }

  TEST_CASE("identities") {
    auto a = run({"identities", "--m", "2", "--x", "0"});
    CHECK(a.code == 0);
    CHECK(lines(a.out)[0] == "x=0 m=2 euler-zeta: -4*v1 + 24*v2 = -1/10");
    auto b = run({"identities", "--m", "1", "--x", "2", "--format", "json"});
    const auto j = nlohmann::json::parse(b.out);
    CHECK(j["family"] == "ordinary-zeta");
    CHECK(j["coefficients"]["1"] == "2");
    CHECK(j["rhs"] == "1/3");
    auto c = run({"identities", "--m", "2", "--x", "1", "--format", "csv"});
    CHECK(c.out == "x,m,family,k,coefficient,rhs\n1,2,euler-zeta,1,-1,-11/160\n1,2,euler-zeta,2,3/2,-11/160\n");
    CHECK(run({"identities", "--m", "2", "--x", "5"}).code == 2);
    CHECK(run({"identities", "--m", "0", "--x", "1"}).code == 2);
  }

  TEST_CASE("bench") {
    auto a = run({"bench", "--s-max", "2", "--repeats", "1", "--format", "csv"});
    CHECK(a.code == 0);
    const auto rows = lines(a.out);
    REQUIRE(rows.size() == 6);
    CHECK(rows[0] == "method,s_max,repeats,best_ms,mean_ms,max_numerator_bits,max_denominator_bits");
    CHECK(rows[4].rfind("leeryoo-printed,2,1,", 0) == 0);
    CHECK(run({"bench", "--s-max", "0", "--repeats", "1"}).code == 2);
    CHECK(run({"bench", "--s-max", "4", "--repeats", "0"}).code == 2);
  }
}

TEST_SUITE("records") {
  TEST_CASE("exact strings round-trip") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> num(-100000, 100000), den(1, 100000), power(-40, 40);
    for (int i = 0; i < 500; ++i) {
      const Rational q(num(rng), den(rng));
      const long p = power(rng);
      const auto text = format_exact(q, p);
      CHECK(text.find(' ') == text.find(" * pi^"));
      const auto [q2, p2] = parse_exact(text);
      CHECK(q2 == q);
      CHECK(p2 == p);
    }
    CHECK_THROWS_AS(parse_exact("7/720"), std::invalid_argument);
    CHECK_THROWS_AS(parse_exact("7 * pi^4"), std::invalid_argument);
    CHECK_THROWS_AS(parse_exact("7/720 * pi^x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_csv_row("1,closed-form,1,12"), std::invalid_argument);
  }
}
