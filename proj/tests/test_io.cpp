#include <doctest.h>

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>

#include "pseudofuzzy/error.hpp"
#include "pseudofuzzy/io.hpp"
#include "test_support.hpp"

using namespace pseudofuzzy;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected pseudofuzzy::Error");
  return ErrorCode::Parse;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("format_number") {
  CHECK(io::format_number(0.0) == "0");
  CHECK(io::format_number(-0.0) == "0");
  CHECK(io::format_number(1.0) == "1");
  CHECK(io::format_number(-1.0) == "-1");
  CHECK(io::format_number(0.1) == "0.1");
  CHECK(io::format_number(0.25) == "0.25");
  CHECK(io::format_number(1.0 / 3.0) == "0.333333333333");
  CHECK(io::format_number(2.0 / 3.0) == "0.666666666667");
  CHECK(io::format_number(123456789012345.0) == "1.23456789012e+14");
  CHECK(io::format_number(1e-20) == "1e-20");
  CHECK(io::format_number(0.1 + 0.2) == "0.3");
}

TEST_CASE("parse_number") {
  CHECK(io::parse_number("1.5") == 1.5);
  CHECK(io::parse_number("-0.75") == -0.75);
  CHECK(io::parse_number("1e-3") == 1e-3);
  CHECK(std::isnan(io::parse_number("nan")));
  CHECK(std::isinf(io::parse_number("-inf")));
  CHECK(code_of([] { io::parse_number(""); }) == ErrorCode::Parse);
  CHECK(code_of([] { io::parse_number("1.5x"); }) == ErrorCode::Parse);
  CHECK(code_of([] { io::parse_number(" 1"); }) == ErrorCode::Parse);
  CHECK(code_of([] { io::parse_number("abc"); }) == ErrorCode::Parse);
}

TEST_CASE("parse_ptfn accepts well-formed documents") {
  const auto p = io::parse_ptfn(R"({"a":0,"b":1,"c":2,"kind":"dependent"})");
  CHECK(p == PseudoTfn(TriangleShape(0, 1, 2), Kind::Dependent));
  const auto q = io::parse_ptfn("{ \"kind\": \"independent\", \"c\": 2.5, \"b\": -1, \"a\": -1e1 }\n");
  CHECK(q == PseudoTfn(TriangleShape(-10, -1, 2.5), Kind::Independent));
}

TEST_CASE("parse_ptfn rejects malformed documents") {
  CHECK(code_of([] { io::parse_ptfn(R"({"a":2,"b":1,"c":0,"kind":"dependent"})"); }) == ErrorCode::Parse);
  CHECK(code_of([] { io::parse_ptfn(R"({"a":0,"b":1,"c":2,"kind":"both"})"); }) == ErrorCode::Parse);
  CHECK(code_of([] { io::parse_ptfn(R"({"a":1,"b":1,"c":1,"kind":"dependent"})"); }) == ErrorCode::Parse);
  CHECK(code_of([] { io::parse_ptfn(R"({"a":0,"b":1,"kind":"dependent"})"); }) == ErrorCode::Parse);
  CHECK(code_of([] { io::parse_ptfn(R"({"a":0,"b":1,"c":2,"kind":"dependent","d":3})"); }) == ErrorCode::Parse);
  CHECK(code_of([] { io::parse_ptfn(R"({"a":"0","b":1,"c":2,"kind":"dependent"})"); }) == ErrorCode::Parse);
  CHECK(code_of([] { io::parse_ptfn(R"({"a":true,"b":1,"c":2,"kind":"dependent"})"); }) == ErrorCode::Parse);
  CHECK(code_of([] { io::parse_ptfn(R"({"a":0,"b":1,"c":2,"kind":1})"); }) == ErrorCode::Parse);
  CHECK(code_of([] { io::parse_ptfn(R"([0,1,2])"); }) == ErrorCode::Parse);
  CHECK(code_of([] { io::parse_ptfn(R"({"a":0,"b":1,)"); }) == ErrorCode::Parse);
  CHECK(code_of([] { io::parse_ptfn(""); }) == ErrorCode::Parse);
}

TEST_CASE("to_json round-trips through parse_ptfn") {
  const PseudoTfn p{TriangleShape(-1.5, 0.25, 3), Kind::Independent};
  CHECK(io::parse_ptfn(io::to_json(p)) == p);
}

TEST_CASE("write_cut_table layout") {
  std::ostringstream out;
  io::write_cut_table(out, CutTable({{0, Interval(1, 5)}, {0.5, Interval(2, 4)}, {1, Interval(3, 3)}},
                                    Kind::Dependent));
  CHECK(out.str() == "# kind=dependent\nalpha,lo,hi\n0,1,5\n0.5,2,4\n1,3,3\n");
}

TEST_CASE("read_curve") {
  std::istringstream ok("# comment\nx,mu,lambda\r\n0,0,-1\n\n1,1,0\n");
  const auto set = io::read_curve(ok);
  REQUIRE(set.size() == 2);
  CHECK(set[1].pair == MembershipPair(1, 0));

  std::istringstream no_header("0,0,-1\n");
  CHECK(code_of([&] { io::read_curve(no_header); }) == ErrorCode::Parse);
  std::istringstream short_row("x,mu,lambda\n0,0\n");
  CHECK(code_of([&] { io::read_curve(short_row); }) == ErrorCode::Parse);
  std::istringstream junk("x,mu,lambda\n0,zero,-1\n");
  CHECK(code_of([&] { io::read_curve(junk); }) == ErrorCode::Parse);
  std::istringstream bad_pair("x,mu,lambda\n0,0.5,0.5\n");
  CHECK(code_of([&] { io::read_curve(bad_pair); }) == ErrorCode::LambdaOutOfRange);
  std::istringstream unsorted("x,mu,lambda\n1,0,-1\n0,0,-1\n");
  CHECK(code_of([&] { io::read_curve(unsorted); }) == ErrorCode::UnsortedSupport);
}

TEST_CASE("property: emitted curves round-trip through CSV") {
  testing::Gen gen(2718);
  for (int i = 0; i < 100; ++i) {
    const auto p = gen.ptfn();
    const auto& s = p.shape();
    const auto samples = discretize(p, gen.integer(2, 200), s.a() - s.width(), s.c() + s.width());
    std::ostringstream out;
    io::write_curve(out, samples);
    std::istringstream in(out.str());
    const auto back = io::read_curve(in);
    REQUIRE(back.size() == samples.size());
    for (std::size_t k = 0; k < back.size(); ++k) {
      CHECK(std::abs(back[k].x - samples[k].x) <= 1e-9);
      CHECK(std::abs(back[k].pair.mu() - samples[k].pair.mu()) <= 1e-9);
      CHECK(std::abs(back[k].pair.lambda() - samples[k].pair.lambda()) <= 1e-9);
    }
    CHECK_FALSE(first_kind_violation(back, p.kind()).has_value());
  }
}

TEST_CASE("cold-fever samples produce their documented readings") {
  const std::string dir = PSEUDOFUZZY_SAMPLES_DIR;
  std::istringstream table(slurp(dir + "/cold_fever_expected.csv"));
  std::string line;
  int rows = 0;
  bool header = true;
  while (std::getline(table, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (header) {
      CHECK(line == "file,x,mu,lambda,case");
      header = false;
      continue;
    }
    std::istringstream fields(line);
    std::string file, x, mu, lambda, label;
    std::getline(fields, file, ',');
    std::getline(fields, x, ',');
    std::getline(fields, mu, ',');
    std::getline(fields, lambda, ',');
    std::getline(fields, label, ',');
    CAPTURE(line);

    const auto p = io::parse_ptfn(slurp(dir + "/" + file));
    const auto pair = pair_at(p, io::parse_number(x));
    CHECK(pair.mu() == io::parse_number(mu));
    CHECK(pair.lambda() == io::parse_number(lambda));
    CHECK(std::string(1, case_letter(classify_case(pair))) == label);
    ++rows;
  }
  CHECK(rows == 11);
}
