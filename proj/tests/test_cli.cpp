#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "golden.hpp"
#include "support.hpp"

namespace {

golden::Outcome tatecoh(std::vector<std::string> args) {
  for (std::string& a : args) a = golden::substitute(a);
  return golden::run({"", 0, args});
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST_CASE("Tate Ext of k over F_2[x]/(x^2) prints eleven rows of 1") {
  auto r = tatecoh({"ext", "--kind", "tatePC", "--c", "$F/R2_R.mod", "--m", "$F/R2_k.mod", "--n", "$F/R2_k.mod",
                    "--range", "-5:5"});
  CHECK(r.exit == 0);
  auto ls = lines(r.out);
  REQUIRE(ls.size() == 12);
  for (int n = -5; n <= 5; ++n) CHECK(ls[static_cast<std::size_t>(n + 5)] == std::to_string(n) + "\t1");
  CHECK(ls.back() == "OK");
}

TEST_CASE("the sequence for k with C = R has d = 0 and invertible comparison maps") {
  auto r = tatecoh({"les", "--m", "$F/R2_k.mod", "--n", "$F/R2_k.mod", "--c", "$F/R2_R.mod"});
  CHECK(r.exit == 0);
  CHECK(r.out.rfind("# d = 0\n", 0) == 0);
  CHECK(r.out.find("OK epsilon^1 invertible") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("classify reports a definite infinite dimension or an inconclusive bound") {
  auto r = tatecoh({"classify", "--module", "$F/S_k.mod", "--c", "$F/S_E.mod", "--bound", "4"});
  CHECK((r.exit == 0 || r.exit == 3));
  CHECK(r.out.find("bass\tno") != std::string::npos);
  CHECK(r.out.find("auslander\tno") != std::string::npos);
  bool finite_or_inconclusive = r.out.find("G(P_C)-pd\tinfinite") != std::string::npos ? r.exit == 0 : r.exit == 3;
  CHECK(finite_or_inconclusive);
}

TEST_CASE("exit codes") {
  CHECK(tatecoh({"semidualizing", "--c", "$F/S_k.mod"}).exit == tate::cli::verification_failure);
  CHECK(tatecoh({"semidualizing", "--c", "$F/S_E.mod"}).exit == tate::cli::ok);
  CHECK(tatecoh({"resolve", "--module", "$F/S_k.mod", "--bound", "3"}).exit == tate::cli::inconclusive);
  CHECK(tatecoh({"ext", "--m", "$F/R2_k.mod"}).exit == tate::cli::input_error);
  CHECK(tatecoh({"ext", "--m", "$F/R2_k.mod", "--n", "$F/R2_k.mod", "--range", "2:1"}).exit ==
        tate::cli::input_error);
  CHECK(tatecoh({"ext", "--m", "$F/missing.mod", "--n", "$F/R2_k.mod"}).exit == tate::cli::input_error);
  CHECK(tatecoh({"frobnicate"}).exit == tate::cli::input_error);
  CHECK(tatecoh({}).exit == tate::cli::input_error);
  CHECK(tatecoh({"--help"}).exit == tate::cli::ok);
  CHECK(tatecoh({"check", "$I/R2_square.mod"}).exit == tate::cli::verification_failure);
  CHECK(tatecoh({"ext", "--kind", "tatePC", "--m", "$F/S_k.mod", "--n", "$F/S_k.mod"}).exit ==
        tate::cli::verification_failure);
}

TEST_CASE("parse errors name the file and line") {
  std::ostringstream out, err;
  int code = tate::cli::run({"check", golden::substitute("$I/R2_typo.mod")}, out, err);
  CHECK(code == tate::cli::input_error);
  CHECK(err.str().find("R2_typo.mod") != std::string::npos);
  CHECK(err.str().find("line 3") != std::string::npos);
}

TEST_CASE("rational fixtures dispatch to exact rationals") {
  auto r = tatecoh({"ext", "--kind", "abs", "--m", "$F/Q3_k.mod", "--n", "$F/Q3_k.mod", "--range", "0:3"});
  CHECK(r.exit == 0);
  CHECK(lines(r.out) == std::vector<std::string>{"0\t1", "1\t1", "2\t1", "3\t1", "OK degree 0 is Hom (1)", "OK"});
}

TEST_CASE("golden outputs") {
  for (const golden::Case& c : golden::cases()) {
    golden::Outcome a = golden::run(c);
    CHECK_MESSAGE(a.exit == c.exit, c.name);
    if (golden::regenerating()) {
      golden::write(c, a.out);
      continue;
    }
    CHECK_MESSAGE(a.out == tate::read_file(golden::expected_path(c)), c.name);
  }
}
