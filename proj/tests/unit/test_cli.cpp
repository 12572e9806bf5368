#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtf/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = gtf::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("eval") {
  auto r = run({"eval", "--fn", "arcsin_p", "--p", "2", "--x", "0.5"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("arcsin_p p=2 x=0.5 value=0.523598775598299 abs_err=", 0) == 0);
  CHECK(r.out.find("method=series") != std::string::npos);

  r = run({"eval", "--fn", "arcsin_p", "--p", "2", "--x", "0"});
  CHECK(r.code == 0);
  CHECK(r.out.find("value=0 ") != std::string::npos);

  r = run({"eval", "--fn", "arcsin_pq", "--p", "2", "--q", "3", "--x", "0.6"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("arcsin_pq p=2 q=3 x=0.6 value=0.6179", 0) == 0);

  r = run({"eval", "--fn", "sin_p", "--p", "2", "--x", "0.5"});
  CHECK(r.out.find("value=0.479425538604203") != std::string::npos);
  CHECK(r.out.find("method=inversion") != std::string::npos);

  r = run({"eval", "--fn", "power_mean", "--t", "-1", "--x", "2", "--y", "3"});
  CHECK(r.out.find("value=2.4 ") != std::string::npos);

  r = run({"eval", "--fn", "lemma_fn", "--family", "f1", "--m", "0", "--p", "2", "--x", "0.6"});
  CHECK(r.out.find("value=1.25 ") != std::string::npos);
}

TEST_CASE("eval errors") {
  auto r = run({"eval", "--fn", "artanh_p", "--p", "2", "--x", "1"});
  CHECK(r.code == 3);
  CHECK(r.err.find("artanh_p") != std::string::npos);
  CHECK(run({"eval", "--fn", "arcsin_p", "--x", "0.5"}).code == 2);
  CHECK(run({"eval", "--fn", "arcsin_p", "--p", "1", "--x", "0.5"}).code == 2);
  CHECK(run({"eval", "--fn", "nope", "--p", "2", "--x", "0.5"}).code == 2);
  CHECK(run({"eval", "--fn", "arcsin_p", "--p", "2", "--x", "0.5", "--bogus", "1"}).code == 2);
  CHECK(run({"eval", "--fn", "arcsin_p", "--p", "abc", "--x", "0.5"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"eval", "--fn", "arcsin_p", "--p", "2", "--x", "0.5", "--tol", "0.5"}).code == 2);
}

TEST_CASE("const") {
  auto r = run({"const", "--name", "pi_p", "--p", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "3.14159265358979\n");
  CHECK(run({"const", "--name", "lambda_n", "--p", "2", "--n", "1"}).out == "9.86960440108936\n");
  r = run({"const", "--name", "c_p", "--p", "2"});
  CHECK(r.out.rfind("0.881373587019543\nnote: ", 0) == 0);
  CHECK(run({"const", "--name", "b_p", "--p", "2"}).out == "0.785398163397448\n");
  CHECK(run({"const", "--name", "n_pq", "--p", "2"}).code == 2);
  CHECK(run({"const", "--name", "lambda_n", "--p", "2", "--n", "0"}).code == 2);
  CHECK(run({"const", "--name", "e_p", "--p", "2"}).code == 2);
}

TEST_CASE("check") {
  auto r = run({"check", "--suite", "thm1", "--t", "-1"});
  CHECK(r.code == 2);
  CHECK(r.err.find("t >= 0") != std::string::npos);
  CHECK(run({"check", "--suite", "thm9"}).code == 2);
  CHECK(run({"check", "--suite", "thm1", "--format", "xml"}).code == 2);

  r = run({"check", "--suite", "thm1", "--p", "2,3", "--t", "0,1", "--x", "0.2,0.7"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("check_id,p,q,t,r,s,x,m,n,lhs,rhs,margin,pass\n", 0) == 0);
  CHECK(r.err.find("checks=48 passed=48 failed=0") != std::string::npos);

  r = run({"check", "--suite", "thm2", "--p", "2", "--t", "1", "--x", "0.4,0.8", "--format", "plain"});
  CHECK(r.code == 1);
  CHECK(r.out.find("thm2.cos p=2 t=1 r=0.4 s=0.8") != std::string::npos);
}

TEST_CASE("check writes files deterministically") {
  const auto dir = std::filesystem::temp_directory_path();
  const std::string a = (dir / "gtf_cli_a.csv").string();
  const std::string b = (dir / "gtf_cli_b.csv").string();
  const std::vector<std::string> base = {"check", "--suite", "gm", "--p", "1.5,3", "--q", "2,5", "--out"};
  auto args = base;
  args.push_back(a);
  auto r1 = run(args);
  args.back() = b;
  args.push_back("--serial");
  auto r2 = run(args);
  CHECK(r1.code == 0);
  CHECK(r1.out == r2.out);
  CHECK(r1.out.rfind("checks=", 0) == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK_FALSE(slurp(a).empty());
  std::remove(a.c_str());
  std::remove(b.c_str());
  CHECK(run({"check", "--suite", "gm", "--out", "/nonexistent-dir/x.csv"}).code == 4);
}

TEST_CASE("oracle-diff") {
  auto r = run({"oracle-diff", "--fn", "arcsin_p", "--p", "2", "--x", "0,0.5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("arcsin_p 2 - 0 0 0 0 ") != std::string::npos);
  CHECK(r.out.find("rows=2 within=2 outside=0") != std::string::npos);
  r = run({"oracle-diff", "--pq", "--p", "2", "--q", "3", "--x", "0.6"});
  CHECK(r.code == 0);
  CHECK(r.out.find("arcsin_pq_printed 2 3 0.6") != std::string::npos);
  CHECK(r.out.find(" printed\n") != std::string::npos);
  CHECK(run({"oracle-diff", "--fn", "sin_p"}).code == 2);
  CHECK(run({"oracle-diff", "--fn", "artanh_p", "--p", "2", "--x", "1"}).code == 3);
}
