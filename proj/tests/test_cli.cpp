#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "doctest.h"

// End-to-end runs of the installed binary; MOPOLY_TOOL_PATH comes from CMake.
namespace {

struct RunResult {
  int status = -1;
  std::string output;
};

RunResult run_cli(const std::string& args, bool merge_stderr = true) {
  std::string cmd = std::string(MOPOLY_TOOL_PATH) + " " + args +
                    (merge_stderr ? " 2>&1" : " 2>/dev/null");
  RunResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return result;
  char buf[4096];
  while (size_t got = fread(buf, 1, sizeof(buf), pipe))
    result.output.append(buf, got);
  int raw = pclose(pipe);
  if (WIFEXITED(raw)) result.status = WEXITSTATUS(raw);
  return result;
}

bool contains(const RunResult& r, const std::string& needle) {
  return r.output.find(needle) != std::string::npos;
}

std::string first_line(const RunResult& r) {
  return r.output.substr(0, r.output.find('\n'));
}

}  // namespace

TEST_CASE("coeffs prints closed forms in every format") {
  RunResult table = run_cli("coeffs --family hermite --c 1,-1 --n 2,1 --k 1");
  CHECK(table.status == 0);
  CHECK(contains(table, "b = 1/2"));
  CHECK(contains(table, "a = (1,1/2)"));
  CHECK(contains(table, "sum(a) = 3/2"));
  CHECK(contains(table, "decimals approximate the exact values within"));

  RunResult charlier = run_cli("coeffs --family charlier --a 1,2 --n 1,1 --k 2");
  CHECK(charlier.status == 0);
  CHECK(contains(charlier, "b = 4"));
  CHECK(contains(charlier, "a = (1,2)"));

  // Omitting --k lists every direction.
  RunResult all = run_cli("coeffs --family hermite --c 1,-1 --n 1,1");
  CHECK(all.status == 0);
  CHECK(contains(all, "k=1:"));
  CHECK(contains(all, "k=2:"));

  RunResult csv =
      run_cli("coeffs --family hermite --c 1,-1 --n 2,1 --k 1 --format csv");
  CHECK(csv.status == 0);
  CHECK(first_line(csv) == "family,params,n,k,b,a_list,sum_a,real_simple,verdict");
  CHECK(contains(csv, "hermite,\"c=1,-1\",\"(2,1)\",1,1/2,\"1,1/2\",3/2,,"));

  RunResult jsonl = run_cli(
      "coeffs --family laguerre1 --alpha 0,1/2 --n 1,1 --k 1 --format jsonl");
  CHECK(jsonl.status == 0);
  CHECK(contains(jsonl, "\"a\":[\"-1\",\"9/2\"]"));
  CHECK(contains(jsonl, "\"b\":\"4\""));

  RunResult bad_k = run_cli("coeffs --family hermite --c 1,-1 --n 1,1 --k 3");
  CHECK(bad_k.status == 1);
  CHECK(contains(bad_k, "error:"));
}

TEST_CASE("poly builds agree across the three routes") {
  RunResult p = run_cli("poly --family hermite --c 1,-1 --n 1,1");
  CHECK(p.status == 0);
  CHECK(contains(p, "P_(1,1) = x^2 - 3/4"));
  CHECK(contains(p, "agreement: recurrence = explicit sum = moment solve"));

  RunResult origin = run_cli("poly --family charlier --a 1,2 --n 0,0");
  CHECK(origin.status == 0);
  CHECK(contains(origin, "P_(0,0) = 1"));

  RunResult csv = run_cli("poly --family hermite --c 1,-1 --n 1,1 --format csv");
  CHECK(csv.status == 0);
  CHECK(first_line(csv) == "family,params,n,degree,coeffs");
}

TEST_CASE("zeros come with certified decimals") {
  RunResult z =
      run_cli("zeros --family hermite --c 1,-1 --n 1,1 --width 1/1000000");
  CHECK(z.status == 0);
  CHECK(contains(z, "zeros real and simple: yes"));
  CHECK(contains(z, "-0.866025"));
  bool has_positive_root =
      contains(z, " 0.866025") || contains(z, "~0.866025");
  CHECK(has_positive_root);
  CHECK(contains(z, "decimals approximate the exact zeros within 1/1000000"));
}

TEST_CASE("interlace exit codes encode the verdict") {
  RunResult ok = run_cli("interlace --family hermite --c 1,-1 --n 1,1 --k 1");
  CHECK(ok.status == 0);
  CHECK(contains(ok, "verdict: interlace"));

  RunResult fail = run_cli("interlace --inject fail");
  CHECK(fail.status == 2);
  CHECK(contains(fail, "verdict: fail"));

  RunResult shared = run_cli("interlace --inject shared");
  CHECK(shared.status == 3);
  CHECK(contains(shared, "verdict: shared_root"));
}

TEST_CASE("scan reports coefficient signs next to verdicts") {
  RunResult neg = run_cli("scan --family laguerre1 --alpha 0,1/2 --max-len 3");
  CHECK(neg.status == 0);
  CHECK(contains(neg, "negative a present: yes"));
  CHECK(contains(neg, "interlacing: all"));
  CHECK(contains(neg, "errors: 0"));

  RunResult pos = run_cli("scan --family charlier --a 1,2 --max-len 2");
  CHECK(pos.status == 0);
  CHECK(contains(pos, "negative a present: no"));

  // CSV keeps stdout machine-readable: the summary goes to stderr.
  RunResult csv = run_cli("scan --family charlier --a 1,2 --max-len 1 --format csv",
                          /*merge_stderr=*/false);
  CHECK(csv.status == 0);
  CHECK(first_line(csv) == "family,params,n,k,b,a_list,sum_a,real_simple,verdict");
  CHECK_FALSE(contains(csv, "negative a present"));

  RunResult over = run_cli("scan --family krawtchouk --p 1/3,2/3 --bigN 5 --max-len 6");
  CHECK(over.status == 1);
  CHECK(contains(over, "error:"));

  RunResult missing = run_cli("scan --family charlier --a 1,2");
  CHECK(missing.status == 1);
}

TEST_CASE("verify passes clean data and pinpoints corruption") {
  RunResult pass =
      run_cli("verify --family meixner2 --c 1/2 --beta 1,3/2 --max-len 3");
  CHECK(pass.status == 0);
  CHECK(contains(pass, "verify: PASS"));

  RunResult bad =
      run_cli("verify --family hermite --c 1,-1 --max-len 2 --corrupt");
  CHECK(bad.status == 1);
  CHECK(contains(bad, "disagrees with explicit sum at n=(1,0)"));
  CHECK(contains(bad, "verify: FAIL"));
}

TEST_CASE("config file mirrors the flags and flags win") {
  std::string path = "mopoly_cli_test.cfg";
  {
    std::ofstream cfg(path);
    cfg << "family=hermite\n";
    cfg << "c=1,-1\n";
    cfg << "n=1,1\n";
  }

  RunResult from_cfg = run_cli("coeffs --config " + path);
  CHECK(from_cfg.status == 0);
  CHECK(contains(from_cfg, "n=(1,1)"));

  RunResult overridden = run_cli("coeffs --config " + path + " --n 2,1 --k 1");
  CHECK(overridden.status == 0);
  CHECK(contains(overridden, "n=(2,1)"));
  CHECK(contains(overridden, "a = (1,1/2)"));

  std::remove(path.c_str());
}

TEST_CASE("bad input surfaces as exit 1 with a message") {
  RunResult dup = run_cli("coeffs --family charlier --a 1,1 --n 1,1");
  CHECK(dup.status == 1);
  CHECK(contains(dup, "distinct"));

  RunResult unknown = run_cli("coeffs --family foo --n 1,1");
  CHECK(unknown.status == 1);
  CHECK(contains(unknown, "unknown family"));

  RunResult no_c = run_cli("coeffs --family hermite --n 1,1");
  CHECK(no_c.status == 1);
  CHECK(contains(no_c, "requires --c"));

  RunResult bad_rational = run_cli("coeffs --family hermite --c 1.5,2 --n 1,1");
  CHECK(bad_rational.status == 1);
  CHECK(contains(bad_rational, "rational"));

  RunResult no_sub = run_cli("--family hermite --c 1,-1");
  CHECK(no_sub.status == 1);
}
