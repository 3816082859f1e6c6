#include "doctest.h"

#include <sstream>

#include "nfmin/cli.hpp"

using namespace nfmin;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("analyze") {
  Run r = run({"analyze", "x^6+x^2-1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("m: 0.946467799") != std::string::npos);
  CHECK(r.out.find("signature: (2,2)") != std::string::npos);
  Run j = run({"analyze", "-1,1,1,1", "--format", "json", "--ext", "0,1"});
  CHECK(j.code == 0);
  CHECK(j.out.find("\"hypothesis\"") != std::string::npos);
}

TEST_CASE("search csv layout") {
  Run r = run({"search", "3", "--format", "csv"});
  CHECK(r.code == 0);
  std::istringstream is(r.out);
  std::string header;
  std::getline(is, header);
  CHECK(header == "signature,polynomial,m,lower_bound");
  int rows = 0;
  for (std::string line; std::getline(is, line);) ++rows;
  CHECK(rows == 4);
  CHECK(r.out.find("x^3+x^2-1,0.947279124,0.944940787") != std::string::npos);
}

TEST_CASE("lattice") {
  Run r = run({"lattice", "x^2-x-1", "--brute-force"});
  CHECK(r.code == 0);
  CHECK(r.out.find("d_squared: 2") != std::string::npos);
  CHECK(r.out.find("m: 1") != std::string::npos);
  CHECK(r.out.find("supplied order") != std::string::npos);
  Run b = run({"lattice", "x^2-5", "--basis", "1,0;1/2,1/2"});
  CHECK(b.code == 0);
  CHECK(b.out.find("order_discriminant: 5") != std::string::npos);
}

TEST_CASE("family") {
  Run r = run({"family", "multinacci", "10"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verdict: pass") != std::string::npos);
  CHECK(run({"family", "even-spread", "8"}).code == 1);
  CHECK(run({"family", "nope", "3"}).code == 2);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"analyze", "x^^2"}).code == 2);
  CHECK(run({"analyze", "x^2-1"}).code == 1);
  CHECK(run({"search", "9"}).code == 2);
  CHECK(run({"search", "5", "--no-prune"}).code == 2);
  CHECK(run({"search", "4", "--signature", "1,1"}).code == 2);
  CHECK(run({"analyze", "x^3-2", "--format", "yaml"}).code == 2);
  CHECK(run({"analyze", "2x^2-1"}).code == 1);
  Run e = run({"analyze", "x^2-1"});
  CHECK(e.out.empty());
  CHECK(e.err.find("reducible") != std::string::npos);
}

TEST_CASE("reports are deterministic across runs and thread counts") {
  Run a = run({"search", "5", "--format", "json"});
  Run b = run({"search", "5", "--format", "json", "--threads", "3"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(run({"analyze", "x^5-x^3-x^2+x+1", "--precision", "12"}).out ==
        run({"analyze", "x^5-x^3-x^2+x+1", "--precision", "12"}).out);
}

TEST_CASE("verify fast suite") {
  Run r = run({"verify", "--suite", "fast", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("check_id,parameters,observed,predicted,residual,scaled_residual,verdict,note", 0) == 0);
  CHECK(r.out.find(",fail,") == std::string::npos);
}
