#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include "tcurv/cli.hpp"

using namespace tcurv;

namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

std::string value_of(const std::string& kv, const std::string& key) {
  std::istringstream in(kv);
  for (std::string line; std::getline(in, line);) {
    if (line.rfind(key + "=", 0) == 0) return line.substr(key.size() + 1);
  }
  return {};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("roots") {
  const Outcome r = invoke({"roots", "--n", "5"});
  CHECK(r.status == cli::kOk);
  CHECK(r.out ==
        "1 0.3090169943749474 0.95105651629515353\n"
        "2 -0.80901699437494745 0.58778525229247314\n");
}

TEST_CASE("eval and curvature") {
  const Outcome e = invoke({"eval", "--n", "2", "--t", "0", "--deriv", "1"});
  CHECK(e.status == cli::kOk);
  CHECK(e.out == "1,-1\n");
  const Outcome c = invoke({"curvature", "--n", "2", "--t", "0"});
  CHECK(c.status == cli::kOk);
  CHECK(c.out.rfind("0,", 0) == 0);
  CHECK(std::stod(c.out.substr(2)) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("classify") {
  const Outcome two = invoke({"classify", "--n", "2"});
  CHECK(two.status == cli::kOk);
  CHECK(value_of(two.out, "total_finite") == "true");
  CHECK(std::abs(std::stod(value_of(two.out, "total")) - std::numbers::pi / 2) < 1e-6);

  const Outcome three = invoke({"classify", "--n", "3"});
  CHECK(three.status == cli::kOk);
  CHECK(value_of(three.out, "total_finite") == "false");
  CHECK(value_of(three.out, "negative_tail") == "divergent");
  CHECK(value_of(three.out, "ladder_rungs") == "4");

  const Outcome text = invoke({"classify", "--n", "4", "--format", "text"});
  CHECK(text.status == cli::kOk);
  CHECK(text.out.find("finite total first curvature") != std::string::npos);
}

TEST_CASE("total curvature and length") {
  const Outcome t = invoke({"total-curvature", "--n", "2", "--a", "0", "--b", "1"});
  CHECK(t.status == cli::kOk);
  CHECK(std::stod(value_of(t.out, "value")) ==
        doctest::Approx(0.650880168023008).epsilon(1e-9));
  const Outcome imp = invoke({"total-curvature", "--n", "2", "--improper"});
  CHECK(imp.status == cli::kOk);
  CHECK(value_of(imp.out, "total").rfind("1.5707963", 0) == 0);
  const Outcome len = invoke({"length", "--n", "3", "--t0", "0", "--t1", "1"});
  CHECK(len.status == cli::kOk);
  CHECK(value_of(len.out, "converged") == "true");
}

TEST_CASE("verify") {
  const Outcome v = invoke({"verify", "--n", "6"});
  CHECK(v.status == cli::kOk);
  CHECK(v.out.find("FAIL") == std::string::npos);
  CHECK(invoke({"verify", "--n", "2", "--quick"}).status == cli::kOk);
}

TEST_CASE("sample is deterministic") {
  const std::vector<std::string> args{"sample", "--n", "5", "--t0", "-2",
                                      "--t1", "2", "--steps", "8"};
  const Outcome a = invoke(args);
  const Outcome b = invoke(args);
  CHECK(a.status == cli::kOk);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("t,speed,k1,K1\n-2,", 0) == 0);
  CHECK(std::count(a.out.begin(), a.out.end(), '\n') == 10);

  const std::string path = "tcurv_cli_sample_test.csv";
  std::vector<std::string> to_file = args;
  to_file.insert(to_file.end(), {"--out", path});
  const Outcome f = invoke(to_file);
  CHECK(f.status == cli::kOk);
  CHECK(f.out.empty());
  std::ifstream in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == a.out);
  in.close();
  std::remove(path.c_str());
}

TEST_CASE("invalid arguments") {
  CHECK(invoke({}).status == cli::kInvalidArguments);
  CHECK(invoke({"bogus"}).status == cli::kInvalidArguments);
  CHECK(invoke({"roots", "--n", "1"}).status == cli::kInvalidArguments);
  CHECK(invoke({"roots"}).status == cli::kInvalidArguments);
  CHECK(invoke({"eval", "--n", "3", "--t", "800"}).status == cli::kInvalidArguments);
  CHECK(invoke({"length", "--n", "3", "--t0", "1", "--t1", "1"}).status ==
        cli::kInvalidArguments);
  CHECK(invoke({"total-curvature", "--n", "3", "--a", "1", "--b", "0"}).status ==
        cli::kInvalidArguments);
  CHECK(invoke({"total-curvature", "--n", "3", "--a", "0"}).status ==
        cli::kInvalidArguments);
  CHECK(invoke({"total-curvature", "--n", "2", "--a", "0", "--improper"}).status ==
        cli::kInvalidArguments);
  CHECK(invoke({"sample", "--n", "3", "--t0", "0", "--t1", "1", "--steps", "1"})
            .status == cli::kInvalidArguments);
  CHECK(invoke({"classify", "--n", "65"}).status == cli::kInvalidArguments);
  CHECK(invoke({"classify", "--n", "3", "--format", "xml"}).status ==
        cli::kInvalidArguments);
  const Outcome e = invoke({"roots", "--n", "1"});
  CHECK_FALSE(e.err.empty());
  CHECK(e.out.empty());
}

}
