#include "ncsparse/io.hpp"
#include "ncsparse/parse.hpp"

#include <doctest.h>

#include <json.hpp>

using namespace ncsparse;

namespace {

const char* kProblem =
    "# inverse pair\n"
    "vars: x, y\n"
    "gen: x*y - 1\n"
    "gen: y*x - 1\n"
    "claim: y*x*x*y - 1\n"
    "bound: 6\n"
    "weights: uniform\n"
    "seed: 3\n";

std::pair<std::size_t, std::size_t> error_position(const std::string& text) {
  try {
    parse_problem(text);
  } catch (const InputError& e) {
    return {e.line(), e.column()};
  }
  return {0, 0};
}

}  // namespace

TEST_CASE("problem file") {
  auto pf = parse_problem(kProblem);
  CHECK(pf.system.size() == 2);
  CHECK(pf.bound == 6);
  CHECK(pf.seed == 3);
  CHECK(pf.prune);
  CHECK(pf.weights == WeightMode::Uniform);
  CHECK(format_poly(pf.claim, pf.system.vars()) == "y*x*x*y - 1");
  CHECK(!pf.alpha);
}

TEST_CASE("malformed problem files report line and column") {
  CHECK(error_position("vars: x, y\ngen: x*q\nclaim: x\nbound: 3\n") == std::pair<std::size_t, std::size_t>{2, 6});
  CHECK(error_position("vars: x\ngen: x\nclaim: x\nbound: 0\n") == std::pair<std::size_t, std::size_t>{4, 8});
  CHECK(error_position("vars: x\ngen: x\nclaim: x\nbound: 3\nfoo: 1\n") == std::pair<std::size_t, std::size_t>{5, 1});
  CHECK(error_position("vars: x\n  nonsense\n") == std::pair<std::size_t, std::size_t>{2, 3});
  CHECK(error_position("vars: x\ngen: x\nclaim: x\nbound: 3\norder: lex\n").first == 5);
  CHECK(error_position("vars: x\nclaim: x\nbound: 3\n").first == 1);
  try {
    parse_problem("vars: x, y\ngen: x*q\nclaim: x\nbound: 3\n");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).rfind("2:6:", 0) == 0);
  }
}

TEST_CASE("certificate round trip") {
  auto pf = parse_problem(kProblem);
  auto cert = sparsify_pipeline(pf.claim, pf.system, SignatureBound::degree(pf.bound), pf.alpha);
  std::string text = certificate_json(cert, pf.system);
  CHECK(text == certificate_json(cert, pf.system));
  CHECK(text.back() == '\n');
  auto v = verify_certificate_json(text);
  CHECK(v.ok);

  auto j = nlohmann::ordered_json::parse(text);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"vars", "claim", "generators", "bound", "representation", "l0", "l1",
                                         "l0_optimal_up_to_bound", "stats"});
  CHECK(j["l0"] == 2);
  CHECK(j["bound"]["degree"] == 6);

  auto tampered = j;
  tampered["representation"][0]["coeff"] = "2";
  CHECK(!verify_certificate_json(tampered.dump()).ok);
  tampered = j;
  tampered["l0"] = 1;
  CHECK(!verify_certificate_json(tampered.dump()).ok);
  tampered = j;
  tampered["bound"]["degree"] = 3;
  CHECK(!verify_certificate_json(tampered.dump()).ok);
  tampered = j;
  tampered["representation"][0]["gen"] = 9;
  CHECK(!verify_certificate_json(tampered.dump()).ok);
  CHECK(!verify_certificate_json("{").ok);
}
