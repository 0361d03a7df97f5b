#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <sys/wait.h>

#include "coex/io.hpp"

using namespace coex;
namespace fs = std::filesystem;

namespace {

struct RunResult {
  int code = -1;
  std::string output;
};

const char* cli_path() {
  const char* path = std::getenv("COEX_CLI");
  REQUIRE_MESSAGE(path != nullptr, "COEX_CLI must point at the built binary");
  return path;
}

fs::path work_dir() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / "coex_cli_test";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

fs::path write_file(const std::string& name, const Json& doc) {
  const fs::path path = work_dir() / name;
  save_json_file(path.string(), doc);
  return path;
}

fs::path write_text(const std::string& name, const std::string& text) {
  const fs::path path = work_dir() / name;
  std::ofstream out(path);
  out << text;
  return path;
}

RunResult run(const std::string& args) {
  const fs::path out_file = work_dir() / "stdout.txt";
  const std::string cmd =
      std::string(cli_path()) + " " + args + " > " + out_file.string() + " 2>&1";
  const int status = std::system(cmd.c_str());
  RunResult result;
  result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out_file);
  std::ostringstream text;
  text << in.rdbuf();
  result.output = text.str();
  return result;
}

Json chain2_json() { return algebra_to_json(*chain_algebra(2)); }
Json mo2_json() { return algebra_to_json(*mo2()); }
Json tuple1_json() { return Json{{"kind", "tuple"}, {"dim", 1}}; }

}  // namespace

TEST_CASE("validate: table axioms and the MV flag") {
  const auto chain = write_file("chain2.json", chain2_json());
  CHECK(run("validate --algebra " + chain.string()).code == 0);

  const auto mo2_file = write_file("mo2.json", mo2_json());
  CHECK(run("validate --algebra " + mo2_file.string()).code == 0);
  const auto mv = run("validate --algebra " + mo2_file.string() + " --mv");
  CHECK(mv.code == 1);
  CHECK(mv.output.find("(b)") != std::string::npos);

  const auto broken = write_text("broken.json", "{not json");
  CHECK(run("validate --algebra " + broken.string()).code == 2);
}

TEST_CASE("verify-csm: closed forms and exit codes") {
  const auto alg = write_file("tuple1.json", tuple1_json());
  const auto subset = write_file("s_half.json", Json{{"S", Json::array({Json::array({"1/2"}), Json::array({"1"})})}});
  const auto product = write_file("product.json", Json{{"kind", "product"}});

  CHECK(run("verify-csm --algebra " + alg.string() + " --subset " + subset.string() + " --csm " +
            product.string())
            .code == 0);
  const auto strong = run("verify-csm --algebra " + alg.string() + " --subset " + subset.string() +
                          " --csm " + product.string() + " --strong");
  CHECK(strong.code == 1);
  CHECK(strong.output.find("(e*)") != std::string::npos);

  const auto grid = write_file("grid22.json", Json{{"kind", "mv-chain-product"}, {"orders", {2, 2}}});
  const auto grid_subset = write_file(
      "s_grid.json",
      Json{{"S", Json::array({Json::array({"1/2", "0"}), Json::array({"0", "1/2"}),
                              Json::array({"1", "1"})})}});
  const auto joinmeet = write_file("joinmeet.json", Json{{"kind", "join-meet"}});
  CHECK(run("verify-csm --algebra " + grid.string() + " --subset " + grid_subset.string() +
            " --csm " + joinmeet.string() + " --strong")
            .code == 0);

  // a table with a hole is an input error
  Json holey;
  holey["kind"] = "table";
  holey["S"] = Json::array({Json::array({"1"})});
  holey["entries"] = Json::array();
  const auto holey_file = write_file("holey.json", holey);
  CHECK(run("verify-csm --algebra " + alg.string() + " --csm " + holey_file.string()).code == 2);
}

TEST_CASE("coexist: certificates and failures") {
  const auto alg = write_file("tuple1.json", tuple1_json());
  const auto subset = write_file("s_half.json", Json{{"S", Json::array({Json::array({"1/2"}), Json::array({"1"})})}});
  const auto product = write_file("product.json", Json{{"kind", "product"}});
  const auto cert_path = work_dir() / "cert.json";

  const auto ok = run("coexist --algebra " + alg.string() + " --subset " + subset.string() +
                      " --csm " + product.string() + " --out " + cert_path.string());
  CHECK(ok.code == 0);
  const Json cert = load_json_file(cert_path.string());
  CHECK(cert.at("boolean_atoms") == 4);  // 2^|S| atoms, a 16 element algebra
  CHECK(cert.at("checks").at("decomposition") == true);
  CHECK(cert.at("checks").at("diagram") == true);
  CHECK(cert.at("checks").at("observable") == true);
  CHECK(cert.at("witnesses").size() == 2);

  // degenerate S = {1}
  const auto unit_only = write_file("s_unit.json", Json{{"S", Json::array({Json::array({"1"})})}});
  CHECK(run("coexist --algebra " + alg.string() + " --subset " + unit_only.string() + " --csm " +
            product.string())
            .code == 0);

  // corrupt one table value and the verification refuses to build
  auto algebra = TupleEffectAlgebra::create(1);
  auto good = csm_product(CsmDomain::make(
      algebra, {algebra->element(GroupVector{Rational(1, 2)}), algebra->unit()}));
  Json table = csm_to_json(*good);
  table["entries"][1]["value"] = Json::array({"1/7"});  // ⟨∅|{1/2}⟩ != 1/2
  const auto bad_file = write_file("bad_csm.json", table);
  const auto bad = run("coexist --algebra " + alg.string() + " --csm " + bad_file.string());
  CHECK(bad.code == 1);
}

TEST_CASE("reverse: identity observable reproduces the join-meet table") {
  const auto alg = write_file("pow2.json", algebra_to_json(*powerset_algebra(2)));
  const auto obs = write_file(
      "identity_obs.json",
      Json{{"kind", "observable"}, {"atoms", 2}, {"atom_values", {"a", "b"}}});
  const auto subset = write_file("s_atoms.json", Json{{"S", {"a", "b", "1"}}});
  const auto out_path = work_dir() / "reversed.json";

  const auto ok = run("reverse --algebra " + alg.string() + " --observable " + obs.string() +
                      " --subset " + subset.string() + " --sweep --out " + out_path.string());
  CHECK(ok.code == 0);

  // the emitted table re-verifies as strong: the report round-trips
  CHECK(run("verify-csm --algebra " + alg.string() + " --csm " + out_path.string() + " --strong")
            .code == 0);

  // and it equals the join-meet table of the Boolean algebra
  auto algebra = powerset_algebra(2);
  const std::vector<Element> s = {algebra->element("a"), algebra->element("b"), algebra->unit()};
  auto direct = csm_joinmeet(CsmDomain::make(algebra, s));
  auto emitted = load_csm(load_json_file(out_path.string()), algebra, std::nullopt);
  CHECK(same_table(*direct, *emitted));

  // an element outside the range is an input error
  const auto missing = write_file("s_missing.json", Json{{"S", {"ab", "1"}}});
  CHECK(run("reverse --algebra " + alg.string() + " --observable " + obs.string() + " --subset " +
            missing.string())
            .code == 2);
}

TEST_CASE("witness: derivation, verification and file round trip") {
  const auto alg = write_file("tuple1.json", tuple1_json());
  const auto subset = write_file("s_half.json", Json{{"S", Json::array({Json::array({"1/2"}), Json::array({"1"})})}});
  const auto product = write_file("product.json", Json{{"kind", "product"}});
  const auto beta_path = work_dir() / "beta.json";

  const auto ok = run("witness --algebra " + alg.string() + " --subset " + subset.string() +
                      " --csm " + product.string() + " --out " + beta_path.string());
  CHECK(ok.code == 0);

  // perturb the emitted witness and re-check it against the mapping
  Json doc = load_json_file(beta_path.string());
  Json witness = doc.at("witness");
  for (auto& row : witness.at("values"))
    if (row.at("X").size() == 2) row["value"] = Json::array({"1/3"});
  const auto bad_beta = write_file("beta_bad.json", witness);
  const auto bad = run("witness --algebra " + alg.string() + " --subset " + subset.string() +
                       " --csm " + product.string() + " --witness " + bad_beta.string());
  CHECK(bad.code == 1);

  // no ambient group on MO2: an input error, not a violation
  const auto mo2_file = write_file("mo2.json", mo2_json());
  Json trivial;
  trivial["kind"] = "table";
  trivial["S"] = Json::array({"1"});
  trivial["entries"] = Json::array({Json{{"U", Json::array()}, {"V", Json::array()}, {"value", "0"}},
                                    Json{{"U", Json::array()}, {"V", {"1"}}, {"value", "1"}},
                                    Json{{"U", {"1"}}, {"V", Json::array()}, {"value", "0"}},
                                    Json{{"U", {"1"}}, {"V", {"1"}}, {"value", "1"}}});
  const auto trivial_file = write_file("trivial_mo2_csm.json", trivial);
  CHECK(run("witness --algebra " + mo2_file.string() + " --csm " + trivial_file.string()).code == 2);
}

TEST_CASE("search: outcomes map to exit codes and the log is appended") {
  const auto chain = write_file("chain2.json", chain2_json());
  const auto subset = write_file("s_chain.json", Json{{"S", {"1/2", "1"}}});
  const auto log_path = work_dir() / "search_log.jsonl";

  CHECK(run("search --algebra " + chain.string() + " --subset " + subset.string() + " --out " +
            log_path.string())
            .code == 0);

  const auto mo2_file = write_file("mo2.json", mo2_json());
  const auto mo2_subset = write_file("s_mo2.json", Json{{"S", {"a", "b", "1"}}});
  CHECK(run("search --algebra " + mo2_file.string() + " --subset " + mo2_subset.string() +
            " --out " + log_path.string())
            .code == 1);

  CHECK(run("search --algebra " + mo2_file.string() + " --subset " + mo2_subset.string() +
            " --budget-nodes 1 --out " + log_path.string())
            .code == 3);

  // witness search through the CLI
  CHECK(run("search --algebra " + chain.string() + " --subset " + subset.string() + " --witness")
            .code == 0);

  // three records were appended
  std::ifstream in(log_path);
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) {
    const Json record = Json::parse(line);
    CHECK(record.contains("instance"));
    CHECK(record.contains("outcome"));
    CHECK(record.contains("nodes"));
    ++lines;
  }
  CHECK(lines == 3);
}
