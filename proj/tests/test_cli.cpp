#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qsa/qsa.hpp"

namespace {

const std::string kCli = QSA_CLI_PATH;

int run_cmd(const std::string& args) {
  const std::string cmd = "\"" + kCli + "\" " + args;
  const int rc = std::system(cmd.c_str());
  REQUIRE(rc != -1);
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  REQUIRE(f.good());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

TEST_CASE("sweep output is deterministic and well-formed") {
  REQUIRE(run_cmd("sweep --steps 11 --out cli_sweep_a.csv") == 0);
  REQUIRE(run_cmd("sweep --steps 11 --out cli_sweep_b.csv") == 0);
  const std::string a = slurp("cli_sweep_a.csv");
  const std::string b = slurp("cli_sweep_b.csv");
  CHECK(a == b);

  const std::vector<std::string> lines = split(a, '\n');
  REQUIRE(lines.size() == 13);  // header + 11 rows + trailing empty
  CHECK(lines[0] ==
        "omega,raw_capacity,gated_capacity,remote_min_pt_eig,"
        "local_min_pt_eig");
  CHECK(lines[12].empty());
  // final row sits at omega = 1/2 where the gated capacity vanishes
  const std::vector<std::string> last = split(lines[11], ',');
  REQUIRE(last.size() == 5);
  CHECK(last[0] == "0.500000000");
  CHECK(last[2] == "0.000000000");
  CHECK(a.find("\r") == std::string::npos);  // LF endings only
}

TEST_CASE("sweep json mirrors the csv values") {
  REQUIRE(run_cmd("sweep --steps 5 --omega-min 0 --omega-max 0.5 "
                  "--out cli_sweep.csv") == 0);
  REQUIRE(run_cmd("sweep --steps 5 --omega-min 0 --omega-max 0.5 "
                  "--format json --out cli_sweep.json") == 0);
  const std::vector<std::string> lines = split(slurp("cli_sweep.csv"), '\n');
  const nlohmann::json rows = nlohmann::json::parse(slurp("cli_sweep.json"));
  REQUIRE(rows.size() == 5);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::vector<std::string> cells = split(lines[i + 1], ',');
    CHECK(std::abs(rows[i]["omega"].get<double>() - std::stod(cells[0])) <
          1e-9);
    CHECK(std::abs(rows[i]["raw_capacity"].get<double>() -
                   std::stod(cells[1])) < 1e-9);
    CHECK(std::abs(rows[i]["gated_capacity"].get<double>() -
                   std::stod(cells[2])) < 1e-9);
    CHECK(std::abs(rows[i]["remote_min_pt_eig"].get<double>() -
                   std::stod(cells[3])) < 1e-9);
    CHECK(std::abs(rows[i]["local_min_pt_eig"].get<double>() -
                   std::stod(cells[4])) < 1e-9);
  }
}

TEST_CASE("sweep rejects bad parameters and unwritable paths") {
  CHECK(run_cmd("sweep --steps 1 --out cli_bad.csv 2>/dev/null") == 2);
  CHECK(run_cmd("sweep --omega-max 0.7 --out cli_bad.csv 2>/dev/null") == 2);
  CHECK(run_cmd("sweep --format xml --out cli_bad.csv 2>/dev/null") == 2);
  CHECK(run_cmd("sweep --out /nonexistent-dir-qsa/out.csv 2>/dev/null") == 3);
}

TEST_CASE("verify passes and reports the documented discrepancies") {
  REQUIRE(run_cmd("verify --json cli_verify.json > cli_verify.txt") == 0);
  const nlohmann::json report = nlohmann::json::parse(slurp("cli_verify.json"));
  CHECK(report["passed"].get<bool>());

  int discrepancies = 0;
  bool smin = false, spectrum = false, capacity_max = false, eb = false;
  for (const auto& claim : report["claims"]) {
    const std::string id = claim["id"].get<std::string>();
    const std::string verdict = claim["verdict"].get<std::string>();
    CHECK(verdict != "FAIL");
    if (verdict == "DISCREPANCY") {
      ++discrepancies;
      smin |= id == "depol-min-output-entropy-arithmetic";
      spectrum |= id == "product-input-local-matrix-spectrum";
      capacity_max |= id == "capacity-max-vs-reference";
      eb |= id == "cloner-entanglement-breaking";
    }
  }
  CHECK(discrepancies == 4);
  CHECK(smin);
  CHECK(spectrum);
  CHECK(capacity_max);
  CHECK(eb);

  const std::string text = slurp("cli_verify.txt");
  CHECK(text.find("PASS") != std::string::npos);
  CHECK(text.find("DISCREPANCY") != std::string::npos);
  CHECK(text.find("FAIL") == std::string::npos);
  CHECK(text.find("0.3354") != std::string::npos);
}

TEST_CASE("thresholds subcommand") {
  REQUIRE(run_cmd("thresholds > cli_thresholds.txt") == 0);
  const std::string text = slurp("cli_thresholds.txt");
  CHECK(text.find("0.109687625") != std::string::npos);
  CHECK(text.find("0.066987298") != std::string::npos);
  CHECK(text.find("sqrt(39)/16") != std::string::npos);
  CHECK(text.find("sqrt(48)/16") != std::string::npos);

  CHECK(run_cmd("thresholds --n-clones 3 2>/dev/null") == 2);
}

TEST_CASE("channel subcommand") {
  REQUIRE(run_cmd("channel cloner --n 2 > cli_channel.txt") == 0);
  const std::string cloner_text = slurp("cli_channel.txt");
  CHECK(cloner_text.find("0.833333") != std::string::npos);
  CHECK(cloner_text.find("2 -> 3") != std::string::npos);

  REQUIRE(run_cmd("channel depolarizing --d 3 --p 1 > cli_channel.txt") == 0);
  const std::string depol_text = slurp("cli_channel.txt");
  CHECK(depol_text.find("capacity:       0.000000000") != std::string::npos);

  REQUIRE(run_cmd("channel joint --d 2 --p 1 --n 2 > cli_channel.txt") == 0);
  const std::string joint_text = slurp("cli_channel.txt");
  CHECK(joint_text.find("basis-ensemble chi: 0.000000000") !=
        std::string::npos);

  CHECK(run_cmd("channel cloner-complementary --n 2 > /dev/null") == 0);
  CHECK(run_cmd("channel bogus 2>/dev/null") == 2);
  CHECK(run_cmd("channel depolarizing --d 1 2>/dev/null") == 2);
  CHECK(run_cmd("nonsense-subcommand 2>/dev/null") == 2);
}
