// Exit-code and report-shape contract of the command-line tool, exercised
// through real process invocations.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

int failures = 0;

void expect(bool ok, const std::string& what) {
  if (!ok) {
    ++failures;
    std::cerr << "[FAIL] " << what << "\n";
  } else {
    std::cout << "[ok] " << what << "\n";
  }
}

int run(const std::string& cmd) {
  int status = std::system(cmd.c_str());
  if (status == -1) return -1;
  return WEXITSTATUS(status);
}

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  nlohmann::json j;
  in >> j;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: cli_contract <path-to-cli>\n";
    return 2;
  }
  std::string cli = argv[1];
  std::string tmp = "cli_contract_report.json";

  // a passing run exits 0 and produces a well-formed report
  expect(run(cli + " count-bundle --a 2 --m 3 --q 2 --out " + tmp) == 0,
         "count-bundle exits 0 on success");
  {
    nlohmann::json j = read_json(tmp);
    expect(j["pass"] == true, "report records overall pass");
    expect(j["schema_version"] == 1, "report carries the schema version");
    expect(j["assertions"][0]["details"]["value"] == "21", "count of the (2,3,2) bundle is 21");
    expect(j["inputs"]["a"] == 2 && j["inputs"]["m"] == 3 && j["inputs"]["q"] == 2,
           "inputs are echoed");
  }

  // identical config produces identical reports apart from timing
  {
    std::string tmp2 = "cli_contract_report2.json";
    expect(run(cli + " verify-kummer --max-sum 8 --primes 2,3 --out " + tmp) == 0,
           "verify-kummer exits 0");
    expect(run(cli + " verify-kummer --max-sum 8 --primes 2,3 --out " + tmp2) == 0,
           "verify-kummer exits 0 again");
    nlohmann::json a = read_json(tmp), b = read_json(tmp2);
    a.erase("timing_ms");
    b.erase("timing_ms");
    expect(a == b, "reports are byte-identical modulo the timing field");
    std::remove(tmp2.c_str());
  }

  // usage errors exit 2
  expect(run(cli + " no-such-subcommand 2>/dev/null") == 2, "unknown subcommand exits 2");
  expect(run(cli + " 2>/dev/null") == 2, "missing subcommand exits 2");
  expect(run(cli + " count-bundle --a 1 --m 2 --q 2 2>/dev/null") == 2,
         "invalid parameters exit 2");
  expect(run(cli + " verify-free-tensor --char 6 --dim 3 2>/dev/null") == 2,
         "non-prime characteristic exits 2");

  // flag-free defaults run the reference configurations and pass
  expect(run(cli + " verify-kummer --out " + tmp) == 0, "verify-kummer defaults pass");
  expect(run(cli + " verify-nakayama --out " + tmp) == 0, "verify-nakayama defaults pass");
  expect(run(cli + " chow-phi --out " + tmp) == 0, "chow-phi defaults pass");
  expect(run(cli + " verify-tannaka-shape --out " + tmp) == 0,
         "verify-tannaka-shape defaults pass");

  // per-candidate branch records on request
  expect(run(cli + " chow-phi --bound 1 --list-candidates --out " + tmp) == 0,
         "chow-phi --list-candidates exits 0");
  {
    nlohmann::json j = read_json(tmp);
    bool has_candidates = false;
    for (const auto& a : j["assertions"])
      if (a["details"].contains("candidates"))
        has_candidates = a["details"]["candidates"].size() == 36;  // (2 + 1*2*2)^2
    expect(has_candidates, "candidate branches listed for bound 1");
  }

  // a quick real run of a solver-backed subcommand
  expect(run(cli + " verify-free-tensor --char 2 --dim 3 --a 2,4,8,16 --out " + tmp) == 0,
         "verify-free-tensor flagship exits 0");
  {
    nlohmann::json j = read_json(tmp);
    bool saw_scan = false;
    for (const auto& a : j["assertions"])
      if (a["name"] == "point-stabilizer-trivial") {
        saw_scan = a["details"]["group_order_scanned"] == 168;
      }
    expect(saw_scan, "168 group elements scanned");
  }

  std::remove(tmp.c_str());
  return failures == 0 ? 0 : 1;
}
