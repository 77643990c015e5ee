// End-to-end tests for the bluescheme binary: report lines, exit codes,
// golden artifacts, and JSON round-trips.
//
// Usage: bluescheme_cli_tests <path-to-bluescheme> <golden-dir>

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "poset_document.hpp"
#include "support/check.hpp"
#include "support/cli_runner.hpp"

namespace fs = std::filesystem;
using bluescheme::cli::PosetDocument;
using bluescheme::testing::Checker;
using bluescheme::testing::run_cli;

namespace {

std::string read_file(const fs::path& path) {
  std::ifstream in(path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: bluescheme_cli_tests <binary> <golden-dir>\n";
    return 2;
  }
  const std::string bin = argv[1];
  const fs::path golden = argv[2];
  const fs::path tmp =
      fs::temp_directory_path() / ("bluescheme_cli_" + std::to_string(getpid()));
  fs::create_directories(tmp);

  Checker check;

  // ---- report lines ----
  {
    const auto r = run_cli(bin, "proj --builtin gr24");
    check.expect_eq(r.exit_code, 0, "proj gr24 exit code");
    check.expect_eq(
        r.output,
        std::string(
            "gr24: 36 points; ranks 6/12/11/6/1; 6 closed; 1 generic\n"),
        "proj gr24 report");
  }
  {
    const auto r = run_cli(bin, "spec --builtin gr24-cone");
    check.expect_eq(r.exit_code, 0, "spec gr24-cone exit code");
    check.expect_eq(r.output,
                    std::string("gr24-cone: 37 primes; ranks 1/6/12/11/6/1; "
                                "1 closed; 1 generic\n"),
                    "spec gr24-cone report");
  }
  {
    const auto r = run_cli(bin, "spec --builtin a2");
    check.expect_eq(r.output,
                    std::string("a2: 4 primes; ranks 1/2/1; 1 closed; "
                                "1 generic\n"),
                    "spec a2 report");
  }
  {
    const auto r = run_cli(bin, "proj --builtin p2");
    check.expect_eq(r.output,
                    std::string("p2: 7 points; ranks 3/3/1; 3 closed; "
                                "1 generic\n"),
                    "proj p2 report");
  }

  // ---- determinism ----
  {
    const auto first = run_cli(bin, "proj --builtin gr24");
    const auto second = run_cli(bin, "proj --builtin gr24");
    check.expect(first.output == second.output, "byte-identical reruns");
  }

  // ---- chart goldens ----
  {
    const auto r = run_cli(bin, "chart --builtin gr24 --at x12");
    check.expect_eq(r.exit_code, 0, "chart x12 exit code");
    check.expect(r.output == read_file(golden / "gr24_chart_x12.txt"),
                 "chart x12 matches golden file");
  }
  {
    const auto r = run_cli(bin, "chart --builtin gr24 --at x13");
    check.expect(r.output == read_file(golden / "gr24_chart_x13.txt"),
                 "chart x13 matches golden file");
  }
  {
    const auto r = run_cli(bin, "chart --builtin p1 --at T0");
    check.expect(r.output.find("# a = T1/T0") != std::string::npos,
                 "p1 chart records the fraction");
    check.expect(r.output.find("gens a;") != std::string::npos,
                 "p1 chart is free on one generator");
  }

  // ---- chart output reparses ----
  {
    const auto r = run_cli(bin, "chart --builtin gr24 --at x12");
    const fs::path path = tmp / "chart_x12.bp";
    write_file(path, r.output);
    const auto reparsed = run_cli(bin, "spec --file " + path.string());
    check.expect_eq(reparsed.exit_code, 0, "chart output parses again");
    check.expect_eq(reparsed.output,
                    std::string("gr24_x12: 17 primes; ranks 1/4/6/5/1; "
                                "1 closed; 1 generic\n"),
                    "chart spectrum report");
  }

  // ---- DOT and JSON artifacts ----
  {
    const fs::path dot = tmp / "gr24.dot";
    const fs::path json = tmp / "gr24.json";
    const auto r = run_cli(bin, "proj --builtin gr24 --dot " + dot.string() +
                                    " --json " + json.string());
    check.expect_eq(r.exit_code, 0, "artifact run exit code");
    check.expect(read_file(dot) == read_file(golden / "gr24_poset.dot"),
                 "gr24 DOT matches golden file");
    check.expect(read_file(json) == read_file(golden / "gr24_poset.json"),
                 "gr24 JSON matches golden file");

    // serialize -> parse -> serialize is a fixpoint
    const std::string text = read_file(json);
    const PosetDocument doc = PosetDocument::from_json(text);
    check.expect(doc.to_json() == text, "JSON round-trip fixpoint");
    check.expect_eq(doc.points.size(), std::size_t{36}, "JSON point count");
  }

  // ---- counting table ----
  {
    const auto r = run_cli(bin, "count --q 2,3");
    check.expect_eq(r.exit_code, 0, "count exit code");
    check.expect_eq(r.output,
                    std::string("q=2: N(q)=35 oracle=35 ok\n"
                                "q=3: N(q)=130 oracle=130 ok\n"),
                    "count table");
  }
  {
    const auto r = run_cli(bin, "count --q 4");
    check.expect_eq(r.exit_code, 6, "non-prime q exit code");
    check.expect_eq(r.output,
                    std::string("q=4: N(q)=357 oracle=skipped (q not prime)\n"),
                    "non-prime q still prints the polynomial value");
  }

  // ---- exit codes ----
  {
    const fs::path bad = tmp / "bad.bp";
    write_file(bad, "blueprint broken { gens x y\n rel x == y; }");
    const auto r = run_cli(bin, "spec --file " + bad.string());
    check.expect_eq(r.exit_code, 2, "parse error exit code");
  }
  {
    std::ostringstream big;
    big << "blueprint big { gens";
    for (int i = 0; i < 25; ++i) big << " g" << i;
    big << "; }";
    const fs::path path = tmp / "big.bp";
    write_file(path, big.str());
    const auto r = run_cli(bin, "spec --file " + path.string());
    check.expect_eq(r.exit_code, 3, "enumeration guard exit code");
  }
  {
    const auto r = run_cli(bin, "proj --builtin a2");
    check.expect_eq(r.exit_code, 4, "ungraded proj exit code");
  }
  {
    const auto r = run_cli(bin, "chart --builtin gr24 --at x99");
    check.expect_eq(r.exit_code, 5, "unknown generator exit code");
  }
  {
    const auto r = run_cli(bin, "spec --builtin nope");
    check.expect_eq(r.exit_code, 1, "unknown builtin is a usage error");
  }
  {
    const auto r = run_cli(bin, "spec");
    check.expect_eq(r.exit_code, 1, "missing input is a usage error");
  }

  // ---- budget plumbing ----
  {
    const auto r = run_cli(bin, "proj --builtin gr24 --budget 1");
    check.expect_eq(
        r.output,
        std::string(
            "gr24: 36 points; ranks 6/12/11/6/1; 6 closed; 1 generic\n"),
        "census is stable at budget 1");
  }

  fs::remove_all(tmp);
  std::cout << (check.total() - check.failed()) << "/" << check.total()
            << " cli checks passed\n";
  return check.failed() == 0 ? 0 : 1;
}
