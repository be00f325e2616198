// End-to-end checks of the command-line interface: exit codes, output
// formats, determinism, and file inputs.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#ifndef SHARPYOUNG_CLI_PATH
#error "SHARPYOUNG_CLI_PATH must be defined"
#endif

namespace {

struct RunResult {
  int exit_code;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::string& args) {
  const std::string out_path = "cli_test_stdout.txt";
  const std::string err_path = "cli_test_stderr.txt";
  const std::string cmd =
      std::string(SHARPYOUNG_CLI_PATH) + " " + args + " >" + out_path + " 2>" + err_path;
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WEXITSTATUS(status);
  auto slurp = [](const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  return r;
}

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s)
    if (c == '\n') ++n;
  return n;
}

}  // namespace

TEST_CASE("cli constants: values, fractions, regimes") {
  const auto r = run_cli("constants --p 4/3 --q 4/3");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"r\":2") != std::string::npos);
  CHECK(r.out.find("\"regime\":\"Classical\"") != std::string::npos);
  CHECK(r.out.find("\"c\":0.707106781186547") != std::string::npos);
  CHECK(r.out.find("\"K\":1.0433897200488") != std::string::npos);

  // decimal exponents satisfy the relation by construction; r comes out
  // within rounding of 2
  const auto rd = run_cli("constants --p 1.3333333333 --q 1.3333333333");
  CHECK(rd.exit_code == 0);
  CHECK(rd.out.find("\"r\":1.99999999") != std::string::npos);
}

TEST_CASE("cli constants: text format and reverse regime") {
  const auto r = run_cli("constants --p 0.5 --q 0.5 --format text");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("regime = Reverse") != std::string::npos);
  CHECK(r.out.find("r = 0.3333333333333333") != std::string::npos);
}

TEST_CASE("cli constants: invalid triple exits 2 with a diagnostic") {
  const auto r = run_cli("constants --p 2 --q 2");
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("not positive finite") != std::string::npos);
  CHECK(r.out.empty());
}

TEST_CASE("cli: corrupted raw (p,q,r) rejected at parse") {
  const auto r = run_cli("verify --p 4/3 --q 4/3 --r 3 --gaussian-pair");
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("violates") != std::string::npos);
}

TEST_CASE("cli verify: gaussian equality pair passes with ratio near 1") {
  const auto r = run_cli("verify --p 4/3 --q 4/3 --gaussian-pair --n 1024 --n2d 512");
  CHECK(r.exit_code == 0);
  CHECK(count_lines(r.out) == 3);  // bilinear, comparison, convolution
  CHECK(r.out.find("\"status\":\"Pass\"") != std::string::npos);
  CHECK(r.out.find("\"status\":\"Fail\"") == std::string::npos);
}

TEST_CASE("cli verify: random pairs, reverse regime, csv format") {
  const auto r = run_cli(
      "verify --p 0.5 --q 0.5 --random --pairs 2 --seed 9 --n 1024 --n2d 256 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("check,lhs,rhs,ratio,regime,status\n", 0) == 0);
  // reverse regime skips the comparison check: bilinear + convolution per pair
  CHECK(count_lines(r.out) == 1 + 2 * 2);
  CHECK(r.out.find("Reverse,Pass") != std::string::npos);
}

TEST_CASE("cli verify: deterministic output for a fixed seed") {
  const std::string args =
      "verify --p 4/3 --q 4/3 --random --pairs 1 --seed 5 --n 512 --n2d 128";
  const auto a = run_cli(args);
  const auto b = run_cli(args);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("cli verify: file inputs") {
  {
    std::ofstream f("cli_f.csv"), g("cli_g.csv");
    f << "x,value\n";
    g << "x,value\n";
    const int n = 513;
    for (int i = 0; i < n; ++i) {
      const double x = -8.0 + 16.0 * i / (n - 1);
      f << x << "," << std::exp(-4.0 / 3.0 * x * x) << "\n";
      g << x << "," << std::exp(-4.0 / 3.0 * x * x) << "\n";
    }
  }
  const auto r = run_cli("verify --p 4/3 --q 4/3 --f cli_f.csv --g cli_g.csv --n2d 256");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"status\":\"Pass\"") != std::string::npos);

  const auto missing = run_cli("verify --p 4/3 --q 4/3 --f nope.csv --g cli_g.csv");
  CHECK(missing.exit_code == 2);
  std::remove("cli_f.csv");
  std::remove("cli_g.csv");
}

TEST_CASE("cli transport: csv dump with header and finite residuals") {
  const auto r = run_cli("transport --random --seed 11 --n 256");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("t,u,uprime,residual\n", 0) == 0);
  CHECK(count_lines(r.out) == 257);
}

TEST_CASE("cli extremize: scan table and fit report") {
  const auto r = run_cli("extremize --p 4/3 --q 4/3 --direction quartic --steps 5 --eps-max 0.3 "
                         "--n 512 --n2d 128");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("epsilon,ratio\n", 0) == 0);
  CHECK(count_lines(r.out) == 6);
  CHECK(r.out.find("\n0,") != std::string::npos);  // eps = 0 row present

  {
    std::ofstream f("cli_fit.csv");
    f << "x,value\n";
    const int n = 257;
    for (int i = 0; i < n; ++i) {
      const double x = -8.0 + 16.0 * i / (n - 1);
      f << x << "," << 1.7 * std::exp(-2.3 * (x - 0.4) * (x - 0.4)) << "\n";
    }
  }
  const auto fit = run_cli("extremize --fit cli_fit.csv");
  CHECK(fit.exit_code == 0);
  CHECK(fit.out.find("\"amplitude\":1.7") != std::string::npos);
  CHECK(fit.out.find("\"rate\":2.3") != std::string::npos);
  CHECK(fit.out.find("\"residual\":") != std::string::npos);
  std::remove("cli_fit.csv");
}

TEST_CASE("cli sweep: header, invalid rows marked, degenerate sweep matches constants") {
  const auto r = run_cli("sweep --p-min 0.5 --p-max 2.5 --q-min 0.5 --q-max 2.5 --steps-p 3 "
                         "--steps-q 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("p,q,r,K,young_constant\n", 0) == 0);
  CHECK(count_lines(r.out) == 10);
  CHECK(r.out.find("invalid,invalid,invalid") != std::string::npos);  // e.g. p=q=2.5

  const auto single = run_cli("sweep --p-min 4/3 --p-max 4/3 --q-min 4/3 --q-max 4/3 "
                              "--steps-p 1 --steps-q 1");
  CHECK(single.exit_code == 0);
  CHECK(single.out.find("1.0433897200488") != std::string::npos);
  CHECK(single.out.find("0.8773826753016") != std::string::npos);
}

TEST_CASE("cli sweep: symmetric sweep gives a symmetric K column") {
  const auto r = run_cli("sweep --p-min 1.1 --p-max 1.9 --q-min 1.1 --q-max 1.9 --steps-p 4 "
                         "--steps-q 4");
  CHECK(r.exit_code == 0);
  // parse rows into a 4x4 K matrix and check symmetry
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  double K[4][4];
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      REQUIRE(std::getline(in, line));
      const auto c1 = line.find(','), c2 = line.find(',', c1 + 1), c3 = line.find(',', c2 + 1);
      const auto c4 = line.find(',', c3 + 1);
      K[i][j] = std::stod(line.substr(c3 + 1, c4 - c3 - 1));
    }
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(K[i][j] == doctest::Approx(K[j][i]).epsilon(1e-12));
}

TEST_CASE("cli sweep: young constant crosses the regime boundary continuously") {
  // p = q crossing 1: the constant tends to 1 from both sides
  const auto r = run_cli("sweep --p-min 0.9 --p-max 1.1 --q-min 0.9 --q-max 1.1 --steps-p 5 "
                         "--steps-q 5");
  CHECK(r.exit_code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    const auto c1 = line.find(','), c2 = line.find(',', c1 + 1);
    const double p = std::stod(line.substr(0, c1));
    const double q = std::stod(line.substr(c1 + 1, c2 - c1 - 1));
    if (std::abs(p - 1.0) < 1e-9 && std::abs(q - 1.0) < 1e-9) {
      const auto last = line.rfind(',');
      CHECK(std::stod(line.substr(last + 1)) == doctest::Approx(1.0).epsilon(1e-9));
    }
  }
}

TEST_CASE("cli: unknown flags and missing subcommand exit 2") {
  CHECK(run_cli("constants --p 4/3 --q 4/3 --bogus 1").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("verify --p 4/3 --q 4/3").exit_code == 2);  // no inputs chosen
}

TEST_CASE("cli: output file writing") {
  const auto r = run_cli("constants --p 4/3 --q 4/3 --out cli_const.json");
  CHECK(r.exit_code == 0);
  CHECK(r.out.empty());
  std::ifstream in("cli_const.json");
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(content.find("\"young_constant\":") != std::string::npos);
  std::remove("cli_const.json");
}
