#include <doctest.h>

#include <qkp/exact.hpp>
#include <qkp/generators.hpp>
#include <qkp/greedy.hpp>
#include <qkp/instance.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

#ifndef QKP_CLI_PATH
#error "QKP_CLI_PATH must point at the CLI binary"
#endif

namespace fs = std::filesystem;
using namespace qkp;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("qkp_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

int run_cli(const std::string& args) {
  std::string cmd = std::string(QKP_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  int rc = std::system(cmd.c_str());
  return rc == -1 ? -1 : WEXITSTATUS(rc);
}

std::vector<std::string> read_lines(const fs::path& p) {
  std::ifstream in(p);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) lines.push_back(line);
  return lines;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(tok);
  return out;
}

}  // namespace

TEST_CASE("cli gen produces a loadable corpus that matches the library") {
  TempDir tmp;
  auto corpus_path = tmp.path / "corpus.ndjson";
  REQUIRE(run_cli("gen --dist strong --n 8 --count 5 --seed 42 --out " +
                  corpus_path.string()) == 0);

  auto corpus = load_corpus_file(corpus_path.string());
  REQUIRE(corpus.size() == 5);

  GeneratorConfig cfg;
  cfg.kind = DistributionKind::Strong;
  cfg.n_items = 8;
  cfg.seed = 42;
  auto want = sample_corpus(cfg, 5);
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(corpus[i].values == want[i].values);
    CHECK(corpus[i].weights == want[i].weights);
    CHECK(corpus[i].capacity == want[i].capacity);
  }
}

TEST_CASE("cli solve reports the library values") {
  TempDir tmp;
  auto corpus_path = tmp.path / "corpus.ndjson";
  REQUIRE(run_cli("gen --dist profit --n 8 --count 4 --seed 3 --out " +
                  corpus_path.string()) == 0);
  auto corpus = load_corpus_file(corpus_path.string());

  auto lg_csv = tmp.path / "lg.csv";
  REQUIRE(run_cli("solve --algo lg --in " + corpus_path.string() + " --out " +
                  lg_csv.string()) == 0);
  auto lines = read_lines(lg_csv);
  REQUIRE(lines.size() == 5);  // header + 4 rows
  CHECK(lines[0] == "instance,algo,value");
  for (std::size_t i = 0; i < 4; ++i) {
    auto cols = split_csv(lines[i + 1]);
    REQUIRE(cols.size() == 3);
    CHECK(cols[0] == std::to_string(i));
    CHECK(cols[1] == "lg");
    CHECK(std::stoll(cols[2]) == lazy_greedy(corpus[i]).value);
  }

  auto dp_csv = tmp.path / "dp.csv";
  REQUIRE(run_cli("solve --algo dp --in " + corpus_path.string() + " --out " +
                  dp_csv.string()) == 0);
  auto dp_lines = read_lines(dp_csv);
  for (std::size_t i = 0; i < 4; ++i) {
    auto cols = split_csv(dp_lines[i + 1]);
    CHECK(std::stoll(cols[2]) == dp_opt(corpus[i]).value);
  }

  // sa is seeded and deterministic
  auto sa1 = tmp.path / "sa1.csv";
  auto sa2 = tmp.path / "sa2.csv";
  REQUIRE(run_cli("solve --algo sa --seed 9 --in " + corpus_path.string() + " --out " +
                  sa1.string()) == 0);
  REQUIRE(run_cli("solve --algo sa --seed 9 --in " + corpus_path.string() + " --out " +
                  sa2.string()) == 0);
  CHECK(read_lines(sa1) == read_lines(sa2));

  CHECK(run_cli("solve --algo nope --in " + corpus_path.string() + " --out " +
                (tmp.path / "x.csv").string()) != 0);
}

TEST_CASE("cli bias emits one probability per item") {
  TempDir tmp;
  auto corpus_path = tmp.path / "corpus.ndjson";
  REQUIRE(run_cli("gen --dist strong --n 10 --count 1 --seed 5 --out " +
                  corpus_path.string()) == 0);

  auto bias_csv = tmp.path / "bias.csv";
  REQUIRE(run_cli("bias --in " + corpus_path.string() + " --kind logistic --k 15 --out " +
                  bias_csv.string()) == 0);
  auto lines = read_lines(bias_csv);
  REQUIRE(lines.size() == 11);  // header + 10 items
  CHECK(lines[0] == "i,ratio,p");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto cols = split_csv(lines[i]);
    REQUIRE(cols.size() == 3);
    double p = std::stod(cols[2]);
    CHECK(p >= 0.0);
    CHECK(p <= 1.0);
  }
}

TEST_CASE("cli qkp optimizes a small corpus") {
  TempDir tmp;
  auto corpus_path = tmp.path / "corpus.ndjson";
  REQUIRE(run_cli("gen --dist strong --n 8 --count 2 --seed 11 --out " +
                  corpus_path.string()) == 0);
  auto corpus = load_corpus_file(corpus_path.string());

  auto out_csv = tmp.path / "qkp.csv";
  REQUIRE(run_cli("qkp --mixer hourglass --in " + corpus_path.string() +
                  " --k-range 12:13 --grid 8x8 --out " + out_csv.string()) == 0);
  auto lines = read_lines(out_csv);
  REQUIRE(lines.size() == 3);  // header + 2 instances
  CHECK(lines[0] ==
        "instance,mixer,k,theta,beta,gamma,objective,expected_best,p_opt_best,approx_ratio");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto cols = split_csv(lines[i]);
    REQUIRE(cols.size() == 10);
    CHECK(cols[1] == "hourglass");
    double k = std::stod(cols[2]);
    CHECK((k == 12.0 || k == 13.0));
    CHECK(std::stod(cols[3]) == 0.0);  // hourglass ignores theta
    double ratio = std::stod(cols[9]);
    CHECK(ratio > 0.0);
    CHECK(ratio <= 1.0 + 1e-9);
    double opt = static_cast<double>(dp_opt(corpus[i - 1]).value);
    CHECK(std::stod(cols[7]) <= opt + 1e-6);
  }
}

TEST_CASE("cli bench writes tables, sweep, and manifest") {
  TempDir tmp;
  auto out_dir = tmp.path / "bench";
  REQUIRE(run_cli("bench --preset ci --dist strong --seed 2 --threads 1 --instances 2 "
                  "--grid 6x6 --k-range 12,16 --theta 0,-1 --repetitions 3 --out " +
                  out_dir.string()) == 0);

  auto tables = read_lines(out_dir / "tables.csv");
  REQUIRE(tables.size() == 7);  // header + 6 solvers for one distribution
  CHECK(tables[0] == "dist,solver,p_opt,p_beat_lg,p_beat_vg,expected_ratio");
  for (std::size_t i = 1; i < tables.size(); ++i) {
    auto cols = split_csv(tables[i]);
    REQUIRE(cols.size() == 6);
    CHECK(cols[0] == "strong");
  }

  auto sweep = read_lines(out_dir / "sweep.csv");
  REQUIRE(sweep.size() == 1 + 2 + 4);  // header, 2 hourglass rows, 4 copula rows
  CHECK(sweep[0] == "dist,mixer,k,theta,mean_ratio");

  CHECK(fs::exists(out_dir / "manifest.json"));
}

TEST_CASE("cli rejects malformed invocations") {
  TempDir tmp;
  CHECK(run_cli("") != 0);                       // subcommand required
  CHECK(run_cli("gen --dist bogus --out " + (tmp.path / "c.ndjson").string()) != 0);
  CHECK(run_cli("qkp --mixer hourglass --in /nonexistent.ndjson --out " +
                (tmp.path / "q.csv").string()) != 0);
  CHECK(run_cli("bench --preset nope --out " + (tmp.path / "b").string()) != 0);
}
