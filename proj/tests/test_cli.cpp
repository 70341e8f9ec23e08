#include <doctest.h>

#include <algorithm>
#include <fstream>

#include "cli_runner.hpp"
#include "timelock/io.hpp"

namespace {

std::size_t data_rows(const std::string& text) {
  std::size_t n = 0;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (!line.empty() && line[0] != '#') ++n;
  return n;
}

}  // namespace

TEST_CASE("synth defaults and duration") {
  ScratchDir dir("timelock_cli_synth");
  REQUIRE(run_cli("synth -o " + dir / "a.csv") == 0);
  const auto text = slurp(dir / "a.csv");
  CHECK(data_rows(text) == 8192);
  CHECK(text.find("# f_samp: 2048\n") != std::string::npos);
  const auto ev = timelock::io::read_events(dir / "a.csv.events.json");
  REQUIRE(ev.size() == 3);
  CHECK(ev[0].index == 2048);
  CHECK(ev[2].index == 6144);

  REQUIRE(run_cli("synth --duration 1 -o " + dir / "b.csv") == 0);
  CHECK(data_rows(slurp(dir / "b.csv")) == 2048);

  CHECK(run_cli("synth --f1 600 --f2 700 --f-samp 1024 -o " + dir / "c.csv") == 3);
  CHECK(run_cli("synth --duration abc -o " + dir / "c.csv") == 2);
  CHECK(run_cli("synth --event-fracs 0.5,0.25 -o " + dir / "c.csv") == 2);
}

TEST_CASE("warp identity and the reference warp") {
  ScratchDir dir("timelock_cli_warp");
  REQUIRE(run_cli("synth --duration 1.171875 -o " + dir / "s.csv") == 0);
  REQUIRE(run_cli("warp " + dir / "s.csv" + " -o " + dir / "id.csv") == 0);
  const auto in = timelock::io::read_trial(dir / "s.csv");
  const auto id = timelock::io::read_trial(dir / "id.csv");
  REQUIRE(id.samples.size() == in.samples.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < in.samples.size(); ++i)
    worst = std::max(worst, std::abs(id.samples[i] - in.samples[i]));
  CHECK(worst <= 1e-9);
  const auto report = slurp(dir / "id.csv.report.csv");
  CHECK(report.rfind("interval,ratio,source_len,target_len,correlation,", 0) == 0);
  CHECK(report.find("\nt1,1,600,600,1,0,0,1,") != std::string::npos);

  REQUIRE(run_cli("warp " + dir / "s.csv" + " --t1 480 --pad-fraction 0.1 -o " + dir / "w.csv" +
                  " --report " + dir / "w.report.csv") == 0);
  std::istringstream rep(slurp(dir / "w.report.csv"));
  std::string line;
  std::getline(rep, line);
  int rows = 0;
  while (std::getline(rep, line)) {
    ++rows;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    for (std::string c; std::getline(ss, c, ',');) cells.push_back(c);
    REQUIRE(cells.size() == 11);
    CHECK(std::stod(cells[4]) >= 0.85);
  }
  CHECK(rows == 2);
  const auto ev = timelock::io::read_events(dir / "w.csv.events.json");
  CHECK(ev[1].index == 600 + 480);

  // Inline events instead of the sidecar.
  CHECK(run_cli("warp " + dir / "s.csv" + " --onset 300 --transition 900 --offset 1500 --t1 500 -o " +
                dir / "x.csv") == 0);
}

TEST_CASE("warp exit codes") {
  ScratchDir dir("timelock_cli_warp_err");
  {
    std::ofstream bad(dir / "bad.csv");
    bad << "# f_samp: 2048\n0\n1,2\n3\n";
  }
  std::string err;
  CHECK(run_cli_stderr("warp " + dir / "bad.csv" + " --onset 0 --transition 1 --offset 2 -o " +
                           dir / "o.csv",
                       dir / "err.txt", err) == 2);
  CHECK(err.find("bad.csv:3:") != std::string::npos);

  REQUIRE(run_cli("synth --duration 1 -o " + dir / "s.csv") == 0);
  CHECK(run_cli("warp " + dir / "s.csv" + " --t1 0 -o " + dir / "o.csv") == 3);
  CHECK(run_cli("warp " + dir / "s.csv" + " --onset 10 -o " + dir / "o.csv") == 2);
  CHECK(run_cli("warp " + dir / "s.csv" + " --events " + dir / "missing.json -o " + dir / "o.csv") == 2);
  CHECK(run_cli("warp " + dir / "s.csv" + " --t1 400 --t2 400 -o " + dir / "o.csv") == 3);
}

TEST_CASE("dtw-matrix writes the cost matrix and path") {
  ScratchDir dir("timelock_cli_dtw");
  REQUIRE(run_cli("synth --duration 0.0625 --event-fracs 0.25,0.5,0.75 -o " + dir / "a.csv") == 0);
  REQUIRE(run_cli("dtw-matrix " + dir / "a.csv " + dir / "a.csv -o " + dir / "m.csv") == 0);
  const auto matrix = slurp(dir / "m.csv");
  CHECK(matrix.rfind("# distance: 0\n", 0) == 0);
  CHECK(data_rows(matrix) == 128);
  std::istringstream path(slurp(dir / "m.csv.path.csv"));
  std::string line;
  std::getline(path, line);
  CHECK(line == "i,j,cost");
  int k = 0;
  bool diagonal = true;
  while (std::getline(path, line)) {
    diagonal = diagonal && line == std::to_string(k) + "," + std::to_string(k) + ",0";
    ++k;
  }
  CHECK(diagonal);
  CHECK(k == 128);

  REQUIRE(run_cli("dtw-matrix " + dir / "a.csv " + dir / "a.csv --a-range 0:50 --b-range 10:40 -o " +
                  dir / "r.csv --path-out " + dir / "r.path.csv") == 0);
  CHECK(data_rows(slurp(dir / "r.csv")) == 50);
  CHECK(run_cli("dtw-matrix " + dir / "a.csv " + dir / "a.csv --a-range 0:500 -o " + dir / "e.csv") == 3);
  CHECK(run_cli("dtw-matrix " + dir / "a.csv " + dir / "a.csv --a-range nope -o " + dir / "e.csv") == 2);
}

TEST_CASE("sweep-padding honours the config file and flags override it") {
  ScratchDir dir("timelock_cli_sweep");
  {
    std::ofstream cfg(dir / "sweep.ini");
    cfg << "# small grid\npad_fractions = 0.01,0.1\nduration = 1\nwarp_magnitude = 0.1\n";
  }
  REQUIRE(run_cli("sweep-padding --config " + dir / "sweep.ini -o " + dir / "a.csv") == 0);
  const auto a = slurp(dir / "a.csv");
  CHECK(a.find("# pad_fractions: 0.01,0.1\n") != std::string::npos);
  CHECK(a.find("# warp_magnitude: 0.1\n") != std::string::npos);
  CHECK(data_rows(a) == 1 + 2 * 2 * 2);

  REQUIRE(run_cli("sweep-padding --config " + dir / "sweep.ini --warp-magnitude 0.3 -o " + dir / "b.csv") ==
          0);
  const auto b = slurp(dir / "b.csv");
  CHECK(b.find("# warp_magnitude: 0.3\n") != std::string::npos);
  CHECK(b.find("# pad_fractions: 0.01,0.1\n") != std::string::npos);

  {
    std::ofstream cfg(dir / "bad.ini");
    cfg << "colour = blue\n";
  }
  CHECK(run_cli("sweep-padding --config " + dir / "bad.ini -o " + dir / "c.csv") == 2);
  CHECK(run_cli("sweep-padding --pad-fractions -0.1 --duration 1 -o " + dir / "c.csv") == 3);
}

TEST_CASE("sweep-fsamp") {
  ScratchDir dir("timelock_cli_fsamp");
  REQUIRE(run_cli("sweep-fsamp --duration 1 --pad-fractions 0.1 --fsamp-factors 1,1/2 -o " +
                  dir / "a.csv") == 0);
  CHECK(data_rows(slurp(dir / "a.csv")) == 1 + 2 * 2 * 2);
  CHECK(run_cli("sweep-fsamp --duration 1 --fsamp-factors 1/2,1 -o " + dir / "b.csv") == 3);
  CHECK(run_cli("sweep-fsamp --duration 1 --directions sideways -o " + dir / "b.csv") == 3);
}

TEST_CASE("help and usage errors") {
  CHECK(run_cli("--help") == 0);
  CHECK(run_cli("warp --help") == 0);
  CHECK(run_cli("") == 2);
  CHECK(run_cli("frobnicate") == 2);
  CHECK(run_cli("synth") == 2);
}
