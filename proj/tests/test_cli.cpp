#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "dgf/cli.hpp"
#include "support.hpp"

namespace fs = std::filesystem;
using namespace testutil;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = dgf::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path data_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "dgf_cli_tests";
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write_file(const std::string& name, const std::string& content) {
  const fs::path p = data_dir() / name;
  std::ofstream(p, std::ios::trunc) << content;
  return p.string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

size_t count_lines(const std::string& text) {
  size_t lines = 0;
  for (char ch : text) {
    if (ch == '\n') ++lines;
  }
  return lines;
}

const std::string kRingJson =
    R"({"n": 3, "values": [0.0, 0.5, 0.5, 0.5, 0.0, 0.5, 0.5, 0.5, 0.0]})";
const std::string kStarJson =
    R"({"n": 3, "values": [0.0, 0.5, 0.5, 1.0, 0.0, 0.0, 1.0, 0.0, 0.0]})";
// Left eigenvector (0.4, 0.2, 0.4).
const std::string kSkewedJson =
    R"({"n": 3, "values": [0.0, 0.25, 0.75, 0.5, 0.0, 0.5, 0.75, 0.25, 0.0]})";
const std::string kBadDiagonalJson =
    R"({"n": 3, "values": [0.1, 0.45, 0.45, 0.5, 0.0, 0.5, 0.5, 0.5, 0.0]})";
const std::string kSkewedCentrality = "[0.4, 0.2, 0.4]";

}  // namespace

TEST_CASE("validate") {
  const std::string ring = write_file("ring.json", kRingJson);
  const std::string star = write_file("star.json", kStarJson);
  const std::string bad = write_file("bad_diag.json", kBadDiagonalJson);

  SUBCASE("valid dense matrix") {
    const RunResult r = run({"validate", ring});
    CHECK(r.code == dgf::cli::kOk);
    CHECK(r.out.find("irreducible: true") != std::string::npos);
    CHECK(r.out.find("star: none") != std::string::npos);
  }
  SUBCASE("star matrix is valid and names its center") {
    const RunResult r = run({"validate", star});
    CHECK(r.code == dgf::cli::kOk);
    CHECK(r.out.find("star: node 1") != std::string::npos);
  }
  SUBCASE("nonzero diagonal names the row") {
    const RunResult r = run({"validate", bad});
    CHECK(r.code == dgf::cli::kInvalid);
    CHECK(r.err.find("row 1") != std::string::npos);
  }
  SUBCASE("missing and malformed files") {
    CHECK(run({"validate", (data_dir() / "nope.json").string()}).code == dgf::cli::kIoParse);
    const std::string garbled = write_file("garbled.json", "{not json");
    CHECK(run({"validate", garbled}).code == dgf::cli::kIoParse);
    const std::string short_values = write_file("short.json", R"({"n": 3, "values": [1, 2]})");
    CHECK(run({"validate", short_values}).code == dgf::cli::kIoParse);
  }
}

TEST_CASE("centrality") {
  const std::string skewed = write_file("skewed.json", kSkewedJson);
  const RunResult r = run({"centrality", skewed});
  CHECK(r.code == dgf::cli::kOk);
  CHECK(r.out.find("c: 0.39999999999999") != std::string::npos);
  CHECK(r.out.find("residual: ") != std::string::npos);
}

TEST_CASE("fixed-point") {
  const std::string cfile = write_file("c_skewed.json", kSkewedCentrality);
  const std::string ring = write_file("ring.json", kRingJson);
  const std::string star = write_file("star.json", kStarJson);

  SUBCASE("from a centrality file") {
    const RunResult r = run({"fixed-point", "--centrality", cfile});
    CHECK(r.code == dgf::cli::kOk);
    CHECK(r.out.find("x: 0.42857142857") != std::string::npos);
    CHECK(r.out.find("iterations: ") != std::string::npos);
    CHECK(r.out.find("max_stationarity: ") != std::string::npos);
  }
  SUBCASE("doubly stochastic matrix gives the uniform point") {
    const RunResult r = run({"fixed-point", "--matrix", ring});
    CHECK(r.code == dgf::cli::kOk);
    CHECK(r.out.find("x: 0.33333333333333") != std::string::npos);
  }
  SUBCASE("star matrix exits through the vertex path") {
    const RunResult r = run({"fixed-point", "--matrix", star});
    CHECK(r.code == dgf::cli::kVertex);
    CHECK(r.out.find("star: node 1") != std::string::npos);
  }
  SUBCASE("star-regime centrality file exits through the vertex path") {
    const std::string cstar = write_file("c_star.json", "[0.5, 0.25, 0.25]");
    CHECK(run({"fixed-point", "--centrality", cstar}).code == dgf::cli::kVertex);
  }
  SUBCASE("instance selection must be unambiguous") {
    CHECK(run({"fixed-point"}).code == dgf::cli::kIoParse);
    CHECK(run({"fixed-point", "-m", ring, "-c", cfile}).code == dgf::cli::kIoParse);
  }
  SUBCASE("invalid centrality file fails validation") {
    const std::string over = write_file("c_over.json", "[0.6, 0.2, 0.2]");
    CHECK(run({"fixed-point", "--centrality", over}).code == dgf::cli::kInvalid);
  }
}

TEST_CASE("grid") {
  const std::string cfile = write_file("c_skewed.json", kSkewedCentrality);

  SUBCASE("row count and fixed-point flag at resolution 10") {
    const std::string out_path = (data_dir() / "grid10.csv").string();
    const RunResult r = run({"grid", "-c", cfile, "--resolution", "10", "-o", out_path});
    CHECK(r.code == dgf::cli::kOk);
    const std::string text = slurp(out_path);
    CHECK(count_lines(text) == 38);  // header + 36 interior + fixed point
    CHECK(text.rfind("fixed_point\n") == text.size() - 12);
    CHECK(text.substr(0, 24) == "x1,x2,x3,objective\n0.1,");
  }
  SUBCASE("minimum row sits at the solved fixed point region") {
    const std::string out_path = (data_dir() / "grid200.csv").string();
    CHECK(run({"grid", "-c", cfile, "--resolution", "200", "-o", out_path}).code ==
          dgf::cli::kOk);
    std::ifstream in(out_path);
    std::string line;
    std::getline(in, line);  // header
    double best_value = 1e300;
    std::vector<double> best{0, 0, 0};
    while (std::getline(in, line)) {
      if (line.find("fixed_point") != std::string::npos) continue;
      std::replace(line.begin(), line.end(), ',', ' ');
      std::istringstream row(line);
      double x1, x2, x3, value;
      row >> x1 >> x2 >> x3 >> value;
      if (value < best_value) {
        best_value = value;
        best = {x1, x2, x3};
      }
    }
    CHECK(std::fabs(best[0] - frozen::kThreeSevenths) <= 1.0 / 200);
    CHECK(std::fabs(best[1] - frozen::kOneSeventh) <= 1.0 / 200);
  }
  SUBCASE("dimension guard") {
    const std::string c4 = write_file("c4.json", "[0.25, 0.25, 0.25, 0.25]");
    CHECK(run({"grid", "-c", c4, "--resolution", "50"}).code == dgf::cli::kBadDimension);
  }
  SUBCASE("star instance exits through the vertex path") {
    const std::string star = write_file("star.json", kStarJson);
    CHECK(run({"grid", "-m", star, "--resolution", "50"}).code == dgf::cli::kVertex);
  }
}

TEST_CASE("iterate") {
  const std::string cfile = write_file("c_skewed.json", kSkewedCentrality);

  SUBCASE("identical seeds produce identical bytes") {
    const std::string a = (data_dir() / "traj_a.txt").string();
    const std::string b = (data_dir() / "traj_b.txt").string();
    CHECK(run({"iterate", "-c", cfile, "--seed", "7", "--starts", "4", "--steps", "6",
               "-o", a}).code == dgf::cli::kOk);
    CHECK(run({"iterate", "-c", cfile, "--seed", "7", "--starts", "4", "--steps", "6",
               "-o", b}).code == dgf::cli::kOk);
    const std::string bytes = slurp(a);
    CHECK(bytes == slurp(b));
    CHECK(count_lines(bytes) == 1 + 4 * 7);  // header + (steps + 1) per start
  }
  SUBCASE("zero steps echoes the initial points") {
    const RunResult r = run({"iterate", "-c", cfile, "--seed", "3", "--starts", "2",
                             "--steps", "0"});
    CHECK(r.code == dgf::cli::kOk);
    CHECK(count_lines(r.out) == 3);  // header + one record per start
  }
  SUBCASE("vertex start emits a single record") {
    const std::string vertex = write_file("vertex.json", "[1.0, 0.0, 0.0]");
    const RunResult r = run({"iterate", "-c", cfile, "--x0", vertex, "--steps", "5"});
    CHECK(r.code == dgf::cli::kOk);
    CHECK(count_lines(r.out) == 2);
    CHECK(r.out.find("0 0 1 0 0") != std::string::npos);
  }
  SUBCASE("four steps from seeded starts land near the fixed point") {
    const RunResult r = run({"iterate", "-c", cfile, "--seed", "42", "--starts", "6",
                             "--steps", "4"});
    CHECK(r.code == dgf::cli::kOk);
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);  // header
    int finals = 0;
    while (std::getline(in, line)) {
      std::istringstream row(line);
      int start, k;
      double x1, x2, x3;
      row >> start >> k >> x1 >> x2 >> x3;
      if (k != 4) continue;
      ++finals;
      CHECK(std::fabs(x1 - frozen::kThreeSevenths) <= 0.05);
      CHECK(std::fabs(x2 - frozen::kOneSeventh) <= 0.05);
      CHECK(std::fabs(x3 - frozen::kThreeSevenths) <= 0.05);
    }
    CHECK(finals == 6);
  }
  SUBCASE("mirror-descent engine is step-size invariant for exact halving") {
    const std::string a = (data_dir() / "traj_h_half.txt").string();
    const std::string b = (data_dir() / "traj_h_two.txt").string();
    CHECK(run({"iterate", "-c", cfile, "--seed", "9", "--steps", "8", "--h", "0.5",
               "-o", a}).code == dgf::cli::kOk);
    CHECK(run({"iterate", "-c", cfile, "--seed", "9", "--steps", "8", "--h", "2.0",
               "-o", b}).code == dgf::cli::kOk);
    CHECK(slurp(a) == slurp(b));
  }
  SUBCASE("start selection is required and exclusive") {
    const std::string vertex = write_file("vertex.json", "[1.0, 0.0, 0.0]");
    CHECK(run({"iterate", "-c", cfile}).code == dgf::cli::kIoParse);
    CHECK(run({"iterate", "-c", cfile, "--x0", vertex, "--seed", "1"}).code ==
          dgf::cli::kIoParse);
  }
}

TEST_CASE("kkt") {
  const std::string cfile = write_file("c_skewed.json", kSkewedCentrality);
  SUBCASE("at the solved fixed point") {
    const RunResult r = run({"kkt", "-c", cfile});
    CHECK(r.code == dgf::cli::kOk);
    CHECK(r.out.find("nu: -1.509377083") != std::string::npos);
    CHECK(r.out.find("stationarity: ") != std::string::npos);
  }
  SUBCASE("at an explicit point") {
    const std::string xfile = write_file("x_uniform.json",
        "[0.3333333333333333, 0.3333333333333333, 0.3333333333333334]");
    const RunResult r = run({"kkt", "-c", cfile, "--x", xfile});
    CHECK(r.code == dgf::cli::kOk);
  }
  SUBCASE("star regime without an explicit point") {
    const std::string cstar = write_file("c_star.json", "[0.5, 0.25, 0.25]");
    CHECK(run({"kkt", "-c", cstar}).code == dgf::cli::kVertex);
  }
}

TEST_CASE("dual") {
  const std::string cfile = write_file("c_skewed.json", kSkewedCentrality);
  SUBCASE("default bracket centered on the multiplier value") {
    const std::string out_path = (data_dir() / "dual.txt").string();
    const RunResult r = run({"dual", "-c", cfile, "--samples", "501", "-o", out_path});
    CHECK(r.code == dgf::cli::kOk);
    CHECK(r.out.find("nu_min: -11.509377083") != std::string::npos);
    CHECK(r.out.find("gap: ") != std::string::npos);
    CHECK(r.out.find("primal: 0.7827593392496") != std::string::npos);
    CHECK(count_lines(slurp(out_path)) == 501);
  }
  SUBCASE("explicit bracket must be ordered") {
    CHECK(run({"dual", "-c", cfile, "--nu-min", "5", "--nu-max", "1"}).code ==
          dgf::cli::kInvalid);
  }
}

TEST_CASE("verify") {
  const std::string skewed = write_file("skewed.json", kSkewedJson);
  const std::string ring = write_file("ring.json", kRingJson);
  const std::string star = write_file("star.json", kStarJson);

  SUBCASE("skewed instance passes every property") {
    const RunResult r = run({"verify", skewed});
    CHECK(r.code == dgf::cli::kOk);
    CHECK(r.out.find("PASS md_equals_df") != std::string::npos);
    CHECK(r.out.find("PASS ngd_equals_df") != std::string::npos);
    CHECK(r.out.find("PASS kkt_certificate") != std::string::npos);
    CHECK(r.out.find("PASS centrality_round_trip") != std::string::npos);
    CHECK(r.out.find("PASS permutation_equivariance") != std::string::npos);
    CHECK(r.out.find("PASS grid_oracle") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
  }
  SUBCASE("uniform instance additionally reports the centroid property") {
    const RunResult r = run({"verify", ring});
    CHECK(r.code == dgf::cli::kOk);
    CHECK(r.out.find("PASS centroid") != std::string::npos);
  }
  SUBCASE("corrupted centrality override trips the certificates") {
    const std::string corrupt = write_file("c_corrupt.json", "[0.45, 0.35, 0.2]");
    const RunResult r = run({"verify", skewed, "--centrality-override", corrupt});
    CHECK(r.code == dgf::cli::kVerifyFailed);
    CHECK(r.out.find("FAIL kkt_certificate") != std::string::npos);
    CHECK(r.err.find("kkt_certificate") != std::string::npos);
  }
  SUBCASE("star matrix exits through the vertex path") {
    CHECK(run({"verify", star}).code == dgf::cli::kVertex);
  }
}

TEST_CASE("help exits cleanly") {
  CHECK(run({"--help"}).code == dgf::cli::kOk);
  CHECK(run({}).code == dgf::cli::kIoParse);  // a subcommand is required
}
