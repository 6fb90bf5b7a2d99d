#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("vdwx_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

int run(const std::string& args) {
  const std::string cmd =
      std::string(VDWX_CLI_BIN) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const char* kPairConfig = R"({
  "problem": "pair",
  "atom_a": {"omega": 1.0, "gamma": 0.0, "d2": 1.0},
  "state_a": "e",
  "atom_b": {"omega": 0.9, "gamma": 0.02, "d2": 1.0},
  "state_b": "g",
  "geometry": 1.0,
  "sweep": {"axis": "geometry", "min": 0.5, "max": 5.0, "points": 4}
})";

}  // namespace

TEST_CASE("cli writes a dataset and exits cleanly") {
  TempDir tmp;
  const fs::path cfg = tmp.path / "pair.json";
  const fs::path out = tmp.path / "pair.csv";
  write_file(cfg, kPairConfig);
  CHECK(run("pair --config " + cfg.string() + " --output " + out.string()) ==
        0);
  const std::string text = read_file(out);
  CHECK(text.rfind("# version: ", 0) == 0);
  CHECK(text.find("geometry,shift,half_width,flags\n") != std::string::npos);
  CHECK(text.find('\r') == std::string::npos);
}

TEST_CASE("cli format flag switches to json") {
  TempDir tmp;
  const fs::path cfg = tmp.path / "pair.json";
  const fs::path out = tmp.path / "pair.out";
  write_file(cfg, kPairConfig);
  CHECK(run("pair --config " + cfg.string() + " --format json --output " +
            out.string()) == 0);
  const std::string text = read_file(out);
  CHECK(text.rfind("{", 0) == 0);
  CHECK(text.find("\"rows\"") != std::string::npos);
}

TEST_CASE("cli sweep overrides are revalidated") {
  TempDir tmp;
  const fs::path cfg = tmp.path / "pair.json";
  write_file(cfg, kPairConfig);
  CHECK(run("pair --config " + cfg.string() + " --points 3") == 0);
  CHECK(run("pair --config " + cfg.string() + " --points 1") == 1);
  CHECK(run("pair --config " + cfg.string() + " --min 4 --max 2") == 1);
}

TEST_CASE("cli rejects a problem and subcommand mismatch") {
  TempDir tmp;
  const fs::path cfg = tmp.path / "pair.json";
  write_file(cfg, kPairConfig);
  CHECK(run("surface --config " + cfg.string()) == 1);
}

TEST_CASE("cli maps config problems to exit code 1") {
  TempDir tmp;
  const fs::path bad = tmp.path / "bad.json";
  write_file(bad, "{\"problem\": ");
  CHECK(run("pair --config " + bad.string()) == 1);
  CHECK(run("pair --config " + (tmp.path / "missing.json").string()) == 1);
  CHECK(run("figure --which nope") == 1);
  CHECK(run("figure --which 5 --points 1") == 1);
  CHECK(run("") == 1);            // a subcommand is required
  CHECK(run("pair") == 1);        // --config is required
  CHECK(run("--version") == 0);
  CHECK(run("--help") == 0);
}

TEST_CASE("cli figure subcommand produces the published dataset") {
  TempDir tmp;
  const fs::path out = tmp.path / "fig7.csv";
  CHECK(run("figure --which 7 --points 11 --output " + out.string()) == 0);
  const std::string text = read_file(out);
  CHECK(text.find("# figure: 7") != std::string::npos);
  CHECK(text.find("omega_a_over_omega_b,u_qed_norm,u_lifshitz_norm,flags\n") !=
        std::string::npos);
  const fs::path out2 = tmp.path / "fig7_wide.csv";
  CHECK(run("figure --which 7 --points 11 --gamma-ratio 0.1 --output " +
            out2.string()) == 0);
  CHECK(read_file(out2) != text);
}
