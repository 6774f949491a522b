#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "evfusion/io.hpp"

namespace fs = std::filesystem;
using namespace evfusion;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

fs::path scratch() {
  static const fs::path dir = [] {
    const fs::path d = fs::temp_directory_path() / ("evfusion_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string data(const std::string& name) { return std::string(EVFUSION_TEST_DATA) + "/" + name; }

Result cli(const std::string& args) {
  const fs::path out = scratch() / "stdout";
  const fs::path err = scratch() / "stderr";
  const std::string cmd = std::string(EVFUSION_CLI) + " " + args + " >" + out.string() + " 2>" + err.string();
  const int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out), slurp(err)};
}

}  // namespace

TEST_CASE("cli: rules") {
  const Result r = cli("rules");
  CHECK(r.code == 0);
  CHECK(r.out.find("pcr\n") != std::string::npos);
  CHECK(r.out.find("dubois-prade\n") != std::string::npos);
}

TEST_CASE("cli: combine") {
  const Result r = cli("combine --rule pcr " + data("ex1_m1.json") + " " + data("ex1_m2.json"));
  REQUIRE(r.code == 0);
  const MassFunction m = io::parse_mass_function(r.out);
  const Frame& f = m.frame();
  CHECK(std::abs(m.mass(f.subset({"A"})) - 0.54) <= 1e-9);
  CHECK(std::abs(m.mass(f.subset({"B"})) - 0.18) <= 1e-9);
  CHECK(std::abs(m.mass(f.full()) - 0.28) <= 1e-9);

  const fs::path file = scratch() / "fused.json";
  CHECK(cli("combine --rule sacr -o " + file.string() + " " + data("ex1_m1.json") + " " + data("ex1_m2.json")).code ==
        0);
  CHECK(validate(io::read_mass_function(file)).ok());

  const Result smets = cli("combine --rule smets " + data("ex1_m1.json") + " " + data("ex1_m2.json"));
  CHECK(smets.code == 0);
  CHECK(smets.out.find("\"open_world\": true") != std::string::npos);
}

TEST_CASE("cli: conflict") {
  const Result r = cli("conflict " + data("zadeh_m1.json") + " " + data("zadeh_m2.json"));
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("0.99", 0) == 0);
  CHECK(r.out.find("\nA,B,0.81\n") != std::string::npos);
}

TEST_CASE("cli: betp") {
  const Result r = cli("betp " + data("ex1_m1.json"));
  REQUIRE(r.code == 0);
  CHECK(r.out == "hypothesis,betp\nA,0.8\nB,0.2\n");
  const Result d = cli("betp --decide " + data("ex1_m1.json"));
  CHECK(d.out == "A,0.8,false\n");
}

TEST_CASE("cli: exit codes") {
  CHECK(cli("").code == 1);
  CHECK(cli("combine --rule murphy " + data("ex1_m1.json") + " " + data("ex1_m2.json")).code == 1);
  CHECK(cli("combine --rule pcr " + data("ex1_m1.json")).code == 1);

  const Result malformed = cli("betp " + data("malformed.json"));
  CHECK(malformed.code == 2);
  CHECK(malformed.err.find("line 2") != std::string::npos);
  CHECK(cli("betp " + data("missing.json")).code == 2);
  CHECK(cli("combine --rule pcr " + data("short_sum.json") + " " + data("ex1_m2.json")).code == 2);

  const Result mismatch = cli("combine --rule pcr " + data("ex1_m1.json") + " " + data("zadeh_m1.json"));
  CHECK(mismatch.code == 3);

  const Result total = cli("combine --rule dempster " + data("only_a.json") + " " + data("only_b.json"));
  CHECK(total.code == 4);
  CHECK(total.err.find("total conflict") != std::string::npos);
  CHECK(cli("combine --rule pcr " + data("only_a.json") + " " + data("only_b.json")).code == 0);

  CHECK(cli("combine --rule pcr -o /nonexistent/dir/out.json " + data("ex1_m1.json") + " " + data("ex1_m2.json"))
            .code == 5);
  CHECK(cli("scenario --out " + (scratch() / "bad").string() + " --targets 1").code == 2);
}

TEST_CASE("cli: scenario output is reproducible") {
  const fs::path a = scratch() / "run_a";
  const fs::path b = scratch() / "run_b";
  const std::string common = " --config " + data("desk.json") + " --rules dempster,pcr --seed 11";
  REQUIRE(cli("scenario --out " + a.string() + common).code == 0);
  REQUIRE(cli("scenario --out " + b.string() + common).code == 0);
  for (const char* name : {"dempster_seed11.csv", "dempster_seed11.json", "pcr_seed11.csv", "pcr_seed11.json"}) {
    CAPTURE(name);
    REQUIRE(fs::exists(a / name));
    CHECK(slurp(a / name) == slurp(b / name));
  }
  const std::string csv = slurp(a / "pcr_seed11.csv");
  CHECK(csv.rfind("step,rule,emitter,set_size,k12,betp_truth,betp_similar,decided,tie\n", 0) == 0);
}
