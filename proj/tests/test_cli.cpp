#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#ifndef BOOTLAB_CLI_PATH
#define BOOTLAB_CLI_PATH "bootlab"
#endif

namespace {

struct CommandResult {
  int status;
  std::string out;
};

CommandResult run_cli(const std::string& args) {
  std::string cmd = std::string(BOOTLAB_CLI_PATH) + " " + args + " 2>&1";
  std::array<char, 4096> buf{};
  CommandResult res{-1, {}};
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (fgets(buf.data(), buf.size(), pipe)) res.out += buf.data();
  int rc = pclose(pipe);
  res.status = WEXITSTATUS(rc);
  return res;
}

std::string last_line(const std::string& text) {
  auto end = text.find_last_not_of('\n');
  if (end == std::string::npos) return "";
  auto start = text.find_last_of('\n', end);
  return text.substr(start == std::string::npos ? 0 : start + 1, end - (start == std::string::npos ? 0 : start + 1) + 1);
}

std::filesystem::path temp_dir() {
  auto dir = std::filesystem::temp_directory_path() / "bootlab_cli_test";
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("cli run prints tau and percolated") {
  auto dir = temp_dir();
  auto p5 = (dir / "p5").string();
  auto r1 = run_cli("construct path --n 5 --out " + p5);
  REQUIRE(r1.status == 0);
  auto r2 = run_cli("run --rule \"clique 3\" --start " + p5 + ".edges --trace-out " + p5 + ".trace");
  CHECK(r2.status == 0);
  CHECK(last_line(r2.out) == "tau=2 percolated=true");
  std::ifstream trace(p5 + ".trace");
  std::string magic;
  trace >> magic;
  CHECK(magic == "bootlab-trace");

  // complete start stabilizes immediately
  std::ofstream complete(dir / "k4.edges");
  complete << "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";
  complete.close();
  auto r3 = run_cli("run --rule clique3 --start " + (dir / "k4.edges").string());
  CHECK(last_line(r3.out) == "tau=0 percolated=true");
}

TEST_CASE("cli k4 extremal run") {
  auto dir = temp_dir();
  auto k8 = (dir / "k8").string();
  REQUIRE(run_cli("construct k4-extremal --n 8 --out " + k8).status == 0);
  auto r = run_cli("run --rule clique4 --start " + k8 + ".edges");
  CHECK(last_line(r.out) == "tau=5 percolated=true");
}

TEST_CASE("cli search csv") {
  auto r = run_cli("search max-time --rule clique4 --n 4..7");
  CHECK(r.status == 0);
  CHECK(r.out.find("n,value,witness_graph6") != std::string::npos);
  CHECK(r.out.find("4,1,") != std::string::npos);
  CHECK(r.out.find("5,2,") != std::string::npos);
  CHECK(r.out.find("6,3,") != std::string::npos);
  CHECK(r.out.find("7,4,") != std::string::npos);
}

TEST_CASE("cli analyze verdicts") {
  auto r = run_cli("analyze inseparable --l 2 --rule wheel7");
  CHECK(r.status == 0);
  CHECK(last_line(r.out) == "inseparable(2,1) false");
  CHECK(last_line(run_cli("analyze inseparable --l 2 --rule clique5").out) == "inseparable(2,1) true");
  CHECK(last_line(run_cli("analyze self-percolates --rule \"glued-cliques 4\"").out) == "self-percolates true");
}

TEST_CASE("cli threshold reproducible csv") {
  std::string args = "threshold --rule clique3 --n 50 --p 0.01,0.08,0.30 --trials 200 --seed 7";
  auto a = run_cli(args);
  auto b = run_cli(args);
  CHECK(a.status == 0);
  CHECK(a.out == b.out);  // bit-reproducible given the seed
  CHECK(a.out.find("p,estimate,lo,hi") != std::string::npos);
  // estimates increase along the grid
  double e1 = -1, e2 = -1, e3 = -1;
  std::sscanf(a.out.c_str() + a.out.find("0.01,"), "0.01,%lf", &e1);
  std::sscanf(a.out.c_str() + a.out.find("0.08,"), "0.08,%lf", &e2);
  std::sscanf(a.out.c_str() + a.out.find("0.3,"), "0.3,%lf", &e3);
  CHECK(e1 <= e2);
  CHECK(e2 <= e3);
  CHECK(e3 >= 0.95);
}

TEST_CASE("cli missing seed is an error") {
  auto r = run_cli("threshold --rule clique3 --n 20 --p 0.1 --trials 10");
  CHECK(r.status != 0);
}

TEST_CASE("cli parse failures") {
  auto r = run_cli("run --rule \"no-such-rule 3\" --start /dev/null");
  CHECK(r.status != 0);
  CHECK(r.out.find("no-such-rule") != std::string::npos);
  auto r2 = run_cli("search max-time --rule clique3 --n 9");
  CHECK(r2.status != 0);
  CHECK(r2.out.find("[1,8]") != std::string::npos);  // names the enumeration cap
}

TEST_CASE("cli dilation auto set") {
  auto dir = temp_dir();
  auto pre = (dir / "dil31").string();
  // at p=31 the searched set is a singleton, giving the one-segment chain
  auto r = run_cli("construct dilation-k5 --prime 31 --auto-set --out " + pre);
  CHECK(r.status == 0);
  CHECK(r.out.find("dagger pass") != std::string::npos);
  CHECK(r.out.find("star pass") != std::string::npos);
  CHECK(r.out.find("replay pass") != std::string::npos);
  CHECK(std::filesystem::exists(pre + ".chain"));
  CHECK(std::filesystem::exists(pre + ".report"));
  CHECK(std::filesystem::exists(pre + ".set"));
}

TEST_CASE("cli chain pipeline") {
  auto dir = temp_dir();
  auto pre = (dir / "ch").string();
  auto r = run_cli("construct simple-chain --k 5 --d 3 --out " + pre);
  CHECK(r.status == 0);
  auto a = run_cli("analyze chain --file " + pre + ".chain --which dagger,star --replay");
  CHECK(a.status == 0);
  CHECK(a.out.find("dagger pass") != std::string::npos);
  CHECK(a.out.find("star pass") != std::string::npos);
  CHECK(a.out.find("replay pass") != std::string::npos);
  // a ladder with adjacent slopes is reported and fails the exit status
  auto bad = run_cli("construct ladder-k6 --segments 3 --slopes 0,1 --out " + (dir / "lbad").string());
  CHECK(bad.status == 2);
  CHECK(bad.out.find("FAIL") != std::string::npos);
}
