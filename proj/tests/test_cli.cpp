#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

// End-to-end checks of the installed command-line surface.  The binary
// path arrives via PERMGROWTH_BIN (set by ctest).

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const char* bin = std::getenv("PERMGROWTH_BIN");
  REQUIRE(bin != nullptr);
  const std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string last_line(const std::string& text) {
  auto end = text.find_last_not_of('\n');
  if (end == std::string::npos) return "";
  auto start = text.rfind('\n', end);
  return text.substr(start == std::string::npos ? 0 : start + 1,
                     end - (start == std::string::npos ? 0 : start + 1) + 1);
}

}  // namespace

TEST_CASE("cli: descent count and oracle") {
  auto r = run_cli("descent count --word [0] --n 5");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "1\n");

  r = run_cli("descent count --word 1000101 --n 8");
  CHECK(r.out == "407\n");
  r = run_cli("oracle descent --word 1000101 --n 8");
  CHECK(r.out == "407\n");
}

TEST_CASE("cli: peak count methods agree") {
  const std::string methods[] = {"ie", "split", "brute"};
  for (const auto& m : methods) {
    auto r = run_cli("peak count --set 2,5 --n 8 --method " + m);
    CHECK(r.exit_code == 0);
    CHECK(r.out == "2688\n");
  }
  // all four methods on an input where the closed form applies
  for (const auto& m : {"ie", "split", "brute", "closed"}) {
    auto r = run_cli(std::string("peak count --set 2 --n 6 --method ") + m);
    CHECK(r.exit_code == 0);
    CHECK(r.out == "64\n");
  }
  auto closed = run_cli("peak count --set 2 --n 4 --method closed");
  CHECK(closed.exit_code == 0);
  CHECK(closed.out == "8\n");
  // word-spec input channel
  auto by_word = run_cli("peak count --word [0100100100] --n 8 --method ie");
  CHECK(by_word.out == "2688\n");
}

TEST_CASE("cli: descent series csv") {
  auto r = run_cli("descent series --word [01] --max-n 6 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.out.substr(0, 21) == "n,count,growth_point\n");
  const std::string last = last_line(r.out);
  CHECK(last.substr(0, 5) == "6,61,");
}

TEST_CASE("cli: construct json output is deterministic") {
  const std::string cmd =
      "descent construct --target 1/2 --max-n 80 --emit-word --format json";
  const auto a = run_cli(cmd);
  const auto b = run_cli(cmd);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("\"schema\": 1") != std::string::npos);
  CHECK(a.out.find("\"word\"") != std::string::npos);
}

TEST_CASE("cli: peak growth, find, series") {
  auto g = run_cli("peak growth --a 2 --b 2");
  CHECK(g.exit_code == 0);
  CHECK(g.out.substr(0, 8) == "0.672951");

  auto f = run_cli("peak find --target 0.5 --epsilon 0.01");
  CHECK(f.exit_code == 0);
  CHECK(f.out.find("\"achieved_rate\"") != std::string::npos);
  CHECK(f.out.find("\"word\"") != std::string::npos);

  auto s = run_cli("peak series --a 2 --b 2 --max-n 9 --format csv");
  CHECK(s.exit_code == 0);
  CHECK(last_line(s.out).substr(0, 8) == "9,13440,");
}

TEST_CASE("cli: empty peak set counts the peak-free permutations") {
  auto r = run_cli("peak count --set \"\" --n 4");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "8\n");
}

TEST_CASE("cli: exit codes") {
  CHECK(run_cli("descent count --word 012 --n 3").exit_code == 1);
  CHECK(run_cli("descent count --word [01]").exit_code == 1);  // missing --n
  CHECK(run_cli("oracle descent --word [0] --n 12").exit_code == 2);
  CHECK(run_cli("oracle peak --set 2 --n 15").exit_code == 2);
  CHECK(run_cli("peak count --set 2 --word [01] --n 4").exit_code == 1);
  CHECK(run_cli("nonsense").exit_code == 1);
  CHECK(run_cli("descent construct --target 2/3 --max-n 10").exit_code == 1);
  // superset blow-up is rejected before any counting work
  CHECK(run_cli("peak count --set 2,5 --n 700 --method ie").exit_code == 2);
}

TEST_CASE("cli: selftest") {
  auto r = run_cli("selftest");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("selftest passed") != std::string::npos);
  CHECK(r.out.find("[FAIL]") == std::string::npos);
}
