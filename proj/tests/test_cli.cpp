// End-to-end tests driving the installed binary through a shell.  The
// harness exports SHIFTEQ_CLI with the binary's path.

#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <sys/wait.h>

namespace {

using Json = nlohmann::ordered_json;

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const char* bin = std::getenv("SHIFTEQ_CLI");
  REQUIRE_MESSAGE(bin != nullptr, "SHIFTEQ_CLI must point at the binary");
  std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

// Idempotent fixture: the graph and witness files every case can rely on.
void ensure_inputs() {
  write_file("cli_two.graph", "matrix 1\n2\n");
  write_file("cli_ones.graph", "matrix 2\n1 1\n1 1\n");
  write_file("cli_fib.graph",
             "vertices 2\nedge 0 0\nedge 0 1\nedge 1 0\n");
  write_file("cli_witness.json",
             R"({"A":[[2]],"B":[[1,1],[1,1]],"R":[[1,1]],"S":[[1],[1]],"m":1})");
  write_file("cli_witness_bad.json",
             R"({"A":[[2]],"B":[[1,1],[1,1]],"R":[[1,1]],"S":[[1],[2]],"m":1})");
}

Json parse(const RunResult& r) {
  Json j = Json::parse(r.out, nullptr, false);
  REQUIRE_MESSAGE(!j.is_discarded(), "stdout was not JSON: " << r.out);
  return j;
}

}  // namespace

TEST_CASE("dimgroup reports the full invariant") {
  ensure_inputs();
  RunResult r = run_cli("dimgroup --input cli_two.graph");
  CHECK(r.code == 0);
  Json j = parse(r);
  CHECK(j["command"] == "dimgroup");
  CHECK(j["size"] == 1);
  CHECK(j["order_unit"] == Json::parse(R"({"v":[1],"k":0})"));
  CHECK(j["eventual_image"]["basis"] == Json::parse("[[1]]"));
  CHECK(j["eventual_image"]["stabilization_power"] == 1);
  CHECK(j["delta_order_unit"]["u"] == Json::parse("[1]"));
  CHECK(j["delta_order_unit"]["certificate"] == 0);
  CHECK(j["psi_of_order_unit"] == Json::parse(R"({"v":[1],"k":0})"));
}

TEST_CASE("eq exits 0 on equal and 1 on distinct classes") {
  ensure_inputs();
  RunResult same =
      run_cli("eq --input cli_two.graph --v1 1 --k1 0 --v2 2 --k2 1");
  CHECK(same.code == 0);
  CHECK(parse(same)["verdict"] == "Equal");

  RunResult diff =
      run_cli("eq --input cli_two.graph --v1 1 --k1 0 --v2 3 --k2 0");
  CHECK(diff.code == 1);
  CHECK(parse(diff)["verdict"] == "NotEqual");
}

TEST_CASE("cone: positive after one push, or bound exhausted") {
  ensure_inputs();
  RunResult pos = run_cli("cone --input cli_fib.graph --v 1,-1 --k 0");
  CHECK(pos.code == 0);
  Json j = parse(pos);
  CHECK(j["verdict"] == "InCone");
  CHECK(j["power"] == 1);

  RunResult neg = run_cli("cone --input cli_two.graph --v -1 --k 0 --bound 10");
  CHECK(neg.code == 2);
  CHECK(parse(neg)["verdict"] == "Unknown");
  CHECK(parse(neg)["bound"] == 10);
}

TEST_CASE("se verify accepts and rejects witness files") {
  ensure_inputs();
  RunResult ok = run_cli("se verify --witness cli_witness.json");
  CHECK(ok.code == 0);
  CHECK(parse(ok)["verdict"] == "Valid");
  CHECK(parse(ok)["ok"] == true);

  RunResult bad = run_cli("se verify --witness cli_witness_bad.json");
  CHECK(bad.code == 1);
  Json j = parse(bad);
  CHECK(j["verdict"] == "Invalid");
  bool saw_failure = false;
  for (const Json& c : j["checks"])
    if (c["pass"] == false) saw_failure = true;
  CHECK(saw_failure);
}

TEST_CASE("se search finds the canonical first witness") {
  ensure_inputs();
  RunResult r =
      run_cli("se search --input cli_two.graph --input cli_ones.graph");
  CHECK(r.code == 0);
  Json j = parse(r);
  CHECK(j["verdict"] == "Found");
  CHECK(j["witness"]["R"] == Json::parse("[[1,1]]"));
  CHECK(j["witness"]["S"] == Json::parse("[[1],[1]]"));
  CHECK(j["witness"]["m"] == 1);

  // Identical bytes whatever the worker count.
  RunResult quad = run_cli(
      "se search --input cli_two.graph --input cli_ones.graph --jobs 4");
  CHECK(quad.out == r.out);

  RunResult self = run_cli("se search --input cli_two.graph");
  CHECK(self.code == 0);
  CHECK(parse(self)["witness"]["B"] == Json::parse("[[2]]"));
}

TEST_CASE("search reports bound exhaustion, not refutation") {
  ensure_inputs();
  write_file("cli_one.graph", "matrix 1\n1\n");
  RunResult r = run_cli(
      "se search --input cli_one.graph --input cli_two.graph --m-max 2");
  CHECK(r.code == 2);
  CHECK(parse(r)["verdict"] == "NoneWithinBounds");
}

TEST_CASE("splice then obstruct") {
  ensure_inputs();
  RunResult sp = run_cli("splice --input cli_two.graph --at 0");
  CHECK(sp.code == 0);
  Json j = parse(sp);
  CHECK(j["matrix"] == Json::parse("[[2,1,0],[1,1,1],[0,1,1]]"));
  write_file("cli_spliced.graph", "matrix 3\n2 1 0\n1 1 1\n0 1 1\n");

  RunResult no =
      run_cli("obstruct --input cli_two.graph --input cli_spliced.graph");
  CHECK(no.code == 1);
  CHECK(parse(no)["verdict"] == "NoUnitalHom");

  RunResult back =
      run_cli("obstruct --input cli_spliced.graph --input cli_two.graph");
  CHECK(back.code == 1);

  RunResult self = run_cli("obstruct --input cli_two.graph");
  CHECK(self.code == 2);
  Json s = parse(self);
  CHECK(s["verdict"] == "InconclusiveWithCandidate");
  CHECK(s["candidate"] == Json::parse("[[1]]"));
}

TEST_CASE("zmod commands") {
  ensure_inputs();
  RunResult eq = run_cli(
      "zmod eq --input cli_two.graph --modulus 2 --v1 1 --k1 0 --v2 2 --k2 1");
  CHECK(eq.code == 0);
  Json j = parse(eq);
  CHECK(j["verdict"] == "Equal");
  CHECK(j["p"] == 1);
  CHECK(j["q"] == 0);

  RunResult miss = run_cli(
      "zmod eq --input cli_two.graph --modulus 2 --v1 1 --k1 0 --v2 1 --k2 1");
  CHECK(miss.code == 2);
  CHECK(parse(miss)["verdict"] == "NotEqualWithinBound");
  CHECK(parse(miss)["bound"] == 6);

  RunResult chk = run_cli(
      "zmod check --input cli_two.graph --r 1 --modulus 2 --k-max 3");
  CHECK(chk.code == 0);
  CHECK(parse(chk)["verdict"] == "Holds");
  CHECK(parse(chk)["k"] == 0);

  RunResult both = run_cli(
      "zmod check --input cli_two.graph --r 1 --modulus 2 --k 1 --k-max 3");
  CHECK(both.code == 64);
}

TEST_CASE("output is deterministic and the text renderer works") {
  ensure_inputs();
  RunResult a = run_cli("dimgroup --input cli_two.graph");
  RunResult b = run_cli("dimgroup --input cli_two.graph");
  CHECK(a.out == b.out);

  RunResult text = run_cli("--format text dimgroup --input cli_two.graph");
  CHECK(text.code == 0);
  CHECK(text.out.find("command: dimgroup") != std::string::npos);
  CHECK(Json::parse(text.out, nullptr, false).is_discarded());

  RunResult timed = run_cli("--timing eq --input cli_two.graph --v1 1 --k1 0 "
                            "--v2 2 --k2 1");
  CHECK(timed.code == 0);
  CHECK(parse(timed).count("elapsed_ms") == 1);
}

TEST_CASE("usage and data errors") {
  ensure_inputs();
  CHECK(run_cli("frobnicate").code == 64);
  CHECK(run_cli("eq --input cli_two.graph --v1 1").code == 64);
  CHECK(run_cli("dimgroup --input does_not_exist.graph").code == 65);

  write_file("cli_broken.json", "{oops");
  CHECK(run_cli("se verify --witness cli_broken.json").code == 65);

  write_file("cli_sink.graph", "vertices 2\nedge 0 1\n");
  CHECK(run_cli("dimgroup --input cli_sink.graph").code == 65);
}
