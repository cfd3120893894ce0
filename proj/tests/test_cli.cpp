#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "systema/cli.hpp"
#include "systema/textio.hpp"

using namespace systema;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
  Report report() const { return Report::parse(out); }
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "systema");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Run r;
  r.code = runCli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

Run machine(std::vector<std::string> args) {
  args.insert(args.begin(), {"--format", "machine"});
  return cli(std::move(args));
}

// Scratch directory holding the input files for one test case.
class Scratch {
 public:
  Scratch() {
    static int counter = 0;
    dir_ = std::filesystem::temp_directory_path() /
           ("systema-cli-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    std::filesystem::create_directories(dir_);
  }
  ~Scratch() { std::filesystem::remove_all(dir_); }
  std::string file(const std::string& name, const std::string& content) const {
    const auto path = dir_ / name;
    std::ofstream(path) << content;
    return path.string();
  }

 private:
  std::filesystem::path dir_;
};

}  // namespace

TEST_CASE("classify") {
  const Run sign = machine({"classify", "sign"});
  CHECK(sign.code == kComputed);
  const Report r = sign.report();
  CHECK(r.kind == "classify");
  CHECK(r.get("classification") == "system");
  CHECK(r.get("meta-tangible") == "true");
  CHECK(r.get("negation-kind") == "second");
  CHECK(r.get("characteristic") == "1");
  CHECK(r.getAll("axiom").size() > 10);

  const Report phase = machine({"classify", "phase"}).report();
  CHECK(phase.get("classification") == "pseudo-triple");
  CHECK(phase.get("meta-tangible") == "false");
  CHECK(phase.get("sampled") == "true");

  const Run bad = cli({"classify", "nosuch"});
  CHECK(bad.code == kUsage);
  CHECK(bad.err.find("krasner") != std::string::npos);
}

TEST_CASE("linear algebra commands") {
  Scratch tmp;
  const auto signM = tmp.file("s.txt", "2 2 sign\n+ +\n- +\n");
  const Run det = machine({"det", "sign", signM});
  CHECK(det.code == kComputed);
  CHECK(det.report().get("value") == "+");

  const Run human = cli({"det", "sign", signM});
  CHECK(human.out.find("value: +") != std::string::npos);

  const auto st = tmp.file("st.txt", "2 2 supertropical:maxplus\n1 2\n3 4\n");
  const Report adj = machine({"adj", "supertropical:maxplus", st}).report();
  CHECK(parseMatrix(*adj.get("matrix")) == parseMatrix("2 2 supertropical:maxplus\n4 2\n3 1\n"));

  const Report lap = machine({"laplace", "supertropical:maxplus", st, "--rows", "1,2"}).report();
  CHECK(lap.get("value") == lap.get("det"));
  CHECK(lap.get("equal") == "true");

  const auto id = tmp.file("id.txt", "2 2 sign\n+ 0\n0 +\n");
  const auto v = tmp.file("v.txt", "2 1 sign\n-\n+\n");
  const Report solve = machine({"solve", "sign", id, v}).report();
  CHECK(solve.get("holds") == "true");
  CHECK(solve.get("tangible-solution") == "+ -");

  const Report rank = machine({"rank", "sign", id}).report();
  CHECK(rank.get("row-rank") == "2");
  CHECK(rank.get("submatrix-rank") == "2");

  const Run ch = machine({"cayley", "supertropical:maxplus", st});
  CHECK(ch.code == kComputed);
  CHECK(ch.report().get("ghost") == "true");

  const Report ws = machine({"witness-search", "sign", "3", "4"}).report();
  CHECK(ws.get("found") == "true");
  CHECK(ws.get("row-rank") == "3");
  CHECK(ws.get("submatrix-rank") == "2");
  CHECK(machine({"witness-search", "sign", "2", "2"}).report().get("found") == "false");
}

TEST_CASE("polynomial commands") {
  Scratch tmp;
  const auto f = tmp.file("f.txt", "krasner; vars=1; x1 + [1]\n");
  const auto g = tmp.file("g.txt", "krasner; vars=1; x1^2 + x1 + [1]\n");
  const auto h = tmp.file("h.txt", "krasner; vars=1; x1\n");

  const Report ev = machine({"poly", "eval", "krasner", f, "--at", "1"}).report();
  CHECK(ev.get("value") == "T");
  CHECK(ev.get("preceq-root") == "true");

  const Report supp = machine({"poly", "supp", "krasner", f}).report();
  CHECK(supp.getAll("point") == std::vector<std::string>{"0"});
  CHECK(machine({"poly", "roots", "krasner", f}).report().getAll("point").size() == 2);

  const Run same = machine({"poly", "bend", "krasner", f, g, "--chain", "4"});
  CHECK(same.code == kComputed);
  CHECK(same.report().get("chain") == "connected");
  const Run apart = machine({"poly", "bend", "krasner", f, h});
  CHECK(apart.code == kViolated);
  CHECK(apart.report().get("witness") == "0");

  CHECK(machine({"poly", "ideal", "krasner", f, h}).code == kComputed);
  const auto bx = tmp.file("bx.txt", "boolean; vars=1; x1\n");
  const auto b1 = tmp.file("b1.txt", "boolean; vars=1; [1]\n");
  const Run ideal = machine({"poly", "ideal", "boolean", bx, b1});
  CHECK(ideal.code == kViolated);
  CHECK(ideal.report().get("point") == "1");

  const auto stf = tmp.file("stf.txt", "supertropical:maxplus; vars=1; x1 + [3]\n");
  const Report win = machine({"poly", "supp", "supertropical:maxplus", stf, "--window", "2,4"}).report();
  CHECK(win.get("sampled") == "true");
}

TEST_CASE("tropical commands") {
  Scratch tmp;
  const Report val = machine({"trop", "val", tmp.file("s.txt", "3*t^(1/2)+t^2\n")}).report();
  CHECK(val.get("value") == "1/2");
  CHECK(val.get("denominator") == "2");

  const auto sp = tmp.file("sp.txt", "puiseux; vars=1; [t]*x1 + [t^2]\n");
  CHECK(machine({"trop", "trop", sp}).report().get("polynomial") == "minplus; vars=1; [2] + [1]*x1");
  CHECK(machine({"trop", "strop", sp}).report().get("polynomial") ==
        "supertropical:minplus; vars=1; [2] + [1]*x1");

  const auto pm = tmp.file("pm.txt", "2 4 puiseux\n1 t t^2 1+t\nt 1 t^3 2\n");
  const Run mat = machine({"trop", "matroid", pm, "--rank", "2"});
  CHECK(mat.code == kComputed);
  CHECK(mat.report().get("valid") == "true");
  CHECK(mat.report().getAll("value").front() == "1 2 = 0");
}

TEST_CASE("usage and input errors exit with status 2") {
  Scratch tmp;
  const auto signM = tmp.file("s.txt", "2 2 sign\n+ +\n- +\n");
  CHECK(cli({}).code == kUsage);
  CHECK(cli({"det"}).code == kUsage);
  CHECK(cli({"frobnicate"}).code == kUsage);
  CHECK(cli({"--format", "xml", "det", "sign", signM}).code == kUsage);
  CHECK(cli({"det", "sign", "/nonexistent/systema/m.txt"}).code == kUsage);

  const Run mismatch = cli({"det", "krasner", signM});
  CHECK(mismatch.code == kUsage);
  CHECK(mismatch.err.find("sign") != std::string::npos);

  const Run parse = cli({"det", "sign", tmp.file("bad.txt", "2 2 sign\n+ +\n- x\n")});
  CHECK(parse.code == kUsage);
  CHECK(parse.err.find("line 3") != std::string::npos);
  CHECK(parse.err.find("column 3") != std::string::npos);

  CHECK(cli({"det", "sign", tmp.file("r.txt", "2 3 sign\n+ + +\n- + -\n")}).code == kUsage);
  CHECK(cli({"laplace", "sign", signM, "--rows", "3"}).code == kUsage);
}

TEST_CASE("machine output is deterministic and round-trips") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"classify", "supertropical:chain:2"}, {"witness-search", "sign", "3", "3"}, {"check", "--count", "10"}}) {
    const Run a = machine(args), b = machine(args);
    CHECK(a.out == b.out);
    CHECK(a.report().str() == a.out);
  }
  const Run check = machine({"check", "--count", "10", "--seed", "7"});
  CHECK(check.code == kComputed);
  CHECK(check.report().get("seed") == "7");
}
