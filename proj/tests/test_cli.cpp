#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class Workspace {
 public:
  Workspace() : dir_(fs::temp_directory_path() / ("shelfpack-cli-" + std::to_string(getpid()))) {
    fs::create_directories(dir_);
  }
  ~Workspace() { fs::remove_all(dir_); }

  fs::path write(const std::string& name, const std::string& contents) const {
    std::ofstream(dir_ / name, std::ios::binary) << contents;
    return dir_ / name;
  }
  fs::path path(const std::string& name) const { return dir_ / name; }

  Run run(const std::string& args) const {
    const fs::path err = dir_ / "stderr.txt";
    const std::string cmd = std::string(SHELFPACK_CLI) + " " + args + " 2>" + err.string();
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    for (std::size_t n; (n = fread(buf, 1, sizeof buf, pipe)) > 0;) out.append(buf, n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out, slurp(err)};
  }

 private:
  fs::path dir_;
};

const std::string kData = SHELFPACK_TEST_DATA;

}  // namespace

TEST_CASE("solve dispatches to the linear solver") {
  Workspace ws;
  const auto in = ws.write("i.txt", "shelfpack-instance v1\na 10\nb 9\nc 8\nd 7\n");
  const auto r = ws.run("solve " + in.string() + " --backend exact");
  CHECK(r.code == 0);
  CHECK(r.out.find("# mode: exact (linear case)") != std::string::npos);
  CHECK(r.out.find("# span: 571\n") != std::string::npos);
  CHECK(r.out.rfind("shelfpack-placement v1\n", 0) == 0);

  const auto again = ws.run("solve " + in.string() + " --backend exact");
  CHECK(again.out == r.out);
}

TEST_CASE("solve falls back to greedy") {
  Workspace ws;
  const auto in = ws.write("i.txt", "shelfpack-instance v1\na 5\nb 4\nc 3\nd 2\n");
  const auto out = ws.path("p.txt");
  const auto r = ws.run("solve " + in.string() + " --backend exact --out " + out.string());
  CHECK(r.code == 0);
  CHECK(r.out.find("mode: greedy (4/3-approximation)") != std::string::npos);
  CHECK(ws.run("verify " + out.string()).code == 0);

  const auto linear = ws.run("solve " + in.string() + " --mode linear");
  CHECK(linear.code == 3);
}

TEST_CASE("oracle mode and its limit") {
  Workspace ws;
  std::string twelve = "shelfpack-instance v1\n";
  for (int i = 0; i < 12; ++i) twelve += "d" + std::to_string(i) + " " + std::to_string(i + 1) + "\n";
  const auto big = ws.write("big.txt", twelve);
  const auto r = ws.run("solve " + big.string() + " --mode exact");
  CHECK(r.code == 3);
  CHECK(r.err.find("refuses 12 disks (limit 10)") != std::string::npos);

  const auto small = ws.write("s.txt", "shelfpack-instance v1\na 10\nb 9\nc 8\nd 6\ne 4\n");
  const auto ok = ws.run("solve " + small.string() + " --mode exact --backend exact --threads 2");
  CHECK(ok.code == 0);
  CHECK(ok.out.find("# span: 533\n") != std::string::npos);
}

TEST_CASE("solve input errors") {
  Workspace ws;
  const auto decimal = ws.write("d.txt", "shelfpack-instance v1\na 0.5\nb 2.0\n");
  CHECK(ws.run("solve " + decimal.string() + " --backend exact").code == 3);
  CHECK(ws.run("solve " + decimal.string()).code == 0);
  const auto mixed = ws.write("m.txt", "shelfpack-instance v1\na 1/2\nb 2.0\n");
  CHECK(ws.run("solve " + mixed.string()).code == 2);
  CHECK(ws.run("solve " + ws.path("missing.txt").string()).code == 2);
  CHECK(ws.run("solve " + decimal.string() + " --mode nope").code == 2);
}

TEST_CASE("verify") {
  Workspace ws;
  const auto good = ws.write("g.txt", "shelfpack-placement v1\na 1 1\nb 1 3\n");
  auto r = ws.run("verify " + good.string());
  CHECK(r.code == 0);
  CHECK(r.out.find("accepted") == 0);
  CHECK(r.out.find("span: 4 (exact)") != std::string::npos);

  const auto bad = ws.write("b.txt", "shelfpack-placement v1\na 1.0 1.0\nb 1.0 2.9\n");
  r = ws.run("verify " + bad.string());
  CHECK(r.code == 1);
  CHECK(r.out.find("violation: a b") != std::string::npos);
  CHECK(ws.run("verify " + bad.string() + " --tolerance 0.1").code == 0);

  const auto empty = ws.write("e.txt", "");
  CHECK(ws.run("verify " + empty.string()).code == 2);
}

TEST_CASE("genhard writes instance, sidecar and certificate") {
  Workspace ws;
  const auto out = ws.path("h.txt");
  const auto r = ws.run("genhard " + kData + "/partition_m2.txt --out " + out.string() +
                        " --certificate " + kData + "/groups_m2.txt --integer-radii " +
                        ws.path("r.txt").string());
  CHECK(r.code == 0);
  CHECK(r.out.find("disks: 35\nbudget: 6\n") == 0);
  CHECK(fs::exists(ws.path("h.txt.json")));
  CHECK(slurp(ws.path("r.txt")).rfind("shelfpack-radii v1\n", 0) == 0);

  const auto v = ws.run("verify " + ws.path("h.txt.certificate").string());
  CHECK(v.code == 0);
  CHECK(v.out.find("span: 6 (exact)") != std::string::npos);

  const auto solved = ws.run("solve " + out.string() + " --backend exact --mode greedy");
  CHECK(solved.code == 0);
}

TEST_CASE("genhard rejects invalid partitions") {
  Workspace ws;
  const auto in = ws.write("p.txt", "1 100\n50 25 25\n");
  const auto r = ws.run("genhard " + in.string() + " --out " + ws.path("h.txt").string());
  CHECK(r.code == 3);
  CHECK(r.err.find("a_i") != std::string::npos);

  const auto fifty = ws.write("f.txt", "2 100\n30 20 50\n26 35 39\n");
  const auto r2 = ws.run("genhard " + fifty.string() + " --out " + ws.path("h.txt").string());
  CHECK(r2.code == 3);

  const auto m3 = ws.write("m3.txt", "3 100\n30 33 37\n26 35 39\n28 34 38\n");
  const auto r3 = ws.run("genhard " + m3.string() + " --out " + ws.path("h3.txt").string());
  CHECK(r3.code == 0);
  CHECK(r3.out.find("disks: 47\nbudget: 8\n") == 0);
}

TEST_CASE("render") {
  Workspace ws;
  const auto two = ws.write("t.txt", "shelfpack-placement v1\na 1 1\nb 1 3\n");
  const auto r = ws.run("render " + two.string());
  CHECK(r.code == 0);
  CHECK(r.out.find(R"(<circle cx="1" cy="1" r="1")") != std::string::npos);
  CHECK(r.out.find(R"(<circle cx="3" cy="1" r="1")") != std::string::npos);
  CHECK(r.out.find(">4</text>") != std::string::npos);
  CHECK(ws.run("render " + two.string() + " --scale 0").code == 3);
  CHECK(ws.run("render " + ws.write("x.txt", "nonsense\n").string()).code == 2);
}

TEST_CASE("render matches the golden certificate drawing") {
  Workspace ws;
  REQUIRE(ws.run("genhard " + kData + "/partition_m2.txt --out " + ws.path("h.txt").string() +
                 " --certificate " + kData + "/groups_m2.txt")
              .code == 0);
  const auto svg = ws.path("c.svg");
  REQUIRE(ws.run("render " + ws.path("h.txt.certificate").string() + " --out " + svg.string())
              .code == 0);
  CHECK(slurp(svg) == slurp(kData + "/certificate_m2.svg"));
}

TEST_CASE("identities report the printed-bound mismatches") {
  Workspace ws;
  const auto r = ws.run("identities");
  CHECK(r.code == 1);
  CHECK(r.out.find("96/99 checks passed") != std::string::npos);
}
