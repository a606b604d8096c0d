#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct Outcome {
  std::string output;
  int status = -1;
};

Outcome run(const std::string& arguments, const std::string& environment = "") {
  const std::string command = environment + " '" NCKIT_CLI_PATH "' " + arguments + " 2>&1";
  Outcome out;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer{};
  while (std::size_t n = std::fread(buffer.data(), 1, buffer.size(), pipe)) {
    out.output.append(buffer.data(), n);
  }
  const int raw = pclose(pipe);
  out.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return out;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  return text.str();
}

}  // namespace

TEST_CASE("cli enum") {
  const auto trees = run("enum trees --edges 2");
  CHECK(trees.status == 0);
  CHECK(trees.output == "nct:3:1-2,2-3\nnct:3:1-3,2-3\nnct:3:1-2,1-3\n# count 3\n");
  const auto jsonl = run("enum trees --edges 2 --format jsonl");
  CHECK(jsonl.output.find("{\"count\":3}") != std::string::npos);
  CHECK(run("enum trees --edges 3 --class proper").output.find("# count 2") != std::string::npos);
  CHECK(run("enum graphs --vertices 4").output.find("# count 23") != std::string::npos);
}

TEST_CASE("cli map") {
  const auto lr = run("map to-lr --input nct:8:1-4,1-7,2-3,2-4,5-7,6-7,7-8");
  CHECK(lr.status == 0);
  CHECK(lr.output == "(R(L(R()))R(L()L()R()))\n");
  CHECK(run("map from-lr --input '(R(L(R()))R(L()L()R()))'").output ==
        "nct:8:1-4,1-7,2-3,2-4,5-7,6-7,7-8\n");
  CHECK(run("map phi --input nct:3:1-3,2-3").output == "nct:3:1-2,2-3\n");
  CHECK(run("map canonical-tree --input ncg:7:1-3,1-4,2-3,3-4,4-7,5-6,5-7,6-7").output ==
        "nct:7:1-4,2-3,3-4,4-7,5-7,6-7\n");
  const auto roundTrip = run("map phi --input nct:3:1-3,2-3 --check-roundtrip");
  CHECK(roundTrip.status == 0);
  CHECK(roundTrip.output.find("roundtrip PASS") != std::string::npos);
}

TEST_CASE("cli count and verify") {
  CHECK(run("count c --n 8").output == "43263\n");
  CHECK(run("count s --n 6").output == "12\n");
  CHECK(run("count d --n 3 --k 1").output == "5\n");
  const auto csv = run("verify --identity alternating-sum --max-n 2 --format csv");
  CHECK(csv.status == 0);
  CHECK(csv.output ==
        "identity,parameters,lhs,rhs,result\n"
        "alternating-sum,n=1 k=0,1,1,PASS\n"
        "alternating-sum,n=2 k=0,2,2,PASS\n"
        "alternating-sum,n=2 k=1,-1,-1,PASS\n");
  CHECK(run("verify --identity involution-phi --max-n 5").status == 0);
}

TEST_CASE("cli exit codes") {
  CHECK(run("").status == 2);
  CHECK(run("enum").status == 2);
  CHECK(run("verify --identity nonsense --max-n 2").status == 2);
  CHECK(run("enum trees --edges 11").status == 3);
  CHECK(run("enum trees --edges 11", "NCKIT_GUARD=9").status == 3);
  CHECK(run("count c --n 11", "NCKIT_GUARD=9").status == 0);
  const auto forced = run("enum lr --edges 2", "NCKIT_GUARD=1");
  CHECK(forced.status == 3);
  CHECK(run("enum lr --edges 2 --force", "NCKIT_GUARD=1").status == 0);
  const auto notProper = run("map sigma --input nct:3:1-2,2-3");
  CHECK(notProper.status == 4);
  CHECK(notProper.output.find("NotProperTree") != std::string::npos);
  const auto parse = run("map to-lr --input nct:3:1-2,x");
  CHECK(parse.status == 4);
  CHECK(parse.output.find("ParseError") != std::string::npos);
  CHECK(run("render --input nct:3:1-2,2-3 --out /nonexistent/dir/x.svg").status == 5);
}

TEST_CASE("cli render is deterministic") {
  const auto dir = std::filesystem::temp_directory_path();
  const auto first = dir / "nckit_render_a.svg";
  const auto second = dir / "nckit_render_b.svg";
  const std::string input = "--input 'ncg:4:1-2*,1-3,1-4,2-3'";
  REQUIRE(run("render " + input + " --out " + first.string()).status == 0);
  REQUIRE(run("render " + input + " --out " + second.string()).status == 0);
  const auto svg = slurp(first);
  CHECK(svg == slurp(second));
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("stroke-dasharray") != std::string::npos);
  std::filesystem::remove(first);
  std::filesystem::remove(second);
}

TEST_CASE("cli identity aliases") {
  CHECK(run("verify --identity theorem3 --max-n 6").status == 0);
  CHECK(run("verify --identity involution-t4 --max-n 3").status == 0);
  CHECK(run("map involution4 --input ncg:3:1-3,2-3").output == "ncg:3:1-2,1-3,2-3\n");
}
