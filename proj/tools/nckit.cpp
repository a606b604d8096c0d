// nckit: enumerate, map, count, verify and render noncrossing trees and
// connected noncrossing graphs.
//
// Exit codes: 0 ok, 1 a verification failed, 2 bad flags, 3 size guard
// exceeded, 4 input rejected by a map's precondition, 5 output not writable.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nckit/bijections.hpp"
#include "nckit/checks.hpp"
#include "nckit/counting.hpp"
#include "nckit/enumerate.hpp"
#include "nckit/graphs.hpp"
#include "nckit/parity.hpp"
#include "nckit/render.hpp"
#include "nckit/represent.hpp"

namespace {

using namespace nckit;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;
constexpr int kExitPrecondition = 4;
constexpr int kExitUnwritable = 5;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct GuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Guards {
  int edges = 10;
  int vertices = 8;
};

// NCKIT_GUARD is "<edges>" or "<edges>,<vertices>".
Guards defaultGuards() {
  Guards guards;
  const char* env = std::getenv("NCKIT_GUARD");
  if (env == nullptr || *env == '\0') return guards;
  std::string text = env;
  try {
    const auto comma = text.find(',');
    guards.edges = std::stoi(text.substr(0, comma));
    if (comma != std::string::npos) guards.vertices = std::stoi(text.substr(comma + 1));
  } catch (const std::exception&) {
    throw UsageError("NCKIT_GUARD must look like 10 or 10,8");
  }
  return guards;
}

void enforce(bool force, int value, int limit, const std::string& what) {
  if (value <= limit) return;
  if (!force) {
    throw GuardError(what + " " + std::to_string(value) + " exceeds guard " +
                     std::to_string(limit) + " (use --force or NCKIT_GUARD)");
  }
  std::cerr << "warning: " << what << " " << value << " exceeds guard " << limit << "\n";
}

// ---------------------------------------------------------------------------
// enum

struct EnumOptions {
  std::string family;
  std::optional<int> edges;
  std::optional<int> vertices;
  std::optional<int> internal;
  int marks = 0;
  std::string klass = "all";
  std::string format = "text";
  bool force = false;
};

class LineSink {
 public:
  explicit LineSink(bool json) : json_(json) {}

  void emit(const std::string& value, nlohmann::ordered_json meta = nlohmann::ordered_json::object()) {
    ++count_;
    if (!json_) {
      std::cout << value << '\n';
      return;
    }
    nlohmann::ordered_json line = {{"value", value}};
    for (auto& [key, item] : meta.items()) line[key] = item;
    std::cout << line.dump() << '\n';
  }
  void finish() const {
    if (json_) {
      std::cout << nlohmann::ordered_json{{"count", count_}}.dump() << '\n';
    } else {
      std::cout << "# count " << count_ << '\n';
    }
  }

 private:
  bool json_;
  std::uint64_t count_ = 0;
};

int require(const std::optional<int>& value, const char* flag, const std::string& family) {
  if (!value) throw UsageError("enum " + family + " needs " + flag);
  if (*value < 0) throw UsageError(std::string(flag) + " must be non-negative");
  return *value;
}

int runEnum(const EnumOptions& opt) {
  const Guards guards = defaultGuards();
  LineSink sink(opt.format == "jsonl");
  const auto& family = opt.family;
  if (opt.klass != "all" && family != "trees") {
    throw UsageError("--class applies to the trees family only");
  }

  if (family == "trees") {
    const int n = require(opt.edges, "--edges", family);
    enforce(opt.force, n, guards.edges, "edges");
    for (const auto& lr : lrTrees(n)) {
      const int d = descentCount(lr);
      const bool proper = isProper(lr);
      const bool keep = opt.klass == "all" || (opt.klass == "even" && d % 2 == 0) ||
                        (opt.klass == "odd" && d % 2 == 1) ||
                        (opt.klass == "proper" && proper) || (opt.klass == "improper" && !proper);
      if (!keep) continue;
      sink.emit(serialize(fromLRTree(lr)), {{"descents", d},
                                            {"parity", d % 2 == 0 ? "even" : "odd"},
                                            {"class", proper ? "proper" : "improper"}});
    }
  } else if (family == "lr") {
    const int n = require(opt.edges, "--edges", family);
    enforce(opt.force, n, guards.edges, "edges");
    for (const auto& lr : lrTrees(n)) sink.emit(serialize(lr), {{"descents", descentCount(lr)}});
  } else if (family == "plane" || family == "even") {
    const int n = require(opt.edges, "--edges", family);
    enforce(opt.force, n, 2 * guards.edges, "edges");
    if (family == "plane") {
      for (const auto& t : planeTrees(n)) sink.emit(serialize(t));
    } else {
      for (const auto& t : evenPlaneTrees(n)) sink.emit(serialize(t));
    }
  } else if (family == "ternary" || family == "symmetric") {
    const int n = require(opt.internal, "--internal", family);
    enforce(opt.force, n, guards.edges, "internal nodes");
    if (family == "ternary") {
      for (const auto& t : ternaryTrees(n)) sink.emit(serialize(t));
    } else {
      for (const auto& t : symmetricTernaryTrees(n)) sink.emit(serialize(t));
    }
  } else if (family == "graphs") {
    const int v = require(opt.vertices, "--vertices", family);
    enforce(opt.force, v, guards.vertices, "vertices");
    for (const auto& g : connectedNCGraphs(v, opt.edges)) {
      sink.emit(serialize(g), {{"edges", g.edgeCount()},
                               {"free", g.edgeCount() - (g.vertexCount() - 1)}});
    }
  } else if (family == "marked") {
    const int v = require(opt.vertices, "--vertices", family);
    enforce(opt.force, v, guards.vertices, "vertices");
    if (opt.marks < 0) throw UsageError("--marks must be non-negative");
    for (const auto& m : markedGraphs(v, opt.marks)) {
      sink.emit(serialize(m), {{"edges", m.graph().edgeCount()},
                               {"fixed", allDescentsMarked(m)}});
    }
  } else {
    throw UsageError("unknown family " + family);
  }
  sink.finish();
  return 0;
}

// ---------------------------------------------------------------------------
// map

struct MapOptions {
  std::string name;
  std::string input;
  std::vector<std::string> descents;
  bool checkRoundTrip = false;
};

Descent parseDescent(const std::string& text) {
  const auto comma = text.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument(text);
    return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw UsageError("--descent expects parent,child (e.g. 4,2), got '" + text + "'");
  }
}

std::string descentText(const Descent& d) {
  return std::to_string(d.parent) + "," + std::to_string(d.child);
}

struct MapResult {
  std::string output;
  std::optional<bool> roundTrip;  // set when an inverse was applied
};

MapResult applyMap(const MapOptions& opt) {
  const auto& name = opt.name;
  const auto& in = opt.input;
  const bool check = opt.checkRoundTrip;

  if (name == "to-lr") {
    const auto t = parseTree(in);
    const auto lr = toLRTree(t);
    return {serialize(lr), check ? std::optional(fromLRTree(lr) == t) : std::nullopt};
  }
  if (name == "from-lr") {
    const auto lr = parseLRTree(in);
    const auto t = fromLRTree(lr);
    return {serialize(t), check ? std::optional(toLRTree(t) == lr) : std::nullopt};
  }
  if (name == "psi") {
    const auto e = parsePlaneTree(in);
    const auto t = psi(e);
    return {serialize(t), check ? std::optional(psiInverse(t) == e) : std::nullopt};
  }
  if (name == "psi-inverse") {
    const auto t = parseTernaryTree(in);
    const auto e = psiInverse(t);
    return {serialize(e), check ? std::optional(psi(e) == t) : std::nullopt};
  }
  if (name == "reflect") {
    const auto t = parseTernaryTree(in);
    const auto r = reflect(t);
    return {serialize(r), check ? std::optional(reflect(r) == t) : std::nullopt};
  }
  if (name == "sigma") {
    const auto t = parseTree(in);
    const auto s = sigma(t);
    return {serialize(s.tree()), check ? std::optional(sigmaInverse(s) == t) : std::nullopt};
  }
  if (name == "sigma-inverse") {
    const SymmetricTernaryTree s(parseTernaryTree(in));
    const auto t = sigmaInverse(s);
    return {serialize(t), check ? std::optional(sigma(t) == s) : std::nullopt};
  }
  if (name == "phi") {
    // Accepts either representation and answers in the same one.
    if (in.starts_with("nct:")) {
      const auto t = parseTree(in);
      const auto image = phi(t);
      return {serialize(image), check ? std::optional(phi(image) == t) : std::nullopt};
    }
    const auto lr = parseLRTree(in);
    const auto image = phi(lr);
    return {serialize(image), check ? std::optional(phi(image) == lr) : std::nullopt};
  }
  if (name == "descents") {
    std::string out;
    for (const auto& d : descents(parseTree(in))) out += (out.empty() ? "" : ";") + descentText(d);
    return {out, std::nullopt};
  }
  if (name == "canonical-tree") {
    return {serialize(canonicalSpanningTree(parseGraph(in))), std::nullopt};
  }
  if (name == "free-edges") {
    std::string out;
    for (auto c : freeEdges(parseGraph(in))) out += (out.empty() ? "" : ",") + serialize(c);
    return {out, std::nullopt};
  }
  if (name == "companion") {
    if (opt.descents.size() != 1) throw UsageError("companion needs exactly one --descent");
    const auto c = companionEdge(parseTree(in), parseDescent(opt.descents.front()));
    return {serialize(c), std::nullopt};
  }
  if (name == "assemble") {
    const auto t = parseTree(in);
    std::vector<Descent> chosen;
    for (const auto& d : opt.descents) chosen.push_back(parseDescent(d));
    std::sort(chosen.begin(), chosen.end(),
              [](const Descent& x, const Descent& y) { return x.child < y.child; });
    const auto g = assemble(t, chosen);
    std::optional<bool> ok;
    if (check) ok = canonicalSpanningTree(g) == t && saturatedDescents(g) == chosen;
    return {serialize(g), ok};
  }
  if (name == "involution-marked" || name == "involution4") {
    const auto m = parseMarkedGraph(in);
    const auto image = toggleFirstUnmarkedCompanion(m);
    return {serialize(image),
            check ? std::optional(toggleFirstUnmarkedCompanion(image) == m) : std::nullopt};
  }
  throw UsageError("unknown map " + name);
}

int runMap(const MapOptions& opt) {
  const auto result = applyMap(opt);
  std::cout << result.output << '\n';
  if (opt.checkRoundTrip) {
    if (!result.roundTrip) throw UsageError("map " + opt.name + " has no inverse to check");
    std::cout << (*result.roundTrip ? "roundtrip PASS" : "roundtrip FAIL") << '\n';
    return *result.roundTrip ? 0 : kExitFail;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyOptions {
  std::string identity;
  int maxN = 6;
  std::string format = "table";
  bool force = false;
};

std::string table(const Report& report) {
  std::size_t wIdentity = 8;
  std::size_t wParams = 10;
  std::size_t wLhs = 3;
  std::size_t wRhs = 3;
  for (const auto& r : report) {
    wIdentity = std::max(wIdentity, r.identity.size());
    wParams = std::max(wParams, r.parameters.size());
    wLhs = std::max(wLhs, r.lhs.str().size());
    wRhs = std::max(wRhs, r.rhs.str().size());
  }
  auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w - s.size(), ' '); };
  std::string out = pad("identity", wIdentity) + "  " + pad("parameters", wParams) + "  " +
                    pad("lhs", wLhs) + "  " + pad("rhs", wRhs) + "  result\n";
  for (const auto& r : report) {
    out += pad(r.identity, wIdentity) + "  " + pad(r.parameters, wParams) + "  " +
           pad(r.lhs.str(), wLhs) + "  " + pad(r.rhs.str(), wRhs) + "  " +
           (r.pass ? "PASS" : "FAIL") + "\n";
  }
  return out;
}

Report runIdentity(const VerifyOptions& opt) {
  const Guards guards = defaultGuards();
  const int n = opt.maxN;
  if (n < 0) throw UsageError("--max-n must be non-negative");
  const auto& id = opt.identity;
  auto treeGuard = [&] { enforce(opt.force, n, guards.edges, "--max-n"); };
  auto graphGuard = [&] { enforce(opt.force, n + 1, guards.vertices, "vertices"); };

  if (id == "tree-count") return treeGuard(), checkTreeCounts(n);
  if (id == "tree-oracle") {
    if (n > kOracleEdgeGuard) throw GuardError("the chord-subset oracle stops at 7 edges");
    return checkTreeOracle(n);
  }
  if (id == "descents") return treeGuard(), checkDescentDistribution(n);
  if (id == "representation") return treeGuard(), checkRepresentation(n);
  if (id == "e-minus-o") return treeGuard(), checkEvenMinusOdd(n);
  if (id == "involution-phi") return treeGuard(), checkPhiInvolution(n);
  if (id == "bijection-psi") return enforce(opt.force, n, guards.edges / 2 + 1, "--max-n"),
                                    checkPsiBijection(n);
  if (id == "bijection-sigma") return treeGuard(), checkSigmaBijection(n);
  if (id == "canonical-confluence") return graphGuard(), checkCanonicalConfluence(n + 1);
  if (id == "hough-roundtrip") return graphGuard(), checkHoughBijection(n);
  if (id == "involution-marked" || id == "involution-t4") {
    return graphGuard(), checkMarkedInvolution(n);
  }
  if (id == "marked-counts") return graphGuard(), checkMarkedCounts(n);
  if (id == "alternating-sum" || id == "theorem3") {
    Report all;
    for (int k = 1; k <= n; ++k) {
      auto rows = verifyAlternatingSum(k);
      all.insert(all.end(), rows.begin(), rows.end());
    }
    return all;
  }
  if (id == "parity-binomial") return verifyParityBinomialIdentities(n);
  if (id == "convolution") {
    Report all;
    for (int k = 1; k <= n; ++k) {
      auto rows = verifyConvolutionIdentity(k);
      all.insert(all.end(), rows.begin(), rows.end());
      rows = verifyVandermonde(k);
      all.insert(all.end(), rows.begin(), rows.end());
    }
    return all;
  }
  if (id == "integrality") return verifyIntegrality(n);
  throw UsageError("unknown identity " + id);
}

int runVerify(const VerifyOptions& opt) {
  const Report report = runIdentity(opt);
  if (opt.format == "csv") {
    std::cout << toCsv(report);
  } else if (opt.format == "jsonl") {
    std::cout << toJsonLines(report);
  } else {
    std::cout << table(report);
  }
  return allPass(report) ? 0 : kExitFail;
}

// ---------------------------------------------------------------------------
// count

struct CountOptions {
  std::string quantity;
  std::optional<int> n;
  std::optional<int> k;
  bool table = false;
};

int runCount(const CountOptions& opt) {
  if (!opt.n || *opt.n < 0) throw UsageError("count needs a non-negative --n");
  const int n = *opt.n;
  const auto& q = opt.quantity;
  const bool needsK = q == "d" || q == "N";

  std::function<ExactInt(int)> single;
  if (q == "c") single = noncrossingTreeCount;
  else if (q == "s" || q == "t") single = symmetricTernaryCount;
  else if (q == "catalan") single = catalan;
  else if (q == "e") single = [](int x) { return evenOddSplit(x).first; };
  else if (q == "o") single = [](int x) { return evenOddSplit(x).second; };
  else if (!needsK) throw UsageError("unknown quantity " + q);

  auto pairValue = [&](int x, int k) {
    return q == "d" ? treesWithDescents(x, k) : connectedGraphCount(x, k);
  };

  if (opt.table) {
    if (needsK) {
      std::cout << "n,k," << q << '\n';
      for (int x = 0; x <= n; ++x) {
        const int lo = q == "d" ? 0 : x;
        const int hi = q == "d" ? std::max(x - 1, 0) : std::max(2 * x - 1, 0);
        for (int k = lo; k <= hi; ++k) std::cout << x << ',' << k << ',' << pairValue(x, k) << '\n';
      }
    } else {
      std::cout << "n," << q << '\n';
      for (int x = 0; x <= n; ++x) std::cout << x << ',' << single(x) << '\n';
    }
    return 0;
  }
  if (needsK) {
    if (!opt.k) throw UsageError("count " + q + " needs --k");
    std::cout << pairValue(n, *opt.k) << '\n';
  } else {
    std::cout << single(n) << '\n';
  }
  return 0;
}

// ---------------------------------------------------------------------------
// render

int runRender(const std::string& input, const std::string& path) {
  const std::string svg = renderSvg(input);
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << svg) || !out.flush()) {
    std::cerr << "error: cannot write " << path << '\n';
    return kExitUnwritable;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Noncrossing trees and connected noncrossing graphs"};
  app.require_subcommand(1);

  EnumOptions enumOpt;
  auto* enumCmd = app.add_subcommand("enum", "Stream every member of a family");
  enumCmd->add_option("family", enumOpt.family, "trees|lr|plane|even|ternary|symmetric|graphs|marked")
      ->required()
      ->check(CLI::IsMember({"trees", "lr", "plane", "even", "ternary", "symmetric", "graphs",
                             "marked"}));
  enumCmd->add_option("--edges", enumOpt.edges, "Edge count");
  enumCmd->add_option("--vertices", enumOpt.vertices, "Vertex count (graphs, marked)");
  enumCmd->add_option("--internal", enumOpt.internal, "Internal nodes (ternary, symmetric)");
  enumCmd->add_option("--marks", enumOpt.marks, "Marked free edges (marked)");
  enumCmd->add_option("--class", enumOpt.klass, "all|even|odd|proper|improper")
      ->check(CLI::IsMember({"all", "even", "odd", "proper", "improper"}));
  enumCmd->add_option("--format", enumOpt.format, "text|jsonl")
      ->check(CLI::IsMember({"text", "jsonl"}));
  enumCmd->add_flag("--force", enumOpt.force, "Ignore size guards");

  MapOptions mapOpt;
  auto* mapCmd = app.add_subcommand("map", "Apply one bijection or involution");
  mapCmd->add_option("name", mapOpt.name,
                     "to-lr|from-lr|psi|psi-inverse|reflect|sigma|sigma-inverse|phi|descents|"
                     "canonical-tree|free-edges|companion|assemble|involution-marked")
      ->required();
  mapCmd->add_option("--input", mapOpt.input, "Canonical serialization")->required();
  mapCmd->add_option("--descent", mapOpt.descents, "parent,child (companion, assemble)");
  mapCmd->add_flag("--check-roundtrip", mapOpt.checkRoundTrip, "Apply the inverse and compare");

  VerifyOptions verifyOpt;
  auto* verifyCmd = app.add_subcommand("verify", "Check an identity over a parameter range");
  verifyCmd->add_option("--identity", verifyOpt.identity, "Identity name")->required();
  verifyCmd->add_option("--max-n", verifyOpt.maxN, "Largest parameter");
  verifyCmd->add_option("--format", verifyOpt.format, "table|csv|jsonl")
      ->check(CLI::IsMember({"table", "csv", "jsonl"}));
  verifyCmd->add_flag("--force", verifyOpt.force, "Ignore size guards");

  CountOptions countOpt;
  auto* countCmd = app.add_subcommand("count", "Evaluate a closed form exactly");
  countCmd->add_option("quantity", countOpt.quantity, "c|s|t|d|N|e|o|catalan")->required();
  countCmd->add_option("--n", countOpt.n, "n");
  countCmd->add_option("--k", countOpt.k, "k (d, N)");
  countCmd->add_flag("--table", countOpt.table, "Sweep 0..n as CSV");

  std::string renderInput;
  std::string renderOut;
  auto* renderCmd = app.add_subcommand("render", "Draw a tree or graph as SVG");
  renderCmd->add_option("--input", renderInput, "Canonical serialization")->required();
  renderCmd->add_option("--out", renderOut, "Output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*enumCmd) return runEnum(enumOpt);
    if (*mapCmd) return runMap(mapOpt);
    if (*verifyCmd) return runVerify(verifyOpt);
    if (*countCmd) return runCount(countOpt);
    if (*renderCmd) return runRender(renderInput, renderOut);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const GuardError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitGuard;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    if (e.code() == ErrorCode::GuardExceeded) return kExitGuard;
    if (*verifyCmd || *countCmd) return kExitFail;
    return kExitPrecondition;
  }
  return kExitUsage;
}
