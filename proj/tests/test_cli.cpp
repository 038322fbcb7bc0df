#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "doctest.h"
#include "gto/cli.hpp"
#include "gto/errors.hpp"
#include "gto/io.hpp"
#include "json.hpp"
#include "support.hpp"

using namespace gto;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "gto");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("gto_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write(const std::string& name, const std::string& text) {
  const fs::path p = scratch() / name;
  std::ofstream(p) << text;
  return p.string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

nlohmann::json error_json(const Result& r) { return nlohmann::json::parse(r.err); }

}  // namespace

TEST_CASE("parse_order and dump_order round trip") {
  const auto spec = io::parse_order(R"({"kind":"matrix","m":[[0,1],[1,0]]})");
  REQUIRE(spec.m);
  CHECK_FALSE(spec.cyclic());
  CHECK(io::parse_order(io::dump_order(spec)).matrix() == spec.matrix());

  const auto cyc = io::parse_order(R"({"kind":"cyclic","weights":[1,1,1,1]})");
  CHECK(cyc.cyclic());
  CHECK(cyc.matrix() == cyclic_order(IntVector{1, 1, 1, 1}).m.matrix());
  CHECK(io::parse_order(io::dump_order(cyc)).weights == cyc.weights);
}

TEST_CASE("malformed order files") {
  const char* bad[] = {
      "not json",
      "[1,2]",
      R"({"m":[[0]]})",
      R"({"kind":"tree","m":[[0]]})",
      R"({"kind":"matrix","m":[[0,1],[1]]})",
      R"({"kind":"matrix","m":[[0,1.5],[1,0]]})",
      R"({"kind":"matrix","m":[[0,18446744073709551615],[1,0]]})",
      R"({"kind":"matrix","m":[]})",
      R"({"kind":"matrix","m":[[0]],"extra":1})",
      R"({"kind":"cyclic","weights":[1],"m":[[0]]})",
  };
  for (const char* text : bad) {
    CAPTURE(text);
    try {
      io::parse_order(text);
      FAIL("accepted");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::MalformedInput);
    }
  }
  try {
    io::parse_order(R"({"kind":"matrix","m":[[0,1,2],[1,0,2]]})").matrix();
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonSquare);
  }
}

TEST_CASE("m-data files round trip") {
  const auto c = cyclic_order(IntVector{2, 0, 0, 0});
  const MData md = mdata_of_order(c.m, c.g);
  const auto spec = io::parse_mdata(io::dump_mdata(md));
  CHECK(spec.m == md.m());
  CHECK(spec.a == md.a());
  CHECK(spec.nu == std::vector<std::size_t>(md.nu().images().begin(), md.nu().images().end()));
}

TEST_CASE("cli: cyclic, tilting, quiver with DOT golden and oracle") {
  const std::string order = (scratch() / "o.json").string();
  auto r = run({"cyclic", "--weights", "1,1,1,1", "--emit", order});
  CHECK(r.code == cli::kOk);

  r = run({"tilting", order});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("rank: 9\n") != std::string::npos);
  CHECK(r.out.find("summands: 9\n") != std::string::npos);
  for (const char* v : {"(2,0,0,1)", "(1,0,0,0)", "(1,2,0,0)", "(0,1,0,0)", "(0,1,2,0)",
                        "(0,0,1,0)", "(0,0,1,2)", "(0,0,0,1)"})
    CHECK(r.out.find(v) != std::string::npos);

  const std::string dot = (scratch() / "out.dot").string();
  r = run({"quiver", order, "--dot", dot, "--oracle"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("vertices: 9\n") != std::string::npos);
  CHECK(r.out.find("arrows: 12\n") != std::string::npos);
  CHECK(r.out.find("oracle: ISOMORPHIC\n") != std::string::npos);
  CHECK(slurp(dot) == slurp(std::string(GTO_GOLDEN_DIR) + "/cyclic_1111.dot"));
}

TEST_CASE("cli: gorenstein") {
  auto r = run({"gorenstein", write("c.json", R"({"kind":"cyclic","weights":[1,1,1,1]})")});
  CHECK(r.code == cli::kOk);
  CHECK(r.out == "nu: [1, 2, 3, 0]\nell: [3, 3, 3, 3]\np: [-2, -2, -2, -2]\np_av: -2/1\n");

  r = run({"gorenstein", write("ng.json", R"({"kind":"matrix","m":[[0,1,1],[1,0,1],[1,1,0]]})")});
  CHECK(r.code == cli::kDomainError);
  const auto e = error_json(r);
  CHECK(e["code"] == "NotGorenstein");
  CHECK(e["witness"] == nlohmann::json::array({0}));
}

TEST_CASE("cli: validate") {
  auto r = run({"validate", write("v1.json", R"({"kind":"matrix","m":[[0,1],[1,0]]})")});
  CHECK(r.code == cli::kOk);
  r = run({"validate", write("v2.json", R"({"kind":"matrix","m":[[0,0],[0,0]]})")});
  CHECK(r.code == cli::kDomainError);
  CHECK(r.out.find("basic: false") != std::string::npos);
  r = run({"validate", write("v3.json", R"({"kind":"matrix","m":[[0,1],[-2,0]]})")});
  CHECK(r.code == cli::kDomainError);
  CHECK(r.out.find("first_violation: [0, 1, 0]") != std::string::npos);
  CHECK(error_json(r)["witness"] == nlohmann::json::array({0, 1, 0}));
  r = run({"validate", write("v4.json", R"({"kind":"matrix","m":[[1,0],[0,0]]})")});
  CHECK(r.code == cli::kDomainError);
  CHECK(error_json(r)["code"] == "NonzeroDiagonal");
}

TEST_CASE("cli: normalize emits an N-graded order with |p - p_av| < 1") {
  const auto o = support::random_gorenstein_order(5, 3, 6);
  const std::string in = write("shifted.json", io::dump_order({o.m.matrix(), std::nullopt}));
  const std::string out = (scratch() / "normalized.json").string();
  const auto r = run({"normalize", in, "--emit", out});
  REQUIRE(r.code == cli::kOk);
  const auto m = ExponentMatrix::make(io::parse_order(io::read_file(out)).matrix());
  CHECK(m.n_graded());
  const auto g = detect_gorenstein(m);
  for (auto p : g.p) CHECK(std::abs(p * g.p_av.den() - g.p_av.num()) < g.p_av.den());
}

TEST_CASE("cli: mdata-check and mdata-normalize") {
  const auto c = cyclic_order(IntVector{2, 0, 0, 0});
  const std::string in = write("md.json", io::dump_mdata(mdata_of_order(c.m, c.g)));
  auto r = run({"mdata-check", in});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("a_av: 1/2") != std::string::npos);
  const std::string out = (scratch() / "md_norm.json").string();
  r = run({"mdata-normalize", in, "--emit", out});
  CHECK(r.code == cli::kOk);
  const auto spec = io::parse_mdata(io::read_file(out));
  const MData md = validate_mdata(spec.m, spec.a, Permutation(spec.nu));
  CHECK(md.m().min_entry() >= 0);
  CHECK(is_almost_constant(md.a()));

  r = run({"mdata-normalize",
           write("neg.json", R"({"m":[[0,1],[-2,0]],"a":[0,0],"nu":[0,1]})")});
  CHECK(r.code == cli::kDomainError);
  CHECK(error_json(r)["code"] == "NegativeCycle");
}

TEST_CASE("cli: usage and malformed input exit 2") {
  CHECK(run({}).code == cli::kMalformedInput);
  CHECK(run({"frobnicate"}).code == cli::kMalformedInput);
  CHECK(run({"gorenstein"}).code == cli::kMalformedInput);
  CHECK(run({"gorenstein", (scratch() / "missing.json").string()}).code == cli::kMalformedInput);
  CHECK(run({"gorenstein", write("junk.json", "{")}).code == cli::kMalformedInput);
  CHECK(run({"--help"}).code == cli::kOk);
}

TEST_CASE("cli: domain errors exit 1") {
  auto r = run({"cyclic", "--weights", "0,0,0"});
  CHECK(r.code == cli::kDomainError);
  CHECK(error_json(r)["code"] == "ZeroWeights");
  r = run({"tilting", write("pos.json", R"({"kind":"cyclic","weights":[0,0,0,1]})")});
  CHECK(r.code == cli::kDomainError);
  CHECK(error_json(r)["code"] == "PositiveParameter");
  r = run({"quiver", write("m2.json", R"({"kind":"matrix","m":[[0,1],[1,0]]})"), "--oracle"});
  CHECK(r.code == cli::kDomainError);
  CHECK(error_json(r)["code"] == "NotCyclic");
}
