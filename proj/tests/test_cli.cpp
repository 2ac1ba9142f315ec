#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gradedbloc/classify.hpp"
#include "gradedbloc/cli.hpp"
#include "gradedbloc/json_io.hpp"
#include "support/corpus.hpp"

using namespace gradedbloc;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "gradedbloc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("gradedbloc_cli_" + std::to_string(std::rand()) + "_" +
                                        std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write(const std::string& p, const std::string& text) { std::ofstream(p) << text; }

GradingParams z2_params(bool shifted) {
  const AbGroup g = AbGroup::parse("Z2");
  const FinSubgroup T = FinSubgroup::trivial(g);
  const Elt e = g.identity(), f = g.generator(0);
  GradingParams p{g, TypeIParams{T, Bicharacter::zero(T), {make_kappa(T, {{e, 1}}), make_kappa(T, {{f, 1}})}},
                  std::nullopt};
  return shifted ? corpus::translate(p, f) : p;
}

}  // namespace

TEST_CASE("enumerate prints the class count") {
  const Result r = run_cli({"enumerate", "--group", "Z2", "--blocks", "1,1", "--case", "assoc"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out).at("count") == 2);
  TempDir dir;
  const Result w = run_cli({"enumerate", "--group", "1", "--blocks", "2,1", "--out", dir.file("c.json")});
  CHECK(w.code == 0);
  const json doc = json::parse(slurp(dir.file("c.json")));
  CHECK(doc.at("count") == 1);
  CHECK(doc.at("classes").size() == 1);
}

TEST_CASE("build, verify and a byte-stable round trip") {
  TempDir dir;
  write(dir.file("p.json"), dump_canonical(to_json(z2_params(false))));
  for (const char* kind : {"assoc", "lie", "jordan"}) {
    const Result b = run_cli({"build", "--params", dir.file("p.json"), "--blocks", "1,1", "--case", kind, "--out",
                              dir.file("g.json")});
    REQUIRE(b.code == 0);
    CHECK(run_cli({"verify", dir.file("g.json")}).code == 0);
    const std::string text = slurp(dir.file("g.json"));
    CHECK(dump_canonical(to_json(grading_from_json(parse_json(text)))) == text);
    const Result inv = run_cli({"invariants", dir.file("g.json")});
    CHECK(inv.code == 0);
    CHECK(json::parse(inv.out).contains("dim_multiset"));
  }
}

TEST_CASE("iso reports a translation witness") {
  TempDir dir;
  write(dir.file("a.json"), dump_canonical(to_json(z2_params(false))));
  write(dir.file("b.json"), dump_canonical(to_json(z2_params(true))));
  const Result r = run_cli({"iso", "--left", dir.file("a.json"), "--right", dir.file("b.json"), "--blocks", "1,1",
                            "--case", "assoc"});
  REQUIRE(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc.at("verdict") == "isomorphic");
  CHECK(doc.at("g").at("coords") == json::array({1}));
  CHECK(doc.contains("witness"));
  CHECK(doc.at("status") == "witness");

  GradingParams other = z2_params(false);
  std::get<TypeIParams>(other.data).kappas[1] = std::get<TypeIParams>(other.data).kappas[0];
  write(dir.file("c.json"), dump_canonical(to_json(other)));
  const Result n = run_cli({"iso", "--left", dir.file("a.json"), "--right", dir.file("c.json"), "--blocks", "1,1"});
  REQUIRE(n.code == 0);
  CHECK(json::parse(n.out).at("verdict") == "non-isomorphic");
}

TEST_CASE("restrict an admissible grading on M_n") {
  TempDir dir;
  const GradingParams p = z2_params(false);
  write(dir.file("m.json"), dump_canonical(to_json(build_sharp(p, BlockProfile({1, 1}), AlgebraKind::assoc))));
  const Result r = run_cli({"restrict", "--grading", dir.file("m.json"), "--carrier", "ut0"});
  REQUIRE(r.code == 0);
  const GradedAlgebra a = grading_from_json(json::parse(r.out));
  CHECK(a.carrier.kind == CarrierKind::ut0);
  CHECK(a.total_dim() == 2);
  CHECK(verify_grading(a).ok);
}

TEST_CASE("exit codes for malformed and invalid input") {
  TempDir dir;
  write(dir.file("bad.json"), "{ not json");
  CHECK(run_cli({"verify", dir.file("bad.json")}).code == 2);
  CHECK(run_cli({"verify", dir.file("missing.json")}).code == 2);
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({"build", "--blocks", "1,1"}).code == 2);
  CHECK(run_cli({"enumerate", "--group", "Zq", "--blocks", "1"}).code == 2);
  CHECK(run_cli({"enumerate", "--group", "Z2", "--blocks", "1,x"}).code == 2);
  write(dir.file("shape.json"), R"({"type": "I", "group": {"free_rank": 0}})");
  CHECK(run_cli({"build", "--params", dir.file("shape.json"), "--blocks", "1"}).code == 2);

  // well-formed but invalid: kappa sizes do not match the profile
  write(dir.file("p.json"), dump_canonical(to_json(z2_params(false))));
  const Result v = run_cli({"build", "--params", dir.file("p.json"), "--blocks", "2,1"});
  CHECK(v.code == 1);
  const json err = json::parse(v.err);
  CHECK(err.at("error") == "validation");
  CHECK_FALSE(err.at("detail").at("violations").empty());

  // a grading file whose components break the axioms
  const GradedAlgebra a = build_elementary(AbGroup::parse("Z2"), {AbGroup::parse("Z2").identity(),
                                                                  AbGroup::parse("Z2").generator(0)});
  json broken = to_json(a);
  std::swap(broken["components"][0]["degree"], broken["components"][1]["degree"]);
  write(dir.file("broken.json"), broken.dump());
  const Result vb = run_cli({"verify", dir.file("broken.json")});
  CHECK(vb.code == 1);
  CHECK(json::parse(vb.err).at("error") == "validation");
  CHECK(run_cli({"verify", dir.file("broken.json")}).code == vb.code);
}

TEST_CASE("enumeration budget from the environment") {
  setenv("GRADEDBLOC_BUDGET", "5", 1);
  const Result r = run_cli({"enumerate", "--group", "Z2xZ4", "--blocks", "2,2"});
  unsetenv("GRADEDBLOC_BUDGET");
  CHECK(r.code == 1);
  CHECK(json::parse(r.err).at("error") == "budget");
}

TEST_CASE("the installed executable runs") {
  TempDir dir;
  const std::string cmd = std::string(GRADEDBLOC_CLI_PATH) + " enumerate --group Z2 --blocks 1,1 --case assoc > " +
                          dir.file("o.txt");
  CHECK(std::system(cmd.c_str()) == 0);
  CHECK(json::parse(slurp(dir.file("o.txt"))).at("count") == 2);
}
