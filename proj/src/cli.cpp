#include "gradedbloc/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "gradedbloc/blocktri.hpp"
#include "gradedbloc/classify.hpp"
#include "gradedbloc/json_io.hpp"
#include "gradedbloc/oracle.hpp"

namespace gradedbloc::cli {

namespace {

struct ValidationFailure : std::runtime_error {
  ValidationFailure(const std::string& what, json detail) : std::runtime_error(what), detail(std::move(detail)) {}
  json detail;
};

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

void emit(const json& doc, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << dump_canonical(doc);
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw MalformedInput("cannot write " + out_path);
  f << dump_canonical(doc);
}

BlockProfile parse_blocks(const std::string& s) {
  std::vector<int> sizes;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw MalformedInput("invalid block size \"" + item + "\"");
      sizes.push_back(v);
    } catch (const std::logic_error&) {
      throw MalformedInput("invalid block size \"" + item + "\"");
    }
  }
  try {
    return BlockProfile(sizes);
  } catch (const std::invalid_argument& e) {
    throw MalformedInput(e.what());
  }
}

AlgebraKind parse_case(const std::string& s) {
  try {
    return parse_algebra_kind(s);
  } catch (const std::invalid_argument& e) {
    throw MalformedInput(e.what());
  }
}

GradedAlgebra build_from(const GradingParams& p, const BlockProfile& profile, AlgebraKind kind) {
  const ValidationReport rep = validate(p, profile, kind);
  if (!rep.ok) throw ValidationFailure("invalid parameters", to_json(rep));
  if (p.deg_identity && kind == AlgebraKind::lie) return build_utminus({p, *p.deg_identity}, profile);
  return build_grading(p, profile, kind);
}

json iso_document(const GradingParams& p1, const GradingParams& p2, const BlockProfile& profile, AlgebraKind kind) {
  for (const auto* p : {&p1, &p2}) {
    const ValidationReport rep = validate(*p, profile, kind);
    if (!rep.ok) throw ValidationFailure("invalid parameters", to_json(rep));
  }
  json doc;
  if (kind == AlgebraKind::lie && (p1.deg_identity || p2.deg_identity)) {
    if (!p1.deg_identity || !p2.deg_identity)
      throw ValidationFailure("deg_identity must be given on both sides", json::object());
    const bool iso = iso_utminus({p1, *p1.deg_identity}, {p2, *p2.deg_identity}, profile);
    doc["verdict"] = iso ? "isomorphic" : "non-isomorphic";
    if (!(*p1.deg_identity == *p2.deg_identity)) {
      doc["obstruction"] = "identity matrices have different degrees";
      return doc;
    }
  }
  const IsoVerdict v = iso_decide(p1, p2, profile, kind);
  const Evidence e = refute_or_confirm(p1, p2, profile, kind);
  if (!doc.contains("verdict")) doc["verdict"] = v.isomorphic ? "isomorphic" : "non-isomorphic";
  if (v.isomorphic) {
    doc["branch"] = v.branch;
    if (v.g) doc["g"] = to_json(*v.g);
  } else {
    doc["reason"] = v.reason;
  }
  if (e.witness) doc["witness"] = to_json(*e.witness);
  if (e.status == "obstruction") doc["obstruction"] = e.obstruction;
  doc["status"] = e.status;
  return doc;
}

std::int64_t budget_from_env() {
  const char* s = std::getenv("GRADEDBLOC_BUDGET");
  if (!s) return 1000000;
  char* end = nullptr;
  const long long v = std::strtoll(s, &end, 10);
  if (end == s || *end != '\0' || v <= 0) throw MalformedInput("GRADEDBLOC_BUDGET must be a positive integer");
  return v;
}

json error_json(const std::string& kind, const std::string& message, const json& detail = json()) {
  json e = {{"error", kind}, {"message", message}};
  if (!detail.is_null()) e["detail"] = detail;
  return e;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Group gradings on matrix and upper block-triangular algebras"};
  app.require_subcommand(1);

  std::string params_path, blocks, kind_name = "assoc", out_path;
  auto* build = app.add_subcommand("build", "Build a grading from a parameter file");
  build->add_option("--params", params_path, "Parameter JSON")->required();
  build->add_option("--blocks", blocks, "Block sizes, comma separated")->required();
  build->add_option("--case", kind_name, "assoc, lie or jordan");
  build->add_option("--out", out_path, "Output grading JSON");

  std::string file;
  auto* verify = app.add_subcommand("verify", "Check the grading axioms of a grading file");
  verify->add_option("file", file, "Grading JSON")->required();

  std::string left, right;
  auto* iso = app.add_subcommand("iso", "Decide whether two parameter sets give isomorphic gradings");
  iso->add_option("--left", left, "Parameter JSON")->required();
  iso->add_option("--right", right, "Parameter JSON")->required();
  iso->add_option("--blocks", blocks, "Block sizes, comma separated")->required();
  iso->add_option("--case", kind_name, "assoc, lie or jordan");

  std::string group;
  auto* enumerate = app.add_subcommand("enumerate", "List one grading per isomorphism class");
  enumerate->add_option("--group", group, "Finite group, e.g. Z2xZ4")->required();
  enumerate->add_option("--blocks", blocks, "Block sizes, comma separated")->required();
  enumerate->add_option("--case", kind_name, "assoc, lie or jordan");
  enumerate->add_option("--out", out_path, "Output JSON");

  auto* invariants = app.add_subcommand("invariants", "Print graded invariants of a grading file");
  invariants->add_option("file", file, "Grading JSON")->required();

  std::string carrier;
  auto* restrict_cmd = app.add_subcommand("restrict", "Restrict an admissible M_n grading");
  restrict_cmd->add_option("--grading", file, "Grading JSON")->required();
  restrict_cmd->add_option("--carrier", carrier, "ut, ut0 or sln")->required();
  restrict_cmd->add_option("--out", out_path, "Output grading JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (*build) {
      const BlockProfile profile = parse_blocks(blocks);
      const GradingParams p = params_from_json(read_file(params_path));
      emit(to_json(build_from(p, profile, parse_case(kind_name))), out_path, out);
    } else if (*verify) {
      const VerifyReport rep = verify_grading(grading_from_json(read_file(file)));
      if (!rep.ok) throw ValidationFailure("grading axioms violated", to_json(rep));
      out << dump_canonical(to_json(rep));
    } else if (*iso) {
      const BlockProfile profile = parse_blocks(blocks);
      const GradingParams p1 = params_from_json(read_file(left));
      const GradingParams p2 = params_from_json(read_file(right));
      out << dump_canonical(iso_document(p1, p2, profile, parse_case(kind_name)));
    } else if (*enumerate) {
      const BlockProfile profile = parse_blocks(blocks);
      AbGroup g;
      try {
        g = AbGroup::parse(group);
      } catch (const std::invalid_argument& e) {
        throw MalformedInput(e.what());
      }
      const auto classes = enumerate_classes(g, profile, parse_case(kind_name), budget_from_env());
      json list = json::array();
      for (const auto& c : classes) list.push_back(to_json(c));
      if (!out_path.empty()) emit({{"count", classes.size()}, {"classes", list}}, out_path, out);
      out << dump_canonical({{"count", classes.size()}});
    } else if (*invariants) {
      out << dump_canonical(to_json(graded_invariants(grading_from_json(read_file(file)))));
    } else if (*restrict_cmd) {
      CarrierKind target;
      try {
        target = parse_carrier_kind(carrier);
      } catch (const std::invalid_argument& e) {
        throw MalformedInput(e.what());
      }
      emit(to_json(restrict_grading(grading_from_json(read_file(file)), target)), out_path, out);
    }
  } catch (const MalformedInput& e) {
    err << dump_canonical(error_json("malformed", e.what()));
    return 2;
  } catch (const json::exception& e) {
    err << dump_canonical(error_json("malformed", e.what()));
    return 2;
  } catch (const ValidationFailure& e) {
    err << dump_canonical(error_json("validation", e.what(), e.detail));
    return 1;
  } catch (const BudgetExceeded& e) {
    err << dump_canonical(error_json("budget", e.what()));
    return 1;
  } catch (const std::invalid_argument& e) {
    err << dump_canonical(error_json("validation", e.what()));
    return 1;
  } catch (const std::domain_error& e) {
    err << dump_canonical(error_json("validation", e.what()));
    return 1;
  } catch (const std::exception& e) {
    err << dump_canonical(error_json("internal", e.what()));
    return 1;
  }
  return 0;
}

}  // namespace gradedbloc::cli
