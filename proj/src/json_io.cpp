#include "gradedbloc/json_io.hpp"

#include <limits>

namespace gradedbloc {

namespace {

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw MalformedInput(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

const json& require_array(const json& j, const char* what) {
  if (!j.is_array()) throw MalformedInput(std::string(what) + " must be an array");
  return j;
}

std::int64_t get_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw MalformedInput(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

json big_to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

mpz_class big_from_json(const json& j) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    mpz_class z;
    if (z.set_str(j.get<std::string>(), 10) != 0) throw MalformedInput("invalid integer string");
    return z;
  }
  throw MalformedInput("expected an integer");
}

json rational_to_json(const mpq_class& q) { return json::array({big_to_json(q.get_num()), big_to_json(q.get_den())}); }

mpq_class rational_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw MalformedInput("a rational must be [num, den]");
  mpq_class q(big_from_json(j[0]), big_from_json(j[1]));
  if (q.get_den() == 0) throw MalformedInput("zero denominator");
  q.canonicalize();
  return q;
}

}  // namespace

json to_json(const AbGroup& g) { return {{"free_rank", g.free_rank()}, {"torsion", g.torsion()}}; }

json to_json(const Elt& x) { return {{"coords", x.coords}}; }

json to_json(const QmodZ& q) { return json::array({q.num(), q.den()}); }

json to_json(const FinSubgroup& t) {
  json gens = json::array();
  for (const auto& g : t.generators()) gens.push_back(to_json(g));
  return {{"generators", gens}};
}

json to_json(const Bicharacter& b) {
  json table = json::array();
  for (const auto& row : b.gen_table())
    for (const auto& v : row) table.push_back(to_json(v));
  return {{"gen_table", table}};
}

json to_json(const Character& c) {
  json vals = json::array();
  for (const auto& v : c.gen_values()) vals.push_back(to_json(v));
  return {{"gen_values", vals}};
}

json to_json(const CycloNum& c) {
  json coeffs = json::array();
  for (const auto& q : c.coeffs()) coeffs.push_back(rational_to_json(q));
  return {{"order", c.order()}, {"coeffs", coeffs}};
}

json to_json(const Mat& m) {
  json entries = json::array();
  for (const auto& [k, v] : m.entries()) entries.push_back(json::array({k.first + 1, k.second + 1, to_json(v)}));
  return {{"n", m.n()}, {"entries", entries}};
}

json to_json(const BlockProfile& p) { return {{"blocks", p.sizes()}}; }

json to_json(const GradedAlgebra& a) {
  json comps = json::array();
  for (const auto& [g, basis] : a.components) {
    json b = json::array();
    for (const auto& m : basis) b.push_back(to_json(m));
    comps.push_back({{"degree", to_json(g)}, {"basis", b}});
  }
  json out = {{"group", to_json(a.group)},
              {"carrier", {{"kind", to_string(a.carrier.kind)}, {"blocks", a.carrier.profile.sizes()}}},
              {"algebra_kind", to_string(a.kind)},
              {"components", comps}};
  if (a.distinguished) out["distinguished"] = to_json(*a.distinguished);
  return out;
}

json to_json(const KappaFn& k) {
  json entries = json::array();
  for (const auto& [x, m] : k) entries.push_back({{"coset_rep", to_json(x)}, {"mult", m}});
  return {{"entries", entries}};
}

json to_json(const GradingParams& p) {
  json kappas = json::array();
  for (const auto& k : p.kappas()) kappas.push_back(to_json(k));
  json out = {{"type", p.is_type2() ? "II" : "I"},
              {"group", to_json(p.group)},
              {"T", to_json(p.T())},
              {"beta", to_json(p.beta())},
              {"kappas", kappas}};
  if (p.is_type2()) out["g0"] = to_json(std::get<TypeIIParams>(p.data).g0);
  if (p.deg_identity) out["deg_identity"] = to_json(*p.deg_identity);
  return out;
}

json to_json(const GradedInvariants& inv) {
  json support = json::array();
  for (const auto& g : inv.support) support.push_back(to_json(g));
  json dims = json::array();
  for (const auto& [g, d] : inv.dims) dims.push_back({{"degree", to_json(g)}, {"dim", d}});
  json center = json::array();
  for (const auto& g : inv.center_degrees) center.push_back(to_json(g));
  json filt = json::array();
  for (const auto& [g, f] : inv.radical_filtration) filt.push_back({{"degree", to_json(g)}, {"dims", f}});
  return {{"support", support},
          {"dim_multiset", dims},
          {"identity_component_dim", inv.identity_component_dim},
          {"center_degrees", center},
          {"radical_filtration", filt}};
}

json to_json(const Witness& w) {
  return {{"x", to_json(w.x)}, {"minus_tau", w.minus_tau}, {"relabel", to_json(w.relabel)}};
}

json to_json(const VerifyReport& r) { return {{"ok", r.ok}, {"violations", r.violations}}; }

json to_json(const ValidationReport& r) { return {{"ok", r.ok}, {"violations", r.violations}}; }

AbGroup group_from_json(const json& j) {
  if (j.is_string()) return AbGroup::parse(j.get<std::string>());
  const std::int64_t r = get_int(require(j, "free_rank"), "free_rank");
  std::vector<std::int64_t> tors;
  for (const auto& m : require_array(require(j, "torsion"), "torsion")) tors.push_back(get_int(m, "torsion modulus"));
  if (r < 0 || r > std::numeric_limits<int>::max()) throw MalformedInput("free_rank out of range");
  return AbGroup(static_cast<int>(r), tors);
}

Elt elt_from_json(const json& j, const AbGroup& g) {
  std::vector<std::int64_t> coords;
  for (const auto& c : require_array(require(j, "coords"), "coords")) coords.push_back(get_int(c, "coordinate"));
  if (static_cast<int>(coords.size()) != g.rank()) throw MalformedInput("element has the wrong number of coordinates");
  return g.make(coords);
}

QmodZ qmodz_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw MalformedInput("a Q/Z value must be [num, den]");
  const std::int64_t den = get_int(j[1], "denominator");
  if (den <= 0) throw MalformedInput("denominator must be positive");
  return QmodZ(get_int(j[0], "numerator"), den);
}

FinSubgroup subgroup_from_json(const json& j, const AbGroup& g) {
  std::vector<Elt> gens;
  for (const auto& x : require_array(require(j, "generators"), "generators")) gens.push_back(elt_from_json(x, g));
  return FinSubgroup(g, gens);
}

Bicharacter bicharacter_from_json(const json& j, const FinSubgroup& t) {
  const json& table = require_array(require(j, "gen_table"), "gen_table");
  const std::size_t r = t.generators().size();
  std::vector<std::vector<QmodZ>> rows(r, std::vector<QmodZ>(r));
  if (table.size() == r * r && (r == 0 || table[0].size() == 2) && (r == 0 || !table[0][0].is_array())) {
    for (std::size_t i = 0; i < r * r; ++i) rows[i / r][i % r] = qmodz_from_json(table[i]);
  } else if (table.size() == r) {
    for (std::size_t i = 0; i < r; ++i) {
      if (!table[i].is_array() || table[i].size() != r) throw MalformedInput("gen_table row has the wrong length");
      for (std::size_t k = 0; k < r; ++k) rows[i][k] = qmodz_from_json(table[i][k]);
    }
  } else {
    throw MalformedInput("gen_table must hold one value per pair of generators");
  }
  return Bicharacter(t, rows);
}

CycloNum cyclo_from_json(const json& j) {
  if (j.is_number_integer()) return CycloNum(static_cast<long>(j.get<std::int64_t>()));
  const std::int64_t order = get_int(require(j, "order"), "order");
  if (order <= 0) throw MalformedInput("cyclotomic order must be positive");
  std::vector<mpq_class> coeffs;
  for (const auto& c : require_array(require(j, "coeffs"), "coeffs")) coeffs.push_back(rational_from_json(c));
  return CycloNum(order, coeffs);
}

Mat mat_from_json(const json& j) {
  const std::int64_t n = get_int(require(j, "n"), "n");
  if (n < 0 || n > 4096) throw MalformedInput("matrix size out of range");
  Mat m(static_cast<int>(n));
  for (const auto& e : require_array(require(j, "entries"), "entries")) {
    if (!e.is_array() || e.size() != 3) throw MalformedInput("matrix entry must be [i, j, value]");
    const std::int64_t r = get_int(e[0], "row"), c = get_int(e[1], "column");
    if (r < 1 || c < 1 || r > n || c > n) throw MalformedInput("matrix index out of range");
    m.add_to(static_cast<int>(r - 1), static_cast<int>(c - 1), cyclo_from_json(e[2]));
  }
  return m;
}

BlockProfile profile_from_json(const json& j) {
  std::vector<int> sizes;
  for (const auto& b : require_array(j.is_array() ? j : require(j, "blocks"), "blocks"))
    sizes.push_back(static_cast<int>(get_int(b, "block size")));
  try {
    return BlockProfile(sizes);
  } catch (const std::invalid_argument& e) {
    throw MalformedInput(e.what());
  }
}

GradedAlgebra grading_from_json(const json& j) {
  GradedAlgebra a;
  a.group = group_from_json(require(j, "group"));
  const json& carrier = require(j, "carrier");
  try {
    a.carrier.kind = parse_carrier_kind(require(carrier, "kind").get<std::string>());
    a.kind = parse_algebra_kind(require(j, "algebra_kind").get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw MalformedInput(e.what());
  } catch (const json::exception& e) {
    throw MalformedInput(e.what());
  }
  a.carrier.profile = profile_from_json(require(carrier, "blocks"));
  for (const auto& c : require_array(require(j, "components"), "components")) {
    const Elt g = elt_from_json(require(c, "degree"), a.group);
    auto& basis = a.components[g];
    for (const auto& m : require_array(require(c, "basis"), "basis")) {
      Mat x = mat_from_json(m);
      if (x.n() != a.n()) throw MalformedInput("basis matrix size differs from the carrier");
      basis.push_back(std::move(x));
    }
    if (basis.empty()) a.components.erase(g);
  }
  if (j.contains("distinguished")) a.distinguished = elt_from_json(j.at("distinguished"), a.group);
  return a;
}

KappaFn kappa_from_json(const json& j, const FinSubgroup& t) {
  std::vector<std::pair<Elt, std::int64_t>> entries;
  for (const auto& e : require_array(require(j, "entries"), "entries"))
    entries.emplace_back(elt_from_json(require(e, "coset_rep"), t.ambient()), get_int(require(e, "mult"), "mult"));
  return make_kappa(t, entries);
}

GradingParams params_from_json(const json& j) {
  const AbGroup g = group_from_json(require(j, "group"));
  const json& type = require(j, "type");
  if (!type.is_string() || (type != "I" && type != "II")) throw MalformedInput("type must be \"I\" or \"II\"");
  FinSubgroup t = subgroup_from_json(require(j, "T"), g);
  Bicharacter beta = bicharacter_from_json(require(j, "beta"), t);
  std::vector<KappaFn> kappas;
  for (const auto& k : require_array(require(j, "kappas"), "kappas")) kappas.push_back(kappa_from_json(k, t));
  GradingParams p{g, TypeIParams{t, beta, kappas}, std::nullopt};
  if (type == "II") p.data = TypeIIParams{t, beta, elt_from_json(require(j, "g0"), g), kappas};
  if (j.contains("deg_identity")) p.deg_identity = elt_from_json(j.at("deg_identity"), g);
  return p;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw MalformedInput(std::string("invalid JSON: ") + e.what());
  }
}

std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

}  // namespace gradedbloc
