#include "gradedbloc/graded.hpp"

#include <cmath>
#include <stdexcept>

#include "gradedbloc/linalg.hpp"

namespace gradedbloc {

BlockProfile::BlockProfile(std::vector<int> sizes) : sizes_(std::move(sizes)) {
  if (sizes_.empty()) throw std::invalid_argument("BlockProfile: at least one block required");
  for (int q = 0; q < s(); ++q) {
    if (sizes_[q] <= 0) throw std::invalid_argument("BlockProfile: block sizes must be positive");
    starts_.push_back(n_);
    for (int i = 0; i < sizes_[q]; ++i) block_of_.push_back(q);
    n_ += sizes_[q];
  }
}

bool BlockProfile::symmetric() const {
  for (int i = 0; i < s(); ++i)
    if (sizes_[i] != sizes_[s() - 1 - i]) return false;
  return true;
}

std::string to_string(AlgebraKind k) {
  switch (k) {
    case AlgebraKind::assoc: return "assoc";
    case AlgebraKind::lie: return "lie";
    case AlgebraKind::jordan: return "jordan";
  }
  return "";
}

std::string to_string(CarrierKind k) {
  switch (k) {
    case CarrierKind::mn: return "mn";
    case CarrierKind::ut: return "ut";
    case CarrierKind::ut0: return "ut0";
    case CarrierKind::sln: return "sln";
  }
  return "";
}

AlgebraKind parse_algebra_kind(const std::string& s) {
  if (s == "assoc") return AlgebraKind::assoc;
  if (s == "lie") return AlgebraKind::lie;
  if (s == "jordan") return AlgebraKind::jordan;
  throw std::invalid_argument("unknown algebra kind: " + s);
}

CarrierKind parse_carrier_kind(const std::string& s) {
  if (s == "mn") return CarrierKind::mn;
  if (s == "ut") return CarrierKind::ut;
  if (s == "ut0") return CarrierKind::ut0;
  if (s == "sln") return CarrierKind::sln;
  throw std::invalid_argument("unknown carrier kind: " + s);
}

int Carrier::dim() const {
  const int n = profile.n();
  int d = 0;
  switch (kind) {
    case CarrierKind::mn: return n * n;
    case CarrierKind::sln: return n * n - 1;
    case CarrierKind::ut:
    case CarrierKind::ut0:
      for (int i = 0; i < profile.s(); ++i)
        for (int j = i; j < profile.s(); ++j) d += profile.sizes()[i] * profile.sizes()[j];
      return kind == CarrierKind::ut ? d : d - 1;
  }
  return d;
}

bool Carrier::contains(const Mat& x) const {
  if (x.n() != n()) return false;
  if (kind == CarrierKind::ut || kind == CarrierKind::ut0)
    for (const auto& [k, v] : x.entries())
      if (profile.block_of(k.first) > profile.block_of(k.second)) return false;
  if (kind == CarrierKind::ut0 || kind == CarrierKind::sln) return trace(x).is_zero();
  return true;
}

std::vector<Mat> carrier_basis(const Carrier& c) {
  const int n = c.n();
  const bool upper = c.kind == CarrierKind::ut || c.kind == CarrierKind::ut0;
  const bool traceless = c.kind == CarrierKind::ut0 || c.kind == CarrierKind::sln;
  std::vector<Mat> out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (upper && c.profile.block_of(i) > c.profile.block_of(j)) continue;
      if (traceless && i == j) continue;
      out.push_back(Mat::unit(n, i, j));
    }
  if (traceless)
    for (int i = 0; i + 1 < n; ++i) {
      Mat d = Mat::unit(n, i, i);
      d.set(i + 1, i + 1, CycloNum(-1));
      out.push_back(d);
    }
  return out;
}

Mat product(AlgebraKind kind, const Mat& x, const Mat& y) {
  switch (kind) {
    case AlgebraKind::assoc: return x * y;
    case AlgebraKind::lie: return lie_bracket(x, y);
    case AlgebraKind::jordan: return jordan_circ(x, y);
  }
  return x * y;
}

std::size_t GradedAlgebra::total_dim() const {
  std::size_t d = 0;
  for (const auto& [g, b] : components) d += b.size();
  return d;
}

VerifyReport verify_grading(const GradedAlgebra& a) {
  VerifyReport rep;
  auto fail = [&rep](std::string msg) {
    rep.ok = false;
    rep.violations.push_back(std::move(msg));
  };

  struct Item {
    Elt deg;
    const Mat* m;
  };
  std::vector<Item> items;
  std::map<Elt, EchelonBasis> spans;
  EchelonBasis all;
  for (const auto& [g, basis] : a.components) {
    if (!a.group.contains(g)) fail("stored degree lies outside the group " + a.group.to_string());
    auto& sp = spans[g];
    for (const auto& m : basis) {
      if (!a.carrier.contains(m)) {
        fail("basis element outside the carrier: " + m.to_string());
        continue;
      }
      sp.add(to_vec(m));
      all.add(to_vec(m));
      items.push_back({g, &m});
    }
  }
  if (all.rank() != items.size()) fail("component bases are not jointly linearly independent");
  if (static_cast<int>(all.rank()) != a.carrier.dim())
    fail("components span dimension " + std::to_string(all.rank()) + " but the carrier has dimension " +
         std::to_string(a.carrier.dim()));
  if (!rep.ok) return rep;

  const bool symmetric = a.kind != AlgebraKind::assoc;
  for (std::size_t i = 0; i < items.size(); ++i)
    for (std::size_t j = symmetric ? i : 0; j < items.size(); ++j) {
      if (a.kind == AlgebraKind::lie && i == j) continue;
      Mat p = product(a.kind, *items[i].m, *items[j].m);
      if (p.is_zero()) continue;
      if (!a.carrier.contains(p)) {
        fail("carrier not closed under the product of basis elements " + std::to_string(i) + " and " +
             std::to_string(j));
        continue;
      }
      Elt target = a.group.add(items[i].deg, items[j].deg);
      auto it = spans.find(target);
      if (it == spans.end() || !it->second.contains(to_vec(p)))
        fail("product of basis elements " + std::to_string(i) + " and " + std::to_string(j) +
             " leaves the component of the summed degree");
      if (rep.violations.size() > 32) return rep;
    }
  return rep;
}

GradedAlgebra build_elementary(const AbGroup& g, const std::vector<Elt>& gamma) {
  if (gamma.empty()) throw std::invalid_argument("build_elementary: empty tuple");
  const int n = static_cast<int>(gamma.size());
  GradedAlgebra a;
  a.group = g;
  a.carrier = {CarrierKind::mn, BlockProfile({n})};
  for (int i = 0; i < n; ++i) {
    if (!g.contains(gamma[i])) throw std::invalid_argument("build_elementary: tuple entry outside the group");
    for (int j = 0; j < n; ++j) a.components[g.sub(gamma[i], gamma[j])].push_back(Mat::unit(n, i, j));
  }
  return a;
}

const Mat& DivisionGrading::at(const Elt& t) const {
  auto it = X.find(t);
  if (it == X.end()) throw std::domain_error("division grading: degree outside the support");
  return it->second;
}

namespace {

// C^a S^b for the generalized clock C and shift S of size ell.
Mat clock_shift(std::int64_t ell, std::int64_t a, std::int64_t b) {
  Mat m(static_cast<int>(ell));
  for (std::int64_t j = 0; j < ell; ++j) {
    const std::int64_t row = (j + b) % ell;
    m.set(static_cast<int>(row), static_cast<int>(j), CycloNum::root_of_unity(QmodZ(a * row, ell)));
  }
  return m;
}

}  // namespace

DivisionGrading build_division(const FinSubgroup& T, const Bicharacter& beta) {
  if (!(beta.domain() == T)) throw std::invalid_argument("build_division: bicharacter domain differs from T");
  const auto size = static_cast<std::int64_t>(T.size());
  const auto ell = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(size))));
  if (ell * ell != size) throw std::invalid_argument("build_division: |T| is not a perfect square");
  const auto pairs = symplectic_basis(beta);
  const AbGroup& g = T.ambient();

  DivisionGrading d;
  d.T = T;
  d.beta = beta;
  d.ell = static_cast<int>(ell);

  // mixed-radix decoding of exponents (a_1, b_1, a_2, b_2, ...), first pair most significant
  std::int64_t combos = 1;
  for (const auto& p : pairs) combos *= p.ell * p.ell;
  for (std::int64_t idx = 0; idx < combos; ++idx) {
    std::vector<std::int64_t> exps(2 * pairs.size());
    std::int64_t rem = idx;
    for (std::size_t pos = exps.size(); pos-- > 0;) {
      exps[pos] = rem % pairs[pos / 2].ell;
      rem /= pairs[pos / 2].ell;
    }
    Elt t = g.identity();
    Mat x = Mat::identity(1);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      t = g.add(t, g.add(g.scale(exps[2 * i], pairs[i].u), g.scale(exps[2 * i + 1], pairs[i].v)));
      x = kron(x, clock_shift(pairs[i].ell, exps[2 * i], exps[2 * i + 1]));
    }
    if (!d.X.emplace(t, x).second) throw std::logic_error("build_division: symplectic pairs are not independent");
  }
  if (static_cast<std::int64_t>(d.X.size()) != size)
    throw std::logic_error("build_division: symplectic pairs do not generate T");

  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const Mat& xu = d.at(pairs[i].u);
    const Mat& xv = d.at(pairs[i].v);
    if (xu * xv != (xv * xu).scaled(CycloNum::root_of_unity(beta(pairs[i].u, pairs[i].v))))
      throw std::logic_error("build_division: commutation relation fails");
  }

  d.algebra.group = g;
  d.algebra.carrier = {CarrierKind::mn, BlockProfile({d.ell})};
  for (const auto& [t, x] : d.X) d.algebra.components[t].push_back(x);
  return d;
}

GradedAlgebra kronecker_grading(const GradedAlgebra& elem, const DivisionGrading& d) {
  if (!(elem.group == d.algebra.group)) throw std::invalid_argument("kronecker_grading: group mismatch");
  std::vector<int> sizes;
  for (int q : elem.carrier.profile.sizes()) sizes.push_back(q * d.ell);
  GradedAlgebra a;
  a.group = elem.group;
  a.kind = elem.kind;
  a.carrier = {CarrierKind::mn, BlockProfile(sizes)};
  for (const auto& [g, basis] : elem.components)
    for (const auto& [t, x] : d.X) {
      auto& comp = a.components[a.group.add(g, t)];
      for (const auto& b : basis) comp.push_back(kron(b, x));
    }
  return a;
}

GradedAlgebra coarsen(const GradedAlgebra& a, const GroupHom& alpha) {
  if (!(alpha.source() == a.group)) throw std::invalid_argument("coarsen: homomorphism source differs from the grading group");
  GradedAlgebra out;
  out.group = alpha.target();
  out.kind = a.kind;
  out.carrier = a.carrier;
  for (const auto& [g, basis] : a.components) {
    auto& comp = out.components[alpha(g)];
    comp.insert(comp.end(), basis.begin(), basis.end());
  }
  return out;
}

QuadraticForm eta_bar_from_division(const DivisionGrading& d) {
  if (!d.T.is_2_elementary()) throw std::invalid_argument("eta_bar_from_division: support is not 2-elementary");
  std::vector<QmodZ> values;
  for (const auto& t : d.T.elements()) {
    const Mat& x = d.at(t);
    const Mat y = tau_flip(x);
    if (y == x)
      values.emplace_back(0, 1);
    else if (y == -x)
      values.emplace_back(1, 2);
    else
      throw std::invalid_argument("basis not τ-compatible");
  }
  QuadraticForm q(d.T, values);
  if (!q.polarizes_to(d.beta)) throw std::logic_error("eta_bar_from_division: polarization identity fails");
  return q;
}

bool same_components(const GradedAlgebra& a, const GradedAlgebra& b) {
  if (!(a.group == b.group) || a.components.size() != b.components.size()) return false;
  for (const auto& [g, basis] : a.components) {
    auto it = b.components.find(g);
    if (it == b.components.end()) return false;
    EchelonBasis ea, eb;
    for (const auto& m : basis) ea.add(to_vec(m));
    for (const auto& m : it->second) eb.add(to_vec(m));
    if (ea.rank() != eb.rank()) return false;
    for (const auto& m : it->second)
      if (!ea.contains(to_vec(m))) return false;
  }
  return true;
}

}  // namespace gradedbloc
