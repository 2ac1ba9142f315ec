#include "gradedbloc/abgroup.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gradedbloc {

AbGroup::AbGroup(int free_rank, std::vector<std::int64_t> torsion)
    : free_rank_(free_rank), torsion_(std::move(torsion)) {
  if (free_rank_ < 0) throw std::invalid_argument("AbGroup: negative free rank");
  for (auto m : torsion_)
    if (m < 2) throw std::invalid_argument("AbGroup: torsion modulus must be >= 2");
}

AbGroup AbGroup::parse(const std::string& text) {
  if (text.empty() || text == "1" || text == "0") return {};
  if (text.back() == 'x') throw std::invalid_argument("bad group '" + text + "'");
  int free = 0;
  std::vector<std::int64_t> tors;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, 'x')) {
    if (tok.empty() || tok[0] != 'Z') throw std::invalid_argument("bad group factor '" + tok + "'");
    if (tok.size() == 1) {
      ++free;
      continue;
    }
    std::size_t pos = 0;
    long long m = 0;
    try {
      m = std::stoll(tok.substr(1), &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad group factor '" + tok + "'");
    }
    if (pos != tok.size() - 1 || m < 1) throw std::invalid_argument("bad group factor '" + tok + "'");
    if (m >= 2) tors.push_back(m);
  }
  return {free, tors};
}

std::int64_t AbGroup::size() const {
  if (!is_finite()) throw std::domain_error("AbGroup: infinite group has no size");
  std::int64_t s = 1;
  for (auto m : torsion_) s *= m;
  return s;
}

Elt AbGroup::identity() const { return Elt{std::vector<std::int64_t>(rank(), 0)}; }

Elt AbGroup::make(std::vector<std::int64_t> coords) const {
  if (static_cast<int>(coords.size()) != rank())
    throw std::invalid_argument("element has " + std::to_string(coords.size()) +
                                " coordinates, group " + to_string() + " needs " +
                                std::to_string(rank()));
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    auto& c = coords[free_rank_ + i];
    c = floor_mod(c, torsion_[i]);
  }
  return Elt{std::move(coords)};
}

Elt AbGroup::generator(int i) const {
  Elt e = identity();
  e.coords.at(i) = 1;
  return e;
}

bool AbGroup::contains(const Elt& x) const {
  if (static_cast<int>(x.coords.size()) != rank()) return false;
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    auto c = x.coords[free_rank_ + i];
    if (c < 0 || c >= torsion_[i]) return false;
  }
  return true;
}

Elt AbGroup::add(const Elt& a, const Elt& b) const {
  std::vector<std::int64_t> c(rank());
  for (int i = 0; i < rank(); ++i) c[i] = a.coords[i] + b.coords[i];
  return make(std::move(c));
}

Elt AbGroup::sub(const Elt& a, const Elt& b) const { return add(a, neg(b)); }

Elt AbGroup::neg(const Elt& a) const { return scale(-1, a); }

Elt AbGroup::scale(std::int64_t k, const Elt& a) const {
  std::vector<std::int64_t> c(rank());
  for (int i = 0; i < rank(); ++i) c[i] = k * a.coords[i];
  return make(std::move(c));
}

bool AbGroup::is_torsion(const Elt& a) const {
  for (int i = 0; i < free_rank_; ++i)
    if (a.coords[i] != 0) return false;
  return true;
}

std::int64_t AbGroup::order(const Elt& a) const {
  if (!is_torsion(a)) return 0;
  std::int64_t o = 1;
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    auto m = torsion_[i];
    auto c = a.coords[free_rank_ + i];
    o = std::lcm(o, m / std::gcd(m, c));
  }
  return o;
}

std::vector<Elt> AbGroup::elements() const {
  std::vector<Elt> out;
  Elt cur = identity();
  std::int64_t total = size();
  out.reserve(total);
  for (std::int64_t idx = 0; idx < total; ++idx) {
    out.push_back(cur);
    for (int i = static_cast<int>(torsion_.size()) - 1; i >= 0; --i) {
      if (++cur.coords[i] < torsion_[i]) break;
      cur.coords[i] = 0;
    }
  }
  return out;
}

AbGroup AbGroup::with_z() const { return {free_rank_ + 1, torsion_}; }

Elt AbGroup::drop_z(const Elt& x) const {
  return Elt{std::vector<std::int64_t>(x.coords.begin() + 1, x.coords.end())};
}

Elt AbGroup::lift_z(std::int64_t z, const Elt& g) const {
  Elt out;
  out.coords.reserve(g.coords.size() + 1);
  out.coords.push_back(z);
  out.coords.insert(out.coords.end(), g.coords.begin(), g.coords.end());
  return out;
}

std::string AbGroup::to_string() const {
  std::vector<std::string> parts(free_rank_, "Z");
  for (auto m : torsion_) parts.push_back("Z" + std::to_string(m));
  if (parts.empty()) return "1";
  std::string s = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) s += "x" + parts[i];
  return s;
}

// ---------------------------------------------------------------------------

GroupHom::GroupHom(AbGroup source, AbGroup target, std::vector<Elt> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != source_.rank())
    throw std::invalid_argument("GroupHom: need one image per generator");
  for (auto& im : images_) {
    im = target_.make(im.coords);
  }
  for (std::size_t i = 0; i < source_.torsion().size(); ++i) {
    auto m = source_.torsion()[i];
    const Elt& im = images_[source_.free_rank() + i];
    if (target_.scale(m, im) != target_.identity())
      throw std::invalid_argument("GroupHom: image of a generator of order " + std::to_string(m) +
                                  " has incompatible order");
  }
}

GroupHom GroupHom::identity(const AbGroup& g) {
  std::vector<Elt> ims;
  for (int i = 0; i < g.rank(); ++i) ims.push_back(g.generator(i));
  return {g, g, ims};
}

GroupHom GroupHom::trivial(const AbGroup& source, const AbGroup& target) {
  return {source, target, std::vector<Elt>(source.rank(), target.identity())};
}

GroupHom GroupHom::drop_z(const AbGroup& gz) {
  AbGroup g(gz.free_rank() - 1, gz.torsion());
  std::vector<Elt> ims{g.identity()};
  for (int i = 0; i < g.rank(); ++i) ims.push_back(g.generator(i));
  return {gz, g, ims};
}

GroupHom GroupHom::project_z(const AbGroup& gz) {
  AbGroup z(1, {});
  std::vector<Elt> ims(gz.rank(), z.identity());
  ims[0] = z.generator(0);
  return {gz, z, ims};
}

Elt GroupHom::operator()(const Elt& x) const {
  std::vector<std::int64_t> acc(target_.rank(), 0);
  for (int i = 0; i < source_.rank(); ++i) {
    auto c = x.coords.at(i);
    if (c == 0) continue;
    for (int j = 0; j < target_.rank(); ++j) acc[j] += c * images_[i].coords[j];
  }
  return target_.make(std::move(acc));
}

// ---------------------------------------------------------------------------

namespace {

using IntMat = std::vector<std::vector<std::int64_t>>;

// Diagonalises rel (rows = relations) by unimodular row and column operations.
// Column operations are mirrored on v, so that x -> x v (row vectors) maps the
// relation lattice onto the diagonal lattice.
void diagonalise(IntMat& rel, IntMat& v) {
  const std::size_t rows = rel.size();
  const std::size_t cols = v.size();
  auto col_swap = [&](std::size_t a, std::size_t b) {
    for (auto& r : rel) std::swap(r[a], r[b]);
    for (auto& r : v) std::swap(r[a], r[b]);
  };
  // col_b += k * col_a
  auto col_addmul = [&](std::size_t b, std::size_t a, std::int64_t k) {
    for (auto& r : rel) r[b] += k * r[a];
    for (auto& r : v) r[b] += k * r[a];
  };
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      std::size_t pr = rows, pc = cols;
      std::int64_t best = 0;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (rel[i][j] != 0 && (best == 0 || std::llabs(rel[i][j]) < best)) {
            best = std::llabs(rel[i][j]);
            pr = i;
            pc = j;
          }
      if (best == 0) return;
      std::swap(rel[t], rel[pr]);
      if (pc != t) col_swap(t, pc);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        std::int64_t q = rel[i][t] / rel[t][t];
        if (q != 0)
          for (std::size_t j = t; j < cols; ++j) rel[i][j] -= q * rel[t][j];
        if (rel[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        std::int64_t q = rel[t][j] / rel[t][t];
        if (q != 0) col_addmul(j, t, -q);
        if (rel[t][j] != 0) clean = false;
      }
      if (clean) break;
    }
  }
}

}  // namespace

Quotient quotient(const AbGroup& g, const std::vector<Elt>& relations) {
  const std::size_t n = g.rank();
  IntMat rel;
  for (std::size_t i = 0; i < g.torsion().size(); ++i) {
    std::vector<std::int64_t> row(n, 0);
    row[g.free_rank() + i] = g.torsion()[i];
    rel.push_back(row);
  }
  for (const auto& r : relations) rel.push_back(g.make(r.coords).coords);
  IntMat v(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) v[i][i] = 1;
  diagonalise(rel, v);

  // diagonal entry d_i (0 past the last relation row) decides the factor type
  std::vector<std::int64_t> diag(n, 0);
  for (std::size_t i = 0; i < std::min(rel.size(), n); ++i) diag[i] = std::llabs(rel[i][i]);
  std::vector<std::size_t> free_idx, tors_idx;
  std::vector<std::int64_t> tors;
  for (std::size_t i = 0; i < n; ++i) {
    if (diag[i] == 0)
      free_idx.push_back(i);
    else if (diag[i] > 1) {
      tors_idx.push_back(i);
      tors.push_back(diag[i]);
    }
  }
  AbGroup target(static_cast<int>(free_idx.size()), tors);
  std::vector<Elt> images;
  for (std::size_t gen = 0; gen < n; ++gen) {
    std::vector<std::int64_t> c;
    for (auto i : free_idx) c.push_back(v[gen][i]);
    for (auto i : tors_idx) c.push_back(v[gen][i]);
    images.push_back(target.make(c));
  }
  return {target, GroupHom(g, target, images)};
}

// ---------------------------------------------------------------------------

FinSubgroup::FinSubgroup(AbGroup ambient, std::vector<Elt> generators)
    : ambient_(std::move(ambient)), generators_(std::move(generators)) {
  for (auto& g : generators_) {
    g = ambient_.make(g.coords);
    if (!ambient_.is_torsion(g))
      throw std::invalid_argument("FinSubgroup: generator of infinite order");
  }
  constexpr std::size_t kMaxSize = 1u << 14;
  std::map<Elt, std::vector<std::int64_t>> seen;
  std::deque<Elt> queue;
  seen.emplace(ambient_.identity(), std::vector<std::int64_t>(generators_.size(), 0));
  queue.push_back(ambient_.identity());
  while (!queue.empty()) {
    Elt cur = queue.front();
    queue.pop_front();
    const auto word = seen.at(cur);
    for (std::size_t i = 0; i < generators_.size(); ++i) {
      Elt nxt = ambient_.add(cur, generators_[i]);
      if (seen.count(nxt)) continue;
      auto w = word;
      ++w[i];
      seen.emplace(nxt, std::move(w));
      queue.push_back(nxt);
      if (seen.size() > kMaxSize) throw std::length_error("FinSubgroup: subgroup too large");
    }
  }
  for (auto& [e, w] : seen) {
    elements_.push_back(e);
    words_.push_back(w);
  }
}

std::optional<std::size_t> FinSubgroup::index_of(const Elt& x) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), x);
  if (it == elements_.end() || *it != x) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

bool FinSubgroup::is_2_elementary() const {
  for (const auto& e : elements_)
    if (ambient_.order(e) > 2) return false;
  return true;
}

Elt FinSubgroup::coset_rep(const Elt& x) const {
  Elt best = ambient_.add(x, elements_.front());
  for (const auto& t : elements_) best = std::min(best, ambient_.add(x, t));
  return best;
}

FinSubgroup FinSubgroup::image(const GroupHom& h) const {
  std::vector<Elt> gens;
  for (const auto& g : generators_) gens.push_back(h(g));
  return {h.target(), gens};
}

// ---------------------------------------------------------------------------

Character::Character(AbGroup domain, std::vector<QmodZ> gen_values)
    : domain_(std::move(domain)), values_(std::move(gen_values)) {
  if (static_cast<int>(values_.size()) != domain_.rank())
    throw std::invalid_argument("Character: need one value per generator");
  for (int i = 0; i < domain_.free_rank(); ++i)
    if (!values_[i].is_zero()) throw std::invalid_argument("Character: must vanish on free generators");
  for (std::size_t i = 0; i < domain_.torsion().size(); ++i) {
    auto m = domain_.torsion()[i];
    if (!(values_[domain_.free_rank() + i] * m).is_zero())
      throw std::invalid_argument("Character: value order does not divide generator order");
  }
}

Character Character::canonical_for(const AbGroup& g, const Elt& f) {
  const auto& tors = g.torsion();
  std::vector<std::int64_t> k(tors.size(), 0);
  for (;;) {
    std::vector<QmodZ> vals(g.free_rank());
    for (std::size_t i = 0; i < tors.size(); ++i) vals.emplace_back(k[i], tors[i]);
    Character chi(g, vals);
    if (chi(f) == QmodZ(1, 2)) return chi;
    // advance in lexicographic order of the value tuple
    int i = static_cast<int>(tors.size()) - 1;
    for (; i >= 0; --i) {
      if (++k[i] < tors[i]) break;
      k[i] = 0;
    }
    if (i < 0) throw std::invalid_argument("no character with chi(f) = 1/2: f does not have even order");
  }
}

QmodZ Character::operator()(const Elt& x) const {
  QmodZ acc;
  for (std::size_t i = 0; i < domain_.torsion().size(); ++i) {
    auto c = x.coords.at(domain_.free_rank() + i);
    if (c) acc += values_[domain_.free_rank() + i] * c;
  }
  return acc;
}

Character Character::extend_z() const {
  std::vector<QmodZ> vals{QmodZ()};
  vals.insert(vals.end(), values_.begin(), values_.end());
  return {domain_.with_z(), vals};
}

}  // namespace gradedbloc
