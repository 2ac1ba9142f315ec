#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gradedbloc/qmodz.hpp"

namespace gradedbloc {

/// Element of a finitely generated abelian group, in coordinates.
struct Elt {
  std::vector<std::int64_t> coords;

  auto operator<=>(const Elt&) const = default;
};

/// Z^r x Z_{m_1} x ... x Z_{m_t}, written additively.
///
/// Coordinates are ordered free part first, then torsion. Torsion coordinates are
/// always kept reduced into [0, m_i).
class AbGroup {
 public:
  AbGroup() = default;
  AbGroup(int free_rank, std::vector<std::int64_t> torsion);

  /// Parses "Z", "Z2", "ZxZ2xZ4", "1" (trivial group).
  static AbGroup parse(const std::string& text);

  int free_rank() const { return free_rank_; }
  const std::vector<std::int64_t>& torsion() const { return torsion_; }
  int rank() const { return free_rank_ + static_cast<int>(torsion_.size()); }
  bool is_finite() const { return free_rank_ == 0; }
  /// Order of the group; throws for infinite groups.
  std::int64_t size() const;

  Elt identity() const;
  Elt make(std::vector<std::int64_t> coords) const;
  Elt generator(int i) const;
  bool contains(const Elt& x) const;

  Elt add(const Elt& a, const Elt& b) const;
  Elt sub(const Elt& a, const Elt& b) const;
  Elt neg(const Elt& a) const;
  Elt scale(std::int64_t k, const Elt& a) const;

  bool is_torsion(const Elt& a) const;
  /// Order of a, or 0 when a has infinite order.
  std::int64_t order(const Elt& a) const;

  /// All elements in lexicographic order (finite groups only).
  std::vector<Elt> elements() const;

  /// Z x G, with the new Z factor as coordinate 0.
  AbGroup with_z() const;
  /// Splits off coordinate 0 of an element of Z x G.
  Elt drop_z(const Elt& x) const;
  Elt lift_z(std::int64_t z, const Elt& g) const;

  std::string to_string() const;

  bool operator==(const AbGroup&) const = default;

 private:
  int free_rank_ = 0;
  std::vector<std::int64_t> torsion_;
};

/// Group homomorphism given by the images of the standard generators.
class GroupHom {
 public:
  GroupHom(AbGroup source, AbGroup target, std::vector<Elt> images);

  static GroupHom identity(const AbGroup& g);
  static GroupHom trivial(const AbGroup& source, const AbGroup& target);
  /// Z x G -> G.
  static GroupHom drop_z(const AbGroup& gz);
  /// Z x G -> Z.
  static GroupHom project_z(const AbGroup& gz);

  const AbGroup& source() const { return source_; }
  const AbGroup& target() const { return target_; }
  const std::vector<Elt>& images() const { return images_; }

  Elt operator()(const Elt& x) const;

 private:
  AbGroup source_;
  AbGroup target_;
  std::vector<Elt> images_;
};

/// Quotient G/<relations> with the canonical projection.
struct Quotient {
  AbGroup group;
  GroupHom projection;
};

/// Computes a presentation of G/<relations> by diagonalising the relation matrix.
Quotient quotient(const AbGroup& g, const std::vector<Elt>& relations);

/// A finite subgroup with an explicit element list.
class FinSubgroup {
 public:
  FinSubgroup() = default;
  FinSubgroup(AbGroup ambient, std::vector<Elt> generators);

  static FinSubgroup trivial(const AbGroup& ambient) { return {ambient, {}}; }

  const AbGroup& ambient() const { return ambient_; }
  const std::vector<Elt>& generators() const { return generators_; }
  /// Elements sorted lexicographically; the identity comes first.
  const std::vector<Elt>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }

  bool contains(const Elt& x) const { return index_of(x).has_value(); }
  std::optional<std::size_t> index_of(const Elt& x) const;
  /// Coefficients expressing elements()[i] as a combination of generators().
  const std::vector<std::int64_t>& word(std::size_t i) const { return words_[i]; }

  bool is_2_elementary() const;
  /// Lexicographically smallest element of the coset x + T.
  Elt coset_rep(const Elt& x) const;
  /// Image of this subgroup under a homomorphism.
  FinSubgroup image(const GroupHom& h) const;

  /// Same ambient group and the same element set.
  bool operator==(const FinSubgroup& o) const {
    return ambient_ == o.ambient_ && elements_ == o.elements_;
  }

 private:
  AbGroup ambient_;
  std::vector<Elt> generators_;
  std::vector<Elt> elements_;
  std::vector<std::vector<std::int64_t>> words_;
};

/// Character of a finitely generated abelian group with values in Q/Z.
class Character {
 public:
  Character(AbGroup domain, std::vector<QmodZ> gen_values);

  /// Lexicographically smallest character with chi(f) = 1/2, trivial on the free part.
  static Character canonical_for(const AbGroup& g, const Elt& f);

  const AbGroup& domain() const { return domain_; }
  const std::vector<QmodZ>& gen_values() const { return values_; }
  QmodZ operator()(const Elt& x) const;
  /// Extends trivially to Z x G.
  Character extend_z() const;

 private:
  AbGroup domain_;
  std::vector<QmodZ> values_;
};

}  // namespace gradedbloc
