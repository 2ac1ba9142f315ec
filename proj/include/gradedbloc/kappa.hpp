#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "gradedbloc/abgroup.hpp"

namespace gradedbloc {

/// Multiplicity function on G/T: canonical coset representative -> positive count.
using KappaFn = std::map<Elt, std::int64_t>;

/// Builds a KappaFn from (element, multiplicity) pairs, canonicalizing
/// representatives and merging entries of the same coset. Zero counts are dropped.
KappaFn make_kappa(const FinSubgroup& T, const std::vector<std::pair<Elt, std::int64_t>>& entries);

std::int64_t kappa_size(const KappaFn& k);
/// Value of kappa on the coset of x.
std::int64_t kappa_at(const KappaFn& k, const FinSubgroup& T, const Elt& x);
/// (g kappa)(x) = kappa(x - g).
KappaFn kappa_translate(const KappaFn& k, const Elt& g, const FinSubgroup& T);
/// kappa_bar(x) = kappa(-x).
KappaFn kappa_bar(const KappaFn& k, const FinSubgroup& T);

}  // namespace gradedbloc
