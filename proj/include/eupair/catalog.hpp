#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eupair/recurrence.hpp"

namespace eupair {

enum class EntryKind { single, pair, derived };

// Named sequence of enumerative polynomials. Singles iterate a
// RecurrenceSpec, pairs a PairSystemSpec; the one derived entry (D) is
// assembled from other catalog sequences by a closed identity.
struct CatalogEntry {
  std::string name;
  EntryKind kind;
  std::optional<RecurrenceSpec> single;
  std::optional<PairSystemSpec> pair;
  std::string description;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry* catalog_find(const std::string& name);

// Polynomial sequence of a single or derived entry up to index n_max.
PolySeq catalog_sequence(const std::string& name, int n_max);
// Pair sequence of a pair entry up to index n_max.
PairSeq catalog_pair_sequence(const std::string& name, int n_max);

}  // namespace eupair
