#pragma once

#include "ymh/lie_algebra.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace ymh {

/// Symbolic pattern of the invariant-metric family with the tabulated
/// parameter names, plus the tabulated determinant text.
struct MetricPattern {
  Matrix pattern;                     // sdim x sdim, entries over the metric parameters
  std::vector<std::string> params;    // e.g. {"a","b","c","d"}
  std::string det_text;               // e.g. "a^3*(a+2*d)"
  std::string signature_note;         // admitted signatures
  ParameterAssignment default_witness;
};

/// Fels--Renner basis data: the adapted basis expressed in the FR basis and
/// the structure constants in the FR basis (with a matrix realization for the
/// pairs that have explicit group models).
struct FelsRennerData {
  Matrix adapted_in_fr;   // column i = adapted e_i in v-coordinates
  LieAlgebra fr_algebra;  // constants in the v basis
};

struct CatalogEntry {
  std::string id;
  std::shared_ptr<const HomogeneousPair> pair;      // null for plain algebras
  std::shared_ptr<const LieAlgebra> algebra;        // set when pair is null
  std::optional<MetricPattern> metric;
  std::optional<FelsRennerData> fr;
  std::string note;
  std::optional<Rational> alpha;                    // A2 family parameter
  std::optional<int> epsilon;                       // A3 sign
  std::string designated_lambda;                    // e.g. "e6=f1", empty if none

  const LieAlgebra& lie_algebra() const& { return pair ? pair->g : *algebra; }
  const LieAlgebra& lie_algebra() const&& = delete;  // would dangle on a temporary
};

/// Ids in catalog order: A1..A5, B1..B3, then the auxiliaries.
std::vector<std::string> catalog_ids();

/// Loads a catalog entry; A2 takes the family parameter alpha, A3 the sign
/// epsilon in {+1,-1}.  Throws on unknown ids.
CatalogEntry catalog_load(const std::string& id, const Rational& alpha = Rational(0),
                          int epsilon = 1);

/// su(2) with [f1,f2]=f3 cyclic (also available as catalog id "su2").
std::shared_ptr<const LieAlgebra> su2();

/// The nontrivial homomorphism used throughout for this pair (A5: e5 -> f1;
/// B3: e6 -> f1; a43: e1 -> f1; symmetric pairs: k generator -> f1).
/// Throws when the entry has no designated homomorphism.
BundleHomomorphism designated_homomorphism(const CatalogEntry& entry);

/// Line-based catalog document (the external file format).
std::string serialize_catalog_entry(const CatalogEntry& entry);
CatalogEntry parse_catalog_entry(const std::string& text);

}  // namespace ymh
