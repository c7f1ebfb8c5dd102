#pragma once

#include "ymh/catalog.hpp"

#include <cstdint>
#include <optional>

namespace ymh {

/// Linear map W : g -> h with W|_k = lambda_* and infinitesimal equivariance
/// [lambda_*(x), W(v)] = W([x, v]) for all k generators x.
struct WangMap {
  std::shared_ptr<const HomogeneousPair> pair;
  BundleHomomorphism hom;
  Matrix w;  // dim(h) x dim(g)

  std::vector<Scalar> apply(const std::vector<Scalar>& v) const { return mat_vec(w, v); }
  Scalar component(int a, int g_index) const { return w.at(a, g_index); }
  /// W^a_alpha for alpha local to s.
  Scalar s_component(int a, int s_local) const {
    return w.at(a, pair->s_indices[static_cast<size_t>(s_local)]);
  }
};

/// Throws unless the map satisfies both Wang conditions exactly.
void verify_wang(const WangMap& W);

/// Affine space of Wang maps in the dim(h) * dim(s) unknowns W^a_alpha
/// (flattened a * sdim + alpha); the k block is pinned to lambda_*.
struct WangSolutionSpace {
  std::shared_ptr<const HomogeneousPair> pair;
  BundleHomomorphism hom;
  bool feasible = false;
  AffineSpace space;

  int dim() const { return space.dim(); }
};

/// Exact solution set of the equivariance equations.
WangSolutionSpace solve_wang(std::shared_ptr<const HomogeneousPair> pair,
                             const BundleHomomorphism& hom);

/// Wang map at the given free coordinates of the solution space.
WangMap wang_point(const WangSolutionSpace& sol, const std::vector<Scalar>& coords);

/// Wang map with the free coordinates as named parameters.  When a direction
/// is a coordinate vector on unknown (a, alpha), the parameter is named
/// W{a}_{alpha} (1-based); otherwise t{j}.
WangMap symbolic_wang_point(const WangSolutionSpace& sol);

/// True when W(v) = 0 for every point of the solution space.
bool space_annihilates(const WangSolutionSpace& sol, const std::vector<Scalar>& v_in_g);

/// Feasibility sweep over normalized nonzero lambda candidates (images along
/// f1, grid {+-1, +-2, +-1/2} plus seeded random rationals per k generator).
struct FeasibilityReport {
  std::string pair_id;
  int candidates = 0;      // nonzero candidates drawn
  int valid_homs = 0;      // candidates passing the homomorphism check
  int feasible = 0;        // valid homs with a nonempty Wang space
  bool expect_nontrivial = false;
  bool ok = false;         // matches the expectation
};

FeasibilityReport nontrivial_bundle_feasible(const CatalogEntry& entry,
                                             std::shared_ptr<const LieAlgebra> h,
                                             std::uint32_t seed = 7, int randoms_per_gen = 5);

/// Complement basis (vectors in g coordinates) making the pair k0-reductive,
/// or nullopt.  k0 is given by g-basis indices spanning an ideal of k.
std::optional<std::vector<std::vector<Scalar>>> find_invariant_complement(
    const HomogeneousPair& pair, const std::vector<int>& k0_indices);

/// Canonical Wang map: lambda_* on k, 0 on the complement.  The complement
/// must certify ker(lambda_*)-reductivity.
WangMap canonical_wang(std::shared_ptr<const HomogeneousPair> pair,
                       const BundleHomomorphism& hom,
                       const std::vector<std::vector<Scalar>>& complement);

}  // namespace ymh
