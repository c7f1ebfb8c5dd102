#pragma once

#include "ymh/catalog.hpp"

#include <optional>

namespace ymh {

/// Invariant metric on the complement s, with the derived data the covariant
/// calculus needs: exact inverse, determinant, signature parity at a rational
/// witness, and (when available) an exact square root of |det|.
struct MetricOnS {
  std::shared_ptr<const HomogeneousPair> pair;
  Matrix mu;
  Matrix mu_inv;
  Scalar det;
  int parity = 0;  // number of negative signs in the signature at the witness
  ParameterAssignment witness;
  std::optional<Scalar> sqrt_abs_det;

  int n() const { return mu.rows(); }
};

/// Solution space of rho_s(x)^T mu + mu rho_s(x) = 0 over symmetric matrices,
/// as an affine space in the sdim*(sdim+1)/2 upper-triangle coordinates
/// (row-major, i <= j).
AffineSpace invariant_metric_family(const HomogeneousPair& pair);

/// Symmetric matrix from upper-triangle coordinates and back.
Matrix symmetric_from_coords(int n, const std::vector<Scalar>& coords);
std::vector<Scalar> coords_from_symmetric(const Matrix& m);

/// Instantiates the derived metric data for a (possibly symbolic) family
/// member.  The witness must make the determinant nonzero; the parity is the
/// witness signature.  sqrt_abs_det is auto-derived when |det| is an exact
/// square of a monomial (recording the positive-parameter convention), and
/// may be supplied explicitly otherwise.
MetricOnS metric_instance(std::shared_ptr<const HomogeneousPair> pair, const Matrix& mu,
                          const ParameterAssignment& witness,
                          std::optional<Scalar> sqrt_abs_det = std::nullopt);

/// Instance of the catalog pattern with its tabulated parameter names.
MetricOnS pattern_metric(const CatalogEntry& entry);
/// Pattern evaluated at a rational witness.
MetricOnS pattern_metric_at(const CatalogEntry& entry, const ParameterAssignment& witness);

/// True when mu satisfies the invariance equations of the pair.
bool is_invariant_metric(const HomogeneousPair& pair, const Matrix& mu);

}  // namespace ymh
