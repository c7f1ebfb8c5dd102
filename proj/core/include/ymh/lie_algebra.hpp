#pragma once

#include "ymh/matrix.hpp"

#include <array>
#include <memory>
#include <string>
#include <vector>

namespace ymh {

/// Finite-dimensional Lie algebra given by structure constants
/// [e_i, e_j] = sum_k c[i][j][k] e_k, with an optional matrix realization.
class LieAlgebra {
public:
  LieAlgebra() = default;
  LieAlgebra(int dim, std::vector<std::string> basis_names);

  int dim() const { return dim_; }
  const std::vector<std::string>& basis_names() const { return names_; }

  const Scalar& structure(int i, int j, int k) const;
  /// Sets [e_i, e_j] = c e_k and [e_j, e_i] = -c e_k.
  void set_bracket(int i, int j, int k, const Scalar& c);

  std::vector<Scalar> bracket(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const;
  std::vector<Scalar> basis_vector(int i) const;

  /// Matrix of ad(x): column j holds the coordinates of [x, e_j].
  Matrix ad(const std::vector<Scalar>& x) const;

  const std::vector<Matrix>& realization() const { return realization_; }
  void set_realization(std::vector<Matrix> mats) { realization_ = std::move(mats); }

private:
  int dim_ = 0;
  std::vector<std::string> names_;
  std::vector<Scalar> c_;  // dim^3
  std::vector<Matrix> realization_;
};

/// Triples (i, j, k), i < j < k, on which the Jacobi identity fails.
std::vector<std::array<int, 3>> check_jacobi(const LieAlgebra& L);

/// True when the stored constants satisfy c[i][j][k] = -c[j][i][k].
bool check_antisymmetry(const LieAlgebra& L);

/// True when matrix commutators of the realization reproduce the structure
/// constants exactly.  Requires a realization to be present.
bool realization_consistent(const LieAlgebra& L);

/// Structure constants in the basis b'_j = sum_i T(i, j) b_i.
LieAlgebra change_basis(const LieAlgebra& L, const Matrix& T,
                        std::vector<std::string> new_names = {});

/// Homogeneous pair (g, k) with a chosen vector-space complement s and the
/// matrices of the induced isotropy action on s.
struct HomogeneousPair {
  LieAlgebra g;
  std::vector<int> k_indices;  // 0-based indices into the g basis
  std::vector<int> s_indices;
  std::vector<Matrix> rho_s;   // one matrix per k generator, in k_indices order

  std::string id;
  std::string signature_note;
  std::string provenance;

  int kdim() const { return static_cast<int>(k_indices.size()); }
  int sdim() const { return static_cast<int>(s_indices.size()); }

  /// proj_s(ad(e_k)|_s) recomputed from the structure constants.
  Matrix recompute_rho_s(int k_local) const;
  /// s-components of [e_{s_a}, e_{s_b}] (indices local to s).
  Scalar c_sss(int a, int b, int g) const;
  /// Coordinate of e_{k_t} in [e_{s_a}, e_{s_b}].
  Scalar c_ssk(int a, int b, int t) const;
};

/// Throws unless k is a subalgebra, (k, s) partitions the basis, and the
/// stored rho_s matrices match the structure constants.
void validate_pair(const HomogeneousPair& pair);

/// Lie algebra homomorphism data lambda_*: k -> h for a bundle group H.
struct BundleHomomorphism {
  std::shared_ptr<const LieAlgebra> h;
  Matrix lambda;  // h.dim x kdim, column t = image of the t-th k generator
  bool verified = false;

  std::vector<Scalar> image_of_k_generator(int t) const { return lambda.col(t); }
  bool is_trivial() const { return lambda.is_zero(); }
};

/// Validates the homomorphism property lambda([x,y]) = [lambda x, lambda y]
/// on k-basis pairs and returns the verified data; throws on failure.
BundleHomomorphism make_homomorphism(const HomogeneousPair& pair,
                                     std::shared_ptr<const LieAlgebra> h,
                                     const Matrix& lambda);

BundleHomomorphism trivial_homomorphism(const HomogeneousPair& pair,
                                        std::shared_ptr<const LieAlgebra> h);

/// Basis of the joint kernel of rho_s over all k generators (vectors in
/// s-coordinates).
std::vector<std::vector<Scalar>> s_invariants(const HomogeneousPair& pair);

}  // namespace ymh
