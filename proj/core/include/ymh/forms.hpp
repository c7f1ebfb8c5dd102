#pragma once

#include "ymh/connection.hpp"
#include "ymh/invariant_metric.hpp"

namespace ymh {

/// Increasing index tuples of size k out of {0..n-1}, in lexicographic order.
const std::vector<std::vector<int>>& index_tuples(int n, int k);
int tuple_index(int n, const std::vector<int>& tuple);
/// Sign of the permutation sorting `tuple`, or 0 on repeats; sorted result in `out`.
int sort_with_sign(std::vector<int> tuple, std::vector<int>& out);
/// Levi-Civita permutation symbol on 0..n-1 index words.
int levi_civita(const std::vector<int>& word);

/// Ad(H)-invariant inner product on h.
struct AdInvariantInnerProduct {
  std::shared_ptr<const LieAlgebra> h;
  Matrix gram;
};

AdInvariantInnerProduct unit_inner_product(std::shared_ptr<const LieAlgebra> h);
/// Validates symmetry, positive-definiteness and ad-invariance.
AdInvariantInnerProduct make_inner_product(std::shared_ptr<const LieAlgebra> h, Matrix gram);

/// Antisymmetric h-valued k-chain on s, stored on increasing index tuples.
class HValuedForm {
public:
  HValuedForm() = default;
  HValuedForm(std::shared_ptr<const HomogeneousPair> pair,
              std::shared_ptr<const LieAlgebra> h, int degree);
  /// e^{alpha} tensor f_a (s-local alpha, h index a).
  static HValuedForm basis_covector(std::shared_ptr<const HomogeneousPair> pair,
                                    std::shared_ptr<const LieAlgebra> h, int alpha, int a);

  int degree() const { return degree_; }
  int n() const { return n_; }
  int hdim() const { return hdim_; }
  const std::shared_ptr<const HomogeneousPair>& pair() const { return pair_; }
  const std::shared_ptr<const LieAlgebra>& h() const { return h_; }

  /// Storage access on an increasing tuple.
  Scalar& comp(int a, const std::vector<int>& increasing);
  const Scalar& comp(int a, const std::vector<int>& increasing) const;
  /// Component with arbitrary index order; repeats give 0.
  Scalar component(int a, const std::vector<int>& tuple) const;

  bool is_zero() const;
  HValuedForm operator+(const HValuedForm& o) const;
  HValuedForm operator-(const HValuedForm& o) const;
  HValuedForm scaled(const Scalar& c) const;
  bool operator==(const HValuedForm& o) const;

  /// Multilinear evaluation on s-coordinate vectors.
  std::vector<Scalar> evaluate(const std::vector<std::vector<Scalar>>& s_args) const;

  std::string str() const;

private:
  std::shared_ptr<const HomogeneousPair> pair_;
  std::shared_ptr<const LieAlgebra> h_;
  int degree_ = 0, n_ = 0, hdim_ = 0;
  std::vector<Scalar> comp_;
};

/// Graded commutator [phi, psi] of degree p + q.
HValuedForm graded_commutator(const HValuedForm& phi, const HValuedForm& psi);

/// Exterior covariant derivative on the s components; only the s block of W
/// and the s-to-s structure constants enter.
HValuedForm d_w(const HValuedForm& phi, const WangMap& W);

/// Curvature by the bracket formula F(x,y) = [Wx, Wy] - W[x,y].
HValuedForm curvature(const WangMap& W);
/// Curvature as dW + (1/2)[W, W] (shuffle-expanded); agrees with curvature().
HValuedForm curvature_via_dw(const WangMap& W);

/// Hodge star; requires metric.sqrt_abs_det.
HValuedForm hodge_star(const HValuedForm& phi, const MetricOnS& metric);

/// Covariant codifferential in closed form; no square roots required.
HValuedForm codifferential(const HValuedForm& phi, const WangMap& W, const MetricOnS& metric);

/// Scalar product (1/k!) phi^a psi^{b,raised} m_{ab}.
Scalar inner_product(const HValuedForm& phi, const HValuedForm& psi, const MetricOnS& metric,
                     const AdInvariantInnerProduct& m);

/// Untwisted Lie derivative along x (g coordinates) via the trivial action.
HValuedForm lie_derivative(const std::vector<Scalar>& x_g, const HValuedForm& phi);
/// Twisted derivative L_x + [lambda_*(x), .] for x in k; vanishing for all k
/// generators is K-invariance (K connected).
HValuedForm twisted_lie_derivative(const std::vector<Scalar>& x_g, const HValuedForm& phi,
                                   const BundleHomomorphism& hom);
/// Interior product with an s-coordinate vector.
HValuedForm interior_product(const std::vector<Scalar>& v_s, const HValuedForm& phi);

/// Route-independent evaluation of (d phi + [W, phi]) on arbitrary g vectors;
/// used to cross-check the component formulas.
std::vector<Scalar> dw_full_eval(const HValuedForm& phi, const WangMap& W,
                                 const std::vector<std::vector<Scalar>>& g_args);

/// Raised structure constants c^{mn}_j = mu^{mp} mu^{nq} c_pq^r mu_rj over s,
/// indexed (m * n_s + n) * n_s + j.
std::vector<Scalar> raised_structure_constants(const HomogeneousPair& pair,
                                               const MetricOnS& metric);

/// Top-degree wedge pairing coefficient of phi ^ psi with values paired by m;
/// the defining identity is phi ^ *psi = <phi, psi> nu.
Scalar wedge_pair_top(const HValuedForm& phi, const HValuedForm& psi,
                      const AdInvariantInnerProduct& m);

/// Nonzero components as (h index, increasing index tuple, scalar text)
/// triples; the serialization format used in reports and golden files.
/// Indices are 1-based in the emitted lines: "a | i1 i2 .. | value".
struct FormComponent {
  int h_index;
  std::vector<int> indices;
  std::string value;
};
std::vector<FormComponent> form_components(const HValuedForm& phi);
std::string serialize_form(const HValuedForm& phi);

}  // namespace ymh
