#pragma once

#include "ymh/forms.hpp"

namespace ymh {

/// Reduced Yang--Mills residual delta_W F_W together with the verdict.
struct YmReport {
  HValuedForm residual;  // 1-form
  bool is_yang_mills = false;
  std::vector<std::string> component_text;  // nonzero components "(dWF)^c_a = ..."
};

/// Residual by the closed reduced formula, cross-checked against the generic
/// codifferential of the curvature.  The inner product m does not enter the
/// Euler--Lagrange equations; it is carried for report context only.
YmReport ym_residual(const WangMap& W, const MetricOnS& metric,
                     const AdInvariantInnerProduct& m);

/// Canonical-connection Yang--Mills criterion on a lambda-reductive
/// decomposition: entry (c, alpha) of
///   lambda_g^c (2 c_{a t}^g c^{t s}_s + c_{t s}^g c^{t s}_a)
/// in the complement basis; all zero iff the canonical connection is
/// Yang--Mills.  The metric is given on the complement basis.
Matrix canonical_ym_lhs(const HomogeneousPair& pair, const BundleHomomorphism& hom,
                        const std::vector<std::vector<Scalar>>& complement,
                        const Matrix& metric_on_complement);

/// Markdown table of the structure constants, raised constants, and symbolic
/// residuals for the nontrivially curved classes (A4, A5, B2, B3).
std::string table4_markdown();

}  // namespace ymh
