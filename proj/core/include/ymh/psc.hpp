#pragma once

#include "ymh/yang_mills.hpp"

namespace ymh {

/// Top-degree relative Lie algebra cohomology data for PSC1.
struct Psc1Report {
  int q = 0;       // dim g - dim k
  int dim_z = 0;   // invariant semibasic q-chains (all closed at top degree)
  int dim_b = 0;   // d of the basic (q-1)-chains
  int dim_h = 0;
  bool holds = false;  // H^q != 0
};

Psc1Report psc1(const HomogeneousPair& pair);

/// Degeneracy of the induced scalar product on the symmetric-variation space
/// V^K inside V = Lambda^1_k(g; h) for PSC2.
struct Psc2Report {
  int dim_v = 0;
  int dim_vk = 0;
  std::vector<std::vector<Scalar>> vk_basis;  // coordinates flattened a * sdim + alpha
  Matrix gram;
  int rank = 0;
  bool holds = false;  // Gram nondegenerate on V^K (vacuously for V^K = 0)
};

Psc2Report psc2(const HomogeneousPair& pair, const BundleHomomorphism& hom,
                const MetricOnS& metric, const AdInvariantInnerProduct& m);

/// Reduced Yang--Mills Lagrangian <F_W, F_W>.
Scalar reduced_lagrangian(const WangMap& W, const MetricOnS& metric,
                          const AdInvariantInnerProduct& m);

struct PscVerdict {
  Psc1Report psc1;
  Psc2Report psc2;
  bool psc = false;
};

PscVerdict psc_verdict(const HomogeneousPair& pair, const BundleHomomorphism& hom,
                       const MetricOnS& metric, const AdInvariantInnerProduct& m);

/// Markdown grid over the eight classified pairs; the A2 column is evaluated
/// at the given family parameter (the verdict is alpha-dependent at the
/// degenerate value alpha = 0, where H^4 jumps).
std::string table5_markdown(const Rational& a2_alpha = Rational(1));

}  // namespace ymh
