#pragma once

#include "ymh/connection.hpp"

namespace ymh {

/// 1-form on the chart coordinates with rational-function coefficients.
struct CoordinateForm {
  std::vector<Scalar> comps;  // coefficient of dx_i

  bool is_zero() const;
};

/// Matrix-valued 1-form (one matrix per dx_i).
struct MatrixCoordinateForm {
  std::vector<Matrix> comps;
};

/// h-valued 1-form: comps[i] is the h-vector multiplying dx_i.
struct HValuedCoordinateForm {
  std::vector<std::vector<Scalar>> comps;

  bool is_zero() const;
};

/// Symbolic matrix-group section together with the algebra realization it
/// decomposes against (Fels--Renner basis matrices).
struct MatrixGroupModel {
  Matrix section;                    // sigma(x), entries in Q(x1..x4)
  std::vector<Matrix> realization;   // one matrix per algebra generator
  std::vector<std::string> coords;   // chart coordinate names
  std::string chart_note;            // e.g. "x2 != 0"
};

/// The global B3 model: section on the chart x2 != 0.  The chart coordinates
/// x1..x4 are global on the quotient, which is diffeomorphic to
/// (R^2 minus the origin) x R^2.
MatrixGroupModel b3_model();

/// sigma^-1 d sigma, entrywise; throws when the section is singular as a
/// rational matrix.
MatrixCoordinateForm maurer_cartan_pullback(const MatrixGroupModel& model);

/// d omega + omega ^ omega = 0, checked symbolically.
bool structure_equation_holds(const MatrixCoordinateForm& omega,
                              const std::vector<std::string>& coords);

/// Exact coefficients of each realization generator; throws when a component
/// leaves the span (nonzero residual).
std::vector<CoordinateForm> decompose_in_basis(const MatrixCoordinateForm& omega,
                                               const std::vector<Matrix>& realization);

/// Applies a Wang map (given in the same generator basis as the
/// decomposition) to the decomposed Maurer--Cartan coefficients.
HValuedCoordinateForm gauge_potential(const Matrix& w_in_basis,
                                      const std::vector<CoordinateForm>& coefficients);

/// Components of a Wang map in the Fels--Renner basis of the entry.
Matrix wang_in_fr_basis(const WangMap& W, const CatalogEntry& entry);

/// Local B3 gauge potential for W(e2) = y (y in h coordinates,
/// y in ker ad_{lambda(e6)}).
HValuedCoordinateForm b3_gauge_potential(const std::vector<Scalar>& y);

/// The four tangent matrices of the A5 model section, over Q(x1..x4).
std::vector<Matrix> a5_fixture_tangents();

/// Fixture file format: one block per tangent, matrix rows in scalar text.
std::string serialize_a5_fixture(const std::vector<Matrix>& tangents);
std::vector<Matrix> parse_a5_fixture(const std::string& text);

struct A5CheckResult {
  bool in_span = false;    // every tangent decomposes in the realization
  bool wang_zero = false;  // the unique Wang map kills every tangent
  std::vector<std::vector<Scalar>> wang_values;  // W(g_i'(0)) per tangent
};

/// Verifies the A5 potential is pure gauge on the stock fixture.
A5CheckResult a5_fixture_check();
/// Same check against caller-supplied tangents (controls).
A5CheckResult a5_fixture_check(const std::vector<Matrix>& tangents);

/// Directional-derivative check that the invariant chart functions are killed
/// by the three isotropy generators of the A5 model (with u standing for the
/// exponential of the group parameter b7).
bool a5_invariants_killed();

std::string coordinate_form_str(const CoordinateForm& f, const std::vector<std::string>& coords);
std::string h_valued_form_str(const HValuedCoordinateForm& f,
                              const std::vector<std::string>& coords,
                              const std::vector<std::string>& h_names);

}  // namespace ymh
