#pragma once

#include <optional>
#include <string>
#include <vector>

#include "apolar/apolarity.hpp"
#include "apolar/poly.hpp"

namespace apolar {

using Point = std::vector<CycElem>;

struct WaringTerm {
  Point point;  // [a0:...:an], dual to the form sum a_i x_i
  CycElem coeff;
};

struct WaringCertificate {
  Poly<CycElem> form;
  int degree = 0;
  std::vector<WaringTerm> terms;

  std::vector<Point> points() const;
};

Poly<CycElem> dual_form(const Point& p);

/// sum c_i l_i^d
Poly<CycElem> expand(const WaringCertificate& cert);

/// Exact equality of the expansion with the target form. Throws DegreeError
/// when the declared degree disagrees with the form.
bool verify_decomposition(const WaringCertificate& cert);

/// Degree-t forms of R vanishing at every point (kernel of the evaluation
/// matrix with rows = points, columns = degree-t monomials).
GradedBasis<CycElem> point_ideal_component(const std::vector<Point>& points, int t);

/// Throws DomainError on a zero point or two proportional points.
void validate_points(const std::vector<Point>& points);

struct ApolarityCheck {
  bool inclusion = true;
  int failing_degree = -1;
  std::optional<Poly<CycElem>> witness;       // element of I_X not annihilating f
  std::optional<std::vector<CycElem>> coeffs;  // set when sum c_i l_i^d = f is solvable
};

/// Tests I_X contained in Ann(f) in every degree t <= d, then solves for the
/// coefficients c_i exactly.
ApolarityCheck apolarity_certificate(const Poly<CycElem>& f, const std::vector<Point>& points);

/// max_k dim (R_f)_k
std::size_t rank_lower_bound(const Poly<CycElem>& f);

/// {"form": "...", "degree": 6, "terms": [{"point": ["a","1","1"],
///  "coeff": "(2*z12^4+1)/270", "sign": -1}, ...]}; the form may name f1..f6.
WaringCertificate certificate_from_json(const std::string& text);
std::string certificate_to_json(const WaringCertificate& cert);

}  // namespace apolar
