#pragma once

#include <array>
#include <string>
#include <vector>

#include "apolar/poly.hpp"
#include "apolar/waring.hpp"

namespace apolar {

/// The six sextics x y z (x+y+z)(a x + b y + c z)(d x + e y + f z) of the
/// classification, indexed 1..6.
constexpr int kNumForms = 6;

std::string form_text(int i);
Poly<CycElem> named_form(int i);

/// "f1".."f6" or a polynomial expression.
Poly<CycElem> resolve_form(const std::string& text);

struct FactorParams {
  std::array<CycElem, 3> abc;
  std::array<CycElem, 3> def;
};
FactorParams form_params(int i);

/// x y z (x+y+z)(a x + b y + c z)(d x + e y + f z)
Poly<CycElem> sextic_from_params(const FactorParams& p);

/// Listed annihilators of f_i (cubics; for f5 the ideal generators), as text
/// in the dual variables.
std::vector<std::string> annihilator_table(int i);

/// Listed six-term decomposition of f_i, i in 1..5, as printed.
WaringCertificate decomposition_table(int i);

/// Row 5 with the sign of the last coefficient flipped, the variant that
/// expands to f5.
WaringCertificate decomposition_f5_corrected();

/// Scalar factor and per-term weights of the printed rows (text form).
struct DecompositionRow {
  std::vector<std::array<std::string, 3>> points;
  std::string scale;
  std::vector<std::string> weights;
};
DecompositionRow decomposition_row(int i);

}  // namespace apolar
