#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "apolar/poly.hpp"

namespace apolar {

/// x, y, z for up to three variables, x0..xN beyond; upper case in R.
std::vector<std::string> default_var_names(std::size_t nvars, Ring ring);

std::string coeff_to_string(const Rat& c);
std::string coeff_to_string(const CycElem& c);
std::string coeff_to_string(const ComplexF& c);

/// Prints terms in graded-lex order, e.g. `X^2-X*Y+Y^2-Y*Z+Z^2`. The output
/// parses back to the identical polynomial.
template <class K>
std::string to_string(const Poly<K>& p, const std::vector<std::string>& names);

template <class K>
std::string to_string(const Poly<K>& p) {
  return to_string(p, default_var_names(p.nvars(), p.ring()));
}

struct ParseOptions {
  /// Ambient variable count. When unset: 3 for the x,y,z scheme, one more
  /// than the largest index for the x0..xN scheme.
  std::optional<std::size_t> nvars;
};

/// Parses the exact grammar: variables `x,y,z` / `x0..xN` (upper case for the
/// dual ring), `+ - * / ^`, parentheses, integer literals, and the constants
/// `i`, `z12`, `alpha` (also `a`), `omega`, `eta`, `beta`, `conj(...)`.
/// Division is by nonzero constants only.
Poly<CycElem> parse_poly(std::string_view text, const ParseOptions& opts = {});

/// parse_poly followed by to_rational; rejects irrational coefficients.
Poly<Rat> parse_rational_poly(std::string_view text, const ParseOptions& opts = {});

/// A variable-free expression of the exact grammar, e.g. `(z12^2+1)/3`.
CycElem parse_constant(std::string_view text);

/// Numeric grammar over explicit variable names: decimal literals with
/// exponents and the imaginary unit `I` (Bertini syntax).
Poly<ComplexF> parse_complex_poly(std::string_view text, const std::vector<std::string>& names);

}  // namespace apolar
