#include "apolar/catalog.hpp"

#include "apolar/poly_io.hpp"

namespace apolar {

namespace {

void check_index(int i, int hi = kNumForms) {
  if (i < 1 || i > hi) throw RangeError("form index must be in 1.." + std::to_string(hi));
}

const char* const kForms[kNumForms] = {
    "x*y*z*(x+y+z)*(x+alpha*y+conj(alpha)*z)*(x+conj(alpha)*y+alpha*z)",
    "x*y*z*(x+y+z)*(x+eta*y+omega*z)*(x+conj(eta)*y+conj(omega)*z)",
    "x*y*z*(x+y+z)*(x+conj(omega)*y+omega*z)*(x+conj(eta)*y+eta*z)",
    "x*y*z*(x+y+z)*(x+omega*y+conj(omega)*z)*(x+eta*y+conj(eta)*z)",
    "x*y*z*(x+y+z)*(x+y)*(y+z)",
    "x^3*y*z*(x+y+z)",
};

const char* const kParams[kNumForms][6] = {
    {"1", "alpha", "conj(alpha)", "1", "conj(alpha)", "alpha"},
    {"1", "eta", "omega", "1", "conj(eta)", "conj(omega)"},
    {"1", "conj(omega)", "omega", "1", "conj(eta)", "eta"},
    {"1", "omega", "conj(omega)", "1", "eta", "conj(eta)"},
    {"1", "1", "0", "0", "1", "1"},
    {"1", "0", "0", "1", "0", "0"},
};

const std::vector<std::string> kF3Cubics = {
    "-6*E*X*Y^2+6*E*Y^3+6*E*X*Z^2+3*E*Y*Z^2-6*E*Z^3+X^3+2*X*Y^2-3*Y^3+2*X*Y*Z-4*X*Z^2-3*Y*Z^2+3*Z^3",
    "-3*E*X*Y^2+3*E*Y^3+X^2*Y-Y^3",
    "3*E*X*Z^2-3*E*Z^3+X^2*Z-3*X*Z^2+2*Z^3",
    "3*E*Y*Z^2+Y^2*Z-2*Y*Z^2",
};

std::vector<std::string> with_eta(const std::string& eta) {
  std::vector<std::string> out;
  for (std::string s : kF3Cubics) {
    for (auto pos = s.find('E'); pos != std::string::npos; pos = s.find('E', pos + eta.size()))
      s.replace(pos, 1, eta);
    out.push_back(s);
  }
  return out;
}

}  // namespace

std::string form_text(int i) {
  check_index(i);
  return kForms[i - 1];
}

Poly<CycElem> named_form(int i) { return parse_poly(form_text(i)); }

Poly<CycElem> resolve_form(const std::string& text) {
  if (text.size() == 2 && text[0] == 'f' && text[1] >= '1' && text[1] <= '6') return named_form(text[1] - '0');
  return parse_poly(text);
}

FactorParams form_params(int i) {
  check_index(i);
  FactorParams p;
  for (int k = 0; k < 3; ++k) {
    p.abc[k] = parse_constant(kParams[i - 1][k]);
    p.def[k] = parse_constant(kParams[i - 1][k + 3]);
  }
  return p;
}

Poly<CycElem> sextic_from_params(const FactorParams& p) {
  const auto x = Poly<CycElem>::variable(3, 0), y = Poly<CycElem>::variable(3, 1), z = Poly<CycElem>::variable(3, 2);
  return x * y * z * (x + y + z) * Poly<CycElem>::linear({p.abc.begin(), p.abc.end()}) *
         Poly<CycElem>::linear({p.def.begin(), p.def.end()});
}

std::vector<std::string> annihilator_table(int i) {
  check_index(i);
  switch (i) {
    case 1:
      return {"X^3-Y^3", "X^3-Z^3", "X*Y^2+Y*Z^2+Z*X^2", "X^2*Y+Y^2*Z+Z^2*X"};
    case 2:
      return {"X^2*Z-X*Z^2", "3*Y^2*Z-3*Y*Z^2+Z^3", "X^3-3*X^2*Y+3*X*Y^2",
              "X^2*Y-3*X*Y^2+3*Y^3+2*X*Y*Z-X*Z^2-2*Y*Z^2+Z^3"};
    case 3:
      return with_eta("eta");
    case 4:
      return with_eta("conj(eta)");
    case 5:
      return {"X^2-X*Y+Y^2-Y*Z+Z^2", "Y^3-2*Y^2*Z+2*Y*Z^2", "Z^4"};
    default:
      return {"Z^3", "Y^2*Z-Y*Z^2", "Y^3", "X*Y^2-X*Y*Z+X*Z^2+2*Y*Z^2"};
  }
}

DecompositionRow decomposition_row(int i) {
  check_index(i, 5);
  switch (i) {
    case 1:
      return {{{"alpha", "1", "1"}, {"conj(alpha)", "1", "1"}, {"1", "alpha", "1"},
               {"1", "conj(alpha)", "1"}, {"1", "1", "alpha"}, {"1", "1", "conj(alpha)"}},
              "(2*alpha+1)/270",
              {"-1", "1", "-1", "1", "-1", "1"}};
    case 2:
      return {{{"1", "eta", "1"}, {"1", "conj(eta)", "1"}, {"0", "eta", "1"},
               {"0", "conj(eta)", "1"}, {"1", "eta", "0"}, {"1", "conj(eta)", "0"}},
              "(2*eta-1)/10",
              {"-1", "1", "1", "-1", "1", "-1"}};
    case 3:
      return {{{"omega", "1", "omega"}, {"1", "1", "omega"}, {"omega", "1", "0"},
               {"1", "1", "0"}, {"1", "0", "omega"}, {"1", "0", "1"}},
              "(2*omega-1)/90",
              {"1", "-1", "-1", "1", "1", "-1"}};
    case 4:
      return {{{"conj(omega)", "1", "conj(omega)"}, {"1", "1", "conj(omega)"}, {"conj(omega)", "1", "0"},
               {"1", "1", "0"}, {"1", "0", "conj(omega)"}, {"1", "0", "1"}},
              "(2*conj(omega)-1)/90",
              {"1", "-1", "-1", "1", "1", "-1"}};
    default:
      return {{{"beta", "2", "conj(beta)"}, {"conj(beta)", "2", "beta"}, {"beta", "2", "beta"},
               {"conj(beta)", "2", "conj(beta)"}, {"1", "0", "i"}, {"1", "0", "conj(i)"}},
              "1/1920",
              {"1", "1", "-1", "-1", "-8*i", "-8*i"}};
  }
}

namespace {

WaringCertificate certificate_from_row(int i, const DecompositionRow& row) {
  WaringCertificate cert;
  cert.form = named_form(i);
  cert.degree = 6;
  const CycElem scale = parse_constant(row.scale);
  for (std::size_t k = 0; k < row.points.size(); ++k) {
    WaringTerm t;
    for (const auto& c : row.points[k]) t.point.push_back(parse_constant(c));
    t.coeff = scale * parse_constant(row.weights[k]);
    cert.terms.push_back(std::move(t));
  }
  return cert;
}

}  // namespace

WaringCertificate decomposition_table(int i) { return certificate_from_row(i, decomposition_row(i)); }

WaringCertificate decomposition_f5_corrected() {
  DecompositionRow row = decomposition_row(5);
  row.weights[5] = "8*i";
  return certificate_from_row(5, row);
}

}  // namespace apolar
