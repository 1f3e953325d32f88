#include "apolar/waring.hpp"

#include <nlohmann/json.hpp>

#include "apolar/catalog.hpp"
#include "apolar/poly_io.hpp"

namespace apolar {

std::vector<Point> WaringCertificate::points() const {
  std::vector<Point> p;
  for (const auto& t : terms) p.push_back(t.point);
  return p;
}

Poly<CycElem> dual_form(const Point& p) { return Poly<CycElem>::linear(p); }

Poly<CycElem> expand(const WaringCertificate& cert) {
  if (cert.terms.empty()) throw DomainError("certificate has no terms");
  Poly<CycElem> sum(cert.terms.front().point.size());
  for (const auto& t : cert.terms) sum += pow(dual_form(t.point), static_cast<unsigned>(cert.degree)) * t.coeff;
  return sum;
}

bool verify_decomposition(const WaringCertificate& cert) {
  if (cert.form.degree() != cert.degree || !cert.form.is_homogeneous())
    throw DegreeError("certificate degree does not match the form");
  for (const auto& t : cert.terms)
    if (t.point.size() != cert.form.nvars()) throw DimensionError("point has the wrong length");
  return expand(cert) == cert.form;
}

void validate_points(const std::vector<Point>& points) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (std::all_of(points[i].begin(), points[i].end(), [](const CycElem& c) { return c.is_zero(); }))
      throw DomainError("zero vector is not a projective point");
    for (std::size_t j = 0; j < i; ++j) {
      if (points[j].size() != points[i].size()) throw DimensionError("points of different lengths");
      if (rank(Matrix<CycElem>::from_rows({points[i], points[j]})) < 2)
        throw DomainError("points " + std::to_string(j) + " and " + std::to_string(i) + " coincide");
    }
  }
}

GradedBasis<CycElem> point_ideal_component(const std::vector<Point>& points, int t) {
  if (points.empty()) throw DomainError("empty point set");
  if (t < 0) throw RangeError("negative degree");
  validate_points(points);
  const std::size_t n = points.front().size();
  const auto monos = monomials_of_degree(n, t);
  Matrix<CycElem> ev(points.size(), monos.size());
  for (std::size_t r = 0; r < points.size(); ++r)
    for (std::size_t c = 0; c < monos.size(); ++c)
      ev(r, c) = evaluate(Poly<CycElem>::monomial(monos[c], CycElem(1L)), points[r]);
  GradedBasis<CycElem> out;
  out.degree = t;
  for (const auto& v : kernel(ev)) out.basis.push_back(detail::from_coords(v, monos, Ring::dual));
  return out;
}

ApolarityCheck apolarity_certificate(const Poly<CycElem>& f, const std::vector<Point>& points) {
  detail::require_form(f);
  const int d = f.degree();
  ApolarityCheck res;
  for (int t = 0; t <= d && res.inclusion; ++t) {
    for (const auto& phi : point_ideal_component(points, t).basis) {
      if (!apolar_act(phi, f).is_zero()) {
        res.inclusion = false;
        res.failing_degree = t;
        res.witness = phi;
        break;
      }
    }
  }
  if (!res.inclusion) return res;
  const auto monos = monomials_of_degree(f.nvars(), d);
  const auto idx = detail::index_of(monos);
  Matrix<CycElem> a(monos.size(), points.size());
  for (std::size_t j = 0; j < points.size(); ++j) {
    const auto col = detail::coords(pow(dual_form(points[j]), static_cast<unsigned>(d)), monos, idx);
    for (std::size_t i = 0; i < monos.size(); ++i) a(i, j) = col[i];
  }
  res.coeffs = solve(a, detail::coords(f, monos, idx));
  return res;
}

std::size_t rank_lower_bound(const Poly<CycElem>& f) {
  const HilbertData hd = hilbert(f);
  return *std::max_element(hd.h.begin(), hd.h.end());
}

WaringCertificate certificate_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what(), 1, e.byte);
  }
  WaringCertificate cert;
  try {
    cert.form = resolve_form(j.at("form").get<std::string>());
    cert.degree = j.value("degree", cert.form.degree());
    for (const auto& t : j.at("terms")) {
      WaringTerm term;
      for (const auto& c : t.at("point")) term.point.push_back(parse_constant(c.is_string() ? c.get<std::string>() : c.dump()));
      const auto& cj = t.at("coeff");
      term.coeff = parse_constant(cj.is_string() ? cj.get<std::string>() : cj.dump());
      term.coeff *= CycElem(static_cast<long>(t.value("sign", 1)));
      cert.terms.push_back(std::move(term));
    }
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("certificate JSON: ") + e.what());
  }
  return cert;
}

std::string certificate_to_json(const WaringCertificate& cert) {
  nlohmann::json j;
  j["form"] = to_string(cert.form);
  j["degree"] = cert.degree;
  j["terms"] = nlohmann::json::array();
  for (const auto& t : cert.terms) {
    nlohmann::json p = nlohmann::json::array();
    for (const auto& c : t.point) p.push_back(c.to_string());
    j["terms"].push_back({{"point", p}, {"coeff", t.coeff.to_string()}, {"sign", 1}});
  }
  return j.dump();
}

}  // namespace apolar
