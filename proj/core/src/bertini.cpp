#include "apolar/bertini.hpp"

#include <cctype>
#include <sstream>

#include <nlohmann/json.hpp>

#include "apolar/poly_io.hpp"
#include "apolar/ranksearch.hpp"

namespace apolar {

namespace {

std::string join(const std::vector<std::string>& v, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

std::vector<std::string> names_of(const PolySystem& sys, const std::vector<std::size_t>& idx) {
  std::vector<std::string> out;
  for (auto i : idx) out.push_back(sys.variables.at(i));
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_names(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

bool starts_with(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }

nlohmann::json complex_json(ComplexF z) { return nlohmann::json::array({z.real(), z.imag()}); }

ComplexF complex_from_json(const nlohmann::json& j) { return {j.at(0).get<double>(), j.at(1).get<double>()}; }

}  // namespace

std::string emit_bertini(const PolySystem& sys) {
  std::ostringstream out;
  out << "% polynomial system, " << sys.equations.size() << " functions\n";
  out << "% seed: " << sys.seed << "\n";
  if (!sys.param_names.empty()) out << "% params: " << join(sys.param_names) << "\n";
  for (const auto& c : sys.checks) out << "% check: " << to_string(c, sys.variables) << "\n";
  out << "CONFIG\n  TRACKTYPE: 0;\n  MPTYPE: 0;\nEND;\n";
  out << "INPUT\n";
  for (const auto& g : sys.hom_groups) out << "  hom_variable_group " << join(names_of(sys, g)) << ";\n";
  if (!sys.affine.empty()) out << "  variable_group " << join(names_of(sys, sys.affine)) << ";\n";
  std::vector<std::string> consts;
  for (const auto& [name, v] : sys.constants) consts.push_back(name);
  if (!consts.empty()) out << "  constant " << join(consts) << ";\n";
  std::vector<std::string> fns;
  for (std::size_t i = 0; i < sys.equations.size(); ++i) fns.push_back("eq" + std::to_string(i + 1));
  out << "  function " << join(fns) << ";\n";
  for (const auto& [name, v] : sys.constants) out << "  " << name << " = " << coeff_to_string(v) << ";\n";
  for (std::size_t i = 0; i < sys.equations.size(); ++i)
    out << "  " << fns[i] << " = " << to_string(sys.equations[i], sys.variables) << ";\n";
  out << "END;\n";
  return out.str();
}

PolySystem parse_bertini(const std::string& text) {
  PolySystem sys;
  std::vector<std::string> check_text;
  std::string body;
  {
    std::istringstream in(text);
    std::size_t lineno = 0;
    for (std::string line; std::getline(in, line);) {
      ++lineno;
      const auto pct = line.find('%');
      if (pct != std::string::npos) {
        const std::string comment = trim(line.substr(pct + 1));
        if (starts_with(comment, "seed:")) sys.seed = std::stoull(trim(comment.substr(5)));
        else if (starts_with(comment, "params:")) sys.param_names = split_names(comment.substr(7));
        else if (starts_with(comment, "check:")) check_text.push_back(trim(comment.substr(6)));
        line = line.substr(0, pct);
      }
      body += line + "\n";
    }
  }
  const auto input = body.find("INPUT");
  if (input == std::string::npos) throw ParseError("missing INPUT section", 1, 1);
  const auto end = body.find("END;", input);
  if (end == std::string::npos) throw ParseError("unterminated INPUT section", 1, 1);
  std::stringstream stmts(body.substr(input + 5, end - input - 5));
  std::vector<std::string> functions, constants;
  std::map<std::string, std::string> defs;
  std::vector<std::vector<std::string>> hom;
  std::vector<std::string> aff;
  for (std::string s; std::getline(stmts, s, ';');) {
    s = trim(s);
    if (s.empty()) continue;
    if (starts_with(s, "hom_variable_group ")) {
      hom.push_back(split_names(s.substr(19)));
    } else if (starts_with(s, "variable_group ")) {
      const auto v = split_names(s.substr(15));
      aff.insert(aff.end(), v.begin(), v.end());
    } else if (starts_with(s, "function ")) {
      const auto v = split_names(s.substr(9));
      functions.insert(functions.end(), v.begin(), v.end());
    } else if (starts_with(s, "constant ")) {
      const auto v = split_names(s.substr(9));
      constants.insert(constants.end(), v.begin(), v.end());
    } else if (const auto eq = s.find('='); eq != std::string::npos) {
      defs[trim(s.substr(0, eq))] = trim(s.substr(eq + 1));
    } else {
      throw ParseError("unrecognised statement '" + s.substr(0, 40) + "'", 1, 1);
    }
  }
  for (const auto& g : hom) {
    std::vector<std::size_t> idx;
    for (const auto& n : g) {
      idx.push_back(sys.variables.size());
      sys.variables.push_back(n);
    }
    sys.hom_groups.push_back(idx);
  }
  for (const auto& n : aff) {
    sys.affine.push_back(sys.variables.size());
    sys.variables.push_back(n);
  }
  for (const auto& c : constants) {
    auto it = defs.find(c);
    if (it == defs.end()) throw ParseError("constant '" + c + "' has no value", 1, 1);
    const auto p = parse_complex_poly(it->second, {});
    sys.constants[c] = p.is_zero() ? ComplexF{} : p.terms().begin()->second;
  }
  for (const auto& f : functions) {
    auto it = defs.find(f);
    if (it == defs.end()) throw ParseError("function '" + f + "' has no definition", 1, 1);
    sys.equations.push_back(parse_complex_poly(it->second, sys.variables));
  }
  for (const auto& c : check_text) sys.checks.push_back(parse_complex_poly(c, sys.variables));
  return sys;
}

std::string system_to_json(const PolySystem& sys) {
  nlohmann::json j;
  j["seed"] = sys.seed;
  j["variables"] = sys.variables;
  j["hom_groups"] = sys.hom_groups;
  j["affine"] = sys.affine;
  j["equations"] = nlohmann::json::array();
  for (const auto& e : sys.equations) j["equations"].push_back(to_string(e, sys.variables));
  j["checks"] = nlohmann::json::array();
  for (const auto& e : sys.checks) j["checks"].push_back(to_string(e, sys.variables));
  j["params"] = sys.param_names;
  j["constants"] = nlohmann::json::object();
  for (const auto& [name, v] : sys.constants) j["constants"][name] = complex_json(v);
  return j.dump(1);
}

PolySystem system_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what(), 1, e.byte);
  }
  PolySystem sys;
  try {
    sys.seed = j.value("seed", std::uint64_t{0});
    sys.variables = j.at("variables").get<std::vector<std::string>>();
    sys.hom_groups = j.value("hom_groups", std::vector<std::vector<std::size_t>>{});
    sys.affine = j.value("affine", std::vector<std::size_t>{});
    if (!j.contains("affine") && sys.hom_groups.empty())
      for (std::size_t i = 0; i < sys.variables.size(); ++i) sys.affine.push_back(i);
    for (const auto& e : j.at("equations")) sys.equations.push_back(parse_complex_poly(e.get<std::string>(), sys.variables));
    for (const auto& e : j.value("checks", nlohmann::json::array()))
      sys.checks.push_back(parse_complex_poly(e.get<std::string>(), sys.variables));
    sys.param_names = j.value("params", std::vector<std::string>{});
    for (const auto& [name, v] : j.value("constants", nlohmann::json::object()).items())
      sys.constants[name] = complex_from_json(v);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("system JSON: ") + e.what());
  }
  return sys;
}

PolySystem parse_system(const std::string& text) {
  const auto start = text.find_first_not_of(" \t\r\n");
  if (start != std::string::npos && text[start] == '{') return system_from_json(text);
  return parse_bertini(text);
}

std::string solutions_to_json(const PolySystem& sys, const std::vector<TrackedSolution>& sols, std::uint64_t seed) {
  const std::vector<std::string> names = sys.param_names.empty() ? sys.variables : sys.param_names;
  PolySystem view = sys;
  view.param_names = names;

  std::vector<std::size_t> conv;
  std::vector<std::vector<ComplexF>> params;
  for (std::size_t i = 0; i < sols.size(); ++i)
    if (sols[i].converged) {
      conv.push_back(i);
      params.push_back(view.params_of(sols[i].x));
    }
  std::vector<long> cls(sols.size(), -1);
  if (names.size() == 6 && sys.param_names.size() == 6) {
    const auto classes = postprocess(params);
    for (std::size_t c = 0; c < classes.size(); ++c)
      for (auto m : classes[c].members) cls[conv[m]] = static_cast<long>(c);
  } else {
    std::vector<std::vector<ComplexF>> reps;
    for (std::size_t m = 0; m < params.size(); ++m) {
      std::size_t c = 0;
      for (; c < reps.size(); ++c) {
        double d = 0.0;
        for (std::size_t k = 0; k < reps[c].size(); ++k) d = std::max(d, std::abs(reps[c][k] - params[m][k]));
        if (d < 1e-6 * (1.0 + std::abs(reps[c][0]))) break;
      }
      if (c == reps.size()) reps.push_back(params[m]);
      cls[conv[m]] = static_cast<long>(c);
    }
  }

  nlohmann::json j;
  j["seed"] = seed;
  j["system_seed"] = sys.seed;
  j["paths"] = sols.size();
  j["converged"] = conv.size();
  j["param_names"] = names;
  j["solutions"] = nlohmann::json::array();
  for (std::size_t i = 0; i < sols.size(); ++i) {
    const auto& s = sols[i];
    nlohmann::json p = nlohmann::json::array();
    if (std::all_of(s.x.begin(), s.x.end(), [](ComplexF z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }))
      for (const auto& z : view.params_of(s.x)) p.push_back(complex_json(z));
    nlohmann::json e{{"path", s.path_index},     {"params", p},           {"residual", s.residual},
                     {"status", s.status},       {"condition", s.condition}};
    if (!sys.checks.empty()) e["check_residual"] = s.check_residual;
    e["class"] = cls[i] >= 0 ? nlohmann::json(cls[i]) : nlohmann::json(nullptr);
    j["solutions"].push_back(std::move(e));
  }
  return j.dump(1);
}

}  // namespace apolar
