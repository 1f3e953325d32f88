#include "apolar/homotopy.hpp"

#include <atomic>
#include <cmath>
#include <functional>
#include <memory>
#include <numbers>
#include <thread>

namespace apolar {

void PolySystem::check_square() const {
  if (equations.size() + hom_groups.size() != variables.size())
    throw DimensionError("system is not square: " + std::to_string(equations.size()) + " equations, " +
                         std::to_string(hom_groups.size()) + " projective groups, " +
                         std::to_string(variables.size()) + " variables");
  for (const auto& e : equations)
    if (e.nvars() != variables.size()) throw DimensionError("equation has the wrong variable count");
}

std::vector<ComplexF> PolySystem::params_of(const std::vector<ComplexF>& x) const {
  std::vector<ComplexF> out;
  for (const auto& name : param_names) {
    if (auto c = constants.find(name); c != constants.end()) {
      out.push_back(c->second);
      continue;
    }
    auto it = std::find(variables.begin(), variables.end(), name);
    if (it == variables.end()) throw DomainError("unknown parameter '" + name + "'");
    out.push_back(x.at(static_cast<std::size_t>(it - variables.begin())));
  }
  return out;
}

CompiledPoly::CompiledPoly(const Poly<ComplexF>& p) {
  for (const auto& [e, c] : p.terms()) {
    Term t{c, {}};
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) t.factors.emplace_back(i, e[i]);
    degree_ = std::max(degree_, total_degree(e));
    terms_.push_back(std::move(t));
  }
}

namespace {

ComplexF ipow(ComplexF z, int e) {
  ComplexF r{1.0, 0.0};
  for (int k = 0; k < e; ++k) r *= z;
  return r;
}

}  // namespace

ComplexF CompiledPoly::value(const CVec& x) const {
  ComplexF acc{};
  for (const auto& t : terms_) {
    ComplexF v = t.c;
    for (const auto& [i, e] : t.factors) v *= ipow(x(static_cast<Eigen::Index>(i)), e);
    acc += v;
  }
  return acc;
}

ComplexF CompiledPoly::value_grad(const CVec& x, CMat& jac, Eigen::Index row) const {
  ComplexF acc{};
  ComplexF pw[16];
  for (const auto& t : terms_) {
    const std::size_t m = t.factors.size();
    if (m > 16) throw RangeError("term has too many variables");
    ComplexF v = t.c;
    for (std::size_t k = 0; k < m; ++k) {
      pw[k] = ipow(x(static_cast<Eigen::Index>(t.factors[k].first)), t.factors[k].second);
      v *= pw[k];
    }
    acc += v;
    for (std::size_t k = 0; k < m; ++k) {
      const auto [i, e] = t.factors[k];
      ComplexF d = t.c * static_cast<double>(e) * ipow(x(static_cast<Eigen::Index>(i)), e - 1);
      for (std::size_t l = 0; l < m; ++l)
        if (l != k) d *= pw[l];
      jac(row, static_cast<Eigen::Index>(i)) += d;
    }
  }
  return acc;
}

std::vector<int> CompiledPoly::group_degrees(const std::vector<std::vector<std::size_t>>& groups) const {
  std::vector<int> out(groups.size(), 0);
  for (const auto& t : terms_)
    for (std::size_t g = 0; g < groups.size(); ++g) {
      int d = 0;
      for (const auto& [i, e] : t.factors)
        if (std::find(groups[g].begin(), groups[g].end(), i) != groups[g].end()) d += e;
      out[g] = std::max(out[g], d);
    }
  return out;
}

CompiledSystem::CompiledSystem(const std::vector<Poly<ComplexF>>& polys, std::size_t n) : nvars(n) {
  for (const auto& p : polys) eqs.emplace_back(p);
}

CVec CompiledSystem::value(const CVec& x) const {
  CVec f(static_cast<Eigen::Index>(eqs.size()));
  for (std::size_t i = 0; i < eqs.size(); ++i) f(static_cast<Eigen::Index>(i)) = eqs[i].value(x);
  return f;
}

void CompiledSystem::eval(const CVec& x, CVec& f, CMat& jac) const {
  f.resize(static_cast<Eigen::Index>(eqs.size()));
  jac.setZero(static_cast<Eigen::Index>(eqs.size()), static_cast<Eigen::Index>(nvars));
  for (std::size_t i = 0; i < eqs.size(); ++i) {
    const auto r = static_cast<Eigen::Index>(i);
    f(r) = eqs[i].value_grad(x, jac, r);
  }
}

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

ComplexF random_unit(std::mt19937_64& rng) { return std::polar(1.0, 2.0 * std::numbers::pi * uniform01(rng)); }

namespace {

/// G(z) of the homotopy together with its start solutions.
class StartSystem {
 public:
  virtual ~StartSystem() = default;
  virtual void eval(const CVec& x, CVec& g, CMat& jac) const = 0;
  virtual std::size_t num_paths() const = 0;
  virtual CVec start_point(std::size_t k) const = 0;
};

class TotalDegreeStart : public StartSystem {
 public:
  explicit TotalDegreeStart(std::vector<int> degrees) : deg_(std::move(degrees)) {}
  void eval(const CVec& x, CVec& g, CMat& jac) const override {
    const auto n = static_cast<Eigen::Index>(deg_.size());
    g.resize(n);
    jac.setZero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      const int d = deg_[static_cast<std::size_t>(i)];
      g(i) = ipow(x(i), d) - 1.0;
      jac(i, i) = static_cast<double>(d) * ipow(x(i), d - 1);
    }
  }
  std::size_t num_paths() const override {
    std::size_t n = 1;
    for (int d : deg_) n *= static_cast<std::size_t>(d);
    return n;
  }
  CVec start_point(std::size_t k) const override {
    CVec x(static_cast<Eigen::Index>(deg_.size()));
    for (std::size_t i = 0; i < deg_.size(); ++i) {
      const auto d = static_cast<std::size_t>(deg_[i]);
      x(static_cast<Eigen::Index>(i)) = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k % d) / d);
      k /= d;
    }
    return x;
  }

 private:
  std::vector<int> deg_;
};

/// Product of random affine forms, one per unit of group degree; equations
/// that are linear in a single group (patches, slices) are kept as they are.
class LinearProductStart : public StartSystem {
 public:
  struct Factor {
    std::size_t group;
    CVec coeffs;  // over all variables, zero outside the group
    ComplexF constant;
  };

  LinearProductStart(const std::vector<Poly<ComplexF>>& target, const std::vector<std::vector<std::size_t>>& groups,
                     std::size_t nvars, std::mt19937_64& rng)
      : n_(nvars), groups_(groups) {
    const auto N = static_cast<Eigen::Index>(nvars);
    need_.resize(groups.size());
    for (std::size_t g = 0; g < groups.size(); ++g) need_[g] = groups[g].size();
    for (const auto& p : target) {
      const CompiledPoly cp(p);
      const auto gd = cp.group_degrees(groups);
      std::size_t nonzero = 0, which = 0;
      for (std::size_t g = 0; g < gd.size(); ++g)
        if (gd[g] > 0) {
          ++nonzero;
          which = g;
        }
      std::vector<Factor> fs;
      if (cp.degree() == 1 && nonzero == 1) {
        Factor f{which, CVec::Zero(N), {}};
        for (const auto& [e, c] : p.terms()) {
          const int d = total_degree(e);
          if (d == 0) {
            f.constant = c;
          } else {
            for (std::size_t i = 0; i < e.size(); ++i)
              if (e[i] == 1) f.coeffs(static_cast<Eigen::Index>(i)) = c;
          }
        }
        fixed_.push_back(true);
        if (need_[which] == 0) throw DimensionError("too many single-group linear equations");
        --need_[which];
        fs.push_back(std::move(f));
      } else {
        fixed_.push_back(false);
        for (std::size_t g = 0; g < groups.size(); ++g)
          for (int k = 0; k < gd[g]; ++k) {
            Factor f{g, CVec::Zero(N), random_unit(rng)};
            for (auto i : groups[g]) f.coeffs(static_cast<Eigen::Index>(i)) = random_unit(rng);
            fs.push_back(std::move(f));
          }
      }
      factors_.push_back(std::move(fs));
    }
    enumerate();
  }

  void eval(const CVec& x, CVec& g, CMat& jac) const override {
    const auto m = static_cast<Eigen::Index>(factors_.size());
    g.resize(m);
    jac.setZero(m, static_cast<Eigen::Index>(n_));
    for (Eigen::Index i = 0; i < m; ++i) {
      const auto& fs = factors_[static_cast<std::size_t>(i)];
      std::vector<ComplexF> vals(fs.size());
      for (std::size_t k = 0; k < fs.size(); ++k) vals[k] = fs[k].coeffs.cwiseProduct(x).sum() + fs[k].constant;
      ComplexF prod{1.0, 0.0};
      for (auto v : vals) prod *= v;
      g(i) = prod;
      for (std::size_t k = 0; k < fs.size(); ++k) {
        ComplexF others{1.0, 0.0};
        for (std::size_t l = 0; l < fs.size(); ++l)
          if (l != k) others *= vals[l];
        jac.row(i) += others * fs[k].coeffs.transpose();
      }
    }
  }
  std::size_t num_paths() const override { return choices_.size(); }
  CVec start_point(std::size_t k) const override {
    const auto N = static_cast<Eigen::Index>(n_);
    CMat a(N, N);
    CVec b(N);
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      const Factor& f = factors_[i][choices_[k][i]];
      a.row(static_cast<Eigen::Index>(i)) = f.coeffs.transpose();
      b(static_cast<Eigen::Index>(i)) = -f.constant;
    }
    return a.fullPivLu().solve(b);
  }

  static std::size_t count(const std::vector<Poly<ComplexF>>& target,
                           const std::vector<std::vector<std::size_t>>& groups) {
    std::mt19937_64 rng(0);
    return LinearProductStart(target, groups, count_vars(groups), rng).num_paths();
  }

 private:
  static std::size_t count_vars(const std::vector<std::vector<std::size_t>>& groups) {
    std::size_t n = 0;
    for (const auto& g : groups)
      for (auto i : g) n = std::max(n, i + 1);
    return n;
  }

  // Every choice of one factor per non-fixed equation that uses each group
  // exactly as often as its remaining dimension.
  void enumerate() {
    std::vector<std::size_t> pick(factors_.size(), 0);
    std::vector<std::size_t> used(groups_.size(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == factors_.size()) {
        if (used == need_) choices_.push_back(pick);
        return;
      }
      if (fixed_[i]) {
        pick[i] = 0;
        rec(i + 1);
        return;
      }
      for (std::size_t k = 0; k < factors_[i].size(); ++k) {
        const std::size_t g = factors_[i][k].group;
        if (used[g] == need_[g]) continue;
        ++used[g];
        pick[i] = k;
        rec(i + 1);
        --used[g];
      }
    };
    rec(0);
  }

  std::size_t n_;
  std::vector<std::vector<std::size_t>> groups_;
  std::vector<std::vector<Factor>> factors_;
  std::vector<bool> fixed_;
  std::vector<std::size_t> need_;
  std::vector<std::vector<std::size_t>> choices_;
};

std::vector<std::vector<std::size_t>> all_groups(const PolySystem& sys) {
  std::vector<std::vector<std::size_t>> groups = sys.hom_groups;
  if (!sys.affine.empty()) groups.push_back(sys.affine);
  return groups;
}

Poly<ComplexF> patch_equation(std::size_t nvars, const std::vector<std::size_t>& group, std::mt19937_64& rng) {
  Poly<ComplexF> p = Poly<ComplexF>::constant(nvars, ComplexF(-1.0, 0.0));
  for (auto i : group) {
    Exponent e(nvars, 0);
    e[i] = 1;
    p.add_term(e, random_unit(rng));
  }
  return p;
}

struct PathContext {
  const CompiledSystem& target;
  const StartSystem& start;
  const CompiledSystem* checks;
  ComplexF gamma;
  const TrackerConfig& cfg;
};

void eval_h(const PathContext& ctx, const CVec& x, double t, CVec& h, CMat& hx, CVec& ht) {
  CVec f, g;
  CMat jf, jg;
  ctx.target.eval(x, f, jf);
  ctx.start.eval(x, g, jg);
  h = (1.0 - t) * f + t * ctx.gamma * g;
  hx = (1.0 - t) * jf + t * ctx.gamma * jg;
  ht = -f + ctx.gamma * g;
}

bool finite(const CVec& x) { return x.allFinite(); }

TrackedSolution track_path(const PathContext& ctx, std::size_t index) {
  const TrackerConfig& cfg = ctx.cfg;
  TrackedSolution sol;
  sol.path_index = index;
  CVec x = ctx.start.start_point(index);
  double t = 1.0, h = cfg.initial_step;
  int streak = 0;
  bool failed = false, diverged = false;
  CVec hv, ht;
  CMat hx;
  auto velocity = [&](const CVec& z, double s) -> CVec {
    eval_h(ctx, z, s, hv, hx, ht);
    return hx.partialPivLu().solve(-ht);
  };
  while (t > 0.0) {
    h = std::min(h, t);
    const double t1 = t - h;
    // RK4 on dx/dt = -H_x^{-1} H_t, stepping t -> t - h.
    const CVec k1 = velocity(x, t);
    const CVec k2 = velocity(x - 0.5 * h * k1, t - 0.5 * h);
    const CVec k3 = velocity(x - 0.5 * h * k2, t - 0.5 * h);
    const CVec k4 = velocity(x - h * k3, t1);
    CVec y = x - (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    const double tol = t1 < cfg.endgame_t ? cfg.endgame_tol : cfg.corrector_tol;
    bool ok = false;
    for (int it = 0; it < cfg.max_corrector_iters && finite(y); ++it) {
      eval_h(ctx, y, t1, hv, hx, ht);
      const CVec dy = hx.partialPivLu().solve(-hv);
      y += dy;
      if (dy.norm() <= tol * (1.0 + y.norm())) {
        ok = true;
        break;
      }
    }
    if (ok && finite(y)) {
      x = y;
      t = t1;
      if (++streak >= cfg.grow_after) {
        h = std::min(2.0 * h, cfg.max_step);
        streak = 0;
      }
      if (x.norm() > cfg.divergence_norm) {
        diverged = true;
        break;
      }
    } else {
      h *= 0.5;
      streak = 0;
      if (h < cfg.min_step) {
        failed = true;
        break;
      }
    }
  }
  sol.final_step = h;

  // Newton polish on the target.
  CVec f;
  CMat jf;
  if (!diverged && finite(x)) {
    for (int it = 0; it < 10; ++it) {
      ctx.target.eval(x, f, jf);
      const CVec dx = jf.fullPivLu().solve(-f);
      if (!dx.allFinite()) break;
      x += dx;
      ++sol.newton_iterations;
      if (dx.norm() <= 1e-15 * (1.0 + x.norm())) break;
    }
  }
  sol.x.assign(x.data(), x.data() + x.size());
  if (diverged || !finite(x)) {
    sol.status = "diverged";
    sol.residual = std::numeric_limits<double>::infinity();
    return sol;
  }
  ctx.target.eval(x, f, jf);
  sol.residual = f.cwiseAbs().maxCoeff();
  Eigen::JacobiSVD<CMat> svd(jf);
  const auto& s = svd.singularValues();
  sol.condition = s(s.size() - 1) > 0.0 ? s(0) / s(s.size() - 1) : std::numeric_limits<double>::infinity();
  sol.singular = sol.condition > cfg.singular_cond;
  if (ctx.checks && !ctx.checks->eqs.empty()) sol.check_residual = ctx.checks->value(x).cwiseAbs().maxCoeff();

  if (sol.residual >= cfg.success_residual) {
    sol.status = "failed";
  } else if (sol.check_residual >= cfg.success_residual) {
    sol.status = "spurious";
  } else {
    sol.converged = true;
    sol.status = sol.singular ? "singular" : "converged";
  }
  if (failed && !sol.converged) sol.status = "failed";
  return sol;
}

}  // namespace

std::size_t count_paths(const PolySystem& sys, StartKind start) {
  sys.check_square();
  std::vector<Poly<ComplexF>> target = sys.equations;
  std::mt19937_64 rng(0);
  for (const auto& g : sys.hom_groups) target.push_back(patch_equation(sys.nvars(), g, rng));
  if (start == StartKind::total_degree) {
    std::size_t n = 1;
    for (const auto& p : target) n *= static_cast<std::size_t>(p.degree());
    return n;
  }
  return LinearProductStart::count(target, all_groups(sys));
}

std::vector<TrackedSolution> track(const PolySystem& sys, const TrackerConfig& cfg) {
  sys.check_square();
  std::mt19937_64 rng(cfg.seed);
  const ComplexF gamma = random_unit(rng);
  std::vector<Poly<ComplexF>> target = sys.equations;
  for (const auto& g : sys.hom_groups) target.push_back(patch_equation(sys.nvars(), g, rng));
  const CompiledSystem compiled(target, sys.nvars());
  const CompiledSystem checks(sys.checks, sys.nvars());

  std::unique_ptr<StartSystem> start;
  if (cfg.start == StartKind::total_degree) {
    std::vector<int> deg;
    for (const auto& p : target) deg.push_back(p.degree());
    start = std::make_unique<TotalDegreeStart>(deg);
  } else {
    start = std::make_unique<LinearProductStart>(target, all_groups(sys), sys.nvars(), rng);
  }

  const PathContext ctx{compiled, *start, &checks, gamma, cfg};
  const std::size_t paths = start->num_paths();
  std::vector<TrackedSolution> out(paths);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < paths; k = next++) out[k] = track_path(ctx, k);
  };
  const unsigned nthreads = std::max(1u, std::min<unsigned>(cfg.threads, static_cast<unsigned>(paths)));
  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return out;
}

RefineResult refine(const std::vector<Poly<ComplexF>>& eqs, std::vector<ComplexF> x0, double tol, int max_iters) {
  if (eqs.empty()) throw DimensionError("refine: no equations");
  const std::size_t n = eqs.front().nvars();
  if (x0.size() != n) throw DimensionError("refine: point has the wrong length");
  const CompiledSystem sys(eqs, n);
  CVec x = Eigen::Map<const CVec>(x0.data(), static_cast<Eigen::Index>(n));
  CVec f;
  CMat j;
  RefineResult r;
  double prev = std::numeric_limits<double>::infinity();
  int stalled = 0;
  for (;;) {
    sys.eval(x, f, j);
    r.residual = f.cwiseAbs().maxCoeff();
    if (!std::isfinite(r.residual) || x.norm() > 1e10) {
      r.diverged = true;
      break;
    }
    if (r.residual < tol) {
      r.converged = true;
      break;
    }
    if (r.iterations >= max_iters) {
      r.diverged = true;
      break;
    }
    // Little progress for several steps means we are not in a basin.
    stalled = r.residual > 0.5 * prev ? stalled + 1 : 0;
    if (stalled >= 8) {
      r.diverged = true;
      break;
    }
    prev = r.residual;
    Eigen::JacobiSVD<CMat> svd(j, Eigen::ComputeThinU | Eigen::ComputeThinV);
    svd.setThreshold(1e-10);
    x += svd.solve(-f);
    ++r.iterations;
  }
  r.x.assign(x.data(), x.data() + x.size());
  return r;
}

RefineResult refine(const PolySystem& sys, std::vector<ComplexF> x, double tol, int max_iters) {
  auto eqs = sys.checks.empty() ? sys.equations : sys.checks;
  if (x.size() != sys.nvars()) throw DimensionError("refine: point has the wrong length");
  for (const auto& g : sys.hom_groups) {
    double sq = 0.0;
    for (auto k : g) sq += std::norm(x[k]);
    if (sq == 0.0) throw DomainError("refine: a projective group starts at zero");
    Poly<ComplexF> patch = Poly<ComplexF>::constant(sys.nvars(), ComplexF(-sq, 0.0));
    for (auto k : g) {
      Exponent e(sys.nvars(), 0);
      e[k] = 1;
      patch.add_term(e, std::conj(x[k]));
    }
    eqs.push_back(std::move(patch));
  }
  return refine(eqs, std::move(x), tol, max_iters);
}

double projective_distance(const std::vector<ComplexF>& u, const std::vector<ComplexF>& v) {
  if (u.size() != v.size()) throw DimensionError("projective_distance: length mismatch");
  const Eigen::Map<const CVec> a(u.data(), static_cast<Eigen::Index>(u.size()));
  const Eigen::Map<const CVec> b(v.data(), static_cast<Eigen::Index>(v.size()));
  const double na = a.norm(), nb = b.norm();
  if (na == 0.0 || nb == 0.0) throw DomainError("projective_distance of a zero vector");
  // |u/|u| - phase * v/|v||, which equals sqrt(2 - 2|<u,v>|/(|u||v|)) without
  // the cancellation near zero.
  const ComplexF ip = b.dot(a);
  const ComplexF phase = std::abs(ip) > 0.0 ? ip / std::abs(ip) : ComplexF(1.0, 0.0);
  return (a / na - phase * b / nb).norm();
}

}  // namespace apolar
