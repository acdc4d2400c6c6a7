// Copyright 2026 The uccvqe Authors
// SPDX-License-Identifier: Apache-2.0

#include "uccvqe/lbfgs.hpp"

#include <cmath>
#include <deque>

#include "uccvqe/error.hpp"

namespace uccvqe {

namespace {

struct LinePoint {
  double alpha;
  double f;
  double dphi;  // directional derivative g.d
};

// Strong-Wolfe search along d from (x0, f0, g0). Returns accepted alpha
// with its f and gradient, or alpha = 0 on failure.
struct LineResult {
  double alpha = 0;
  double f = 0;
  Eigen::VectorXd g;
  int evals = 0;
};

LineResult wolfe_line_search(const ObjectiveFn& f, const GradientFn& grad,
                             const Eigen::VectorXd& x0, double f0,
                             const Eigen::VectorXd& g0, const Eigen::VectorXd& d,
                             const OptimOptions& opt) {
  const double dphi0 = g0.dot(d);
  LineResult fail;
  if (dphi0 >= 0) return fail;  // not a descent direction

  auto phi = [&](double a, LinePoint& p, bool with_grad, Eigen::VectorXd* g) {
    const Eigen::VectorXd x = x0 + a * d;
    p.alpha = a;
    p.f = f(x);
    if (with_grad) {
      *g = grad(x);
      p.dphi = g->dot(d);
    }
  };

  auto zoom = [&](LinePoint lo, LinePoint hi, Eigen::VectorXd& g_out) -> LineResult {
    LineResult res;
    for (int it = 0; it < opt.max_line_search; ++it) {
      // Quadratic interpolation with a bisection safeguard.
      double a = 0.5 * (lo.alpha + hi.alpha);
      const double denom = 2.0 * (hi.f - lo.f - lo.dphi * (hi.alpha - lo.alpha));
      if (std::abs(denom) > 1e-300) {
        const double cand = lo.alpha - lo.dphi * std::pow(hi.alpha - lo.alpha, 2) / denom;
        const double lo_a = std::min(lo.alpha, hi.alpha), hi_a = std::max(lo.alpha, hi.alpha);
        const double margin = 0.1 * (hi_a - lo_a);
        if (cand > lo_a + margin && cand < hi_a - margin) a = cand;
      }
      LinePoint p{};
      phi(a, p, true, &g_out);
      res.evals += 2;
      p.dphi = g_out.dot(d);
      if (p.f > f0 + opt.wolfe_c1 * a * dphi0 || p.f >= lo.f) {
        hi = p;
      } else {
        if (std::abs(p.dphi) <= -opt.wolfe_c2 * dphi0) {
          res.alpha = a;
          res.f = p.f;
          res.g = g_out;
          return res;
        }
        if (p.dphi * (hi.alpha - lo.alpha) >= 0) hi = lo;
        lo = p;
      }
      if (std::abs(hi.alpha - lo.alpha) < 1e-16) break;
    }
    // Accept lo if it at least decreases sufficiently.
    if (lo.alpha > 0 && lo.f <= f0 + opt.wolfe_c1 * lo.alpha * dphi0) {
      LineResult res2;
      res2.alpha = lo.alpha;
      res2.f = lo.f;
      res2.g = grad(x0 + lo.alpha * d);
      return res2;
    }
    return fail;
  };

  LinePoint prev{0.0, f0, dphi0};
  double alpha = 1.0;
  Eigen::VectorXd g;
  for (int it = 0; it < opt.max_line_search; ++it) {
    LinePoint p{};
    phi(alpha, p, true, &g);
    p.dphi = g.dot(d);
    if (p.f > f0 + opt.wolfe_c1 * alpha * dphi0 || (it > 0 && p.f >= prev.f))
      return zoom(prev, p, g);
    if (std::abs(p.dphi) <= -opt.wolfe_c2 * dphi0) {
      LineResult res;
      res.alpha = alpha;
      res.f = p.f;
      res.g = g;
      return res;
    }
    if (p.dphi >= 0) return zoom(p, prev, g);
    prev = p;
    alpha *= 2.0;
    if (alpha > 1e8) break;
  }
  return fail;
}

}  // namespace

OptimResult lbfgs_minimize(const ObjectiveFn& f, const GradientFn& grad, Eigen::VectorXd x0,
                           const OptimOptions& opt, const IterationCallback& callback) {
  OptimResult out;
  Eigen::VectorXd x = std::move(x0);
  double fx = f(x);
  Eigen::VectorXd g = grad(x);

  std::deque<Eigen::VectorXd> s_hist, y_hist;
  std::deque<double> rho_hist;
  int flat_count = 0;

  for (int iter = 1; iter <= opt.max_iterations; ++iter) {
    const double ginf = g.size() ? g.cwiseAbs().maxCoeff() : 0.0;
    if (callback) callback(iter - 1, x, fx, ginf);
    if (ginf < opt.grad_tol || x.size() == 0) {
      out.converged = true;
      out.iterations = iter - 1;
      break;
    }

    // Two-loop recursion.
    Eigen::VectorXd q = g;
    std::vector<double> alpha_coef(s_hist.size());
    for (int i = int(s_hist.size()) - 1; i >= 0; --i) {
      alpha_coef[i] = rho_hist[i] * s_hist[i].dot(q);
      q -= alpha_coef[i] * y_hist[i];
    }
    if (!s_hist.empty()) {
      const double gamma =
          s_hist.back().dot(y_hist.back()) / y_hist.back().squaredNorm();
      q *= gamma;
    }
    for (std::size_t i = 0; i < s_hist.size(); ++i) {
      const double beta = rho_hist[i] * y_hist[i].dot(q);
      q += (alpha_coef[i] - beta) * s_hist[i];
    }
    Eigen::VectorXd d = -q;

    LineResult ls = wolfe_line_search(f, grad, x, fx, g, d, opt);
    if (ls.alpha == 0) {
      // Steepest-descent fallback with simple backtracking.
      d = -g;
      double alpha = 1.0 / std::max(1.0, g.norm());
      bool accepted = false;
      for (int bt = 0; bt < opt.max_line_search; ++bt, alpha *= 0.5) {
        const Eigen::VectorXd xt = x + alpha * d;
        const double ft = f(xt);
        if (ft < fx - 1e-16 * std::abs(fx)) {
          ls.alpha = alpha;
          ls.f = ft;
          ls.g = grad(xt);
          accepted = true;
          break;
        }
      }
      if (!accepted) {
        out.converged = true;  // stationary to line-search resolution
        out.iterations = iter;
        break;
      }
      s_hist.clear();
      y_hist.clear();
      rho_hist.clear();
    }

    const Eigen::VectorXd x_new = x + ls.alpha * d;
    const Eigen::VectorXd s = x_new - x;
    const Eigen::VectorXd y = ls.g - g;
    const double sy = s.dot(y);
    if (sy > 1e-12 * s.norm() * y.norm()) {
      s_hist.push_back(s);
      y_hist.push_back(y);
      rho_hist.push_back(1.0 / sy);
      if (int(s_hist.size()) > opt.history) {
        s_hist.pop_front();
        y_hist.pop_front();
        rho_hist.pop_front();
      }
    }

    const double df = std::abs(fx - ls.f);
    x = x_new;
    fx = ls.f;
    g = ls.g;
    flat_count = df < opt.energy_tol ? flat_count + 1 : 0;
    out.iterations = iter;
    if (flat_count >= 3) {
      out.converged = true;
      break;
    }
  }

  out.x = std::move(x);
  out.f = fx;
  out.gradient = std::move(g);
  return out;
}

}  // namespace uccvqe
