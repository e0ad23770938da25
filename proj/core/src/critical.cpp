#include "syzkit/critical.hpp"

#include <algorithm>
#include <cmath>

#include "syzkit/errors.hpp"

namespace syz {

namespace {

using CVec = std::vector<std::complex<double>>;

struct GradientData {
  CVec g;                 // logarithmic gradient, length n
  std::vector<CVec> jac;  // n x n Jacobian of g in log coordinates
};

double norm_inf(const CVec& v) {
  double m = 0.0;
  for (const auto& z : v) m = std::max(m, std::abs(z));
  return m;
}

// Evaluate g_i(w) = sum_m c_m m_i exp(<m,w>) and its Jacobian
// J_ij = sum_m c_m m_i m_j exp(<m,w>).
GradientData eval_gradient(const LaurentElement& f, const CVec& w, double q_value,
                           bool with_jacobian) {
  const std::size_t n = f.nvars();
  GradientData out;
  out.g.assign(n, 0.0);
  if (with_jacobian) out.jac.assign(n, CVec(n, 0.0));
  for (const auto& [m, c] : f.terms()) {
    std::complex<double> phase = 0.0;
    for (std::size_t i = 0; i < n; ++i) phase += double(m[i]) * w[i];
    const std::complex<double> val = c.evaluate(q_value) * std::exp(phase);
    for (std::size_t i = 0; i < n; ++i) {
      out.g[i] += double(m[i]) * val;
      if (with_jacobian)
        for (std::size_t j = 0; j < n; ++j) out.jac[i][j] += double(m[i]) * double(m[j]) * val;
    }
  }
  return out;
}

// Solve J x = -g for n = 1 or 2. Returns false when J is numerically singular.
bool newton_step(const GradientData& d, CVec& step) {
  const std::size_t n = d.g.size();
  step.assign(n, 0.0);
  if (n == 1) {
    if (std::abs(d.jac[0][0]) < 1e-14) return false;
    step[0] = -d.g[0] / d.jac[0][0];
    return true;
  }
  const std::complex<double> det =
      d.jac[0][0] * d.jac[1][1] - d.jac[0][1] * d.jac[1][0];
  if (std::abs(det) < 1e-14) return false;
  step[0] = (-d.g[0] * d.jac[1][1] + d.g[1] * d.jac[0][1]) / det;
  step[1] = (-d.g[1] * d.jac[0][0] + d.g[0] * d.jac[1][0]) / det;
  return true;
}

bool refine(const LaurentElement& f, double q_value, CVec& w) {
  double res = norm_inf(eval_gradient(f, w, q_value, false).g);
  for (int iter = 0; iter < 80; ++iter) {
    if (res < 1e-13) return true;
    const GradientData d = eval_gradient(f, w, q_value, true);
    CVec step;
    if (!newton_step(d, step)) return false;
    double t = 1.0;
    bool improved = false;
    for (int halvings = 0; halvings < 24; ++halvings, t *= 0.5) {
      CVec trial = w;
      for (std::size_t i = 0; i < w.size(); ++i) trial[i] += t * step[i];
      bool sane = true;
      for (const auto& z : trial)
        if (!(std::abs(z.real()) < 20.0)) sane = false;
      if (!sane) continue;
      const double trial_res = norm_inf(eval_gradient(f, trial, q_value, false).g);
      if (trial_res < res) {
        w = std::move(trial);
        res = trial_res;
        improved = true;
        break;
      }
    }
    if (!improved) return res < 1e-13;
  }
  return res < 1e-13;
}

bool lex_less(const CriticalPoint& a, const CriticalPoint& b) {
  for (std::size_t i = 0; i < a.point.size(); ++i) {
    if (a.point[i].real() != b.point[i].real()) return a.point[i].real() < b.point[i].real();
    if (a.point[i].imag() != b.point[i].imag()) return a.point[i].imag() < b.point[i].imag();
  }
  return false;
}

}  // namespace

LaurentElement log_derivative(const LaurentElement& w, std::size_t var) {
  if (var >= w.nvars()) fail(ErrorKind::Domain, "variable index out of range");
  LaurentElement out(w.nvars());
  for (const auto& [m, c] : w.terms()) {
    if (m[var] == 0) continue;
    out += LaurentElement::monomial(m, EnergyScalar(Rat(m[var])) * c);
  }
  return out;
}

CriticalSearchResult critical_points(const LaurentElement& w, double q_value) {
  const std::size_t n = w.nvars();
  if (n > 2) fail(ErrorKind::Domain, "critical point search handles at most two variables");
  if (!(q_value > 0.0) || !(q_value < 1.0))
    fail(ErrorKind::Domain, "energy parameter must lie in (0,1)");

  CriticalSearchResult result;
  bool gradient_vanishes = true;
  for (std::size_t i = 0; i < n && gradient_vanishes; ++i)
    if (!log_derivative(w, i).is_zero()) gradient_vanishes = false;
  if (n == 0 || gradient_vanishes) {
    result.warning = true;
    result.note = "constant potential: every point is critical";
    return result;
  }

  std::vector<LaurentElement> partials;
  for (std::size_t i = 0; i < n; ++i) partials.push_back(log_derivative(w, i));

  // Start grid: 4 log-moduli x 8 phases per variable.
  const double pi = std::acos(-1.0);
  std::vector<std::complex<double>> starts_1d;
  for (int r = 0; r < 4; ++r)
    for (int k = 0; k < 8; ++k)
      starts_1d.emplace_back(-2.5 + double(r), double(k) * pi / 4.0);

  std::vector<CriticalPoint> found;
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    CVec start(n);
    for (std::size_t i = 0; i < n; ++i) start[i] = starts_1d[idx[i]];
    CVec logs = start;
    if (refine(w, q_value, logs)) {
      CriticalPoint cp;
      cp.point.resize(n);
      for (std::size_t i = 0; i < n; ++i) cp.point[i] = std::exp(logs[i]);
      // Independent check: evaluate the exact logarithmic derivatives at the
      // exponentiated point rather than reusing the Newton-side residual.
      double res = 0.0;
      for (std::size_t i = 0; i < n; ++i)
        res = std::max(res, std::abs(partials[i].evaluate(cp.point, q_value)));
      if (res < 1e-10) {
        cp.residual = res;
        cp.value = w.evaluate(cp.point, q_value);
        found.push_back(std::move(cp));
      }
    }
    std::size_t carry = 0;
    while (carry < n) {
      if (++idx[carry] < starts_1d.size()) break;
      idx[carry] = 0;
      ++carry;
    }
    if (carry == n) break;
  }

  std::sort(found.begin(), found.end(), lex_less);
  for (const auto& cp : found) {
    bool duplicate = false;
    for (const auto& kept : result.points) {
      double gap = 0.0;
      for (std::size_t i = 0; i < n; ++i)
        gap = std::max(gap, std::abs(cp.point[i] - kept.point[i]));
      if (gap < 1e-8) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) result.points.push_back(cp);
  }
  if (result.points.empty()) {
    result.warning = true;
    result.note = "no start converged";
  }
  return result;
}

}  // namespace syz
