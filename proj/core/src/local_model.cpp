#include "syzkit/local_model.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include "syzkit/errors.hpp"

namespace syz {

namespace {

using Vec6 = std::array<double, 6>;  // (Re z, Im z, Re u, Im u, Re v, Im v)

Cx slot(const Vec6& x, int s) { return Cx(x[2 * s], x[2 * s + 1]); }

double omega0(const Vec6& a, const Vec6& b) {
  double t = 0.0;
  for (int s = 0; s < 3; ++s) t += std::imag(std::conj(slot(a, s)) * slot(b, s));
  return t;
}

// (du ^ dv)(a, b); the holomorphic form divides this by z.
Cx du_dv(const Vec6& a, const Vec6& b) {
  return slot(a, 1) * slot(b, 2) - slot(b, 1) * slot(a, 2);
}

// Four real constraint rows linearized at (z, u, v): the complex defining
// equation of Y contributes two, the slice conditions one each.
std::array<Vec6, 4> jacobian(double eps, const Polynomial& q, Cx z, Cx u, Cx v) {
  const Cx cz = 2.0 * z, cu = -2.0 * u, cv = eps * q.derivative().eval(v);
  std::array<Vec6, 4> m{};
  m[0] = {cz.real(), -cz.imag(), cu.real(), -cu.imag(), cv.real(), -cv.imag()};
  m[1] = {cz.imag(), cz.real(), cu.imag(), cu.real(), cv.imag(), cv.real()};
  m[2] = {0, 0, 0, 0, 1, 0};
  m[3] = {u.real(), u.imag(), z.real(), z.imag(), 0, 0};
  return m;
}

std::vector<Vec6> kernel_basis(std::array<Vec6, 4> m) {
  double scale = 0.0;
  for (const auto& row : m)
    for (double x : row) scale = std::max(scale, std::abs(x));
  const double tol = 1e-10 * (1.0 + scale);

  int pivot_col[4] = {0, 0, 0, 0};
  int rank = 0;
  for (int col = 0; col < 6 && rank < 4; ++col) {
    int p = -1;
    double best = tol;
    for (int r = rank; r < 4; ++r)
      if (std::abs(m[r][col]) > best) {
        best = std::abs(m[r][col]);
        p = r;
      }
    if (p < 0) continue;
    std::swap(m[p], m[rank]);
    const double inv = 1.0 / m[rank][col];
    for (int c = 0; c < 6; ++c) m[rank][c] *= inv;
    for (int r = 0; r < 4; ++r) {
      if (r == rank) continue;
      const double f = m[r][col];
      if (f == 0.0) continue;
      for (int c = 0; c < 6; ++c) m[r][c] -= f * m[rank][c];
    }
    pivot_col[rank] = col;
    ++rank;
  }

  bool is_pivot[6] = {};
  for (int r = 0; r < rank; ++r) is_pivot[pivot_col[r]] = true;
  std::vector<Vec6> basis;
  for (int col = 0; col < 6; ++col) {
    if (is_pivot[col]) continue;
    Vec6 x{};
    x[col] = 1.0;
    for (int r = 0; r < rank; ++r) x[pivot_col[r]] = -m[r][col];
    basis.push_back(x);
  }

  // Gram-Schmidt for numerically stable form evaluation.
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      double d = 0.0;
      for (int c = 0; c < 6; ++c) d += basis[i][c] * basis[j][c];
      for (int c = 0; c < 6; ++c) basis[i][c] -= d * basis[j][c];
    }
    double n = 0.0;
    for (int c = 0; c < 6; ++c) n += basis[i][c] * basis[i][c];
    n = std::sqrt(n);
    if (n > 0.0)
      for (int c = 0; c < 6; ++c) basis[i][c] /= n;
  }
  return basis;
}

Vec6 as_vec(const LocalModelSample& s) {
  return {s.z.real(), s.z.imag(), s.u.real(), s.u.imag(), s.v.real(), s.v.imag()};
}

// Residual of the two forms on a central-difference basis of the explicit
// parametrization (y, theta) -> (z, u, v) at step h.
double fd_residual_at(double eps, const Polynomial& q, double a, double b, double y,
                      double theta, double h) {
  auto point = [&](double yy, double tt) {
    return as_vec(local_model_sample(eps, q, a, b, yy, tt));
  };
  const Vec6 center = point(y, theta);
  const Vec6 yp = point(y + h, theta), ym = point(y - h, theta);
  const Vec6 tp = point(y, theta + h), tm = point(y, theta - h);
  Vec6 x1{}, x2{};
  for (int c = 0; c < 6; ++c) {
    x1[c] = (yp[c] - ym[c]) / (2.0 * h);
    x2[c] = (tp[c] - tm[c]) / (2.0 * h);
  }
  const Cx z = slot(center, 0);
  return std::max(std::abs(omega0(x1, x2)), std::abs(std::imag(du_dv(x1, x2) / z)));
}

}  // namespace

LocalModelSample local_model_sample(double eps, const Polynomial& q, double a,
                                    double b, double y, double theta) {
  LocalModelSample out;
  const Cx v(a, y);
  const Cx prod = eps * q.eval(v);  // s t, with s = u + z and t = u - z
  const double sigma = 2.0 * b + std::sqrt(4.0 * b * b + std::norm(prod));
  const Cx s = std::sqrt(sigma) * std::polar(1.0, theta);
  const Cx t = sigma > 0.0 ? prod / s : Cx(0.0);
  out.z = 0.5 * (s - t);
  out.u = 0.5 * (s + t);
  out.v = v;
  out.singular = std::abs(out.z) < 1e-10 && std::abs(out.u) < 1e-10;
  out.constraint_residual = std::max(
      {std::abs(out.z * out.z - out.u * out.u + eps * q.eval(v)),
       std::abs(v.real() - a), std::abs((out.u * std::conj(out.z)).real() - b)});
  return out;
}

LocalModelReport local_model_check(double eps, const Polynomial& q, double a, double b,
                                   const LocalModelOptions& options) {
  if (eps == 0.0) fail(ErrorKind::Domain, "eps must be nonzero");
  if (options.samples < 1) fail(ErrorKind::Domain, "sample count must be positive");
  if (!(options.fd_step > 0)) fail(ErrorKind::Domain, "finite-difference step must be positive");

  LocalModelReport rep;
  rep.eps = eps;
  rep.a = a;
  rep.b = b;
  rep.fd_step = options.fd_step;

  std::mt19937_64 rng(options.seed);
  auto uniform = [&] { return (rng() >> 11) * 0x1.0p-53; };

  bool fd_done = false;
  for (int i = 0; i < options.samples; ++i) {
    const double y = 2.0 * uniform() - 1.0;
    const double theta = 2.0 * std::numbers::pi * uniform();
    LocalModelSample s = local_model_sample(eps, q, a, b, y, theta);
    rep.max_constraint_residual =
        std::max(rep.max_constraint_residual, s.constraint_residual);
    rep.max_involution_residual = std::max(
        rep.max_involution_residual,
        std::abs((s.u * std::conj(-s.z)).real() + b));

    if (s.singular) {
      ++rep.singular_count;
      rep.samples.push_back(s);
      continue;
    }

    const auto rows = jacobian(eps, q, s.z, s.u, s.v);
    const auto basis = kernel_basis(rows);
    if (basis.size() != 2) {
      s.degenerate = true;
      ++rep.degenerate_count;
      rep.samples.push_back(s);
      continue;
    }

    s.omega_residual = std::abs(omega0(basis[0], basis[1]));
    s.im_omega_residual = std::abs(std::imag(du_dv(basis[0], basis[1]) / s.z));
    rep.max_omega_residual = std::max(rep.max_omega_residual, s.omega_residual);
    rep.max_im_omega_residual =
        std::max(rep.max_im_omega_residual, s.im_omega_residual);

    const Vec6 xi = {-s.u.imag(), s.u.real(), -s.z.imag(), s.z.real(), 0, 0};
    for (const auto& row : rows) {
      double dot = 0.0;
      for (int c = 0; c < 6; ++c) dot += row[c] * xi[c];
      rep.max_xi_tangency_residual =
          std::max(rep.max_xi_tangency_residual, std::abs(dot));
    }
    for (const auto& x : basis) {
      rep.max_xi_omega_residual =
          std::max(rep.max_xi_omega_residual, std::abs(omega0(xi, x)));
      rep.max_xi_im_omega_identity =
          std::max(rep.max_xi_im_omega_identity,
                   std::abs(std::imag(du_dv(xi, x) / s.z) - x[4]));
    }

    if (!fd_done) {
      rep.fd_residual = fd_residual_at(eps, q, a, b, y, theta, options.fd_step);
      rep.fd_residual_half =
          fd_residual_at(eps, q, a, b, y, theta, options.fd_step / 2.0);
      fd_done = true;
    }
    rep.samples.push_back(s);
  }
  return rep;
}

}  // namespace syz
