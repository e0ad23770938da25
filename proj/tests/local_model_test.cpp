#include <doctest.h>

#include <cmath>

#include "syzkit/errors.hpp"
#include "syzkit/local_model.hpp"

using namespace syz;

namespace {

Polynomial constant_one() { return Polynomial::from_real({1}); }
Polynomial coordinate() { return Polynomial::from_real({0, 1}); }

}  // namespace

TEST_CASE("samples satisfy the defining equations") {
  LocalModelSample s = local_model_sample(0.1, constant_one(), 0.0, 0.3, 0.7, 1.1);
  CHECK_FALSE(s.singular);
  CHECK(s.constraint_residual < 1e-12);
  // the sample really sits on the prescribed slice
  CHECK(std::abs(s.v.real() - 0.0) < 1e-12);
  CHECK(std::abs((s.u * std::conj(s.z)).real() - 0.3) < 1e-12);
  // and on the hypersurface
  Cx lhs = s.z * s.z - (s.u * s.u - 0.1 * constant_one().eval(s.v));
  CHECK(std::abs(lhs) < 1e-12);
}

TEST_CASE("both forms vanish on the tangent basis") {
  LocalModelOptions opt;
  LocalModelReport r = local_model_check(0.1, constant_one(), 0.0, 0.3, opt);
  CHECK(r.samples.size() == 100);
  CHECK(r.singular_count == 0);
  CHECK(r.max_constraint_residual < 1e-8);
  CHECK(r.max_omega_residual < 1e-8);
  CHECK(r.max_im_omega_residual < 1e-8);
  CHECK(r.max_xi_tangency_residual < 1e-8);
  CHECK(r.max_xi_omega_residual < 1e-8);
  CHECK(r.max_xi_im_omega_identity < 1e-8);
  CHECK(r.max_involution_residual < 1e-8);
}

TEST_CASE("the singular fiber point is flagged at a root of q") {
  // with q = v, b = 0, the slice through y = 0 passes the node z = u = 0
  LocalModelSample s = local_model_sample(0.1, coordinate(), 0.0, 0.0, 0.0, 0.4);
  CHECK(s.singular);
  CHECK(std::abs(s.z) < 1e-12);
  CHECK(std::abs(s.u) < 1e-12);

  // away from the root the same slice is honest
  LocalModelSample t = local_model_sample(0.1, coordinate(), 0.0, 0.0, 0.5, 0.4);
  CHECK_FALSE(t.singular);
  CHECK(t.constraint_residual < 1e-12);
}

TEST_CASE("finite differences converge quadratically to the analytic basis") {
  LocalModelOptions opt;
  opt.samples = 5;
  opt.seed = 2;
  opt.fd_step = 0.1;
  LocalModelReport r = local_model_check(0.1, coordinate(), 0.3, 0.4, opt);
  CHECK(r.fd_residual > 1e-9);  // the genuine h^2 regime, not noise
  double ratio = r.fd_residual / r.fd_residual_half;
  CHECK(ratio > 3.4);
  CHECK(ratio < 4.6);
}

TEST_CASE("reports are deterministic per seed") {
  LocalModelOptions opt;
  opt.samples = 20;
  opt.seed = 7;
  LocalModelReport a = local_model_check(0.2, coordinate(), 0.1, 0.3, opt);
  LocalModelReport b = local_model_check(0.2, coordinate(), 0.1, 0.3, opt);
  REQUIRE(a.samples.size() == b.samples.size());
  for (std::size_t i = 0; i < a.samples.size(); ++i) {
    CHECK(a.samples[i].z == b.samples[i].z);
    CHECK(a.samples[i].u == b.samples[i].u);
    CHECK(a.samples[i].v == b.samples[i].v);
  }
  CHECK(a.max_omega_residual == b.max_omega_residual);

  opt.seed = 8;
  LocalModelReport c = local_model_check(0.2, coordinate(), 0.1, 0.3, opt);
  bool same = true;
  for (std::size_t i = 0; i < a.samples.size() && i < c.samples.size(); ++i) {
    same = same && a.samples[i].v == c.samples[i].v;
  }
  CHECK_FALSE(same);
}

TEST_CASE("parameter guards") {
  LocalModelOptions opt;
  CHECK_THROWS_AS(local_model_check(0.0, constant_one(), 0, 0.3, opt), Error);
  opt.samples = 0;
  CHECK_THROWS_AS(local_model_check(0.1, constant_one(), 0, 0.3, opt), Error);
  opt.samples = 10;
  opt.fd_step = 0.0;
  CHECK_THROWS_AS(local_model_check(0.1, constant_one(), 0, 0.3, opt), Error);
}
