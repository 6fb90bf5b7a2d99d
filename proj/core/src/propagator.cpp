#include "vdwx/propagator.hpp"

#include <cmath>

namespace vdwx {

namespace {

using C = std::complex<double>;

// Scalar coefficients of the tensor: delta part A, added zz part along the
// separation axis so the on-axis tensor is diag(A, A, A + B) with
// A + B = 2/x^2 - 2i/x.
struct Coeffs {
  C a;
  C b;
  C scale;  // w^2 e^{ix} / r
};

Coeffs coeffs(double omega, double r) {
  const double x = std::abs(omega) * r;
  const double inv_x = 1.0 / x;
  const double inv_x2 = inv_x * inv_x;
  const C a(1.0 - inv_x2, inv_x);
  const C b(3.0 * inv_x2 - 1.0, -3.0 * inv_x);
  const C phase(std::cos(x), std::sin(x));
  return {a, b, (omega * omega / r) * phase};
}

}  // namespace

Mat3c dyadic(double omega, const Vec3& r, PropagatorBranch branch) {
  const double r2 = r.x * r.x + r.y * r.y + r.z * r.z;
  if (r2 == 0.0) throw ZeroSeparation();
  const double rn = std::sqrt(r2);
  const double u[3] = {r.x / rn, r.y / rn, r.z / rn};

  Mat3c d{};
  if (omega == 0.0) {
    // Static dipole tensor (3 rhat rhat - delta) / r^3.
    const double inv_r3 = 1.0 / (r2 * rn);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        d[i][j] = C((3.0 * u[i] * u[j] - (i == j ? 1.0 : 0.0)) * inv_r3, 0.0);
      }
    }
  } else {
    const Coeffs c = coeffs(omega, rn);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        C v = c.b * (u[i] * u[j]);
        if (i == j) v += c.a;
        d[i][j] = c.scale * v;
      }
    }
  }
  if (branch == PropagatorBranch::conjugate) {
    for (auto& row : d) {
      for (auto& v : row) v = std::conj(v);
    }
  }
  return d;
}

std::complex<double> contracted_pair_kernel(double omega, double R) {
  if (!(R > 0.0)) throw ZeroSeparation();
  if (omega == 0.0) return C((2.0 / 3.0) / std::pow(R, 6), 0.0);

  // Both tensors are diagonal for a separation along z and independent of the
  // sign of the direction, so the contraction is (2 A^2 + Czz^2) w^4 e^{2ix}
  // divided by R^2, with Czz = A + B.
  const Coeffs c = coeffs(omega, R);
  const C czz = c.a + c.b;
  const C tr = (2.0 * c.a * c.a + czz * czz) * (c.scale * c.scale);
  return tr / 9.0;
}

}  // namespace vdwx
