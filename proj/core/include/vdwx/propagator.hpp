#pragma once

#include <array>
#include <complex>

#include "vdwx/errors.hpp"

namespace vdwx {

struct Vec3 {
  double x = 0, y = 0, z = 0;
};

using Mat3c = std::array<std::array<std::complex<double>, 3>, 3>;

// Which time-ordering branch of the field correlator the tensor represents.
// The conjugate branch is the elementwise complex conjugate of the direct one.
enum class PropagatorBranch { direct, conjugate };

// Retarded dipole field tensor at frequency omega and separation r:
//   D_ij = w^2 [ delta_ij (1 + i/x - 1/x^2)
//              + rhat_i rhat_j (3/x^2 - 3i/x - 1) ] e^{ix} / r,  x = |w| r.
// Even in omega. Reduces to the static dipole tensor (3 rhat rhat - 1)/r^3
// as omega -> 0. Throws ZeroSeparation at r = 0.
Mat3c dyadic(double omega, const Vec3& r,
             PropagatorBranch branch = PropagatorBranch::direct);

// Tr[ D(omega, R ez) D(omega, -R ez) ] / 9. The 1/9 carries the two
// orientation averages that otherwise live in the scalar responses, so
// pair-interaction integrands are this kernel times two polarizabilities.
// In the static limit the kernel tends to (2/3) / R^6.
std::complex<double> contracted_pair_kernel(double omega, double R);

}  // namespace vdwx
