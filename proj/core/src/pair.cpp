#include "vdwx/pair.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "pair_detail.hpp"
#include "vdwx/propagator.hpp"
#include "vdwx/response.hpp"

namespace vdwx {

namespace {

using C = std::complex<double>;
constexpr C imag_unit{0.0, 1.0};

void require_separation(double R) {
  if (!(R > 0.0)) {
    throw ValidationError(ValidationError::Code::non_positive_distance,
                          "separation must be > 0");
  }
}

// Quadrature routes need atom B's poles off the real axis, and realize the
// vanishing probe width as a small imaginary part tied to gamma_b.
TwoLevelAtom regularized_probe(const PairConfiguration& pc) {
  if (pc.atom_b.gamma() == 0.0) throw PoleOnAxis(pc.atom_b.omega());
  return TwoLevelAtom(pc.atom_a.omega(),
                      probe_width_scale * pc.atom_b.gamma(), pc.atom_a.d2());
}

PairResult from_complex_shift(C w, unsigned flags) {
  PairResult out;
  out.value.shift = w.real();
  out.value.half_width = -w.imag();
  out.flags = flags;
  return out;
}

}  // namespace

PairResult pair_closed_nearzone(const PairConfiguration& pc, double R) {
  require_separation(R);
  const auto k =
      detail::closed_pair_coeffs(pc.atom_a, pc.state_a, pc.atom_b, pc.state_b);
  PairResult out;
  if (k.degenerate) {
    out.flags = flag_degenerate_resonance;
    return out;
  }
  const double inv_r6 = 1.0 / std::pow(R, 6);
  out.value.shift = k.shift_over_r6 * inv_r6;
  out.value.half_width = k.width_over_r6 * inv_r6;
  return out;
}

PairResult pair_quadrature_nearzone(const PairConfiguration& pc, double R,
                                    const QuadratureOptions& opts) {
  require_separation(R);
  const TwoLevelAtom probe = regularized_probe(pc);

  auto f = [&](double w) -> C {
    return polarizability(probe, pc.state_a, ResponseKind::coherent, w) *
           polarizability(pc.atom_b, pc.state_b, ResponseKind::coherent, w);
  };

  const double wmax = std::max(pc.atom_a.omega(), pc.atom_b.omega());
  const double cutoff = 1e4 * wmax;
  const double seeds[] = {-pc.atom_a.omega(), -pc.atom_b.omega(),
                          pc.atom_b.omega(), pc.atom_a.omega()};
  const auto rep = integrate_adaptive(f, -cutoff, cutoff, seeds, opts);
  if (!rep.converged) {
    throw QuadratureNonConvergent(rep.value, rep.abs_error_estimate,
                                  rep.evaluations);
  }

  // The product of two polarizabilities falls off as 1/w^4; append the
  // analytic tails beyond the cutoff, coefficient taken at the cutoff.
  const C tail =
      (std::pow(cutoff, 4) * (f(cutoff) + f(-cutoff))) / (3.0 * std::pow(cutoff, 3));

  // Static interaction kernel Tr[D D] = 6 / R^6 in the near zone.
  const C w = imag_unit / (4.0 * std::numbers::pi) * (6.0 / std::pow(R, 6)) *
              (rep.value + tail);
  return from_complex_shift(w, 0);
}

PairResult pair_spectral_general(const PairConfiguration& pc, double R,
                                 double eta, const QuadratureOptions& opts) {
  require_separation(R);
  const double wmin = std::min(pc.atom_a.omega(), pc.atom_b.omega());
  const double wmax = std::max(pc.atom_a.omega(), pc.atom_b.omega());
  if (!(eta > 0.0) || eta > 0.1 * wmin) {
    throw RegulatorTooLarge(eta, 0.1 * wmin);
  }
  const TwoLevelAtom probe = regularized_probe(pc);

  // Full retarded kernel; the integrand is even in frequency, so integrate
  // the positive half axis and double. The exponential regulator suppresses
  // the oscillatory large-frequency behavior.
  auto f = [&](double w) -> C {
    const C alpha =
        polarizability(probe, pc.state_a, ResponseKind::coherent, w) *
        polarizability(pc.atom_b, pc.state_b, ResponseKind::coherent, w);
    return alpha * (9.0 * contracted_pair_kernel(w, R)) * std::exp(-eta * w);
  };

  const double cutoff = 45.0 / eta + 10.0 * wmax;
  const double seeds[] = {pc.atom_b.omega(), pc.atom_a.omega()};
  const auto rep = integrate_adaptive(f, 0.0, cutoff, seeds, opts);
  if (!rep.converged) {
    throw QuadratureNonConvergent(rep.value, rep.abs_error_estimate,
                                  rep.evaluations);
  }

  const C w = imag_unit / (4.0 * std::numbers::pi) * 2.0 * rep.value;
  unsigned flags = 0;
  if (R * wmax > 1e-2) flags |= flag_far_zone_unvalidated;
  return from_complex_shift(w, flags);
}

PairResult pair_spectral_extrapolated(const PairConfiguration& pc, double R,
                                      std::span<const double> etas,
                                      const QuadratureOptions& opts) {
  std::vector<double> ladder(etas.begin(), etas.end());
  if (ladder.empty()) {
    const double g = pc.atom_b.gamma();
    if (g == 0.0) throw PoleOnAxis(pc.atom_b.omega());
    ladder = {0.1 * g, 0.05 * g, 0.025 * g};
  }
  std::sort(ladder.begin(), ladder.end(), std::greater<>());

  unsigned flags = 0;
  std::vector<C> values;
  values.reserve(ladder.size());
  for (double eta : ladder) {
    const PairResult r = pair_spectral_general(pc, R, eta, opts);
    flags |= r.flags;
    values.push_back(C(r.value.shift, -r.value.half_width));
  }

  // Neville extrapolation of the eta ladder to eta = 0; the regulated value
  // converges linearly in eta, higher columns clean up the higher orders.
  const size_t n = values.size();
  for (size_t k = 1; k < n; ++k) {
    for (size_t j = 0; j + k < n; ++j) {
      const double xj = ladder[j];
      const double xjk = ladder[j + k];
      values[j] = (xjk * values[j] - xj * values[j + 1]) / (xjk - xj);
    }
  }
  return from_complex_shift(values[0], flags | flag_extrapolated);
}

}  // namespace vdwx
