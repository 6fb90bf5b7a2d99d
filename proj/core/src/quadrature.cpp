#include "vdwx/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace vdwx {

namespace {

using C = std::complex<double>;

// Gauss-Kronrod 7/15 nodes and weights on [-1, 1], positive half. The Gauss
// subset sits at the odd Kronrod indices plus the midpoint.
constexpr double xgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double wgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double wg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Interval {
  double a = 0, b = 0;
  C value{};
  double err = 0;
};

// Larger error first; ties broken by position so refinement order is a pure
// function of the data.
struct WorseError {
  bool operator()(const Interval& p, const Interval& q) const {
    if (p.err != q.err) return p.err < q.err;
    if (p.a != q.a) return p.a > q.a;
    return p.b > q.b;
  }
};

}  // namespace

QuadratureReport integrate_adaptive(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    std::span<const double> seeds, const QuadratureOptions& opts) {
  if (!(b > a)) {
    if (a == b) return QuadratureReport{{0.0, 0.0}, 0.0, 0, true};
    throw std::invalid_argument("integration bounds out of order");
  }
  long evaluations = 0;

  auto rule = [&](double lo, double hi) {
    const double c = 0.5 * (lo + hi);
    const double h = 0.5 * (hi - lo);
    C kron{};
    C gauss{};
    for (int i = 0; i < 8; ++i) {
      const int reps = i == 7 ? 1 : 2;
      C sum{};
      for (int s = 0; s < reps; ++s) {
        const double t = s == 0 ? c - h * xgk[i] : c + h * xgk[i];
        const C v = f(t);
        ++evaluations;
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
          throw NonFiniteIntegrand(t);
        }
        sum += v;
      }
      kron += wgk[i] * sum;
      if (i == 7) {
        gauss += wg[3] * sum;
      } else if (i % 2 == 1) {
        gauss += wg[i / 2] * sum;
      }
    }
    Interval iv;
    iv.a = lo;
    iv.b = hi;
    iv.value = h * kron;
    iv.err = std::abs(h * (kron - gauss));
    return iv;
  };

  // Initial partition split at the interior seeds.
  std::vector<double> cuts;
  cuts.push_back(a);
  for (double s : seeds) {
    if (s > a && s < b) cuts.push_back(s);
  }
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<Interval> heap;
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    heap.push_back(rule(cuts[i], cuts[i + 1]));
  }
  std::make_heap(heap.begin(), heap.end(), WorseError{});

  auto totals = [&heap]() {
    std::vector<const Interval*> order;
    order.reserve(heap.size());
    for (const auto& iv : heap) order.push_back(&iv);
    std::sort(order.begin(), order.end(),
              [](const Interval* p, const Interval* q) { return p->a < q->a; });
    C value{};
    double err = 0;
    for (const Interval* iv : order) {
      value += iv->value;
      err += iv->err;
    }
    return std::pair<C, double>(value, err);
  };

  C total{};
  double total_err = 0;
  for (const auto& iv : heap) {
    total += iv.value;
    total_err += iv.err;
  }

  const int max_intervals = std::max<int>(opts.max_intervals, 2);
  bool converged = total_err <= opts.tol * std::max(1.0, std::abs(total));
  while (!converged && static_cast<int>(heap.size()) < max_intervals) {
    std::pop_heap(heap.begin(), heap.end(), WorseError{});
    const Interval worst = heap.back();
    heap.pop_back();

    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      // Interval at floating-point resolution; keep it as is and stop
      // refining it by treating its error as final.
      Interval pinned = worst;
      pinned.err = 0;
      total_err -= worst.err;
      heap.push_back(pinned);
      std::push_heap(heap.begin(), heap.end(), WorseError{});
      converged = total_err <= opts.tol * std::max(1.0, std::abs(total));
      continue;
    }

    const Interval left = rule(worst.a, mid);
    const Interval right = rule(mid, worst.b);
    total += left.value + right.value - worst.value;
    total_err += left.err + right.err - worst.err;
    heap.push_back(left);
    std::push_heap(heap.begin(), heap.end(), WorseError{});
    heap.push_back(right);
    std::push_heap(heap.begin(), heap.end(), WorseError{});

    converged = total_err <= opts.tol * std::max(1.0, std::abs(total));
  }

  // Final sums in position order, independent of refinement history.
  auto [value, err] = totals();
  QuadratureReport rep;
  rep.value = value;
  rep.abs_error_estimate = err;
  rep.evaluations = evaluations;
  rep.converged = err <= opts.tol * std::max(1.0, std::abs(value));
  return rep;
}

}  // namespace vdwx
