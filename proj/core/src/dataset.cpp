#include "vdwx/dataset.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>

#include "vdwx/halfspace.hpp"
#include "vdwx/media.hpp"
#include "vdwx/pair.hpp"
#include "vdwx/version.hpp"

namespace vdwx {

namespace {

constexpr double pi = std::numbers::pi;

std::string fmt9(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

// Runs eval over the grid, converting per-point domain failures into
// recorded skips instead of dropped rows.
template <typename F>
void sweep_points(const std::vector<double>& grid, SweepResult& out, F&& eval) {
  auto record = [&](double x, const char* what) {
    out.skipped.push_back(out.axis_name + "=" + fmt9(x) + ": " + what);
  };
  for (double x : grid) {
    try {
      SweepRow row;
      row.axis = x;
      eval(x, row);
      out.rows.push_back(std::move(row));
    } catch (const QuadratureNonConvergent& e) {
      record(x, e.what());
      out.nonconvergent = true;
    } catch (const NotApplicable& e) {
      record(x, e.what());
    } catch (const PoleOnAxis& e) {
      record(x, e.what());
    } catch (const ZeroSeparation& e) {
      record(x, e.what());
    } catch (const ValidationError& e) {
      record(x, e.what());
    }
  }
}

struct PointParams {
  TwoLevelAtom atom_a;
  TwoLevelAtom atom_b;
  double geometry;
  std::optional<MediumSpec> medium_a;
  std::optional<MediumSpec> medium_b;
};

PointParams at_point(const RunConfig& cfg, double x) {
  PointParams p{cfg.atom_a, cfg.atom_b, cfg.geometry, cfg.medium_a,
                cfg.medium_b};
  if (!cfg.sweep) return p;
  const std::string& axis = cfg.sweep->axis;
  if (axis == "geometry") {
    p.geometry = x;
  } else if (axis == "omega_a") {
    p.atom_a = TwoLevelAtom(x, cfg.atom_a.gamma(), cfg.atom_a.d2());
  } else if (axis == "omega_b") {
    p.atom_b = TwoLevelAtom(x, cfg.atom_b.gamma(), cfg.atom_b.d2());
  } else if (axis == "gamma_b") {
    p.atom_b = TwoLevelAtom(cfg.atom_b.omega(), x, cfg.atom_b.d2());
  } else if (axis == "temperature") {
    if (p.medium_a && p.medium_a->thermal) p.medium_a->temperature = x;
    if (p.medium_b && p.medium_b->thermal) p.medium_b->temperature = x;
  }
  return p;
}

}  // namespace

std::vector<double> axis_grid(const SweepSpec& spec) {
  std::vector<double> grid;
  grid.reserve(spec.points);
  const int n = spec.points - 1;
  if (spec.log_scale) {
    const double la = std::log(spec.min);
    const double lb = std::log(spec.max);
    for (int i = 0; i <= n; ++i) {
      grid.push_back(std::exp(la + (static_cast<double>(i) * (lb - la)) / n));
    }
    grid.front() = spec.min;
    grid.back() = spec.max;
  } else {
    for (int i = 0; i <= n; ++i) {
      grid.push_back(spec.min +
                     (static_cast<double>(i) * (spec.max - spec.min)) / n);
    }
  }
  return grid;
}

std::string flags_to_string(unsigned flags) {
  std::string out;
  auto append = [&](const char* name) {
    if (!out.empty()) out += ';';
    out += name;
  };
  if (flags & flag_degenerate_resonance) append("degenerate_resonance");
  if (flags & flag_far_zone_unvalidated) append("far_zone_unvalidated");
  if (flags & flag_extrapolated) append("extrapolated");
  return out;
}

SweepResult run_sweep(const RunConfig& cfg) {
  SweepResult out;
  out.axis_name = cfg.sweep ? cfg.sweep->axis : "geometry";
  out.metadata.emplace_back("version", version_string);
  out.metadata.emplace_back("problem", to_string(cfg.problem));
  out.metadata.emplace_back("config", serialize_config(cfg));

  std::vector<double> grid =
      cfg.sweep ? axis_grid(*cfg.sweep) : std::vector<double>{cfg.geometry};

  switch (cfg.problem) {
    case ProblemKind::pair: {
      out.value_names = {"shift", "half_width"};
      sweep_points(grid, out, [&](double x, SweepRow& row) {
        const PointParams p = at_point(cfg, x);
        const PairResult r = pair_closed_nearzone(
            {p.atom_a, cfg.state_a, p.atom_b, cfg.state_b}, p.geometry);
        row.values = {r.value.shift, r.value.half_width};
        row.flags = r.flags;
      });
      break;
    }
    case ProblemKind::surface: {
      const bool with_lifshitz =
          cfg.medium_b && !cfg.medium_b->thermal && cfg.medium_b->n_e == 0.0;
      out.value_names = {"u_qed"};
      if (with_lifshitz) out.value_names.push_back("u_lifshitz");
      sweep_points(grid, out, [&](double x, SweepRow& row) {
        const PointParams p = at_point(cfg, x);
        const MediumState medium = resolve_medium(p.atom_b, *p.medium_b);
        const SurfaceResult q =
            surface_potential_qed(p.atom_a, cfg.state_a, medium, p.geometry);
        row.values = {q.value};
        row.flags = q.flags;
        if (with_lifshitz) {
          const SurfaceResult l =
              surface_potential_lifshitz(p.atom_a, medium, p.geometry);
          row.values.push_back(l.value);
          row.flags |= l.flags;
        }
      });
      break;
    }
    case ProblemKind::media: {
      out.value_names = {"f_qed", "f_lifshitz"};
      sweep_points(grid, out, [&](double x, SweepRow& row) {
        const PointParams p = at_point(cfg, x);
        const MediaForce f =
            media_force(resolve_medium(p.atom_a, *p.medium_a),
                        resolve_medium(p.atom_b, *p.medium_b), p.geometry);
        row.values = {f.qed, f.lifshitz};
      });
      break;
    }
    case ProblemKind::lifshitz: {
      out.value_names = {"f_quadrature", "f_closed"};
      sweep_points(grid, out, [&](double x, SweepRow& row) {
        const PointParams p = at_point(cfg, x);
        const MediumState ma = resolve_medium(p.atom_a, *p.medium_a);
        const MediumState mb = resolve_medium(p.atom_b, *p.medium_b);
        row.values = {media_force_lifshitz_quadrature(ma, mb, p.geometry),
                      media_force(ma, mb, p.geometry).lifshitz};
      });
      break;
    }
  }
  return out;
}

SweepResult figure_dataset(const std::string& which,
                           const FigureOverrides& ov) {
  const bool media_fig =
      which == "4a" || which == "4b" || which == "5" || which == "6";
  const bool surface_fig = which == "7" || which == "7a" || which == "7b";
  if (!media_fig && !surface_fig) throw UnknownFigure(which);

  const double gamma_ratio = ov.gamma_ratio.value_or(0.02);
  if (!(gamma_ratio >= 0.0)) {
    throw SchemaError("gamma_ratio", "must be >= 0");
  }
  const int points = ov.points.value_or(1001);
  if (points < 2) throw SchemaError("points", "must be >= 2");

  const bool t_axis = which == "6";
  double min = ov.min.value_or(t_axis ? 1e-3 : 0.5);
  double max = ov.max.value_or(t_axis ? 1.0 : 1.5);
  if (!(min > 0.0)) throw SchemaError("min", "must be > 0");
  if (!(min < max)) throw SchemaError("min", "must be < max");

  SweepResult out;
  out.axis_name = t_axis ? "t_over_omega_b" : "omega_a_over_omega_b";
  out.metadata.emplace_back("version", version_string);
  out.metadata.emplace_back("figure", which);
  out.metadata.emplace_back("gamma_b_over_omega_b", fmt9(gamma_ratio));
  out.metadata.emplace_back(
      "parameters", media_fig ? "omega_b=1 d2_a=d2_b=1 n_a=n_b=1 L=1"
                              : "omega_b=1 d2_a=d2_b=1 n=1 z0=1");

  const SweepSpec grid_spec{out.axis_name, min, max, points, false};
  const std::vector<double> grid = axis_grid(grid_spec);
  const TwoLevelAtom species_b(1.0, gamma_ratio, 1.0);
  const double norm = pi / 9.0;

  if (media_fig) {
    const double t_fixed = which == "4a" ? 0.1 : which == "4b" ? 0.08 : 0.3;
    if (!t_axis) {
      out.metadata.emplace_back("t_over_omega_b", fmt9(t_fixed));
    } else {
      out.metadata.emplace_back("omega_a_over_omega_b", "0.9");
    }
    out.metadata.emplace_back(
        "normalization", "forces divided by (pi/9) d2_a d2_b n_a n_b / L^3");
    out.value_names = {"f_qed_norm", "f_lifshitz_norm"};
    sweep_points(grid, out, [&](double x, SweepRow& row) {
      const double omega_a = t_axis ? 0.9 : x;
      const double temperature = t_axis ? x : t_fixed;
      const TwoLevelAtom species_a(omega_a, 0.0, 1.0);
      const MediaForce f = media_force_thermal(species_a, 1.0, species_b, 1.0,
                                               temperature, 1.0);
      row.values = {f.qed / norm, f.lifshitz / norm};
    });
  } else {
    out.metadata.emplace_back(
        "normalization", "potentials divided by (pi/9) d2_a d2_b n / z0^3");
    out.metadata.emplace_back(
        "note",
        "near resonance the population-resolved peak exceeds the Lifshitz "
        "value by a factor of about 2 omega_b / gamma_b");
    const MediumState medium(species_b, 1.0, 0.0);
    const bool qed_col = which != "7b";
    const bool lif_col = which != "7a";
    if (qed_col) out.value_names.push_back("u_qed_norm");
    if (lif_col) out.value_names.push_back("u_lifshitz_norm");
    sweep_points(grid, out, [&](double x, SweepRow& row) {
      const TwoLevelAtom probe(x, 0.0, 1.0);
      if (qed_col) {
        const SurfaceResult q =
            surface_potential_qed(probe, AtomState::excited, medium, 1.0);
        row.values.push_back(q.value / norm);
        row.flags |= q.flags;
      }
      if (lif_col) {
        const SurfaceResult l = surface_potential_lifshitz(probe, medium, 1.0);
        row.values.push_back(l.value / norm);
        row.flags |= l.flags;
      }
    });
  }
  return out;
}

void write_csv(const SweepResult& result, std::ostream& out) {
  for (const auto& [key, value] : result.metadata) {
    out << "# " << key << ": " << value << "\n";
  }
  for (const auto& skip : result.skipped) {
    out << "# skipped: " << skip << "\n";
  }
  out << result.axis_name;
  for (const auto& name : result.value_names) out << "," << name;
  out << ",flags\n";
  for (const auto& row : result.rows) {
    out << fmt9(row.axis);
    for (double v : row.values) out << "," << fmt9(v);
    out << "," << flags_to_string(row.flags) << "\n";
  }
}

void write_json(const SweepResult& result, std::ostream& out) {
  nlohmann::ordered_json meta;
  for (const auto& [key, value] : result.metadata) meta[key] = value;
  meta["axis_name"] = result.axis_name;
  meta["columns"] = result.value_names;
  meta["skipped"] = result.skipped;
  meta["nonconvergent"] = result.nonconvergent;

  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : result.rows) {
    nlohmann::ordered_json r = nlohmann::ordered_json::array();
    r.push_back(row.axis);
    for (double v : row.values) r.push_back(v);
    r.push_back(flags_to_string(row.flags));
    rows.push_back(std::move(r));
  }

  nlohmann::ordered_json doc;
  doc["metadata"] = std::move(meta);
  doc["rows"] = std::move(rows);
  out << doc.dump(2) << "\n";
}

}  // namespace vdwx
