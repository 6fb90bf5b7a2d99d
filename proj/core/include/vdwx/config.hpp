#pragma once

#include <optional>
#include <string>

#include "vdwx/atom.hpp"

namespace vdwx {

enum class ProblemKind { pair, surface, media, lifshitz };
enum class OutputFormat { csv, json };

// Medium populations, either given directly or resolved from a temperature
// at evaluation time (so temperature sweeps re-resolve per point).
struct MediumSpec {
  bool thermal = false;
  double n_g = 0.0;
  double n_e = 0.0;
  double n_total = 0.0;
  double temperature = 0.0;

  friend bool operator==(const MediumSpec&, const MediumSpec&) = default;
};

struct SweepSpec {
  std::string axis;  // geometry | omega_a | omega_b | gamma_b | temperature
  double min = 0.0;
  double max = 0.0;
  int points = 0;
  bool log_scale = false;

  friend bool operator==(const SweepSpec&, const SweepSpec&) = default;
};

// Fully resolved run description. Field applicability depends on `problem`:
// states for pair (state_a also for surface), media for surface (side b) and
// for media/lifshitz (both sides). geometry is R, z0 or L respectively.
struct RunConfig {
  ProblemKind problem;
  TwoLevelAtom atom_a;
  TwoLevelAtom atom_b;
  AtomState state_a = AtomState::ground;
  AtomState state_b = AtomState::ground;
  std::optional<MediumSpec> medium_a;
  std::optional<MediumSpec> medium_b;
  double geometry = 1.0;
  std::optional<SweepSpec> sweep;
  OutputFormat output = OutputFormat::csv;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

// Parses and validates a JSON config document. All keys lower_snake_case;
// unknown keys, keys inapplicable to the chosen problem, and out-of-range
// values are SchemaErrors carrying the offending key path. Malformed JSON is
// a ParseError. Defaults (output format, omitted n_e, sweep scale) are
// applied here so the returned config is fully explicit.
RunConfig parse_config(const std::string& text);

// Canonical JSON form of a config; parse_config(serialize_config(c)) == c.
std::string serialize_config(const RunConfig& config);

const char* to_string(ProblemKind p);
const char* to_string(OutputFormat f);

// Populations for one side of a problem, resolving thermal specs.
MediumState resolve_medium(const TwoLevelAtom& species, const MediumSpec& spec);

}  // namespace vdwx
