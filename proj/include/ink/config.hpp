#ifndef INK_CONFIG_HPP
#define INK_CONFIG_HPP

#include <string>

#include "ink/csm.hpp"
#include "ink/preprocess.hpp"
#include "ink/vdl.hpp"

namespace ink {

/// Flat key=value run configuration. Keys mirror the field names below;
/// unknown keys are errors. Angles are radians.
struct RunConfig {
  PreprocessConfig preprocess;
  double epsilon = kDefaultEpsilon;
  double rho = kDefaultOverlapPenalty;
  double tau_conn = 0.005;
  double band_fraction = kDefaultBandFraction;
  VdlWeights vdl_weights;
  bool convert_eoc = false;
  std::string exclude_path;

  void validate() const;
};

RunConfig parse_config_text(const std::string& text);
RunConfig load_config(const std::string& path);

}  // namespace ink

#endif
