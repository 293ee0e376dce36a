#pragma once

#include <optional>
#include <string>
#include <vector>

#include "matchcx/complex.hpp"
#include "matchcx/homology.hpp"

namespace matchcx {

/// matching:N | chess:MxN | board:PATH | diag:N | gamma:N,K | bboard:N,
/// optionally followed by ";skeleton=D" (or "+skeleton=D").
struct ComplexSpec {
  std::string scheme;
  std::vector<int> params;
  std::string path;  // board only
  std::optional<int> skeleton;

  static ComplexSpec parse(const std::string& text);
  std::string to_string() const;

  /// Connectivity degree where one is defined (matching, chess, diag, bboard).
  std::optional<int> nu() const;
  /// Faces up to max_dim, further cut by the skeleton modifier; max_dim < -1 means all.
  Complex build(int max_dim = -2) const;
};

enum class GoldenTier { Required, Stretch, Beyond, Unknown };

struct GoldenEntry {
  int m = 0;  // rows for chess; 0 for matching, -1 for diag
  int n = 0;
  std::string expected;  // HomologyGroup text; empty when unknown
  GoldenTier tier = GoldenTier::Required;

  std::string spec() const;
  int dim() const;
};

struct GoldenTable {
  std::string name;  // matching | chess | diag
  std::vector<GoldenEntry> entries;
};

const GoldenTable& golden_table(const std::string& name);
const std::vector<std::string>& golden_names();

}  // namespace matchcx
