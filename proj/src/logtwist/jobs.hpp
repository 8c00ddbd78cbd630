#pragma once

// The command pipelines behind the CLI. Each returns a JSON document.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "logtwist/json_io.hpp"

namespace logtwist {

struct JobOptions {
  int max_contact = 10;
  std::optional<std::vector<int>> signs;
  std::optional<GraphInvolution> involution;
  std::uint64_t seed = 20240229;
  /// Number of random node placements used to confirm the spin h0.
  int placements = 5;
};

Json run_enumerate(const Fixture& f, const JobOptions& o);
Json run_monoid(const Fixture& f, const JobOptions& o);
Json run_spin(const Fixture& f, const JobOptions& o);
Json run_hyper(const Fixture& f, const JobOptions& o);
/// Everything that applies to the fixture, plus DOT text. Sections that do
/// not apply carry a "skipped" reason instead of failing the whole report.
Json run_report(const Fixture& f, const JobOptions& o);

}  // namespace logtwist
