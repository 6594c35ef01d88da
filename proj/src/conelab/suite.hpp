// Named-cone law batteries: for each supported cone family, runs the
// axiom suite, the order-law suite and (where a scale system is
// realizable) the neighborhood identity suite.

#pragma once

#include <string>
#include <vector>

#include "conelab/laws.hpp"
#include "conelab/topology.hpp"

namespace conelab {

struct ConeLawsOutcome {
  std::string cone;
  AxiomReport axioms;
  OrderLawReport order;
  NeighborhoodReport neighborhoods;  // empty for cones without scales
  bool pass = false;                 // everything above passed
};

// Cone names: extended-real, nonneg-extended-real, vector-<d> (1..8),
// function, two-point-pathology. Throws std::invalid_argument otherwise.
ConeLawsOutcome run_cone_laws(const std::string& cone,
                              std::uint64_t seed = 2026);

std::vector<std::string> known_cones();

std::string render_laws(const ConeLawsOutcome& outcome);

}  // namespace conelab
