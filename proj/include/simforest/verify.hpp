#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "simforest/complex.hpp"
#include "simforest/forests.hpp"
#include "simforest/rng.hpp"

namespace simforest {

// One verified identity or property: its name, verdict, and either a short
// summary of what was checked or a counterexample description on failure.
struct IdentityReport {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  // Checked always: forest polynomial vs characteristic polynomial,
  // bi-directed polynomial along both routes, per-forest orientation
  // properties (signed sum = weight, orientation count >= weight, strip
  // sign law on every ordered orientation pair).
  // Checked when `extended` is set: weighted identities at seeded integer
  // points, the deleted-root determinant identity for every root, and
  // cancellation of raw signed orientation sums on sampled non-rooted pairs.
  bool extended = false;
  std::uint64_t seed = kDefaultSeed;
  int weighted_points = 3;
  int annihilation_samples = 100;
  EnumerationLimits limits;
};

// Runs the verification battery on one complex; one report per identity.
std::vector<IdentityReport> verify_identities(const Complex& g,
                                              const VerifyOptions& options);

bool all_pass(const std::vector<IdentityReport>& reports);

// Draws one full weight assignment from the stream: x for every ridge, y
// for every facet, w for every incident (ridge, facet) pair, all uniform in
// [1, 5].  The draw order (ridges, facets, then pairs row-major) is part of
// the deterministic contract of seeded runs.
WeightAssignment seeded_weight_assignment(const Complex& g, SplitMix64& rng);

}  // namespace simforest
