#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sphsmooth/catalog.hpp"
#include "sphsmooth/spherical_data.hpp"

namespace sphsmooth {

struct FactorialityReport {
  bool pass = false;
  std::vector<IntVector> rays;  // primitive extremal ray generators of C
  std::string witness;          // empty on pass
};

struct ComponentOutcome {
  std::string summary;                  // root system and spherical roots of the component
  bool has_color = false;               // colorless components are exempt
  std::optional<MatchResult> match;     // first match
  std::vector<std::set<std::size_t>> markings;  // candidate marked sets, indices into the closure's sigma
};

struct Condition2Report {
  bool pass = false;
  std::set<std::size_t> s_f;          // flat vertex indices
  HomogeneousSphericalDatum localized;
  ClosureResult closure;
  std::vector<SystemPart> parts;
  std::vector<ComponentOutcome> components;
};

struct MarkedAssignment {
  std::size_t gamma;   // index into the closure's sigma
  IntVector gamma_m;   // M-coordinates
  std::size_t u;       // index into u_set
};

struct Condition3Report {
  bool pass = false;
  std::vector<IntVector> u_set;
  std::set<std::size_t> marked;  // closure sigma indices used for the verdict
  std::vector<MarkedAssignment> assignment;
  std::size_t markings_tried = 0;
  std::string witness;  // failure reason for the marking shown in `marked`
};

struct SmoothnessReport {
  bool verdict = false;
  FactorialityReport cond1;
  Condition2Report cond2;
  Condition3Report cond3;
  ValidationReport cone_findings;  // non-empty when (C, F) is not a colored cone
};

FactorialityReport check_condition1(const HomogeneousSphericalDatum& d, const ColoredCone& c);
Condition2Report check_condition2(const HomogeneousSphericalDatum& d, const ColoredCone& c);
/// Tries every candidate marking of the matched components; passes if one of them works.
Condition3Report check_condition3(const HomogeneousSphericalDatum& d, const ColoredCone& c,
                                  const Condition2Report& cond2);
/// Throws ValidationError for an invalid datum. Cone problems are reported in
/// `cone_findings` and force the verdict to false.
SmoothnessReport is_smooth(const HomogeneousSphericalDatum& d, const ColoredCone& c);

}  // namespace sphsmooth
