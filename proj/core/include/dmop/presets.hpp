#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dmop/validate.hpp"

namespace dmop {

// The nine two-weight families with known admissible-parameter regions.
// The first five interlace their lattices (overlapping hulls); the last
// four separate them (disjoint hulls).
enum class Family {
  CharlierCharlier,
  CharlierMeixner,
  MeixnerSorokin,
  KravchukKravchuk,
  KravchukHahn1,
  CharlierKravchuk,
  MeixnerKravchuk,
  AngelescoKravchuk,
  KravchukHahn2,
};

struct ParamInfo {
  std::string name;
  Scalar default_value;
  bool integer = false;  // lattice lengths must be integers
};

struct FamilyInfo {
  Family family;
  std::string name;     // preset name, e.g. "kravchuk-hahn-1"
  std::string summary;  // one-line description for listings
  std::vector<ParamInfo> params;
};

const std::vector<FamilyInfo>& family_catalog();
const FamilyInfo& family_info(Family f);
std::optional<Family> family_by_name(std::string_view name);

using ParamMap = std::map<std::string, Scalar>;

struct FamilyCheck {
  ValidationReport report;
  // Absent only when the lattice shifts could not be assembled at all.
  std::optional<WeightSystem> system;
};

// Instantiates the preset with its defaults overridden by `params` and
// evaluates the family's full clause set, the shift admissibility, and the
// system-level regularity over the full finite horizon. Unknown parameter
// names and non-integer lattice lengths throw InvalidParameter; everything
// else lands in the report.
FamilyCheck check_family(Family f, const ParamMap& params);

}  // namespace dmop
