#pragma once

#include <optional>
#include <string_view>

#include "majassign/bitset.hpp"
#include "majassign/majority.hpp"

namespace majassign {

enum class CoveringVariant { McKelvey, Bordes, Gillies };

inline constexpr CoveringVariant kCoveringVariants[] = {CoveringVariant::McKelvey, CoveringVariant::Bordes,
                                                        CoveringVariant::Gillies};

const char* to_string(CoveringVariant v);
/// Accepts "mckelvey", "bordes", "gillies" (case-insensitive).
std::optional<CoveringVariant> parse_covering_variant(std::string_view name);

/// mu covers lambda, checked by quantifying over every third assignment eta.
/// Bordes:   mu > lambda and (lambda > eta implies mu > eta).
/// Gillies:  mu > lambda and (eta > mu implies eta > lambda).
/// McKelvey: both.
bool covers(const MajorityMatrix& m, CoveringVariant v, AssignmentIndex mu, AssignmentIndex lambda);

/// Assignments covered by nobody, computed straight from covers(). Cubic; test oracle.
Bitset uncovered_set(const MajorityMatrix& m, CoveringVariant v);

/// Same set through the path characterization: mu survives iff every lambda
/// that beats it is answered by a path of length two whose strict segments
/// follow the variant. jobs <= 0 uses all cores.
Bitset uncovered_two_step(const MajorityMatrix& m, CoveringVariant v, int jobs = 1);

/// Whether mu is uncovered, by the path characterization.
bool is_uncovered(const MajorityMatrix& m, CoveringVariant v, AssignmentIndex mu);

}  // namespace majassign
