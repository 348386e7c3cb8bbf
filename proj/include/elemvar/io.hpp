#ifndef ELEMVAR_IO_HPP
#define ELEMVAR_IO_HPP

#include <ostream>
#include <string>

#include "elemvar/rankfn.hpp"

namespace elemvar {

constexpr int kSchemaVersion = 1;

struct PointFlags {
  bool maximal = false;
  bool with_maximal = false;
  PCertificate certificate = PCertificate::FullPlane;
};

/// One JSON-lines record per point: {"sigma":[...], "basis_matrix":[[...]],
/// "flags":{"maximal":..., "certificate":...}}. Row indices are 1-based.
std::string point_record(const ElementaryPoint& pt, const PointFlags& flags);

/// Leading meta record for a JSONL stream.
std::string enumeration_header(const std::string& algebra, size_t r, uint32_t p,
                               const std::string& within);
/// Trailing record carrying the count.
std::string enumeration_footer(uint64_t count);

/// CSV columns: sigma, basis, rad_1..rad_J, soc_1..soc_J, free, free_rank,
/// in_support, maximal. basis serializes columns as a:b:c joined by ';'.
void write_survey_csv(std::ostream& os, const RankSurvey& sv);

/// JSON summary with observed per-degree extrema and constancy flags.
std::string survey_summary_json(const std::string& algebra, const std::string& module, size_t r,
                                uint32_t p, const RankSurvey& sv);

std::string sigma_string(const std::vector<size_t>& sigma);
std::string basis_string(const Matrix& basis);

}  // namespace elemvar

#endif
