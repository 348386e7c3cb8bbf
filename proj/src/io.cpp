#include "elemvar/io.hpp"

#include "json.hpp"

namespace elemvar {

using ordered_json = nlohmann::ordered_json;

std::string sigma_string(const std::vector<size_t>& sigma) {
  std::string out;
  for (size_t s : sigma) out += (out.empty() ? "" : " ") + std::to_string(s + 1);
  return out;
}

std::string basis_string(const Matrix& basis) {
  std::string out;
  for (size_t j = 0; j < basis.cols(); ++j) {
    if (j) out += ";";
    for (size_t i = 0; i < basis.rows(); ++i) {
      if (i) out += ":";
      out += std::to_string(basis(i, j));
    }
  }
  return out;
}

std::string point_record(const ElementaryPoint& pt, const PointFlags& flags) {
  ordered_json rec;
  ordered_json sigma = ordered_json::array();
  for (size_t s : pt.plane.sigma) sigma.push_back(s + 1);
  rec["sigma"] = sigma;
  ordered_json basis = ordered_json::array();
  const Matrix& b = pt.plane.sub.basis();
  for (size_t i = 0; i < b.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (size_t j = 0; j < b.cols(); ++j) row.push_back(b(i, j));
    basis.push_back(row);
  }
  rec["basis_matrix"] = basis;
  ordered_json fl;
  if (flags.with_maximal) fl["maximal"] = flags.maximal;
  fl["certificate"] = to_string(flags.certificate);
  rec["flags"] = fl;
  return rec.dump();
}

std::string enumeration_header(const std::string& algebra, size_t r, uint32_t p,
                               const std::string& within) {
  ordered_json rec;
  rec["schema_version"] = kSchemaVersion;
  rec["kind"] = "elementary-enumeration";
  rec["algebra"] = algebra;
  rec["r"] = r;
  rec["p"] = p;
  rec["within"] = within.empty() ? "all" : within;
  return rec.dump();
}

std::string enumeration_footer(uint64_t count) {
  ordered_json rec;
  rec["count"] = count;
  return rec.dump();
}

void write_survey_csv(std::ostream& os, const RankSurvey& sv) {
  os << "# survey schema " << kSchemaVersion << "\n";
  os << "sigma,basis";
  for (size_t j = 1; j <= sv.jmax; ++j) os << ",rad_" << j;
  for (size_t j = 1; j <= sv.jmax; ++j) os << ",soc_" << j;
  os << ",free,free_rank,in_support,maximal\n";
  for (const RankProfile& prof : sv.profiles) {
    os << sigma_string(prof.point.plane.sigma) << "," << basis_string(prof.point.plane.sub.basis());
    for (size_t j = 0; j < sv.jmax; ++j) os << "," << prof.rad[j];
    for (size_t j = 0; j < sv.jmax; ++j) os << "," << prof.soc[j];
    os << "," << (prof.fr.free ? 1 : 0) << "," << prof.fr.rank << "," << (prof.support ? 1 : 0)
       << "," << (prof.maximal ? 1 : 0) << "\n";
  }
}

std::string survey_summary_json(const std::string& algebra, const std::string& module, size_t r,
                                uint32_t p, const RankSurvey& sv) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["algebra"] = algebra;
  j["module"] = module;
  j["r"] = r;
  j["p"] = p;
  j["points"] = sv.profiles.size();
  // observed over the enumerated rational points
  j["max"] = sv.max_rad;
  j["min"] = sv.min_soc;
  j["max_rad"] = sv.max_rad;
  j["min_rad"] = sv.min_rad;
  j["max_soc"] = sv.max_soc;
  j["min_soc"] = sv.min_soc;
  j["constant_rad"] = sv.constant_rad;
  j["constant_soc"] = sv.constant_soc;
  j["below_max_counts"] = sv.below_max_counts;
  j["above_min_counts"] = sv.above_min_counts;
  return j.dump();
}

}  // namespace elemvar
