#include "focal/report.hpp"

#include <sstream>
#include <stdexcept>

namespace focal {

const char* eigen_class_name(EigenClass cls) {
  switch (cls) {
    case EigenClass::Negative: return "negative";
    case EigenClass::Null: return "null";
    case EigenClass::Positive: return "positive";
  }
  return "?";
}

namespace {

EigenClass eigen_class_from_name(const std::string& s) {
  if (s == "negative") return EigenClass::Negative;
  if (s == "null") return EigenClass::Null;
  if (s == "positive") return EigenClass::Positive;
  throw std::invalid_argument("unknown eigenvalue class: " + s);
}

FocalSpaceId space_from_name(const std::string& s) {
  if (s == "cp2") return FocalSpaceId::CP2;
  if (s == "hp2") return FocalSpaceId::HP2;
  if (s == "op2") return FocalSpaceId::OP2;
  throw std::invalid_argument("unknown space: " + s);
}

std::string levels_str(const DominantWeight& levels) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < levels.size(); ++i) os << (i ? "," : "") << levels[i];
  os << ")";
  return os.str();
}

}  // namespace

nlohmann::ordered_json report_to_json(const SpectrumReport& report) {
  const FocalSpace& space = focal_space(report.space);
  nlohmann::ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["space"] = focal_space_name(report.space);
  j["d"] = space.d;
  j["n"] = space.n;
  j["index"] = report.index;
  j["nullity"] = report.nullity;
  j["killing_nullity"] = report.killing_nullity;
  j["entries"] = nlohmann::ordered_json::array();
  for (const auto& e : report.entries) {
    nlohmann::ordered_json je;
    je["levels"] = e.levels;
    je["casimir"] = to_string(e.casimir);
    je["dim"] = e.dim;
    je["multiplicity"] = e.multiplicity;
    je["class"] = eigen_class_name(e.cls);
    j["entries"].push_back(std::move(je));
  }
  return j;
}

SpectrumReport report_from_json(const nlohmann::ordered_json& j) {
  if (j.at("schema_version").get<std::string>() != kReportSchemaVersion)
    throw std::invalid_argument("unsupported schema version");
  SpectrumReport r;
  r.space = space_from_name(j.at("space").get<std::string>());
  const FocalSpace& space = focal_space(r.space);
  r.index = j.at("index").get<long long>();
  r.nullity = j.at("nullity").get<long long>();
  r.killing_nullity = j.at("killing_nullity").get<long long>();
  r.expanded_consistency = true;
  for (const auto& je : j.at("entries")) {
    SpectrumEntry e;
    e.levels = je.at("levels").get<DominantWeight>();
    e.casimir = parse_rational(je.at("casimir").get<std::string>());
    e.jacobi_eigenvalue = e.casimir - Rat(2 * space.d);
    e.dim = je.at("dim").get<long long>();
    e.multiplicity = je.at("multiplicity").get<long long>();
    e.cls = eigen_class_from_name(je.at("class").get<std::string>());
    r.entries.push_back(std::move(e));
  }
  return r;
}

std::string report_to_text(const SpectrumReport& report) {
  const FocalSpace& space = focal_space(report.space);
  std::ostringstream os;
  os << focal_space_name(report.space) << "  (d = " << space.d << ", n = " << space.n
     << ")\n";
  os << "  levels          casimir    dim   mult  class\n";
  for (const auto& e : report.entries) {
    std::string lv = levels_str(e.levels);
    lv.resize(std::max<size_t>(lv.size(), 14), ' ');
    std::string c = to_string(e.casimir);
    c.resize(std::max<size_t>(c.size(), 9), ' ');
    os << "  " << lv << "  " << c << "  " << e.dim << "     " << e.multiplicity
       << "     " << eigen_class_name(e.cls) << "\n";
  }
  os << "  index = " << report.index << ", nullity = " << report.nullity
     << ", killing nullity = " << report.killing_nullity << "\n";
  return os.str();
}

}  // namespace focal
