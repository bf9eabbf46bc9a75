#pragma once

#include <string>

#include <json.hpp>

#include "focal/jacobi.hpp"

namespace focal {

inline constexpr const char* kReportSchemaVersion = "1";

const char* eigen_class_name(EigenClass cls);

/// Machine-readable spectrum record, schema version "1". Rationals are
/// reduced "p/q" strings, entry order is the report order, so serialization
/// is deterministic.
nlohmann::ordered_json report_to_json(const SpectrumReport& report);

/// Parses a serialized record back into a report (lossless round trip).
SpectrumReport report_from_json(const nlohmann::ordered_json& j);

/// Table rendering of the same content.
std::string report_to_text(const SpectrumReport& report);

}  // namespace focal
