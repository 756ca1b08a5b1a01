#pragma once

// Byte-stable serialization of sweep reports. Keys are sorted and the body
// carries no timestamps.

#include <filesystem>
#include <string>

#include "padic_hyper/verify.hpp"

namespace phyper {

enum class ReportFormat { kJson, kCsv };

/// Throws kInvalidArgument for anything but "json" / "csv".
ReportFormat parse_format(const std::string& name);

std::string render_report(const SweepReport& report, ReportFormat format);
/// Throws kIo.
void write_report(const SweepReport& report, const std::filesystem::path& path, ReportFormat format);

/// Compact JSON of a verdict's params map, sorted keys.
std::string params_json(const Verdict& v);

}  // namespace phyper
