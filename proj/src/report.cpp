#include "padic_hyper/report.hpp"

#include <fstream>

#include <json.hpp>

#include "padic_hyper/error.hpp"
#include "padic_hyper/version.hpp"

namespace phyper {
namespace {

using nlohmann::json;

json tally_json(const Tally& t) {
  return json{{"checked", t.checked}, {"passed", t.passed}, {"failed", t.failed}, {"skipped", t.skipped},
              {"p_lo", t.p_lo},       {"p_hi", t.p_hi}};
}

json verdict_json(const Verdict& v) {
  json j;
  j["identity"] = v.identity;
  j["p"] = v.p;
  j["params"] = v.params;
  j["lhs"] = v.lhs;
  j["rhs"] = v.rhs;
  j["equal"] = v.skipped() ? json(nullptr) : json(v.equal);
  j["precision"] = v.precision;
  j["skip"] = v.skip ? json(*v.skip) : json(nullptr);
  return j;
}

json report_json(const SweepReport& r) {
  const SweepConfig& c = r.config;
  json config;
  config["identity"] = c.identity;
  config["p_min"] = c.p_min;
  config["p_max"] = c.p_max;
  config["precision"] = c.precision;
  config["params"] = c.params.empty() ? json("all") : json(c.params);
  config["infinity_policy"] = c.infinity ? "fixed" : "calibrate";
  config["infinity_convention"] = r.infinity_convention;
  config["eisenstein_cap"] = c.eisenstein_cap;
  config["cache"] = c.context.cache_dir ? "enabled" : "disabled";

  json results = json::array();
  for (const auto& v : r.results) results.push_back(verdict_json(v));

  json summary = tally_json(r.totals);
  json by = json::object();
  for (const auto& [id, t] : r.by_identity) by[id] = tally_json(t);
  summary["by_identity"] = by;

  json out;
  out["identity"] = c.identity;
  out["config"] = config;
  out["results"] = results;
  out["summary"] = summary;
  out["meta"] = json{{"generator", "padic-hyper"}, {"version", kVersion}, {"format", 1}};
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string params_flat(const Verdict& v) {
  std::string out;
  for (const auto& [k, val] : v.params) {
    if (!out.empty()) out += ';';
    out += k + "=" + val;
  }
  return out;
}

}  // namespace

ReportFormat parse_format(const std::string& name) {
  if (name == "json") return ReportFormat::kJson;
  if (name == "csv") return ReportFormat::kCsv;
  fail(ErrorCode::kInvalidArgument, "unknown report format '" + name + "' (expected json or csv)");
}

std::string params_json(const Verdict& v) { return json(v.params).dump(); }

std::string render_report(const SweepReport& report, ReportFormat format) {
  if (format == ReportFormat::kJson) return report_json(report).dump(2) + "\n";
  std::string out = "identity,p,params,lhs,rhs,equal,precision,skip\n";
  for (const auto& v : report.results) {
    out += csv_field(v.identity) + "," + std::to_string(v.p) + "," + csv_field(params_flat(v)) + "," +
           csv_field(v.lhs) + "," + csv_field(v.rhs) + "," + (v.skipped() ? "" : (v.equal ? "true" : "false")) +
           "," + std::to_string(v.precision) + "," + csv_field(v.skip.value_or("")) + "\n";
  }
  return out;
}

void write_report(const SweepReport& report, const std::filesystem::path& path, ReportFormat format) {
  std::string body = render_report(report, format);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorCode::kIo, "cannot open '" + path.string() + "' for writing");
  out.write(body.data(), static_cast<std::streamsize>(body.size()));
  out.close();
  if (!out) fail(ErrorCode::kIo, "write to '" + path.string() + "' failed");
}

}  // namespace phyper
