#include "ivq/report.hpp"

#include <cstdint>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace ivq {

std::string input_digest(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

namespace {

using nlohmann::json;

json optional_count(const std::optional<std::size_t>& v) { return v ? json(*v) : json(nullptr); }

std::string emit_structured(const ReportDocument& d) {
  const AnalysisReport& r = d.report;
  json j;
  j["subject"] = d.subject;
  j["tool_version"] = d.tool_version;
  j["input_digest"] = d.input_digest;
  j["order"] = r.order;
  j["connected"] = r.connected;
  j["faithful"] = r.faithful;
  j["latin"] = r.latin;
  j["medial"] = r.medial;
  j["balanced"] = r.balanced;
  j["simple"] = r.simple;
  j["lmlt_order"] = optional_count(r.lmlt_order);
  j["dis_order"] = optional_count(r.dis_order);
  j["lmlt_derived_order"] = optional_count(r.lmlt_derived_order);
  j["orbit_count"] = r.orbit_count;
  j["cycle_lengths"] = r.cycle_lengths;
  return j.dump(2) + "\n";
}

std::string flag(bool b) { return b ? "true" : "false"; }
std::string count(const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : "unknown"; }

std::string emit_human(const ReportDocument& d) {
  const AnalysisReport& r = d.report;
  std::ostringstream out;
  out << "subject: " << d.subject << "\n";
  out << "order: " << r.order << "\n";
  out << "connected: " << flag(r.connected) << "\n";
  out << "faithful: " << flag(r.faithful) << "\n";
  out << "latin: " << flag(r.latin) << "\n";
  out << "medial: " << flag(r.medial) << "\n";
  out << "balanced: " << flag(r.balanced) << "\n";
  out << "simple: " << flag(r.simple) << "\n";
  out << "lmlt_order: " << count(r.lmlt_order) << "\n";
  out << "dis_order: " << count(r.dis_order) << "\n";
  out << "lmlt_derived_order: " << count(r.lmlt_derived_order) << "\n";
  out << "orbit_count: " << r.orbit_count << "\n";
  for (std::size_t e = 0; e < r.cycle_lengths.size(); ++e) {
    out << "cycle_lengths[" << e << "]:";
    for (auto l : r.cycle_lengths[e]) out << ' ' << l;
    out << "\n";
  }
  out << "tool_version: " << d.tool_version << "\n";
  out << "input_digest: " << d.input_digest << "\n";
  return out.str();
}

std::optional<std::size_t> read_count(const json& v) {
  if (v.is_null()) return std::nullopt;
  return v.get<std::size_t>();
}

ReportDocument parse_structured(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SyntaxError(1, e.byte, "invalid report JSON");
  }
  try {
    ReportDocument d;
    d.subject = j.at("subject").get<std::string>();
    d.tool_version = j.at("tool_version").get<std::string>();
    d.input_digest = j.at("input_digest").get<std::string>();
    AnalysisReport& r = d.report;
    r.order = j.at("order").get<std::size_t>();
    r.connected = j.at("connected").get<bool>();
    r.faithful = j.at("faithful").get<bool>();
    r.latin = j.at("latin").get<bool>();
    r.medial = j.at("medial").get<bool>();
    r.balanced = j.at("balanced").get<bool>();
    r.simple = j.at("simple").get<bool>();
    r.lmlt_order = read_count(j.at("lmlt_order"));
    r.dis_order = read_count(j.at("dis_order"));
    r.lmlt_derived_order = read_count(j.at("lmlt_derived_order"));
    r.orbit_count = j.at("orbit_count").get<std::size_t>();
    r.cycle_lengths = j.at("cycle_lengths").get<std::vector<std::vector<Element>>>();
    return d;
  } catch (const json::exception& e) {
    throw SyntaxError(1, 1, std::string("report field: ") + e.what());
  }
}

ReportDocument parse_human(std::string_view text) {
  ReportDocument d;
  AnalysisReport& r = d.report;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& what) -> void { throw SyntaxError(line_no, 1, what); };
  auto parse_bool = [&](const std::string& v) {
    if (v == "true") return true;
    if (v != "false") fail("expected true or false");
    return false;
  };
  auto parse_size = [&](const std::string& v) -> std::size_t {
    try {
      std::size_t used = 0;
      auto x = std::stoull(v, &used);
      if (used != v.size()) fail("bad number '" + v + "'");
      return x;
    } catch (const std::logic_error&) {
      fail("bad number '" + v + "'");
    }
    return 0;
  };
  auto parse_opt = [&](const std::string& v) -> std::optional<std::size_t> {
    if (v == "unknown") return std::nullopt;
    return parse_size(v);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) fail("expected 'key: value'");
    const std::string key = line.substr(0, colon);
    std::string value = line.substr(colon + 1);
    if (!value.empty() && value.front() == ' ') value.erase(0, 1);
    if (key == "subject") d.subject = value;
    else if (key == "tool_version") d.tool_version = value;
    else if (key == "input_digest") d.input_digest = value;
    else if (key == "order") r.order = parse_size(value);
    else if (key == "connected") r.connected = parse_bool(value);
    else if (key == "faithful") r.faithful = parse_bool(value);
    else if (key == "latin") r.latin = parse_bool(value);
    else if (key == "medial") r.medial = parse_bool(value);
    else if (key == "balanced") r.balanced = parse_bool(value);
    else if (key == "simple") r.simple = parse_bool(value);
    else if (key == "lmlt_order") r.lmlt_order = parse_opt(value);
    else if (key == "dis_order") r.dis_order = parse_opt(value);
    else if (key == "lmlt_derived_order") r.lmlt_derived_order = parse_opt(value);
    else if (key == "orbit_count") r.orbit_count = parse_size(value);
    else if (key.rfind("cycle_lengths[", 0) == 0) {
      std::vector<Element> lengths;
      std::istringstream vs(value);
      std::string tok;
      while (vs >> tok) lengths.push_back(static_cast<Element>(parse_size(tok)));
      r.cycle_lengths.push_back(std::move(lengths));
    } else {
      fail("unknown key '" + key + "'");
    }
  }
  return d;
}

}  // namespace

std::string emit_report(const ReportDocument& doc, ReportFormat format) {
  return format == ReportFormat::structured ? emit_structured(doc) : emit_human(doc);
}

ReportDocument parse_report(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_structured(text);
  return parse_human(text);
}

}  // namespace ivq
