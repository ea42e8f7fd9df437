#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ginv/invariant.hpp"

namespace ginv {

inline constexpr const char* kSchemaVersion = "1";

/// Serialized form of a FieldReport. Mirrors the JSON layout one-to-one.
struct ReportDocument {
  struct ClassEntry {
    std::array<std::int64_t, 3> form{};
    bool principal = false;
    std::size_t conjugate = 0;
    std::optional<std::int64_t> prime;
    std::optional<std::string> case_code;
    std::optional<std::int64_t> n;
    std::optional<std::int64_t> C;
    std::optional<std::vector<std::int64_t>> E;
    std::optional<std::vector<std::int64_t>> F;
    std::optional<int> g_p;
    friend bool operator==(const ClassEntry&, const ClassEntry&) = default;
  };

  std::string schema_version = kSchemaVersion;
  std::int64_t d = 0;
  std::int64_t discriminant = 0;
  std::int64_t class_number = 0;
  int pythagoras = 0;
  int g = 0;
  std::string g_source;
  std::vector<ClassEntry> classes;
  std::vector<ClassExclusion> s_description;
  std::optional<double> elapsed_ms;

  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

inline ReportDocument make_document(const FieldReport& rep, std::optional<double> elapsed_ms = std::nullopt) {
  ReportDocument doc;
  doc.d = rep.fp.d;
  doc.discriminant = rep.fp.discriminant;
  doc.class_number = rep.class_number;
  doc.pythagoras = rep.pythagoras;
  doc.g = rep.g_d;
  doc.g_source = std::string(to_string(rep.g_source));
  for (const ClassRep& cr : rep.class_reps) {
    ReportDocument::ClassEntry e;
    e.form = {cr.form.a, cr.form.b, cr.form.c};
    e.principal = cr.is_principal;
    e.conjugate = cr.conjugate_partner_index;
    if (cr.p) {
      const PrimeReport& pr = rep.prime_reports.at(*cr.p);
      e.prime = *cr.p;
      e.case_code = std::string(to_string(pr.prime_case.code));
      e.n = pr.prime_case.n;
      e.C = pr.prime_case.C;
      e.E = pr.E;
      e.F = pr.F;
      e.g_p = pr.g;
    }
    doc.classes.push_back(std::move(e));
  }
  doc.s_description = rep.s_description;
  doc.elapsed_ms = elapsed_ms;
  return doc;
}

namespace detail {

template <typename T>
nlohmann::ordered_json opt_json(const std::optional<T>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

template <typename T>
std::optional<T> opt_get(const nlohmann::json& j, const char* key) {
  const auto& v = j.at(key);
  if (v.is_null()) return std::nullopt;
  return v.get<T>();
}

}  // namespace detail

inline nlohmann::ordered_json to_json(const ReportDocument& doc) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["schema_version"] = doc.schema_version;
  j["d"] = doc.d;
  j["discriminant"] = doc.discriminant;
  j["class_number"] = doc.class_number;
  j["pythagoras"] = doc.pythagoras;
  j["g"] = doc.g;
  j["g_source"] = doc.g_source;
  j["classes"] = ordered_json::array();
  for (const auto& c : doc.classes) {
    ordered_json e;
    e["form"] = c.form;
    e["principal"] = c.principal;
    e["conjugate"] = c.conjugate;
    e["prime"] = detail::opt_json(c.prime);
    e["case"] = detail::opt_json(c.case_code);
    e["n"] = detail::opt_json(c.n);
    e["C"] = detail::opt_json(c.C);
    e["E"] = detail::opt_json(c.E);
    e["F"] = detail::opt_json(c.F);
    e["g_p"] = detail::opt_json(c.g_p);
    j["classes"].push_back(std::move(e));
  }
  j["s_description"] = ordered_json::array();
  for (const auto& s : doc.s_description) {
    j["s_description"].push_back({{"class_index", s.class_index}, {"excluded_r", s.excluded_r}});
  }
  j["elapsed_ms"] = detail::opt_json(doc.elapsed_ms);
  return j;
}

/// Throws nlohmann::json exceptions on malformed input.
inline ReportDocument document_from_json(const nlohmann::json& j) {
  ReportDocument doc;
  doc.schema_version = j.at("schema_version").get<std::string>();
  doc.d = j.at("d").get<std::int64_t>();
  doc.discriminant = j.at("discriminant").get<std::int64_t>();
  doc.class_number = j.at("class_number").get<std::int64_t>();
  doc.pythagoras = j.at("pythagoras").get<int>();
  doc.g = j.at("g").get<int>();
  doc.g_source = j.at("g_source").get<std::string>();
  for (const auto& e : j.at("classes")) {
    ReportDocument::ClassEntry c;
    c.form = e.at("form").get<std::array<std::int64_t, 3>>();
    c.principal = e.at("principal").get<bool>();
    c.conjugate = e.at("conjugate").get<std::size_t>();
    c.prime = detail::opt_get<std::int64_t>(e, "prime");
    c.case_code = detail::opt_get<std::string>(e, "case");
    c.n = detail::opt_get<std::int64_t>(e, "n");
    c.C = detail::opt_get<std::int64_t>(e, "C");
    c.E = detail::opt_get<std::vector<std::int64_t>>(e, "E");
    c.F = detail::opt_get<std::vector<std::int64_t>>(e, "F");
    c.g_p = detail::opt_get<int>(e, "g_p");
    doc.classes.push_back(std::move(c));
  }
  for (const auto& s : j.at("s_description")) {
    doc.s_description.push_back(
        {s.at("class_index").get<std::size_t>(), s.at("excluded_r").get<std::vector<std::int64_t>>()});
  }
  doc.elapsed_ms = detail::opt_get<double>(j, "elapsed_ms");
  return doc;
}

// ---- survey CSV ----

inline constexpr const char* kSurveyHeader =
    "d,discriminant,class_number,g_d,g_source,primes,max_C,elapsed_ms,error";

struct SurveyRow {
  std::int64_t d = 0;
  std::optional<FieldReport> report;
  std::string error;  // error kind name when report is absent
  double elapsed_ms = 0;
};

inline std::string format_ms(double ms) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(3);
  os << ms;
  return os.str();
}

inline std::string to_csv(const SurveyRow& row) {
  std::ostringstream os;
  os << row.d << ',';
  if (!row.report) {
    const std::int64_t disc = row.d % 4 == 3 ? -row.d : -4 * row.d;
    os << disc << ",,,,,," << format_ms(row.elapsed_ms) << ',' << row.error;
    return os.str();
  }
  const FieldReport& r = *row.report;
  os << r.fp.discriminant << ',' << r.class_number << ',' << r.g_d << ',' << to_string(r.g_source) << ',';
  bool first = true;
  for (const auto& [p, pr] : r.prime_reports) {
    os << (first ? "" : ";") << p;
    first = false;
  }
  os << ',';
  if (!r.prime_reports.empty()) os << r.max_C();
  os << ',' << format_ms(row.elapsed_ms) << ',';
  return os.str();
}

}  // namespace ginv
