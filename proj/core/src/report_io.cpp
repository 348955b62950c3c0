#include "horizonlab/report_io.hpp"

#include <cmath>
#include <cstdio>

namespace horizonlab {

std::string format_double(double value) {
  if (std::isnan(value)) return "null";
  if (std::isinf(value)) return value > 0 ? "1e999" : "-1e999";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

void JsonWriter::comma() {
  if (!need_comma_.empty() && need_comma_.back()) out_ += ",";
  if (!need_comma_.empty()) need_comma_.back() = true;
}

void JsonWriter::write_escaped(const std::string& s) {
  out_ += '"';
  for (char c : s) {
    switch (c) {
      case '"': out_ += "\\\""; break;
      case '\\': out_ += "\\\\"; break;
      case '\n': out_ += "\\n"; break;
      default: out_ += c;
    }
  }
  out_ += '"';
}

JsonWriter& JsonWriter::key(const std::string& name) {
  comma();
  write_escaped(name);
  out_ += ":";
  pending_key_ = true;
  return *this;
}

JsonWriter& JsonWriter::begin_object() {
  if (!pending_key_) comma();
  pending_key_ = false;
  out_ += "{";
  need_comma_.push_back(false);
  return *this;
}

JsonWriter& JsonWriter::end_object() {
  out_ += "}";
  need_comma_.pop_back();
  return *this;
}

JsonWriter& JsonWriter::begin_array(const std::string& k) {
  if (!k.empty()) key(k);
  if (!pending_key_) comma();
  pending_key_ = false;
  out_ += "[";
  need_comma_.push_back(false);
  return *this;
}

JsonWriter& JsonWriter::end_array() {
  out_ += "]";
  need_comma_.pop_back();
  return *this;
}

JsonWriter& JsonWriter::field(const std::string& k, const std::string& value) {
  key(k);
  pending_key_ = false;
  write_escaped(value);
  return *this;
}

JsonWriter& JsonWriter::field(const std::string& k, const char* value) {
  return field(k, std::string(value));
}

JsonWriter& JsonWriter::field(const std::string& k, double value) {
  key(k);
  pending_key_ = false;
  out_ += format_double(value);
  return *this;
}

JsonWriter& JsonWriter::field(const std::string& k, int value) {
  key(k);
  pending_key_ = false;
  out_ += std::to_string(value);
  return *this;
}

JsonWriter& JsonWriter::field(const std::string& k, bool value) {
  key(k);
  pending_key_ = false;
  out_ += value ? "true" : "false";
  return *this;
}

JsonWriter& JsonWriter::element(double value) {
  comma();
  out_ += format_double(value);
  return *this;
}

JsonWriter& JsonWriter::element(const std::string& value) {
  comma();
  write_escaped(value);
  return *this;
}

void write_inequality(JsonWriter& w, const InequalityReport& rep) {
  w.begin_object();
  w.field("name", rep.name);
  w.field("lhs", rep.lhs);
  w.field("rhs", rep.rhs);
  w.field("slack", rep.slack);
  w.field("saturated", rep.saturated);
  w.begin_array("flags");
  for (const auto& flag : rep.rigidity_flags) w.element(to_string(flag));
  w.end_array();
  w.end_object();
}

void write_profile_csv(std::ostream& os, const WarpedProfile& profile) {
  os << "s,v,v_prime,V,E_radial\n";
  for (double s : profile.grid()) {
    os << format_double(s) << "," << format_double(profile.radius(s)) << ","
       << format_double(profile.radius_deriv(s)) << "," << format_double(profile.potential(s))
       << "," << format_double(profile.e_radial(s)) << "\n";
  }
}

std::string profile_json_header(const WarpedProfile& profile) {
  JsonWriter w;
  w.begin_object();
  w.field("schema", "1");
  w.key("params").begin_object();
  w.field("m", profile.params().m);
  w.field("Q", profile.params().Q);
  w.field("lambda", profile.params().lambda);
  w.field("P", profile.params().P);
  w.end_object();
  w.field("regime", to_string(profile.regime().kind));
  w.field("kind", to_string(profile.kind()));
  w.field("a", profile.half_period());
  w.field("length", profile.length());
  w.field("periodic", profile.periodic());
  w.field("first_integral_drift", profile.first_integral_drift());
  w.end_object();
  return w.str();
}

}  // namespace horizonlab
