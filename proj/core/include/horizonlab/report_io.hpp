#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "horizonlab/profile.hpp"
#include "horizonlab/types.hpp"

namespace horizonlab {

// Fixed float formatting: 17 significant digits, locale-independent.
// Identical inputs serialize byte-identically.
std::string format_double(double value);

// Minimal insertion-ordered JSON writer; keys appear exactly in emission
// order so reports are reproducible byte for byte.
class JsonWriter {
 public:
  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array(const std::string& key = "");
  JsonWriter& end_array();
  JsonWriter& field(const std::string& key, const std::string& value);
  JsonWriter& field(const std::string& key, const char* value);
  JsonWriter& field(const std::string& key, double value);
  JsonWriter& field(const std::string& key, int value);
  JsonWriter& field(const std::string& key, bool value);
  JsonWriter& element(double value);
  JsonWriter& element(const std::string& value);
  JsonWriter& key(const std::string& name);  // for nested containers

  std::string str() const { return out_; }

 private:
  void comma();
  void write_escaped(const std::string& s);
  std::string out_;
  std::vector<bool> need_comma_;
  bool pending_key_ = false;
};

void write_inequality(JsonWriter& w, const InequalityReport& rep);

// Profile export: CSV columns (s, v, v_prime, V, E_radial).
void write_profile_csv(std::ostream& os, const WarpedProfile& profile);
// JSON header with (params, regime, a).
std::string profile_json_header(const WarpedProfile& profile);

}  // namespace horizonlab
