#pragma once

// Check reports shared by every verification routine.

#include <string>
#include <vector>

#include <json.hpp>

#include "scalar.hpp"

namespace jgl {

using Json = nlohmann::ordered_json;

inline Json to_json(const Vector& v) {
  Json a = Json::array();
  for (const auto& s : v) a.push_back(s.to_string());
  return a;
}

struct Check {
  std::string name;
  bool pass = true;
  Json witness;  // null when absent
  Json details;  // null when absent

  Json to_json() const {
    Json j;
    j["name"] = name;
    j["status"] = pass ? "pass" : "fail";
    if (!witness.is_null()) j["witness"] = witness;
    if (!details.is_null()) j["details"] = details;
    return j;
  }
};

class Report {
 public:
  Report& add(Check c) {
    checks_.push_back(std::move(c));
    return *this;
  }
  Report& add(const std::string& name, bool pass, Json witness = nullptr, Json details = nullptr) {
    return add(Check{name, pass, std::move(witness), std::move(details)});
  }
  /// Appends other's checks, prefixing their names.
  Report& merge(const Report& other, const std::string& prefix = "") {
    for (auto c : other.checks_) {
      if (!prefix.empty()) c.name = prefix + "/" + c.name;
      checks_.push_back(std::move(c));
    }
    return *this;
  }

  bool passed() const {
    for (const auto& c : checks_) {
      if (!c.pass) return false;
    }
    return true;
  }
  const std::vector<Check>& checks() const { return checks_; }
  const Check* find(const std::string& name) const {
    for (const auto& c : checks_) {
      if (c.name == name) return &c;
    }
    return nullptr;
  }
  bool passed(const std::string& name) const {
    const Check* c = find(name);
    return c != nullptr && c->pass;
  }

  Json to_json() const {
    Json a = Json::array();
    for (const auto& c : checks_) a.push_back(c.to_json());
    Json j;
    j["checks"] = a;
    return j;
  }

 private:
  std::vector<Check> checks_;
};

}  // namespace jgl
