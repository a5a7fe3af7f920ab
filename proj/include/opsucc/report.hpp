#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace opsucc {

struct Check {
  std::string name;
  int arity = -1;
  long dim_left = -1;
  long dim_right = -1;
  bool pass = true;
  std::string detail;
};

struct Report {
  std::string command;
  nlohmann::json inputs = nlohmann::json::object();
  std::vector<Check> checks;

  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }

  Check& add(std::string name, bool ok, std::string detail = "") {
    checks.push_back({std::move(name), -1, -1, -1, ok, std::move(detail)});
    return checks.back();
  }

  void merge(const Report& o) {
    checks.insert(checks.end(), o.checks.begin(), o.checks.end());
  }

  nlohmann::json to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : checks) {
      nlohmann::json j{{"name", c.name}, {"pass", c.pass}};
      if (c.arity >= 0) j["arity"] = c.arity;
      if (c.dim_left >= 0) j["dimension_left"] = c.dim_left;
      if (c.dim_right >= 0) j["dimension_right"] = c.dim_right;
      if (!c.detail.empty()) j["detail"] = c.detail;
      arr.push_back(j);
    }
    return nlohmann::json{{"command", command},
                          {"inputs", inputs},
                          {"checks", arr},
                          {"pass", pass()}};
  }

  std::string to_text() const {
    std::string out;
    for (const auto& c : checks) {
      out += c.pass ? "pass  " : "FAIL  ";
      out += c.name;
      if (c.arity >= 0) out += "  [arity " + std::to_string(c.arity) + "]";
      if (c.dim_left >= 0 || c.dim_right >= 0)
        out += "  [dim " + std::to_string(c.dim_left) + " vs " +
               std::to_string(c.dim_right) + "]";
      if (!c.detail.empty()) out += "  -- " + c.detail;
      out += '\n';
    }
    return out;
  }
};

}  // namespace opsucc
