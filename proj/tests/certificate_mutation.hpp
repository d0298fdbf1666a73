#pragma once

// Enumerates single-integer edits of a certificate: every integer leaf and
// every integer-valued binding string.

#include "cork/certificate.hpp"

#include <functional>
#include <string>
#include <vector>

inline bool integer_text(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = s[0] == '-' ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

/// Calls `visit` with a copy of `cert` in which exactly one integer was changed.
inline std::size_t for_each_integer_mutation(const cork::certificate::Json& cert,
                                             const std::function<void(const cork::certificate::Json&, const std::string&)>& visit) {
  using Json = cork::certificate::Json;
  std::vector<Json::json_pointer> targets;
  std::function<void(const Json&, const Json::json_pointer&)> walk = [&](const Json& j, const Json::json_pointer& at) {
    if (j.is_object()) {
      for (const auto& [k, v] : j.items()) walk(v, at / k);
    } else if (j.is_array()) {
      for (std::size_t i = 0; i < j.size(); ++i) walk(j[i], at / i);
    } else if (j.is_number_integer() || (j.is_string() && integer_text(j.get<std::string>()))) {
      targets.push_back(at);
    }
  };
  walk(cert, Json::json_pointer());
  for (const auto& at : targets) {
    Json copy = cert;
    auto& leaf = copy[at];
    if (leaf.is_number_integer())
      leaf = leaf.get<long long>() + 1;
    else
      leaf = std::to_string(std::stoll(leaf.get<std::string>()) + 1);
    visit(copy, at.to_string());
  }
  return targets.size();
}
