#pragma once

// Registered facts about named knot types. Each entry is an external fact
// the toolkit cannot compute; consumers log it as an assumption.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cork::knotdb {

struct KnotFacts {
  std::string name;
  int seifert_genus = 0;
  int max_tb = 0;
  std::string source;  // where the fact comes from, in plain words
};

/// nullopt for unregistered names.
std::optional<KnotFacts> lookup(std::string_view name);

/// Throws PreconditionError for unregistered names.
const KnotFacts& require(std::string_view name);

std::vector<std::string> registered();

}  // namespace cork::knotdb
