#include "cork/knotdb.hpp"

#include "cork/error.hpp"

#include <array>

namespace cork::knotdb {

namespace {

const std::array<KnotFacts, 2>& table() {
  static const std::array<KnotFacts, 2> facts{{
      {"unknot", 0, -1, "bounds a disk; maximal Legendrian unknot has tb = -1"},
      {"right-trefoil", 1, 1, "genus-1 Seifert surface; maximal Legendrian right trefoil has tb = 1"},
  }};
  return facts;
}

}  // namespace

std::optional<KnotFacts> lookup(std::string_view name) {
  for (const auto& k : table())
    if (k.name == name) return k;
  return std::nullopt;
}

const KnotFacts& require(std::string_view name) {
  for (const auto& k : table())
    if (k.name == name) return k;
  throw PreconditionError("unregistered knot type '" + std::string(name) + "'");
}

std::vector<std::string> registered() {
  std::vector<std::string> out;
  for (const auto& k : table()) out.push_back(k.name);
  return out;
}

}  // namespace cork::knotdb
