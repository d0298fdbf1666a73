#pragma once

// Bounded search for an unknotting sequence of Reidemeister moves on a
// signed Gauss code. Only crossing-reducing moves (R1, R2) and R3 are
// tried, so a negative outcome is never a proof of knottedness.

#include "cork/front.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cork::reidemeister {

using front::GaussCode;

enum class MoveKind { r1, r2, r3 };

struct Move {
  MoveKind kind;
  std::vector<int> crossings;  // labels in the code the move was applied to
  std::string to_string() const;
};

/// Faces of the planar 4-valent map encoded by the code; each face is the
/// list of edge indices on its boundary (edge k joins passage k to k+1).
std::vector<std::vector<int>> faces(const GaussCode& code);

/// All moves applicable to `code`, paired with the resulting codes.
std::vector<std::pair<Move, GaussCode>> neighbours(const GaussCode& code);

/// Relabelled, rotation-minimal form used for de-duplication.
GaussCode canonical(const GaussCode& code);

struct SearchResult {
  bool unknotted = false;
  std::vector<Move> moves;  // witness when unknotted
  std::size_t states_explored = 0;
  bool truncated = false;  // state cap reached before the budget was exhausted
};

/// Breadth-first search up to `budget` moves. The seed only permutes the
/// order in which moves are tried, which can change the witness but not
/// the verdict.
SearchResult search_unknot(const GaussCode& code, int budget, std::uint64_t seed = 0,
                           std::size_t state_cap = 200000);

}  // namespace cork::reidemeister
