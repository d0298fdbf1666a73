#pragma once

// Independent reimplementations used to freeze expected values. None of
// these call into the library beyond its value types.

#include "cork/intmatrix.hpp"
#include "cork/rational.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using cork::Rational;
using Pt = std::pair<Rational, Rational>;

struct TbTally {
  int writhe = 0;
  int cusps = 0;
  int tb() const { return writhe - cusps / 2; }
};

/// Closed polygon (first point repeated at the end), no handles.
TbTally tb_of_polygon(const std::vector<Pt>& closed);

/// Half the signed count of crossings between two closed polygons.
int linking_of_polygons(const std::vector<Pt>& a, const std::vector<Pt>& b);

/// Invariant factors from gcds of k x k minors (cofactor expansion).
std::vector<std::int64_t> invariant_factors(const cork::IntMatrix& m);

/// Order-independent description of Z^rows / image(m): free rank and torsion > 1.
std::pair<int, std::vector<std::int64_t>> cokernel(const cork::IntMatrix& m);

/// Action on H1 of the word (leftmost first), built column by column.
cork::IntMatrix twist_action(const std::vector<cork::IntVector>& curves, int genus);

/// <u, v> with <a_i, b_i> = 1.
std::int64_t intersection(const cork::IntVector& u, const cork::IntVector& v);

Rational degree_shift(const Rational& c1sq, const Rational& sigma, const Rational& chi);

/// Diagram document for a dotted lens and a 0-framed circle with n positive clasps.
std::string clasped_pair(int n);

/// The polygons of clasped_pair(n), dotted first.
std::pair<std::vector<Pt>, std::vector<Pt>> clasped_pair_polygons(int n);

}  // namespace oracle
