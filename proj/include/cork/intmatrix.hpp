#pragma once

#include "cork/rational.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <string>
#include <vector>

namespace cork {

/// Exact integer matrix. Entries stay small in every computation of this
/// toolkit (finite-order products, unimodular changes of basis).
using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

IntMatrix identity_matrix(Eigen::Index n);

/// Sum of |M - I| over all entries; zero iff M is the identity.
std::int64_t identity_defect(const IntMatrix& m);

bool is_identity(const IntMatrix& m);

/// Exact determinant (fraction-free Bareiss elimination).
BigInt determinant(const IntMatrix& m);

/// Finitely generated abelian group Z^free_rank + Z/t1 + ... + Z/tk with
/// t1 | t2 | ... | tk and every ti > 1.
struct AbelianGroup {
  int free_rank = 0;
  std::vector<std::int64_t> torsion;

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  /// Order of the group, or 0 when it is infinite.
  std::int64_t order() const;
  std::string to_string() const;
  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

struct SmithForm {
  /// Nonzero diagonal entries d1 | d2 | ... (positive, including 1s).
  std::vector<std::int64_t> invariant_factors;
  Eigen::Index rows = 0;
  Eigen::Index cols = 0;

  Eigen::Index rank() const { return static_cast<Eigen::Index>(invariant_factors.size()); }
  /// Z^rows / image(M).
  AbelianGroup cokernel() const;
  /// Rank of ker(M), a free group.
  Eigen::Index kernel_rank() const { return cols - rank(); }
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Standard symplectic form on Z^{2g} in the basis (a1, b1, ..., ag, bg)
/// with <a_i, b_i> = +1.
IntMatrix symplectic_form(int genus);

/// M^T J M == J.
bool is_symplectic(const IntMatrix& m);

/// Inverse of a symplectic matrix: -J M^T J.
IntMatrix symplectic_inverse(const IntMatrix& m);

std::string format_matrix(const IntMatrix& m);

}  // namespace cork
