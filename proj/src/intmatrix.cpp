#include "cork/intmatrix.hpp"

#include "cork/error.hpp"

#include <sstream>
#include <utility>

namespace cork {

namespace {

using BigRows = std::vector<std::vector<BigInt>>;

BigRows to_big(const IntMatrix& m) {
  BigRows out(static_cast<std::size_t>(m.rows()), std::vector<BigInt>(static_cast<std::size_t>(m.cols())));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

}  // namespace

IntMatrix identity_matrix(Eigen::Index n) { return IntMatrix::Identity(n, n); }

std::int64_t identity_defect(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw PreconditionError("identity_defect of a non-square matrix");
  std::int64_t defect = 0;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const std::int64_t d = m(i, j) - (i == j ? 1 : 0);
      defect += d < 0 ? -d : d;
    }
  return defect;
}

bool is_identity(const IntMatrix& m) { return m.rows() == m.cols() && identity_defect(m) == 0; }

BigInt determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw PreconditionError("determinant of a non-square matrix");
  const auto n = static_cast<std::size_t>(m.rows());
  if (n == 0) return 1;
  BigRows a = to_big(m);
  BigInt previous = 1;
  int swaps = 0;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && a[pivot][k] == 0) ++pivot;
      if (pivot == n) return 0;
      std::swap(a[k], a[pivot]);
      ++swaps;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / previous;
    previous = a[k][k];
  }
  BigInt det = a[n - 1][n - 1];
  return swaps % 2 ? BigInt(-det) : det;
}

std::int64_t AbelianGroup::order() const {
  if (free_rank > 0) return 0;
  std::int64_t order = 1;
  for (auto t : torsion) order *= t;
  return order;
}

std::string AbelianGroup::to_string() const {
  std::ostringstream out;
  bool first = true;
  auto sep = [&] {
    if (!first) out << " + ";
    first = false;
  };
  if (free_rank == 1) {
    sep();
    out << "Z";
  } else if (free_rank > 1) {
    sep();
    out << "Z^" << free_rank;
  }
  for (auto t : torsion) {
    sep();
    out << "Z/" << t;
  }
  if (first) out << "0";
  return out.str();
}

AbelianGroup SmithForm::cokernel() const {
  AbelianGroup group;
  group.free_rank = static_cast<int>(rows - rank());
  for (auto d : invariant_factors)
    if (d > 1) group.torsion.push_back(d);
  return group;
}

SmithForm smith_normal_form(const IntMatrix& m) {
  SmithForm result;
  result.rows = m.rows();
  result.cols = m.cols();
  BigRows a = to_big(m);
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (a[i][j] != 0 && (pr == rows || abs(a[i][j]) < abs(a[pr][pc]))) {
          pr = i;
          pc = j;
        }
    if (pr == rows) break;
    std::swap(a[t], a[pr]);
    for (auto& row : a) std::swap(row[t], row[pc]);

    bool clean = true;
    for (std::size_t i = t + 1; i < rows; ++i) {
      const BigInt q = a[i][t] / a[t][t];
      if (q != 0)
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
      if (a[i][t] != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < cols; ++j) {
      const BigInt q = a[t][j] / a[t][t];
      if (q != 0)
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
      if (a[t][j] != 0) clean = false;
    }
    if (!clean) continue;

    // The pivot must divide the rest of the block; otherwise fold an
    // offending row into row t and start over.
    bool divides = true;
    for (std::size_t i = t + 1; i < rows && divides; ++i)
      for (std::size_t j = t + 1; j < cols; ++j)
        if (a[i][j] % a[t][t] != 0) {
          for (std::size_t k = t; k < cols; ++k) a[t][k] += a[i][k];
          divides = false;
          break;
        }
    if (!divides) continue;

    BigInt d = abs(a[t][t]);
    result.invariant_factors.push_back(d.convert_to<std::int64_t>());
    ++t;
  }
  return result;
}

IntMatrix symplectic_form(int genus) {
  if (genus < 0) throw PreconditionError("negative genus");
  IntMatrix j = IntMatrix::Zero(2 * genus, 2 * genus);
  for (int i = 0; i < genus; ++i) {
    j(2 * i, 2 * i + 1) = 1;
    j(2 * i + 1, 2 * i) = -1;
  }
  return j;
}

bool is_symplectic(const IntMatrix& m) {
  if (m.rows() != m.cols() || m.rows() % 2 != 0) return false;
  const IntMatrix j = symplectic_form(static_cast<int>(m.rows() / 2));
  return m.transpose() * j * m == j;
}

IntMatrix symplectic_inverse(const IntMatrix& m) {
  const IntMatrix j = symplectic_form(static_cast<int>(m.rows() / 2));
  return -(j * m.transpose() * j);
}

std::string format_matrix(const IntMatrix& m) {
  std::ostringstream out;
  out << "[";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    out << (i ? ",[" : "[");
    for (Eigen::Index j = 0; j < m.cols(); ++j) out << (j ? "," : "") << m(i, j);
    out << "]";
  }
  out << "]";
  return out.str();
}

}  // namespace cork
