#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "deltamat/core.hpp"
#include "deltamat/iso.hpp"

namespace deltamat {

/// Symmetric matrix over GF(2); row i is a bitmask over columns.
class Gf2SymMatrix {
 public:
  explicit Gf2SymMatrix(int n);

  /// Throws InputError if the rows are not symmetric or use columns >= n.
  static Gf2SymMatrix from_rows(std::vector<Mask> rows);

  int dimension() const { return static_cast<int>(rows_.size()); }
  bool get(int i, int j) const { return (rows_[i] >> j) & 1U; }
  void set(int i, int j, bool value);
  std::span<const Mask> rows() const { return rows_; }

  friend bool operator==(const Gf2SymMatrix&, const Gf2SymMatrix&) = default;

 private:
  std::vector<Mask> rows_;
};

int gf2_rank(const Gf2SymMatrix& m);
int gf2_rank(const Gf2SymMatrix& m, Mask selector);

/// D(A): feasible sets are the W with A[W] invertible.
DeltaMatroid matroid_from_matrix(const Gf2SymMatrix& a, int workers = 1);
DeltaMatroid matroid_from_matrix(const Gf2SymMatrix& a, std::vector<std::string> labels,
                                 int workers = 1);

/// The only matrix A that could satisfy D(A) = d, read off the singletons and
/// pairs of d. Not verified against larger sets. Throws PreconditionError if
/// d is not normal.
Gf2SymMatrix infer_matrix(const DeltaMatroid& d);

enum class BinaryMethod { Matrix, ExcludedMinor, Both };

struct MatrixWitness {
  Mask twist = 0;  // feasible F with d = D(matrix) * F
  Gf2SymMatrix matrix{0};
};

struct BinaryVerdict {
  bool binary = false;
  std::optional<MatrixWitness> matrix_witness;
  std::optional<ExcludedMinorWitness> minor_witness;
};

/// Both runs the two methods and throws ConsistencyError if they disagree.
BinaryVerdict is_binary(const DeltaMatroid& d, BinaryMethod method = BinaryMethod::Matrix);

}  // namespace deltamat
