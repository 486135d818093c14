#include "deltamat/gf2.hpp"

#include <algorithm>

#include "deltamat/kernels.hpp"
#include "detail.hpp"

namespace deltamat {

Gf2SymMatrix::Gf2SymMatrix(int n) : rows_(n, 0) {
  if (n < 0 || n > kMaxElements) throw InputError("matrix dimension out of range");
}

Gf2SymMatrix Gf2SymMatrix::from_rows(std::vector<Mask> rows) {
  const int n = static_cast<int>(rows.size());
  Gf2SymMatrix m(n);
  for (int i = 0; i < n; ++i) {
    if ((rows[i] & ~full_mask(n)) != 0) throw InputError("matrix row uses columns beyond n");
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j) {
      if (((rows[i] >> j) & 1U) != ((rows[j] >> i) & 1U)) {
        throw InputError("matrix is not symmetric at (" + std::to_string(i) + "," +
                         std::to_string(j) + ")");
      }
    }
  }
  m.rows_ = std::move(rows);
  return m;
}

void Gf2SymMatrix::set(int i, int j, bool value) {
  if (value) {
    rows_[i] |= bit(j);
    rows_[j] |= bit(i);
  } else {
    rows_[i] &= ~bit(j);
    rows_[j] &= ~bit(i);
  }
}

int gf2_rank(const Gf2SymMatrix& m) { return gf2_rank(m, full_mask(m.dimension())); }

int gf2_rank(const Gf2SymMatrix& m, Mask selector) {
  if ((selector & ~full_mask(m.dimension())) != 0) throw InputError("selector outside matrix");
  return kernels::principal_rank(m.rows(), selector);
}

DeltaMatroid matroid_from_matrix(const Gf2SymMatrix& a, int workers) {
  return matroid_from_matrix(a, default_labels(a.dimension()), workers);
}

DeltaMatroid matroid_from_matrix(const Gf2SymMatrix& a, std::vector<std::string> labels,
                                 int workers) {
  if (static_cast<int>(labels.size()) != a.dimension()) {
    throw InputError("label count does not match matrix dimension");
  }
  auto family = workers == 1
                    ? kernels::invertible_principal_serial(a.rows(), a.dimension())
                    : kernels::invertible_principal_parallel(a.rows(), a.dimension(), workers);
  return detail::Trusted::make(SetSystem(std::move(labels), std::move(family)));
}

Gf2SymMatrix infer_matrix(const DeltaMatroid& d) {
  if (!is_normal(d)) throw PreconditionError("infer_matrix needs the empty set to be feasible");
  const int n = d.size();
  Gf2SymMatrix a(n);
  for (int v = 0; v < n; ++v) a.set(v, v, d.contains(bit(v)));
  for (int v = 0; v < n; ++v) {
    for (int w = v + 1; w < n; ++w) {
      // det [[a_vv, a_vw], [a_vw, a_ww]] = a_vv*a_ww + a_vw over GF(2)
      const bool product = a.get(v, v) && a.get(w, w);
      a.set(v, w, d.contains(bit(v) | bit(w)) != product);
    }
  }
  return a;
}

namespace {

std::optional<MatrixWitness> matrix_route(const DeltaMatroid& d) {
  for (Mask f : d.feasible()) {
    const DeltaMatroid normal = twist(d, f);
    Gf2SymMatrix a = infer_matrix(normal);
    const auto family = kernels::invertible_principal_serial(a.rows(), a.dimension());
    if (std::equal(family.begin(), family.end(), normal.feasible().begin(),
                   normal.feasible().end())) {
      return MatrixWitness{f, std::move(a)};
    }
  }
  return std::nullopt;
}

}  // namespace

BinaryVerdict is_binary(const DeltaMatroid& d, BinaryMethod method) {
  BinaryVerdict verdict;
  if (method != BinaryMethod::ExcludedMinor) {
    verdict.matrix_witness = matrix_route(d);
    verdict.binary = verdict.matrix_witness.has_value();
  }
  if (method != BinaryMethod::Matrix) {
    verdict.minor_witness = contains_excluded_minor(d);
    const bool by_minors = !verdict.minor_witness.has_value();
    if (method == BinaryMethod::Both && by_minors != verdict.binary) {
      throw ConsistencyError("matrix and excluded-minor binary tests disagree on a " +
                             std::to_string(d.size()) + "-element delta-matroid");
    }
    verdict.binary = by_minors;
  }
  return verdict;
}

}  // namespace deltamat
