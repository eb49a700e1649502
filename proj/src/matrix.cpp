/*
   Copyright 2026 The apolar authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "apolar/matrix.hpp"

#include <stdexcept>

namespace apolar {

ExactMatrix::ExactMatrix(const Field& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), a_(rows * cols, field.zero()) {}

ExactMatrix::ExactMatrix(const Field& field, std::size_t rows, std::size_t cols,
                         std::vector<FieldElement> entries)
    : field_(field), rows_(rows), cols_(cols), a_(std::move(entries)) {
  if (a_.size() != rows_ * cols_) throw std::invalid_argument("entry count must be rows*cols");
  for (const auto& e : a_) {
    if (e.field() != field_) throw FieldMismatchError("matrix entries from different fields");
  }
}

void ExactMatrix::set(std::size_t i, std::size_t j, FieldElement v) {
  if (v.field() != field_) throw FieldMismatchError("matrix entry from a different field");
  a_[i * cols_ + j] = std::move(v);
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
  return t;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_) return false;
  for (std::size_t k = 0; k < a_.size(); ++k)
    if (a_[k] != o.a_[k]) return false;
  return true;
}

namespace {

RrefResult finish_rref(ExactMatrix r, std::vector<std::size_t> pivot_cols, const Field& field) {
  const std::size_t cols = r.cols();
  const std::size_t rank = pivot_cols.size();
  std::vector<std::vector<FieldElement>> kernel;
  std::size_t next_pivot = 0;
  for (std::size_t col = 0; col < cols; ++col) {
    if (next_pivot < rank && pivot_cols[next_pivot] == col) {
      ++next_pivot;
      continue;
    }
    std::vector<FieldElement> v(cols, field.zero());
    v[col] = field.one();
    for (std::size_t i = 0; i < rank; ++i) v[pivot_cols[i]] = -r.at(i, col);
    kernel.push_back(std::move(v));
  }
  return RrefResult{std::move(r), rank, std::move(kernel), std::move(pivot_cols)};
}

// Integer-preserving elimination for the rationals: rows are cleared to
// integers, eliminations cross-multiply, and each updated row is divided by
// its content. Pivots are normalized to 1 only at the end; the reduced form
// is unique, so the output matches plain Gauss-Jordan exactly.
RrefResult rref_rational(const ExactMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  const Field& field = m.field();
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    mpz_class den = 1;
    for (std::size_t j = 0; j < cols; ++j)
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(),
              m.at(i, j).rational().get_den().get_mpz_t());
    for (std::size_t j = 0; j < cols; ++j) {
      const mpq_class& q = m.at(i, j).rational();
      a[i][j] = q.get_num() * (den / q.get_den());
    }
  }

  auto strip_content = [cols](std::vector<mpz_class>& row) {
    mpz_class g = 0;
    for (std::size_t j = 0; j < cols; ++j) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), row[j].get_mpz_t());
      if (g == 1) return;
    }
    if (g > 1)
      for (std::size_t j = 0; j < cols; ++j) row[j] /= g;
  };
  for (auto& row : a) strip_content(row);

  std::vector<std::size_t> pivot_cols;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < cols && lead < rows; ++col) {
    std::size_t piv = rows;
    std::size_t best_bits = 0;
    for (std::size_t i = lead; i < rows; ++i) {
      if (a[i][col] == 0) continue;
      std::size_t bits = mpz_sizeinbase(a[i][col].get_mpz_t(), 2);
      if (piv == rows || bits < best_bits) {
        piv = i;
        best_bits = bits;
      }
    }
    if (piv == rows) continue;
    std::swap(a[lead], a[piv]);
    const mpz_class p = a[lead][col];
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == lead || a[i][col] == 0) continue;
      mpz_class g = gcd(p, a[i][col]);
      mpz_class pf = p / g, vf = a[i][col] / g;
      for (std::size_t j = 0; j < cols; ++j) a[i][j] = pf * a[i][j] - vf * a[lead][j];
      strip_content(a[i]);
    }
    pivot_cols.push_back(col);
    ++lead;
  }

  ExactMatrix r(field, rows, cols);
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
    const mpz_class& p = a[i][pivot_cols[i]];
    for (std::size_t j = pivot_cols[i]; j < cols; ++j) {
      if (a[i][j] == 0) continue;
      mpq_class q(a[i][j], p);
      q.canonicalize();
      r.set(i, j, field.from_rational(q));
    }
  }
  return finish_rref(std::move(r), std::move(pivot_cols), field);
}

}  // namespace

RrefResult rref(const ExactMatrix& m) {
  if (m.field().is_rationals()) return rref_rational(m);
  ExactMatrix r = m;
  const std::size_t rows = r.rows(), cols = r.cols();
  std::vector<std::size_t> pivot_cols;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < cols && lead < rows; ++col) {
    std::size_t piv = lead;
    while (piv < rows && r.at(piv, col).is_zero()) ++piv;
    if (piv == rows) continue;
    if (piv != lead) {
      for (std::size_t j = 0; j < cols; ++j) {
        FieldElement tmp = r.at(lead, j);
        r.set(lead, j, r.at(piv, j));
        r.set(piv, j, tmp);
      }
    }
    FieldElement inv = r.at(lead, col).inverse();
    for (std::size_t j = col; j < cols; ++j) r.set(lead, j, r.at(lead, j) * inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == lead || r.at(i, col).is_zero()) continue;
      FieldElement f = r.at(i, col);
      for (std::size_t j = col; j < cols; ++j)
        r.set(i, j, r.at(i, j) - f * r.at(lead, j));
    }
    pivot_cols.push_back(col);
    ++lead;
  }
  return finish_rref(std::move(r), std::move(pivot_cols), m.field());
}

std::size_t matrix_rank(const ExactMatrix& m) { return rref(m).rank; }

std::optional<std::vector<FieldElement>> solve_linear(const ExactMatrix& a,
                                                      const std::vector<FieldElement>& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("rhs length must equal row count");
  const Field& field = a.field();
  ExactMatrix aug(field, a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug.set(i, j, a.at(i, j));
    aug.set(i, a.cols(), b[i]);
  }
  RrefResult r = rref(aug);
  for (std::size_t p : r.pivot_cols) {
    if (p == a.cols()) return std::nullopt;  // pivot in the rhs column: inconsistent
  }
  std::vector<FieldElement> x(a.cols(), field.zero());
  for (std::size_t i = 0; i < r.pivot_cols.size(); ++i)
    x[r.pivot_cols[i]] = r.matrix.at(i, a.cols());
  return x;
}

}  // namespace apolar
