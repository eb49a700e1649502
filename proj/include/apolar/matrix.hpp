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

#ifndef APOLAR_MATRIX_HPP
#define APOLAR_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "apolar/field.hpp"

namespace apolar {

/// Dense matrix of exact field scalars, row major. All entries share one field.
class ExactMatrix {
 public:
  ExactMatrix(const Field& field, std::size_t rows, std::size_t cols);
  ExactMatrix(const Field& field, std::size_t rows, std::size_t cols,
              std::vector<FieldElement> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }

  const FieldElement& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, FieldElement v);

  ExactMatrix transpose() const;

  bool operator==(const ExactMatrix& o) const;

 private:
  Field field_;
  std::size_t rows_, cols_;
  std::vector<FieldElement> a_;
};

struct RrefResult {
  ExactMatrix matrix;  // reduced row echelon form
  std::size_t rank;
  /// Canonical kernel basis read off the RREF: one vector per free column in
  /// ascending column order, the free coordinate normalized to 1.
  std::vector<std::vector<FieldElement>> kernel;
  std::vector<std::size_t> pivot_cols;
};

RrefResult rref(const ExactMatrix& m);

std::size_t matrix_rank(const ExactMatrix& m);

/// Solves A x = b exactly. Returns the particular solution with all free
/// variables set to zero, or nothing if the system is inconsistent.
std::optional<std::vector<FieldElement>> solve_linear(const ExactMatrix& a,
                                                      const std::vector<FieldElement>& b);

}  // namespace apolar

#endif  // APOLAR_MATRIX_HPP
