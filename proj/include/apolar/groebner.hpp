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

#ifndef APOLAR_GROEBNER_HPP
#define APOLAR_GROEBNER_HPP

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "apolar/polynomial.hpp"

namespace apolar {

struct BudgetExceededError : std::runtime_error {
  explicit BudgetExceededError(const std::string& what) : std::runtime_error(what) {}
};

/// Cap on S-pairs processed per basis computation. 0 restores the default.
void set_spair_budget(long budget);
long spair_budget();

/// Homogeneous-capable ideal: a generator list plus lazily cached reduced
/// Groebner bases, one per monomial order. Handles are cheap to copy and
/// share the cache; cache access is internally synchronized.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial> gens);

  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const& { return d_->gens; }
  const std::vector<Polynomial>& generators() const&& = delete;
  bool has_generators() const { return !d_->gens.empty(); }

  /// Reduced basis with respect to ord: pairwise indivisible lead terms,
  /// fully reduced tails, monic, sorted ascending by lead monomial. The
  /// returned polynomials carry a ring tag with ord as comparison order.
  /// The reference lives as long as some handle to this ideal does.
  const std::vector<Polynomial>& groebner_basis(const MonomialOrder& ord) const&;
  const std::vector<Polynomial>& groebner_basis() const& { return groebner_basis(ring_->order); }
  const std::vector<Polynomial>& groebner_basis(const MonomialOrder&) const&& = delete;
  const std::vector<Polynomial>& groebner_basis() const&& = delete;

 private:
  struct Data {
    std::vector<Polynomial> gens;
    mutable std::map<std::pair<int, int>, std::vector<Polynomial>> cache;
    mutable std::mutex mutex;
  };

  RingPtr ring_;
  std::shared_ptr<Data> d_;
};

std::vector<Polynomial> buchberger(const RingPtr& ring, const std::vector<Polynomial>& gens,
                                   const MonomialOrder& ord, long budget = 0);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Full normal form of f modulo the basis (every term irreducible).
Polynomial reduce_full(const Polynomial& f, const std::vector<Polynomial>& basis);

Polynomial normal_form(const Polynomial& f, const Ideal& ideal,
                       const MonomialOrder& ord = MonomialOrder::degrevlex());

/// Ideal of the lead monomials of the reduced basis.
Ideal leading_ideal(const Ideal& ideal, const MonomialOrder& ord = MonomialOrder::degrevlex());

/// Intersection with the subring dropping the first k variables; the ideal's
/// ring must list the eliminated block first.
Ideal eliminate(const Ideal& ideal, int k);

bool contains(const Ideal& ideal, const Polynomial& f);
bool is_subset(const Ideal& inner, const Ideal& outer);
bool ideals_equal(const Ideal& a, const Ideal& b);
bool is_unit_ideal(const Ideal& ideal);

}  // namespace apolar

#endif  // APOLAR_GROEBNER_HPP
