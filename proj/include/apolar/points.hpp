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

#ifndef APOLAR_POINTS_HPP
#define APOLAR_POINTS_HPP

#include <array>
#include <mutex>
#include <optional>

#include "apolar/ideal_ops.hpp"

namespace apolar {

struct GenericityError : std::runtime_error {
  explicit GenericityError(const std::string& what) : std::runtime_error(what) {}
};

/// Deterministic 64-bit generator (splitmix64); identical streams on every
/// platform for reproducible reports.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next();
  /// Uniform integer in [lo, hi] by rejection.
  long uniform(long lo, long hi);
};

struct RandomConfig {
  std::uint64_t seed = 0;
  long coordinate_bound = 100;
  int max_retries = 20;
};

/// Projective plane point, scaled so the last nonzero coordinate is 1.
class ProjectivePoint {
 public:
  ProjectivePoint(FieldElement a, FieldElement b, FieldElement c);
  const FieldElement& operator[](int i) const { return c_[i]; }
  bool operator==(const ProjectivePoint& o) const { return c_ == o.c_; }
  bool operator!=(const ProjectivePoint& o) const { return !(*this == o); }
  std::string to_string() const;

 private:
  std::array<FieldElement, 3> c_;
};

/// Ideal of one point: the 2x2 minors pairing the coordinates against the
/// variables.
Ideal point_ideal(const RingPtr& ring, const ProjectivePoint& p);

/// Finite set of distinct plane points with its derived defining ideal.
class PointSet {
 public:
  PointSet(RingPtr ring, std::vector<ProjectivePoint> points);

  const RingPtr& ring() const { return ring_; }
  const std::vector<ProjectivePoint>& points() const { return pts_; }
  long size() const { return static_cast<long>(pts_.size()); }

  bool contains(const ProjectivePoint& p) const;

  /// Defining ideal: intersection of the member point ideals. Computed once
  /// and shared between copies; safe to request concurrently.
  const Ideal& ideal() const;

  PointSet without(std::size_t index) const;
  static PointSet united(const PointSet& a, const PointSet& b);      // deduplicated
  static PointSet intersection(const PointSet& a, const PointSet& b);

 private:
  struct IdealCache {
    std::once_flag once;
    std::optional<Ideal> value;
  };

  RingPtr ring_;
  std::vector<ProjectivePoint> pts_;
  mutable std::shared_ptr<IdealCache> ideal_cache_;
};

/// h(d) of a reduced point set as the rank of the evaluation matrix; no basis
/// computation involved.
long points_hilbert_at(const PointSet& ps, int d);

/// Generic Hilbert function min(dim S_d, n) out to stabilization.
std::vector<long> generic_point_hilbert(long n);

/// n distinct points with small integer coordinates whose Hilbert function
/// matches expected_h; resamples until it does or retries run out.
PointSet random_points(long n, const RingPtr& ring, const RandomConfig& cfg, Rng& rng,
                       const std::vector<long>& expected_h);

/// n distinct points (a^3, a*b^2, b^3) on the cuspidal cubic x*z^2 - y^3 = 0.
PointSet points_on_rational_cubic(long n, const RingPtr& ring, const RandomConfig& cfg, Rng& rng,
                                  const std::vector<long>& expected_h);

/// The linear form with the point's coordinates as coefficients.
Polynomial linear_form_of_point(const RingPtr& ring, const ProjectivePoint& p);

}  // namespace apolar

#endif  // APOLAR_POINTS_HPP
