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

#include "apolar/points.hpp"

#include <functional>

namespace apolar {

std::uint64_t Rng::next() {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

long Rng::uniform(long lo, long hi) {
  const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
  std::uint64_t v = next();
  while (v >= limit) v = next();
  return lo + static_cast<long>(v % range);
}

ProjectivePoint::ProjectivePoint(FieldElement a, FieldElement b, FieldElement c)
    : c_{std::move(a), std::move(b), std::move(c)} {
  int last = -1;
  for (int i = 2; i >= 0; --i) {
    if (!c_[i].is_zero()) {
      last = i;
      break;
    }
  }
  if (last < 0) throw std::invalid_argument("projective point needs a nonzero coordinate");
  FieldElement inv = c_[last].inverse();
  for (auto& v : c_) v *= inv;
}

std::string ProjectivePoint::to_string() const {
  return "(" + c_[0].to_string() + ":" + c_[1].to_string() + ":" + c_[2].to_string() + ")";
}

Ideal point_ideal(const RingPtr& ring, const ProjectivePoint& p) {
  std::vector<Polynomial> minors;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      Polynomial vi = Polynomial::variable(ring, i);
      Polynomial vj = Polynomial::variable(ring, j);
      minors.push_back(vi.scale(p[j]) - vj.scale(p[i]));
    }
  }
  return Ideal(ring, std::move(minors));
}

PointSet::PointSet(RingPtr ring, std::vector<ProjectivePoint> points)
    : ring_(std::move(ring)),
      pts_(std::move(points)),
      ideal_cache_(std::make_shared<IdealCache>()) {
  if (ring_->nvars() != 3) throw std::invalid_argument("point sets live in the ternary ring");
  for (std::size_t i = 0; i < pts_.size(); ++i)
    for (std::size_t j = i + 1; j < pts_.size(); ++j)
      if (pts_[i] == pts_[j]) throw std::invalid_argument("points must be pairwise distinct");
}

bool PointSet::contains(const ProjectivePoint& p) const {
  for (const auto& q : pts_)
    if (q == p) return true;
  return false;
}

const Ideal& PointSet::ideal() const {
  std::call_once(ideal_cache_->once, [this] {
    if (pts_.empty()) {
      ideal_cache_->value.emplace(Ideal::unit(ring_));
      return;
    }
    std::vector<Ideal> parts;
    parts.reserve(pts_.size());
    for (const auto& p : pts_) parts.push_back(point_ideal(ring_, p));
    while (parts.size() > 1) {
      std::vector<Ideal> next;
      for (std::size_t i = 0; i + 1 < parts.size(); i += 2)
        next.push_back(intersect_ideals(parts[i], parts[i + 1]));
      if (parts.size() % 2) next.push_back(parts.back());
      parts = std::move(next);
    }
    ideal_cache_->value.emplace(std::move(parts[0]));
  });
  return *ideal_cache_->value;
}

PointSet PointSet::without(std::size_t index) const {
  std::vector<ProjectivePoint> pts;
  for (std::size_t i = 0; i < pts_.size(); ++i)
    if (i != index) pts.push_back(pts_[i]);
  return PointSet(ring_, std::move(pts));
}

PointSet PointSet::united(const PointSet& a, const PointSet& b) {
  std::vector<ProjectivePoint> pts = a.pts_;
  for (const auto& p : b.pts_)
    if (!a.contains(p)) pts.push_back(p);
  return PointSet(a.ring_, std::move(pts));
}

PointSet PointSet::intersection(const PointSet& a, const PointSet& b) {
  std::vector<ProjectivePoint> pts;
  for (const auto& p : a.pts_)
    if (b.contains(p)) pts.push_back(p);
  return PointSet(a.ring_, std::move(pts));
}

long points_hilbert_at(const PointSet& ps, int d) {
  if (ps.size() == 0) return 0;
  const RingPtr& ring = ps.ring();
  std::vector<Monomial> basis = monomials_of_degree(3, d, ring->order);
  ExactMatrix eval(ring->field, ps.size(), basis.size());
  for (long i = 0; i < ps.size(); ++i) {
    const ProjectivePoint& p = ps.points()[i];
    for (std::size_t j = 0; j < basis.size(); ++j) {
      FieldElement v = ring->field.one();
      for (int k = 0; k < 3; ++k)
        for (int e = 0; e < basis[j].exponent(k); ++e) v *= p[k];
      eval.set(i, j, v);
    }
  }
  return static_cast<long>(matrix_rank(eval));
}

std::vector<long> generic_point_hilbert(long n) {
  std::vector<long> h;
  for (int d = 0;; ++d) {
    h.push_back(std::min(monomial_count(3, d), n));
    if (h.back() == n) {
      h.push_back(n);
      break;
    }
  }
  return h;
}

namespace {

bool matches_expected(const PointSet& ps, const std::vector<long>& expected_h) {
  for (std::size_t d = 0; d < expected_h.size(); ++d)
    if (points_hilbert_at(ps, static_cast<int>(d)) != expected_h[d]) return false;
  return true;
}

PointSet sample_until(long n, const RingPtr& ring, const RandomConfig& cfg, Rng& rng,
                      const std::vector<long>& expected_h,
                      const std::function<std::optional<ProjectivePoint>(Rng&)>& draw,
                      const char* what) {
  if (cfg.coordinate_bound < 1) throw std::invalid_argument("coordinate bound must be positive");
  for (int attempt = 0; attempt <= cfg.max_retries; ++attempt) {
    std::vector<ProjectivePoint> pts;
    int duds = 0;
    while (static_cast<long>(pts.size()) < n && duds < 1000) {
      std::optional<ProjectivePoint> p = draw(rng);
      if (!p) {
        ++duds;
        continue;
      }
      bool dup = false;
      for (const auto& q : pts)
        if (q == *p) dup = true;
      if (dup) {
        ++duds;
        continue;
      }
      pts.push_back(std::move(*p));
    }
    if (static_cast<long>(pts.size()) < n) continue;
    PointSet ps(ring, std::move(pts));
    if (expected_h.empty() || matches_expected(ps, expected_h)) return ps;
  }
  throw GenericityError(std::string(what) + ": no generic sample within " +
                        std::to_string(cfg.max_retries) + " retries");
}

}  // namespace

PointSet random_points(long n, const RingPtr& ring, const RandomConfig& cfg, Rng& rng,
                       const std::vector<long>& expected_h) {
  if (n < 1) throw std::invalid_argument("need at least one point");
  const Field& field = ring->field;
  auto draw = [&field, &cfg](Rng& r) -> std::optional<ProjectivePoint> {
    FieldElement a = field.from_int(r.uniform(-cfg.coordinate_bound, cfg.coordinate_bound));
    FieldElement b = field.from_int(r.uniform(-cfg.coordinate_bound, cfg.coordinate_bound));
    FieldElement c = field.from_int(r.uniform(-cfg.coordinate_bound, cfg.coordinate_bound));
    if (a.is_zero() && b.is_zero() && c.is_zero()) return std::nullopt;
    return ProjectivePoint(std::move(a), std::move(b), std::move(c));
  };
  return sample_until(n, ring, cfg, rng, expected_h, draw, "random points");
}

PointSet points_on_rational_cubic(long n, const RingPtr& ring, const RandomConfig& cfg, Rng& rng,
                                  const std::vector<long>& expected_h) {
  if (n < 1) throw std::invalid_argument("need at least one point");
  const Field& field = ring->field;
  auto draw = [&field, &cfg](Rng& r) -> std::optional<ProjectivePoint> {
    FieldElement a = field.from_int(r.uniform(-cfg.coordinate_bound, cfg.coordinate_bound));
    FieldElement b = field.from_int(r.uniform(-cfg.coordinate_bound, cfg.coordinate_bound));
    if (a.is_zero() && b.is_zero()) return std::nullopt;
    return ProjectivePoint(a * a * a, a * b * b, b * b * b);
  };
  return sample_until(n, ring, cfg, rng, expected_h, draw, "points on the rational cubic");
}

Polynomial linear_form_of_point(const RingPtr& ring, const ProjectivePoint& p) {
  Polynomial f = Polynomial::zero(ring);
  for (int i = 0; i < 3; ++i)
    f = f + Polynomial::variable(ring, i).scale(p[i]);
  return f;
}

}  // namespace apolar
