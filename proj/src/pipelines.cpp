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

#include "apolar/pipelines.hpp"

#include <sstream>

namespace apolar {

namespace {

const std::vector<long> kExpected22 = {1, 3, 6, 10, 15, 21, 22, 22, 22, 22, 22};
const std::vector<long> kExpectedA25 = {1, 3, 6, 10, 15, 21, 25, 25};
const std::vector<long> kExpected27 = {1, 3, 6, 10, 15, 21, 26, 27, 27, 27, 27};
const std::vector<long> kExpectedCi77 = {1, 3, 6, 10, 15, 21, 28, 34, 39, 43, 46, 48, 49};
const std::vector<long> kExpectedRes22 = {1, 3, 6, 10, 15, 20, 22, 22, 22, 22, 22};
const std::vector<long> kRow22General = {1, 3, 6, 10, 15, 21, 22, 22, 22, 22, 22, 22, 22, 22, 22};
const std::vector<long> kRow22Quintic = {1, 3, 6, 10, 15, 20, 22, 22, 22, 22, 22, 22, 22, 22, 22};

const std::vector<long> kUnion44 = {1, 2, 3, 4, 5, 6, 7, 6, 4, 3, 2, 1};

const std::vector<long> kExpected12 = {1, 3, 6, 9, 12, 12};
const std::vector<long> kExpectedCi67 = {1, 3, 6, 10, 15, 21, 27, 32, 36, 39, 41, 42, 42, 42};
const std::vector<long> kExpectedZ1 = {1, 3, 6, 10, 15, 21, 27, 29, 30, 30, 30, 30, 30, 30};
const std::vector<long> kExpectedCi610 = {1, 3, 6, 10, 15, 21, 27, 33, 39, 45, 50, 54, 57, 59, 60};
const std::vector<long> kExpectedZ2 = {1, 3, 6, 10, 15, 21, 26, 30, 30, 30, 30, 30, 30, 30};
const std::vector<long> kRowZ1 = {1, 3, 6, 10, 15, 21, 27, 29, 30, 30, 30, 30, 30, 30, 30};
const std::vector<long> kRowZ2 = {1, 3, 6, 10, 15, 21, 26, 30, 30, 30, 30, 30, 30, 30, 30};

struct Runner {
  PipelineReport report;
  std::string current;

  void stage(const std::string& name) { current = name; }

  void expect(bool ok, const std::string& what) {
    if (!ok) throw GenericityError(current + ": " + what);
  }

  StageRecord& record(const std::string& name) {
    StageRecord r;
    r.name = name;
    report.stages.push_back(std::move(r));
    return report.stages.back();
  }

  void record_ideal(const std::string& name, const Ideal& ideal, int hf_degree, long degree) {
    StageRecord& r = record(name);
    r.ring = ideal.ring()->to_string();
    for (const auto& g : ideal.groebner_basis(MonomialOrder::degrevlex()))
      r.ideal.push_back(g.with_order(ideal.ring()).to_string());
    if (hf_degree >= 0) {
      r.hilbert = hilbert_function(ideal, hf_degree);
      HilbertProfile::from_hilbert(r.hilbert);  // recorded rows must be admissible
    }
    r.degree = degree;
  }
};

void check_pipeline_field(const Field& field, int degree) {
  if (field.characteristic() != 0 && static_cast<long>(field.characteristic()) <= degree)
    throw std::invalid_argument("field characteristic must exceed " + std::to_string(degree));
}

}  // namespace

PipelineReport run_example2(const RandomConfig& cfg, const Field& field) {
  check_pipeline_field(field, 13);
  RingPtr s = ternary_ring(field);
  Rng rng(cfg.seed);

  std::string failed_stage = "points-on-cubic";
  std::string failure = "not attempted";
  for (int attempt = 0; attempt <= cfg.max_retries; ++attempt) {
    Runner run;
    run.report.example = "example2";
    run.report.field = field.to_string();
    run.report.seed = cfg.seed;
    run.report.attempts = attempt + 1;
    try {
      run.stage("points-on-cubic");
      PointSet a = points_on_rational_cubic(12, s, cfg, rng, kExpected12);
      const Ideal& ia = a.ideal();
      HilbertProfile pa = point_profile(ia);
      run.expect(pa.length() == 12 && hilbert_function(ia, 5) == kExpected12,
                 "twelve cubic points with the wrong Hilbert function");
      run.record_ideal("points-on-cubic", ia, 5, pa.length());
      run.report.stages.back().extra["points"] = [&a] {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& p : a.points())
          arr.push_back({p[0].to_string(), p[1].to_string(), p[2].to_string()});
        return arr;
      }();

      run.stage("ci-6-7");
      Ideal ix = ci_through(ia, 6, 7, cfg, rng);
      run.expect(hilbert_function(ix, 13) == kExpectedCi67,
                 "complete intersection of type (6,7) with the wrong Hilbert function");
      run.record_ideal("ci-6-7", ix, 13, 42);

      run.stage("residue-first");
      LinkOptions first_link;
      Ideal iz1 = link(ix, ia, first_link);
      run.expect(hilbert_function(iz1, 13) == kExpectedZ1,
                 "first residue with the wrong Hilbert function");
      HilbertProfile pz1 = point_profile(iz1);
      run.record_ideal("residue-first", iz1, 13, pz1.length());

      run.stage("ci-6-10");
      Ideal iy = ci_through(iz1, 6, 10, cfg, rng);
      run.expect(hilbert_function(iy, 14) == kExpectedCi610,
                 "complete intersection of type (6,10) with the wrong Hilbert function");
      run.record_ideal("ci-6-10", iy, 14, 60);

      run.stage("residue-second");
      LinkOptions second_link;
      second_link.check_disjoint = true;
      Ideal iz2 = link(iy, iz1, second_link);
      run.expect(hilbert_function(iz2, 13) == kExpectedZ2,
                 "second residue with the wrong Hilbert function");
      HilbertProfile pz2 = point_profile(iz2);
      run.record_ideal("residue-second", iz2, 13, pz2.length());

      run.stage("pairing-kernel");
      SpanKernel kernel = common_apolar_form(iz1, iz2, 13);
      run.expect(kernel.dim == 1, "span intersection is not a single point");
      Polynomial f = kernel.basis[0];
      run.report.kernel_dim = kernel.dim;
      run.report.form = f.to_string();

      run.stage("apolarity-flags");
      run.report.apolar_first = is_apolar(iz1, f);
      run.report.apolar_second = is_apolar(iz2, f);
      run.expect(run.report.apolar_first && run.report.apolar_second,
                 "residues are not both apolar to the common form");

      run.stage("verification");
      run.report.hf_row_first = hilbert_function(iz1, 14);
      run.report.hf_row_second = hilbert_function(iz2, 14);
      run.expect(run.report.hf_row_first == kRowZ1 && run.report.hf_row_second == kRowZ2,
                 "final Hilbert tables disagree");
      run.report.hf_rows_differ = run.report.hf_row_first != run.report.hf_row_second;
      run.report.reg_first = pz1.regularity();
      run.report.reg_second = pz2.regularity();
      run.expect(run.report.reg_first == 8 && run.report.reg_second == 7,
                 "regularities are not 8 and 7");
      run.report.linkage_first = verify_linkage_dh(pa, pz1, 6, 7);
      run.report.linkage_second = verify_linkage_dh(pz1, pz2, 6, 10);
      run.expect(run.report.linkage_first && run.report.linkage_second,
                 "linkage first-difference identity failed");

      HilbertProfile union_profile = point_profile(iy);
      run.report.h1_union = union_profile.h1(13);
      run.report.cb_union = cb_inequalities(union_profile, 13);
      run.expect(run.report.h1_union == 1, "union profile tail is not one");
      run.expect(run.report.cb_union, "union profile fails the partial-sum inequalities");

      RankCertificate cert = rank_lower_bound_cb(HilbertProfile::from_dh(pz1.dh()), 13);
      run.report.rank_bound = cert.bound;
      run.expect(cert.bound == 30, "cardinality bound is not 30");
      StageRecord& cr = run.record("rank-certificate");
      cr.extra = nlohmann::json{{"bound", cert.bound},
                                {"witness_profile", cert.witness_profile},
                                {"constraints_checked", cert.constraints_checked}};

      run.report.ok = true;
      return run.report;
    } catch (const GenericityError& e) {
      failed_stage = run.current;
      failure = e.what();
    }
  }
  throw PipelineError(failed_stage, failure);
}

PipelineReport run_example1(const RandomConfig& cfg, const Field& field) {
  check_pipeline_field(field, 10);
  RingPtr s = ternary_ring(field);
  RingPtr line_ring = make_ring(field, {"y", "z"});
  Rng rng(cfg.seed);

  const Field& k = field;
  Polynomial x = Polynomial::variable(s, 0);

  std::string failed_stage = "general-points";
  std::string failure = "not attempted";
  for (int attempt = 0; attempt <= cfg.max_retries; ++attempt) {
    Runner run;
    run.report.example = "example1";
    run.report.field = field.to_string();
    run.report.seed = cfg.seed;
    run.report.attempts = attempt + 1;
    try {
      run.stage("general-points");
      PointSet z1 = random_points(22, s, cfg, rng, generic_point_hilbert(22));
      const Ideal& iz1 = z1.ideal();
      HilbertProfile pz1 = point_profile(iz1);
      run.expect(pz1.length() == 22 && hilbert_function(iz1, 10) == kExpected22,
                 "22 points with the wrong Hilbert function");
      run.record_ideal("general-points", iz1, 10, 22);

      // the collinear triple (0:1:0), (0:0:1), (0:1:1) on the line x = 0
      run.stage("collinear-triple");
      PointSet y_triple(s, {ProjectivePoint(k.zero(), k.one(), k.zero()),
                            ProjectivePoint(k.zero(), k.zero(), k.one()),
                            ProjectivePoint(k.zero(), k.one(), k.one())});
      for (const auto& p : y_triple.points())
        run.expect(!z1.contains(p), "sampled points meet the collinear triple");
      const Ideal& iy = y_triple.ideal();

      run.stage("union-25");
      Ideal ia = intersect_ideals(iz1, iy);
      run.expect(hilbert_function(ia, 7) == kExpectedA25,
                 "25-point union with the wrong Hilbert function");
      run.record_ideal("union-25", ia, 7, 25);

      run.stage("sextic-system");
      std::vector<Polynomial> sextics = degree_basis(ia, 6);
      run.expect(sextics.size() == 3, "unexpected dimension of sextics through the union");

      // restriction to the line x = 0 and division by the triple's binary form
      run.stage("residual-cubics");
      RingMap to_line(s, line_ring,
                      {Polynomial::zero(line_ring), Polynomial::variable(line_ring, 0),
                       Polynomial::variable(line_ring, 1)});
      std::vector<Polynomial> restricted;
      for (const auto& g : sextics) restricted.push_back(to_line.apply(g));
      Ideal g0(line_ring, restricted);
      std::vector<Polynomial> iy_restricted;
      for (const auto& g : iy.generators()) iy_restricted.push_back(to_line.apply(g));
      Ideal gprime = quotient(g0, Ideal(line_ring, iy_restricted));
      std::vector<Polynomial> cubics = degree_basis(gprime, 3);
      run.expect(cubics.size() == 3, "residual system is not three cubics");
      Polynomial base = binary_gcd(binary_gcd(cubics[0], cubics[1]), cubics[2]);
      run.expect(base.is_constant(), "residual cubics share a base point");

      run.stage("image-cubic");
      RingMap phi(s, line_ring, cubics);
      Ideal c = kernel_of_map(phi);
      const auto& c_basis = c.groebner_basis(MonomialOrder::degrevlex());
      run.expect(c_basis.size() == 1 && c_basis[0].degree() == 3,
                 "image of the line is not a plane cubic");
      run.record_ideal("image-cubic", c, -1, 3);

      run.stage("singular-point");
      Ideal node = singular_locus(c);
      DimDegree node_dd = dim_degree(node);
      run.expect(node_dd.dim == 1 && node_dd.degree == 1,
                 "cubic does not have a single reduced singular point");
      StageRecord& nr = run.record("singular-point");
      nr.ring = node.ring()->to_string();
      for (const auto& g : node.groebner_basis(MonomialOrder::degrevlex()))
        nr.ideal.push_back(g.with_order(node.ring()).to_string());
      nr.extra = nlohmann::json{{"codim", 3 - node_dd.dim}, {"degree", node_dd.degree}};

      run.stage("line-fiber");
      Ideal ix = map_fiber(phi, node, Ideal(s, {x}));
      DimDegree fiber_dd = dim_degree(ix);
      bool fiber_radical = fiber_dd.dim == 1 && fiber_dd.degree == 2 && is_radical_collinear(ix, x);
      run.expect(fiber_radical, "fiber of the singular point is not two reduced points");
      StageRecord& fr = run.record("line-fiber");
      fr.ring = ix.ring()->to_string();
      for (const auto& g : ix.groebner_basis(MonomialOrder::degrevlex()))
        fr.ideal.push_back(g.with_order(ix.ring()).to_string());
      fr.degree = fiber_dd.degree;
      fr.extra = nlohmann::json{{"dim", fiber_dd.dim}, {"radical", true}};

      run.stage("augmented-27");
      Ideal ia_aug = intersect_ideals(ia, ix);
      run.expect(hilbert_function(ia_aug, 10) == kExpected27,
                 "27-point union with the wrong Hilbert function");
      HilbertProfile pa_aug = point_profile(ia_aug);
      run.expect(pa_aug.length() == 27, "augmented union does not have 27 points");
      run.record_ideal("augmented-27", ia_aug, 10, 27);

      run.stage("ci-7-7");
      Ideal iu = ci_through(ia_aug, 7, 7, cfg, rng);
      run.expect(hilbert_function(iu, 12) == kExpectedCi77,
                 "complete intersection of type (7,7) with the wrong Hilbert function");
      run.record_ideal("ci-7-7", iu, 12, 49);

      run.stage("residue-22");
      LinkOptions opts;
      opts.check_disjoint = true;
      Ideal iz2 = link(iu, ia_aug, opts);
      run.expect(hilbert_function(iz2, 10) == kExpectedRes22,
                 "residual 22 points with the wrong Hilbert function");
      HilbertProfile pz2 = point_profile(iz2);
      run.record_ideal("residue-22", iz2, 10, pz2.length());

      run.stage("pairing-kernel");
      SpanKernel kernel = common_apolar_form(iz1, iz2, 10);
      run.expect(kernel.dim == 1, "span intersection is not a single point");
      Polynomial f = kernel.basis[0];
      run.report.kernel_dim = kernel.dim;
      run.report.form = f.to_string();

      run.stage("apolarity-flags");
      run.report.apolar_first = is_apolar(iz1, f);
      run.report.apolar_second = is_apolar(iz2, f);
      run.expect(run.report.apolar_first && run.report.apolar_second,
                 "point sets are not both apolar to the common form");

      run.stage("verification");
      run.report.hf_row_first = hilbert_function(iz1, 14);
      run.report.hf_row_second = hilbert_function(iz2, 14);
      run.expect(run.report.hf_row_first == kRow22General &&
                     run.report.hf_row_second == kRow22Quintic,
                 "final Hilbert tables disagree");
      run.report.hf_rows_differ = run.report.hf_row_first != run.report.hf_row_second;
      run.expect(run.report.hf_row_first[5] == 21 && run.report.hf_row_second[5] == 20,
                 "tables do not differ at degree five");
      run.report.reg_first = pz1.regularity();
      run.report.reg_second = pz2.regularity();
      run.report.linkage_first = verify_linkage_dh(pa_aug, pz2, 7, 7);
      run.expect(run.report.linkage_first, "linkage first-difference identity failed");

      // the two point sets span complementary spaces meeting in exactly the
      // line of f: the union profile must leave a tail of one past degree 10
      run.stage("union-profile");
      Ideal union_ideal = intersect_ideals(iz1, iz2);
      HilbertProfile union_profile = point_profile(union_ideal);
      run.expect(union_profile.dh() == kUnion44, "union profile of the two 22-point sets");
      run.report.h1_union = union_profile.h1(10);
      run.report.cb_union = cb_inequalities(union_profile, 10);
      run.expect(run.report.h1_union == 1, "union profile tail is not one");
      run.expect(run.report.cb_union, "union profile fails the partial-sum inequalities");
      run.record_ideal("union-profile", union_ideal, 12, union_profile.length());

      run.report.ok = true;
      return run.report;
    } catch (const GenericityError& e) {
      failed_stage = run.current;
      failure = e.what();
    }
  }
  throw PipelineError(failed_stage, failure);
}

nlohmann::json PipelineReport::to_json() const {
  nlohmann::json stages_json = nlohmann::json::array();
  for (const auto& st : stages) {
    nlohmann::json j{{"name", st.name}};
    if (!st.ring.empty()) j["ring"] = st.ring;
    if (!st.ideal.empty()) j["ideal"] = st.ideal;
    if (!st.hilbert.empty()) j["hilbert"] = st.hilbert;
    if (st.degree >= 0) j["degree"] = st.degree;
    if (!st.extra.is_null()) j["extra"] = st.extra;
    stages_json.push_back(std::move(j));
  }
  nlohmann::json flags{{"kernel_dim", kernel_dim},
                       {"apolar_first", apolar_first},
                       {"apolar_second", apolar_second},
                       {"hf_rows_differ", hf_rows_differ},
                       {"reg_first", reg_first},
                       {"reg_second", reg_second},
                       {"linkage_first", linkage_first},
                       {"linkage_second", linkage_second},
                       {"cb_union", cb_union},
                       {"h1_union", h1_union},
                       {"rank_bound", rank_bound}};
  return nlohmann::json{{"example", example}, {"field", field},
                        {"seed", seed},       {"attempts", attempts},
                        {"stages", stages_json}, {"form", form},
                        {"hf_row_first", hf_row_first}, {"hf_row_second", hf_row_second},
                        {"flags", flags},     {"ok", ok}};
}

std::string PipelineReport::to_text() const {
  std::ostringstream out;
  out << example << " over " << field << " seed=" << seed << " attempts=" << attempts << "\n";
  for (const auto& st : stages) {
    out << "stage " << st.name;
    if (st.degree >= 0) out << " degree=" << st.degree;
    if (!st.hilbert.empty()) {
      out << " hf=";
      for (std::size_t i = 0; i < st.hilbert.size(); ++i) out << (i ? "," : "") << st.hilbert[i];
    }
    out << "\n";
  }
  out << "form " << form << "\n";
  out << "kernel_dim=" << kernel_dim << " apolar=(" << (apolar_first ? "true" : "false") << ","
      << (apolar_second ? "true" : "false") << ")\n";
  auto row = [&out](const char* name, const std::vector<long>& h) {
    out << name << "=";
    for (std::size_t i = 0; i < h.size(); ++i) out << (i ? "," : "") << h[i];
    out << "\n";
  };
  row("hf_first", hf_row_first);
  row("hf_second", hf_row_second);
  if (reg_first >= 0) out << "regularity=(" << reg_first << "," << reg_second << ")\n";
  if (rank_bound >= 0) out << "rank_bound=" << rank_bound << "\n";
  out << (ok ? "ok" : "failed") << "\n";
  return out.str();
}

}  // namespace apolar
