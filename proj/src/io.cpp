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

#include "apolar/io.hpp"

#include <sstream>

namespace apolar {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

RingPtr parse_ring_header(const std::string& line, std::size_t line_no) {
  std::istringstream in(line);
  std::string keyword, names, over, field_spec;
  in >> keyword >> names >> over >> field_spec;
  if (keyword != "ring" || over != "over" || names.empty() || field_spec.empty())
    throw ParseError("expected header `ring <v1,v2,...> over <qq|fp:p>` on line " +
                         std::to_string(line_no),
                     0);
  std::vector<std::string> vars;
  std::size_t start = 0;
  while (start <= names.size()) {
    std::size_t comma = names.find(',', start);
    if (comma == std::string::npos) {
      vars.push_back(names.substr(start));
      break;
    }
    vars.push_back(names.substr(start, comma - start));
    start = comma + 1;
  }
  try {
    return make_ring(Field::parse(field_spec), std::move(vars));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string(e.what()) + " on line " + std::to_string(line_no), 0);
  }
}

}  // namespace

Ideal parse_ideal_file(const std::string& content) {
  std::istringstream in(content);
  std::string line;
  std::size_t line_no = 0;
  RingPtr ring;
  std::vector<Polynomial> gens;
  while (std::getline(in, line)) {
    ++line_no;
    std::string body = trim(line);
    if (body.empty() || body[0] == '#') continue;
    if (!ring) {
      ring = parse_ring_header(body, line_no);
      continue;
    }
    try {
      gens.push_back(Polynomial::parse(ring, body));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what(), e.position);
    }
  }
  if (!ring) throw ParseError("missing ring header line", 0);
  return Ideal(ring, std::move(gens));
}

std::string write_ideal_file(const Ideal& ideal) {
  std::string out = ideal.ring()->to_string() + "\n";
  for (const auto& g : ideal.generators()) out += g.with_order(ideal.ring()).to_string() + "\n";
  return out;
}

nlohmann::json profile_json(const HilbertProfile& p) {
  return nlohmann::json(p.dh());
}

nlohmann::json hilbert_json(const std::vector<long>& h) { return nlohmann::json(h); }

nlohmann::json pointset_json(const PointSet& ps) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& p : ps.points()) {
    arr.push_back({p[0].to_string(), p[1].to_string(), p[2].to_string()});
  }
  return arr;
}

nlohmann::json certificate_json(const RankCertificate& cert) {
  return nlohmann::json{{"bound", cert.bound},
                        {"witness_profile", cert.witness_profile},
                        {"constraints_checked", cert.constraints_checked}};
}

nlohmann::json decomposition_json(const PointSet& ps, const std::vector<FieldElement>& coeffs) {
  nlohmann::json arr = nlohmann::json::array();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const ProjectivePoint& p = ps.points()[i];
    arr.push_back({{"point", {p[0].to_string(), p[1].to_string(), p[2].to_string()}},
                   {"coefficient", coeffs[i].to_string()}});
  }
  return arr;
}

}  // namespace apolar
