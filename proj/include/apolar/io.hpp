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

#ifndef APOLAR_IO_HPP
#define APOLAR_IO_HPP

#include <json.hpp>

#include "apolar/liaison.hpp"

namespace apolar {

/// Ideal file: a header line `ring x,y,z over qq` (or `over fp:<p>`), then
/// one generator per line in the polynomial grammar. Blank lines and lines
/// starting with '#' are skipped. Parse errors carry line and column.
Ideal parse_ideal_file(const std::string& content);

std::string write_ideal_file(const Ideal& ideal);

nlohmann::json profile_json(const HilbertProfile& p);
nlohmann::json hilbert_json(const std::vector<long>& h);
nlohmann::json pointset_json(const PointSet& ps);
nlohmann::json certificate_json(const RankCertificate& cert);
nlohmann::json decomposition_json(const PointSet& ps, const std::vector<FieldElement>& coeffs);

}  // namespace apolar

#endif  // APOLAR_IO_HPP
