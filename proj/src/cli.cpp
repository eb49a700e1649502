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

#include "apolar/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <sstream>

#include "apolar/io.hpp"
#include "apolar/pipelines.hpp"

namespace apolar {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<long> parse_profile_arg(const std::string& text) {
  std::vector<long> dh;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string piece =
        comma == std::string::npos ? text.substr(start) : text.substr(start, comma - start);
    if (piece.empty()) throw std::invalid_argument("empty entry in profile: " + text);
    dh.push_back(std::stol(piece));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return dh;
}

struct GlobalOpts {
  std::string field = "fp:32003";
  std::uint64_t seed = 0;
  long coord_bound = 100;
  int max_retries = 20;
  long budget = 0;
  bool json = false;
  bool text = false;

  RandomConfig config() const { return RandomConfig{seed, coord_bound, max_retries}; }
};

void print_hf(std::ostream& out, const std::vector<long>& h, bool json) {
  if (json) {
    out << nlohmann::json(h).dump() << "\n";
    return;
  }
  for (std::size_t i = 0; i < h.size(); ++i) out << (i ? "," : "") << h[i];
  out << "\n";
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact plane-points toolkit: Groebner bases, Hilbert functions, apolarity, liaison"};
  app.fallthrough();

  GlobalOpts global;
  app.add_option("--field", global.field, "coefficient field: qq or fp:<p>");
  app.add_option("--seed", global.seed, "random seed");
  app.add_option("--coord-bound", global.coord_bound, "coordinate bound for sampling");
  app.add_option("--max-retries", global.max_retries, "resampling attempts");
  app.add_option("--budget", global.budget, "S-pair budget per basis computation");
  app.add_flag("--json", global.json, "JSON output");
  app.add_flag("--text", global.text, "plain text output");

  CLI::App* example1 = app.add_subcommand("example1", "degree-10 construction, rank 22");
  CLI::App* example2 = app.add_subcommand("example2", "degree-13 construction, rank 30");

  std::string hf_file;
  int hf_max_degree = 14;
  CLI::App* hf_cmd = app.add_subcommand("hf", "Hilbert function of an ideal file");
  hf_cmd->add_option("ideal", hf_file, "ideal file")->required();
  hf_cmd->add_option("--max-degree", hf_max_degree, "largest degree to report");

  std::string gb_file, gb_order = "degrevlex";
  CLI::App* gb_cmd = app.add_subcommand("gb", "reduced Groebner basis of an ideal file");
  gb_cmd->add_option("ideal", gb_file, "ideal file")->required();
  gb_cmd->add_option("--order", gb_order, "degrevlex | lex | eliminate:<k>");

  std::string link_ci_file, link_ideal_file;
  CLI::App* link_cmd = app.add_subcommand("link", "residue of a scheme in a complete intersection");
  link_cmd->add_option("ci", link_ci_file, "complete intersection ideal file")->required();
  link_cmd->add_option("ideal", link_ideal_file, "linked scheme ideal file")->required();

  std::string ac_file1, ac_file2;
  int ac_degree = 0;
  CLI::App* ac_cmd = app.add_subcommand("apolar-common", "common annihilated form of two ideals");
  ac_cmd->add_option("ideal1", ac_file1, "first ideal file")->required();
  ac_cmd->add_option("ideal2", ac_file2, "second ideal file")->required();
  ac_cmd->add_option("--degree", ac_degree, "form degree")->required();

  std::string certify_dh;
  int certify_degree = 0;
  CLI::App* certify_cmd = app.add_subcommand("certify", "cardinality lower bound from a profile");
  certify_cmd->add_option("--dh", certify_dh, "first-difference profile, comma separated")
      ->required();
  certify_cmd->add_option("--degree", certify_degree, "form degree")->required();

  app.require_subcommand(1);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  if (global.budget > 0) set_spair_budget(global.budget);

  try {
    if (*example1 || *example2) {
      Field field = Field::parse(global.field);
      PipelineReport report = *example1 ? run_example1(global.config(), field)
                                        : run_example2(global.config(), field);
      if (global.json)
        out << report.to_json().dump(2) << "\n";
      else
        out << report.to_text();
      return report.ok ? 0 : 1;
    }

    if (*hf_cmd) {
      Ideal ideal = parse_ideal_file(read_file(hf_file));
      print_hf(out, hilbert_function(ideal, hf_max_degree), global.json);
      return 0;
    }

    if (*gb_cmd) {
      Ideal ideal = parse_ideal_file(read_file(gb_file));
      MonomialOrder ord = MonomialOrder::parse(gb_order);
      if (global.json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& g : ideal.groebner_basis(ord)) arr.push_back(g.to_string());
        out << arr.dump(2) << "\n";
      } else {
        for (const auto& g : ideal.groebner_basis(ord)) out << g.to_string() << "\n";
      }
      return 0;
    }

    if (*link_cmd) {
      Ideal ci = parse_ideal_file(read_file(link_ci_file));
      Ideal base = parse_ideal_file(read_file(link_ideal_file));
      Ideal residue = link(ci, base);
      HilbertProfile p = point_profile(residue);
      if (global.json) {
        nlohmann::json j{{"degree", p.length()},
                         {"dh", p.dh()},
                         {"ideal", nlohmann::json::array()}};
        for (const auto& g : residue.groebner_basis(MonomialOrder::degrevlex()))
          j["ideal"].push_back(g.to_string());
        out << j.dump(2) << "\n";
      } else {
        out << "# residue: degree " << p.length() << ", dh " << profile_to_string(p) << "\n";
        out << write_ideal_file(residue);
      }
      return 0;
    }

    if (*ac_cmd) {
      Ideal i1 = parse_ideal_file(read_file(ac_file1));
      Ideal i2 = parse_ideal_file(read_file(ac_file2));
      SpanKernel kernel = common_apolar_form(i1, i2, ac_degree);
      if (global.json) {
        nlohmann::json j{{"dim", kernel.dim}, {"basis", nlohmann::json::array()}};
        for (const auto& f : kernel.basis) j["basis"].push_back(f.to_string());
        out << j.dump(2) << "\n";
      } else {
        out << "kernel dimension " << kernel.dim << "\n";
        for (const auto& f : kernel.basis) out << f.to_string() << "\n";
      }
      return kernel.dim == 1 ? 0 : 1;
    }

    if (*certify_cmd) {
      HilbertProfile p = HilbertProfile::from_dh(parse_profile_arg(certify_dh));
      RankCertificate cert = rank_lower_bound_cb(p, certify_degree);
      if (global.json)
        out << certificate_json(cert).dump(2) << "\n";
      else
        out << cert.bound << "\n";
      return 0;
    }
  } catch (const BudgetExceededError& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const PipelineError& e) {
    err << "verification failed at " << e.stage << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "verification failed: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace apolar
