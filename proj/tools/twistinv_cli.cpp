// Command-line surface over the twisted-invariant library: folding,
// multiplicities, filtration polynomials, zeta counts, minimal weights,
// pairing matrices and Cayley-Hamilton checks, all as deterministic JSON.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "twistinv/chevalley.hpp"
#include "twistinv/filtration.hpp"
#include "twistinv/invariants.hpp"
#include "twistinv/json_io.hpp"
#include "twistinv/repn.hpp"
#include "twistinv/twist.hpp"

namespace tw = twistinv;
using tw::json;

namespace {

struct JobSpec {
  std::string command;
  std::string group;
  std::string sigma = "";
  std::vector<int64_t> rep;
  std::vector<int64_t> weight;
  std::vector<int64_t> nu0;
  std::vector<int64_t> xi;
  std::string cache_dir;
  std::string format = "json";
  std::string output;

  std::string canonical_string() const {
    std::ostringstream os;
    os << command << " --group " << group;
    if (!sigma.empty()) os << " --sigma \"" << sigma << "\"";
    auto list = [&os](const char* flag, const std::vector<int64_t>& v) {
      if (v.empty()) return;
      os << " " << flag << " ";
      for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    };
    list("--rep", rep);
    list("--weight", weight);
    list("--nu0", nu0);
    list("--xi", xi);
    return os.str();
  }
};

tw::Weight to_weight(const std::vector<int64_t>& v) { return tw::Weight(v.begin(), v.end()); }

tw::Module load_or_build(const JobSpec& job, const tw::RootDatum& datum, const tw::Weight& rep) {
  std::string key;
  {
    std::ostringstream os;
    os << datum.spec() << "__";
    for (size_t i = 0; i < rep.size(); ++i) os << (i ? "_" : "") << rep[i];
    key = os.str() + ".json";
  }
  if (!job.cache_dir.empty()) {
    std::filesystem::path p = std::filesystem::path(job.cache_dir) / key;
    if (std::filesystem::exists(p)) {
      std::ifstream in(p);
      json j;
      in >> j;
      return tw::module_from_json(datum, j);
    }
    tw::Module m = tw::build_irreducible(datum, rep);
    std::filesystem::create_directories(job.cache_dir);
    std::ofstream out(p);
    out << tw::module_to_json(m) << "\n";
    return m;
  }
  return tw::build_irreducible(datum, rep);
}

json orbit_to_json(const tw::SigmaOrbit& o) {
  json roots = json::array();
  for (auto& r : o.roots) roots.push_back(tw::weight_to_json(r));
  return json{{"alpha_O", tw::weight_to_json(o.alpha_O)},
              {"type", tw::orbit_type_name(o.orbit_type)},
              {"size", o.roots.size()},
              {"divisor_sign", o.divisor_sign},
              {"roots", roots}};
}

void render_text(const json& j, std::ostream& os, int indent = 0) {
  std::string pad(indent, ' ');
  if (j.is_object()) {
    for (auto& [k, v] : j.items()) {
      if (v.is_object() || v.is_array()) {
        os << pad << k << ":\n";
        render_text(v, os, indent + 2);
      } else {
        os << pad << k << ": " << v.dump() << "\n";
      }
    }
  } else if (j.is_array()) {
    for (auto& v : j) {
      if (v.is_object() || v.is_array()) {
        os << pad << "-\n";
        render_text(v, os, indent + 2);
      } else {
        os << pad << "- " << v.dump() << "\n";
      }
    }
  } else {
    os << pad << j.dump() << "\n";
  }
}

int emit(const JobSpec& job, json j, bool consistent) {
  // pairing and chcheck emit a pinned document shape; the other commands
  // also echo the job in its canonical round-trip form
  if (job.command != "pairing" && job.command != "chcheck")
    j["job"] = job.canonical_string();
  std::ostringstream os;
  if (job.format == "text")
    render_text(j, os);
  else
    os << j.dump(2) << "\n";
  if (job.output.empty()) {
    std::cout << os.str();
  } else {
    std::ofstream out(job.output);
    out << os.str();
  }
  return consistent ? 0 : 1;
}

int run(const JobSpec& job) {
  tw::RootDatum datum = tw::RootDatum::build(job.group);
  tw::PinnedAutomorphism sigma = tw::parse_sigma(datum, job.sigma);

  auto need = [&](const char* flag, const std::vector<int64_t>& v) {
    if (int(v.size()) != datum.rank())
      throw std::invalid_argument(std::string(flag) + " needs " + std::to_string(datum.rank()) +
                                  " coordinates for " + job.group);
  };
  if (job.command == "mult" || job.command == "filpoly" || job.command == "zeta" ||
      job.command == "pairing" || job.command == "chcheck")
    need("--rep", job.rep);
  if (job.command == "filpoly" || (job.command == "mult" && !job.weight.empty()))
    need("--weight", job.weight);
  if (job.command == "nuh") {
    need("--xi", job.xi);
    if (!job.nu0.empty()) need("--nu0", job.nu0);
  }

  if (job.command == "fold") {
    tw::FoldedDatum f = tw::fold(datum, sigma);
    json simple = json::array();
    for (auto& o : f.simple_folded_roots) simple.push_back(orbit_to_json(o));
    json cartan = json::array();
    for (int i = 0; i < f.folded_cartan.rows; ++i) {
      json row = json::array();
      for (int j2 = 0; j2 < f.folded_cartan.cols; ++j2) row.push_back(f.folded_cartan.at(i, j2));
      cartan.push_back(row);
    }
    json orbits = json::array();
    for (auto& o : tw::sigma_orbits(datum, sigma)) orbits.push_back(orbit_to_json(o));
    return emit(job, json{{"group", job.group},
                          {"sigma", job.sigma},
                          {"folded_type", f.folded_type},
                          {"folded_cartan", cartan},
                          {"simple_folded_roots", simple},
                          {"orbits", orbits}},
                true);
  }

  if (job.command == "mult") {
    tw::Module v = load_or_build(job, datum, to_weight(job.rep));
    if (!job.weight.empty()) {
      tw::Weight nu = to_weight(job.weight);
      return emit(job, json{{"group", job.group},
                            {"rep", job.rep},
                            {"weight", job.weight},
                            {"mult", v.multiplicity(nu)},
                            {"freudenthal", tw::freudenthal(datum, to_weight(job.rep), nu)},
                            {"dim", v.dim()}},
                  true);
    }
    json table = json::array();
    for (auto& [w, m] : v.weight_multiplicities())
      table.push_back(json{{"weight", tw::weight_to_json(w)}, {"mult", m}});
    return emit(job, json{{"group", job.group},
                          {"rep", job.rep},
                          {"dim", v.dim()},
                          {"weights", table}},
                true);
  }

  if (job.command == "filpoly") {
    tw::Module v = load_or_build(job, datum, to_weight(job.rep));
    tw::Weight nu = to_weight(job.weight);
    auto p = tw::gr_polynomial(v, nu);
    return emit(job, json{{"group", job.group},
                          {"rep", job.rep},
                          {"weight", job.weight},
                          {"P", tw::poly_to_json(p)},
                          {"P_at_one", p.eval_at_one()},
                          {"dim_weight_space", v.multiplicity(nu)}},
                true);
  }

  if (job.command == "zeta") {
    tw::Module v = load_or_build(job, datum, to_weight(job.rep));
    tw::CoinvariantLattice lattice(datum, sigma);
    json orbits = json::array();
    for (auto& o : tw::sigma_orbits(datum, sigma)) {
      json oj = orbit_to_json(o);
      oj["zeta"] = tw::zeta(v, lattice, o);
      orbits.push_back(oj);
    }
    return emit(job, json{{"group", job.group},
                          {"sigma", job.sigma},
                          {"rep", job.rep},
                          {"r_V", tw::r_V(v, lattice)},
                          {"orbits", orbits}},
                true);
  }

  if (job.command == "nuh") {
    tw::Weight nu0 = job.nu0.empty() ? tw::zero_weight(datum.rank()) : to_weight(job.nu0);
    tw::Weight result = tw::nu_h(datum, sigma, nu0, to_weight(job.xi));
    return emit(job, json{{"group", job.group},
                          {"sigma", job.sigma},
                          {"nu0", tw::weight_to_json(nu0)},
                          {"xi", job.xi},
                          {"nu_h", tw::weight_to_json(result)}},
                true);
  }

  if (job.command == "pairing") {
    tw::Module v = load_or_build(job, datum, to_weight(job.rep));
    tw::PairingMatrix pm = tw::pairing_matrix(datum, sigma, v);
    json entries = json::array();
    for (auto& row : pm.entries) {
      json r = json::array();
      for (auto& e : row) r.push_back(tw::ga_to_json(e));
      entries.push_back(r);
    }
    json out{{"size", pm.size()},
             {"entries", entries},
             {"det", tw::ga_to_json(pm.det)},
             {"predicted", tw::ga_to_json(pm.predicted)},
             {"unit_ratio", pm.matches ? json(tw::rat_to_string(pm.unit)) : json(nullptr)}};
    return emit(job, out, pm.matches);
  }

  if (job.command == "chcheck") {
    tw::Module v = tw::sigma_stable_envelope(datum, sigma, to_weight(job.rep));
    tw::FoldedDatum folded = tw::fold(datum, sigma);
    bool ch = tw::cayley_hamilton_check(v, sigma);
    tw::CharPolynomial f = tw::char_polynomial(v, sigma);
    bool w0 = true;
    json coeffs = json::array();
    for (auto& c : f.coeffs) {
      w0 = w0 && tw::chevalley_w0_invariance(c, datum, folded);
      coeffs.push_back(tw::ga_to_json(c));
    }
    return emit(job, json{{"cayley_hamilton", ch}, {"char_poly", coeffs}, {"w0_invariant", w0}},
                ch && w0);
  }

  throw std::invalid_argument("unknown command: " + job.command);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"twisted conjugation invariants toolkit"};
  app.require_subcommand(1);

  JobSpec job;
  const std::vector<std::string> commands{"fold", "mult", "filpoly", "zeta",
                                          "nuh",  "pairing", "chcheck"};
  for (const auto& name : commands) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--group", job.group, "group spec, e.g. A2 or A1xA1")->required();
    sub->add_option("--sigma", job.sigma, "diagram automorphism in cycle notation, e.g. \"(1 2)\"");
    sub->add_option("--rep", job.rep, "highest weight, fundamental-weight coordinates")
        ->delimiter(',');
    sub->add_option("--weight", job.weight, "weight, fundamental-weight coordinates")
        ->delimiter(',');
    sub->add_option("--nu0", job.nu0, "base dominant weight for nuh")->delimiter(',');
    sub->add_option("--xi", job.xi, "target of sigma(nu)-nu for nuh")->delimiter(',');
    sub->add_option("--cache-dir", job.cache_dir, "module bundle cache directory");
    sub->add_option("--format", job.format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--output", job.output, "write the report to a file");
    sub->callback([&job, name] { job.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    return run(job);
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "consistency failure: " << e.what() << "\n";
    return 1;
  }
}
