// pullfan: pulling subdivisions, Cartier data and blowup ideals from the
// command line. Documents are JSON; see include/pullfan/io.hpp.
//
// Exit codes: 0 ok, 1 input/output or usage, 2 invalid input data, 3 no strictly
// convex support function, 4 verification failed, 5 internal error.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "example_report.hpp"
#include "pullfan/cartier.hpp"
#include "pullfan/io.hpp"
#include "pullfan/newton.hpp"
#include "pullfan/pulling.hpp"

using namespace pullfan;
using io::json;

namespace {

enum Exit { kOk = 0, kIo = 1, kDomain = 2, kInfeasible = 3, kVerifyFailed = 4, kInternal = 5 };

void emit(const std::string& out_path, const json& doc) {
  if (out_path.empty() || out_path == "-") {
    std::cout << io::dump(doc);
  } else {
    io::write_json_file(out_path, doc);
  }
}

// "a1,...,an,c" -> ((a1..an), c), all integers.
Hyperplane parse_hyperplane(const std::string& text, std::size_t rank) {
  std::vector<Int> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    Rat r = parse_rat(item);
    if (r.get_den() != 1) throw std::invalid_argument("hyperplane entries must be integers");
    values.push_back(r.get_num());
  }
  if (values.size() != rank + 1) {
    throw std::invalid_argument("hyperplane needs " + std::to_string(rank + 1) + " comma-separated integers");
  }
  Int c = values.back();
  values.pop_back();
  return {values, c};
}

Fan read_fan(const std::string& path) { return io::fan_from_json(io::read_json_file(path)).fan; }

int cmd_pull(const std::string& sigma_path, const std::string& tau_path, const std::string& hyperplane,
             const std::string& out) {
  Cone sigma = io::cone_from_json(io::read_json_file(sigma_path));
  Cone tau = io::cone_from_json(io::read_json_file(tau_path));
  std::optional<Hyperplane> h;
  if (!hyperplane.empty()) h = parse_hyperplane(hyperplane, sigma.ambient());
  ConicalSubdivision sub = pull(sigma, tau, h);
  emit(out, io::fan_to_json(sub.fan, &sub.ray_heights));
  return kOk;
}

int cmd_cartier(const std::string& sub_path, const std::string& ambient_path, bool from_heights,
                const std::string& out) {
  io::FanDocument doc = io::fan_from_json(io::read_json_file(sub_path));
  Fan delta = read_fan(ambient_path);
  if (!from_heights) {
    emit(out, io::cartier_to_json(cartier_from_subdivision(doc.fan, delta)));
    return kOk;
  }
  if (!doc.ray_heights) throw std::invalid_argument("--from-heights needs \"ray_heights\" in the subdivision");
  if (!refines(doc.fan, delta)) throw std::invalid_argument("subdivision does not refine the ambient fan");
  SupportFunction sf = support_from_heights(ConicalSubdivision{doc.fan, *doc.ray_heights});
  CartierData cd = integralize(sf);
  emit(out, io::cartier_to_json(cd, &sf));
  return kOk;
}

int cmd_idealize(const std::string& cartier_path, const std::string& ambient_path, const std::string& out) {
  CartierData cd = io::cartier_from_json(io::read_json_file(cartier_path));
  Fan delta = read_fan(ambient_path);
  emit(out, io::ideals_to_json(ideal_from_cartier(cd, delta)));
  return kOk;
}

MonomialIdealData single_ideal(const std::string& path) {
  std::vector<MonomialIdealData> ideals = io::ideals_from_json(io::read_json_file(path));
  if (ideals.size() != 1) throw std::invalid_argument("expected exactly one ideal, found " + std::to_string(ideals.size()));
  return ideals.front();
}

int cmd_newton_fan(const std::string& ideal_path, const std::string& out) {
  emit(out, io::fan_to_json(normal_fan(newton(single_ideal(ideal_path)))));
  return kOk;
}

int cmd_closure(const std::string& ideal_path, const std::string& out) {
  MonomialIdealData ideal = single_ideal(ideal_path);
  ideal.generators = integral_closure_generators(ideal);
  ideal.closure = true;
  emit(out, io::ideal_to_json(ideal));
  return kOk;
}

int cmd_verify(const std::string& sub_path, const std::string& ambient_path, const std::string& ideals_path) {
  Fan sigma = read_fan(sub_path);
  Fan delta = read_fan(ambient_path);
  std::vector<MonomialIdealData> ideals = io::ideals_from_json(io::read_json_file(ideals_path));
  if (verify_blowup(sigma, delta, ideals)) {
    std::cout << "ok: the subdivision is the normalized blowup fan of the ideals\n";
    return kOk;
  }
  std::cout << "mismatch: the ideals do not realize the subdivision\n";
  return kVerifyFailed;
}

int cmd_reproduce(const std::string& golden_path, bool as_json) {
  json golden = golden_path.empty() ? json::parse(report::embedded_golden()) : io::read_json_file(golden_path);
  json computed = report::compute_example();
  std::vector<std::string> diffs = report::compare(computed, golden);
  if (as_json) {
    json doc = computed;
    doc["matches_golden"] = diffs.empty();
    doc["mismatches"] = diffs;
    std::cout << io::dump(doc);
  } else {
    std::cout << report::render(computed);
    for (const std::string& d : diffs) std::cout << "MISMATCH " << d << "\n";
    std::cout << (diffs.empty() ? "all values match the golden record\n" : "golden comparison failed\n");
  }
  return diffs.empty() ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pulling subdivisions, Cartier data and monomial ideals whose blowups realize them"};
  app.require_subcommand(1);

  std::string sigma_path, tau_path, hyperplane, out, sub_path, ambient_path, cartier_path, ideal_path, golden;
  bool from_heights = false, as_json = false;

  auto* pull_cmd = app.add_subcommand("pull", "pulling subdivision of sigma towards tau");
  pull_cmd->add_option("--sigma", sigma_path, "cone document for sigma")->required();
  pull_cmd->add_option("--tau", tau_path, "cone document for tau")->required();
  pull_cmd->add_option("--hyperplane", hyperplane, "a1,...,an,c for the hyperplane <a,x> = c");
  pull_cmd->add_option("--out", out, "output file (default stdout)");

  auto* cartier_cmd = app.add_subcommand("cartier", "integral Cartier data for a subdivision");
  cartier_cmd->add_option("--subdivision", sub_path, "fan document for Sigma")->required();
  cartier_cmd->add_option("--ambient", ambient_path, "fan or cone document for Delta")->required();
  cartier_cmd->add_flag("--from-heights", from_heights, "use the ray heights stored with the subdivision");
  cartier_cmd->add_option("--out", out, "output file (default stdout)");

  auto* idealize_cmd = app.add_subcommand("idealize", "one monomial ideal per maximal cone of Delta");
  idealize_cmd->add_option("--cartier", cartier_path, "Cartier document")->required();
  idealize_cmd->add_option("--ambient", ambient_path, "fan or cone document for Delta")->required();
  idealize_cmd->add_option("--out", out, "output file (default stdout)");

  auto* newton_cmd = app.add_subcommand("newton-fan", "inward normal fan of the Newton polyhedron");
  newton_cmd->add_option("--ideal", ideal_path, "ideal document")->required();
  newton_cmd->add_option("--out", out, "output file (default stdout)");

  auto* closure_cmd = app.add_subcommand("closure", "minimal generators of the integral closure");
  closure_cmd->add_option("--ideal", ideal_path, "ideal document")->required();
  closure_cmd->add_option("--out", out, "output file (default stdout)");

  auto* verify_cmd = app.add_subcommand("verify", "check that the ideals' blowup fan is the subdivision");
  verify_cmd->add_option("--subdivision", sub_path, "fan document for Sigma")->required();
  verify_cmd->add_option("--ambient", ambient_path, "fan or cone document for Delta")->required();
  verify_cmd->add_option("--ideals", ideal_path, "ideals document")->required();

  auto* repro_cmd = app.add_subcommand("reproduce-paper", "recompute the worked example and compare with the golden record");
  repro_cmd->add_option("--golden", golden, "golden document (default: the built-in copy)");
  repro_cmd->add_flag("--json", as_json, "machine-readable report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help is reported as a parse "error" with code 0; usage errors count as bad input.
    return app.exit(e) == 0 ? kOk : kIo;
  }

  try {
    if (*pull_cmd) return cmd_pull(sigma_path, tau_path, hyperplane, out);
    if (*cartier_cmd) return cmd_cartier(sub_path, ambient_path, from_heights, out);
    if (*idealize_cmd) return cmd_idealize(cartier_path, ambient_path, out);
    if (*newton_cmd) return cmd_newton_fan(ideal_path, out);
    if (*closure_cmd) return cmd_closure(ideal_path, out);
    if (*verify_cmd) return cmd_verify(sub_path, ambient_path, ideal_path);
    if (*repro_cmd) return cmd_reproduce(golden, as_json);
  } catch (const NotCoherentError& e) {
    std::cerr << "pullfan: not coherent: " << e.what() << "\n";
    return kInfeasible;
  } catch (const io::FormatError& e) {
    std::cerr << "pullfan: malformed input: " << e.what() << "\n";
    return kIo;
  } catch (const json::exception& e) {
    std::cerr << "pullfan: malformed input: " << e.what() << "\n";
    return kIo;
  } catch (const io::FileError& e) {
    std::cerr << "pullfan: " << e.what() << "\n";
    return kIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "pullfan: " << e.what() << "\n";
    return kDomain;
  } catch (const std::domain_error& e) {
    std::cerr << "pullfan: " << e.what() << "\n";
    return kDomain;
  } catch (const std::exception& e) {
    std::cerr << "pullfan: internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kOk;
}
