// Command-line front end: delta vectors, counting polynomials, lattice
// indices, admissible-tuple classification, and exhaustive verification
// runs, over polytopes in the plain "d m" text format.
//
// Exit codes: 0 success (and verification confirmed), 1 usage or I/O error,
// 2 mathematically degenerate input, 3 verification mismatch.

#include <cstddef>
#include <exception>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ehrhart/ehrhart.hpp"

namespace {

using ehrhart::ContainmentMode;
using ehrhart::DeltaVector;
using ehrhart::EhrhartPolynomial;
using ehrhart::ExponentTuple;
using ehrhart::Int;
using ehrhart::LatticePolytope;
using ehrhart::Rat;
using Json = nlohmann::ordered_json;

std::string format_rat(const Rat& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

std::string format_int(const Int& n) {
  std::ostringstream os;
  os << n;
  return os.str();
}

// "5/2 n^2 + 5/2 n + 1", descending powers, zero terms omitted.
std::string format_polynomial(const EhrhartPolynomial& poly) {
  const auto& coeffs = poly.coefficients();
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    Rat c = coeffs[k];
    if (c == 0 && !(first && k == 0)) continue;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (c < 0) c = -c;
    const bool unit = c == 1 && k > 0;
    if (!unit) os << format_rat(c);
    if (k > 0) {
      if (!unit) os << " ";
      os << "n";
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

std::string join_delta(const DeltaVector& dv) {
  std::ostringstream os;
  for (std::size_t i = 0; i < dv.entries().size(); ++i) {
    if (i > 0) os << ' ';
    os << dv[i];
  }
  return os.str();
}

std::string format_tuple(const ExponentTuple& t) {
  std::ostringstream os;
  os << t;
  return os.str();
}

Json delta_to_json(const DeltaVector& dv) {
  Json arr = Json::array();
  for (const Int& e : dv.entries()) arr.push_back(format_int(e));
  return arr;
}

Json tuples_to_json(const std::vector<ExponentTuple>& tuples) {
  Json arr = Json::array();
  for (const ExponentTuple& t : tuples) arr.push_back(t.exponents);
  return arr;
}

int run_delta(const std::string& path, bool as_json) {
  const LatticePolytope p = ehrhart::read_polytope_file(path);
  const DeltaVector dv = ehrhart::delta_vector(p);
  if (as_json) {
    Json out;
    out["file"] = path;
    out["dim"] = p.ambient_dim();
    out["delta"] = delta_to_json(dv);
    out["degree"] = dv.degree();
    out["volume"] = format_int(dv.sum());
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "delta: " << join_delta(dv) << "\n";
    std::cout << "volume: " << dv.sum() << "\n";
  }
  return 0;
}

int run_ehrhart(const std::string& path, bool as_json) {
  const LatticePolytope p = ehrhart::read_polytope_file(path);
  const EhrhartPolynomial poly = ehrhart::ehrhart_polynomial(p);
  if (as_json) {
    Json coeffs = Json::array();
    for (const Rat& c : poly.coefficients()) coeffs.push_back(format_rat(c));
    Json out;
    out["file"] = path;
    out["dim"] = p.ambient_dim();
    out["degree"] = poly.degree();
    out["coefficients"] = coeffs;  // ascending
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "ehrhart: " << format_polynomial(poly) << "\n";
  }
  return 0;
}

int run_index(const std::string& path, bool as_json) {
  const LatticePolytope p = ehrhart::read_polytope_file(path);
  const bool spanning = ehrhart::is_spanning(p);
  const Int index = ehrhart::lattice_index(ehrhart::enumerate_lattice_points(
      p, 1, ContainmentMode::boundary_inclusive));
  if (as_json) {
    Json out;
    out["file"] = path;
    out["dim"] = p.ambient_dim();
    out["index"] = format_int(index);
    out["spanning"] = spanning;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "index: " << index << " ("
              << (spanning ? "spanning" : "not spanning") << ")\n";
  }
  return 0;
}

int run_classify(int volume, int dim, bool simplex_only, bool as_json) {
  const ehrhart::PolytopeKind kind = simplex_only
                                         ? ehrhart::PolytopeKind::simplex
                                         : ehrhart::PolytopeKind::any_polytope;
  const ehrhart::AdmissibleSet set =
      ehrhart::enumerate_admissible(dim, volume, kind);
  if (as_json) {
    Json out;
    out["volume"] = volume;
    out["dim"] = dim;
    out["kind"] = simplex_only ? "simplex" : "polytope";
    out["count"] = set.tuples.size();
    out["tuples"] = tuples_to_json(set.tuples);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "admissible tuples: " << set.tuples.size() << "\n";
    for (const ExponentTuple& t : set.tuples) {
      std::cout << format_tuple(t) << "\n";
    }
  }
  return 0;
}

int run_verify_main(int dim, int max_dim, bool as_json) {
  const ehrhart::ClassificationReport report =
      ehrhart::verify_main_theorem(dim, max_dim);
  if (as_json) {
    Json out;
    out["mode"] = "main";
    out["dim"] = report.dim;
    out["volume"] = format_int(report.volume);
    out["simplices"] = report.simplex_count;
    out["realized_simplex_tuples"] =
        tuples_to_json(report.realized_simplex_tuples);
    out["predicate_simplex_tuples"] =
        tuples_to_json(report.predicate_simplex_tuples);
    out["realized_polytope_tuples"] =
        tuples_to_json(report.realized_polytope_tuples);
    out["predicate_polytope_tuples"] =
        tuples_to_json(report.predicate_polytope_tuples);
    out["witnesses"] = report.witness_count;
    out["mismatches"] = report.mismatches;
    out["ok"] = report.ok();
    std::cout << out.dump(2) << "\n";
    return report.ok() ? 0 : 3;
  }
  if (report.ok()) {
    std::cout << "OK: realized=" << report.realized_simplex_tuples.size()
              << " simplex tuples, witnesses=" << report.witness_count
              << ", violations=0\n";
    std::cout << "simplices enumerated: " << report.simplex_count << "\n";
    return 0;
  }
  for (const std::string& line : report.mismatches) {
    std::cout << "MISMATCH: " << line << "\n";
  }
  std::cout << "FAILED: " << report.mismatches.size() << " mismatches\n";
  return 3;
}

int run_verify_spanning(int dim, const Int& prime, int max_dim, bool as_json) {
  const ehrhart::ClassificationReport report =
      ehrhart::verify_spanning_theorem(dim, prime, max_dim);
  if (as_json) {
    Json indices = Json::array();
    for (const Int& idx : report.empty_simplex_indices) {
      indices.push_back(format_int(idx));
    }
    Json out;
    out["mode"] = "spanning";
    out["dim"] = report.dim;
    out["prime"] = format_int(report.volume);
    out["simplices"] = report.simplex_count;
    out["nonempty"] = report.nonempty_simplex_count;
    out["empty"] = report.empty_simplex_count;
    out["empty_indices"] = indices;
    out["violations"] = report.spanning_violations;
    out["ok"] = report.ok();
    std::cout << out.dump(2) << "\n";
    return report.ok() ? 0 : 3;
  }
  if (report.ok()) {
    std::cout << "OK: spanning violations=0\n";
    std::cout << "simplices enumerated: " << report.simplex_count
              << " (non-empty: " << report.nonempty_simplex_count
              << ", empty: " << report.empty_simplex_count << ")\n";
    if (!report.empty_simplex_indices.empty()) {
      std::cout << "empty simplex indices:";
      for (const Int& idx : report.empty_simplex_indices) {
        std::cout << " " << idx;
      }
      std::cout << "\n";
    }
    return 0;
  }
  for (const std::string& line : report.spanning_violations) {
    std::cout << "VIOLATION: " << line << "\n";
  }
  std::cout << "FAILED: " << report.spanning_violations.size()
            << " violations\n";
  return 3;
}

int run_pyramid(const std::string& path, const std::string& out_path) {
  const LatticePolytope p = ehrhart::read_polytope_file(path);
  const LatticePolytope pyr = ehrhart::lattice_pyramid(p);
  ehrhart::write_polytope_file(out_path, pyr);
  std::cout << "wrote " << out_path << " (dimension " << pyr.ambient_dim()
            << ", " << pyr.vertex_count() << " vertices)\n";
  return 0;
}

int run_examples(int k, const std::optional<std::string>& out_path) {
  const LatticePolytope p = ehrhart::exceptional_witness(k);
  if (out_path) {
    ehrhart::write_polytope_file(*out_path, p);
    std::cout << "wrote " << *out_path << " (dimension " << p.ambient_dim()
              << ", " << p.vertex_count() << " vertices)\n";
  } else {
    ehrhart::write_polytope(std::cout, p);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact Ehrhart polynomials, delta vectors, and small-volume "
      "classification of lattice polytopes"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit machine-readable JSON");

  std::string path, out_path;
  int volume = 5, dim = 0, witness_k = 1;
  int max_dim = ehrhart::default_verify_dim_limit;
  bool simplex_only = false;
  std::optional<int> prime;
  std::optional<std::string> examples_out;

  CLI::App* cmd_delta =
      app.add_subcommand("delta", "delta vector of a polytope file");
  cmd_delta->add_option("file", path, "polytope file")->required();

  CLI::App* cmd_ehrhart = app.add_subcommand(
      "ehrhart", "counting polynomial of a polytope file");
  cmd_ehrhart->add_option("file", path, "polytope file")->required();

  CLI::App* cmd_index = app.add_subcommand(
      "index", "lattice index of the point lattice of a polytope file");
  cmd_index->add_option("file", path, "polytope file")->required();

  CLI::App* cmd_classify = app.add_subcommand(
      "classify", "admissible exponent tuples for a volume and dimension");
  cmd_classify->add_option("--volume", volume, "normalized volume (4 or 5)")
      ->required();
  cmd_classify->add_option("--dim", dim, "dimension")->required();
  cmd_classify->add_flag("--simplex", simplex_only,
                         "restrict to simplex-realizable tuples");

  CLI::App* cmd_verify = app.add_subcommand(
      "verify",
      "exhaustively verify the volume-5 classification (default) or, with "
      "--prime, the prime-volume spanning statement");
  cmd_verify->add_option("--dim", dim, "dimension")->required();
  cmd_verify->add_option("--prime", prime,
                         "verify spanning for this prime volume");
  cmd_verify->add_option("--max-dim", max_dim,
                         "raise the refusal bound for large runs");

  CLI::App* cmd_pyramid = app.add_subcommand(
      "pyramid", "write the pyramid over a polytope file");
  cmd_pyramid->add_option("file", path, "polytope file")->required();
  cmd_pyramid->add_option("--out", out_path, "output file")->required();

  CLI::App* cmd_examples = app.add_subcommand(
      "examples", "write one of the bundled example polytopes (k = 1, 2, 3)");
  cmd_examples->add_option("--k", witness_k, "example number")->required();
  cmd_examples->add_option("--out", examples_out,
                           "output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (cmd_delta->parsed()) return run_delta(path, as_json);
    if (cmd_ehrhart->parsed()) return run_ehrhart(path, as_json);
    if (cmd_index->parsed()) return run_index(path, as_json);
    if (cmd_classify->parsed()) {
      return run_classify(volume, dim, simplex_only, as_json);
    }
    if (cmd_verify->parsed()) {
      if (prime) return run_verify_spanning(dim, Int(*prime), max_dim, as_json);
      return run_verify_main(dim, max_dim, as_json);
    }
    if (cmd_pyramid->parsed()) return run_pyramid(path, out_path);
    if (cmd_examples->parsed()) return run_examples(witness_k, examples_out);
  } catch (const ehrhart::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const ehrhart::DegenerateInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
