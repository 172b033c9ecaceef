#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "fanohull/analyze.hpp"
#include "fanohull/fixtures.hpp"

using namespace fanohull;

namespace {

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  Json j;
  in >> j;
  return j;
}

LatticePolytope load_polytope(const std::string& input) {
  if (input == "paper-P") return fixtures::paper_p();
  if (input == "cube") return fixtures::cube();
  return lattice_polytope_from_json(load_json(input));
}

LaurentPolynomial load_laurent(const std::string& input) {
  if (input == "paper-f") return fixtures::paper_f();
  if (input == "xpx") return fixtures::x_plus_xinv();
  return laurent_from_json(load_json(input));
}

HullPresentation load_hull(const std::string& input) {
  if (input == "paper-A") return fixtures::paper_a();
  if (input == "paper-AG") return fixtures::paper_ag_claimed();
  return hull_from_json(load_json(input));
}

std::vector<std::pair<IntMat, std::vector<size_t>>> load_action(const std::string& input) {
  if (input == "paper-G-action") return fixtures::paper_g_action();
  return action_generators_from_json(load_json(input));
}

void emit(const std::string& text, const std::string& output) {
  if (output.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
  } else {
    std::ofstream out(output);
    if (!out) throw std::invalid_argument("cannot write " + output);
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toric pipeline: polytope, charts, graded deformations, hull, period"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string output;
  app.add_option("--format", format, "Output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--output", output, "Write the result to a file");

  auto* analyze = app.add_subcommand("analyze", "Full pipeline on a polytope");
  std::string analyze_input = "paper-P";
  int max_degree = 8;
  int period_order = 10;
  analyze->add_option("input", analyze_input, "Polytope JSON file or fixture name (paper-P, cube)");
  analyze->add_option("--max-degree", max_degree, "Invariant ring comparison degree bound");
  analyze->add_option("--order", period_order, "Classical period order for the bundled fixture");

  auto* period = app.add_subcommand("period", "Classical period of a Laurent polynomial");
  std::string period_input = "paper-f";
  int order = 10;
  int order_bound = 12;
  period->add_option("input", period_input, "Polynomial JSON file or fixture name (paper-f, xpx)");
  period->add_option("--order", order, "Number of period coefficients");
  period->add_option("--order-bound", order_bound, "Configured upper bound for --order");

  auto* invariants = app.add_subcommand("invariants", "Invariant Hilbert function comparison");
  std::string inv_hull = "paper-A", inv_action = "paper-G-action", inv_claimed = "paper-AG";
  int inv_degree = 8;
  invariants->add_option("hull", inv_hull, "Hull JSON file or fixture paper-A");
  invariants->add_option("action", inv_action, "Action JSON file or fixture paper-G-action");
  invariants->add_option("claimed", inv_claimed, "Claimed presentation file or fixture paper-AG");
  invariants->add_option("--max-degree", inv_degree, "Degree bound");

  auto* t1cmd = app.add_subcommand("t1", "Graded deformation module of a polytope");
  std::string t1_input = "paper-P";
  t1cmd->add_option("input", t1_input, "Polytope JSON file or fixture name");

  auto* hullcmd = app.add_subcommand("hull", "Deformation hull of a polytope");
  std::string hull_input = "paper-P";
  hullcmd->add_option("input", hull_input, "Polytope JSON file or fixture name");

  auto* auts = app.add_subcommand("auts", "Automorphism group of a polytope");
  std::string auts_input = "paper-P";
  auts->add_option("input", auts_input, "Polytope JSON file or fixture name");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) {
      AnalysisReport rep = analyze_polytope(load_polytope(analyze_input), max_degree, period_order);
      emit(format == "json" ? report_to_json(rep).dump(2) : report_to_text(rep), output);
      return rep.exit_code;
    }

    if (*period) {
      if (order < 0 || order > order_bound) {
        std::cerr << "error: order must lie in [0, " << order_bound << "]\n";
        return 1;
      }
      PeriodSeries s = classical_period(load_laurent(period_input), order);
      if (format == "json") {
        Json j = Json::array();
        for (const Int& c : s.coefficients) j.push_back(c.str());
        emit(j.dump(2), output);
      } else {
        std::ostringstream os;
        for (size_t i = 0; i < s.coefficients.size(); ++i) {
          if (i) os << ',';
          os << s.coefficients[i];
        }
        emit(os.str(), output);
      }
      return 0;
    }

    if (*invariants) {
      HullPresentation h = load_hull(inv_hull);
      GroupAction action = build_group_action(h, load_action(inv_action));
      HullPresentation claimed = load_hull(inv_claimed);
      InvariantCertificate cert = verify_invariant_presentation(h, action, claimed, inv_degree);
      if (format == "json") {
        emit(certificate_to_json(cert).dump(2), output);
      } else {
        std::ostringstream os;
        os << "invariant:    ";
        for (const Int& x : cert.invariant_sequence) os << ' ' << x;
        os << "\npresentation:";
        for (const Int& x : cert.presentation_sequence) os << ' ' << x;
        os << "\n" << (cert.match ? "MATCH" : "MISMATCH");
        if (!cert.match) {
          for (size_t d = 0; d < cert.invariant_sequence.size(); ++d)
            if (cert.invariant_sequence[d] != cert.presentation_sequence[d]) {
              os << " at degree " << d;
              break;
            }
        }
        emit(os.str(), output);
      }
      return cert.match ? 0 : 0;
    }

    if (*t1cmd) {
      GlobalT1 g = global_t1(load_polytope(t1_input));
      if (format == "json") {
        Json j;
        j["h0"] = module_to_json(g.result.h0);
        j["h1"] = module_to_json(g.result.h1);
        Json w = Json::array();
        for (const IntVec& v : g.weight_list) w.push_back(int_vec_to_json(v));
        j["weights"] = w;
        emit(j.dump(2), output);
      } else {
        std::ostringstream os;
        auto total = g.result.h0.total_dim();
        os << "H0 dimension " << (total ? total->str() : std::string("infinite")) << "\n";
        os << "H1 " << (g.result.h1.is_zero() ? "= 0" : "nonzero") << "\nweights:";
        for (const IntVec& w : g.weight_list) os << ' ' << to_string(w);
        emit(os.str(), output);
      }
      return 0;
    }

    if (*hullcmd) {
      GlobalT1 g = global_t1(load_polytope(hull_input));
      HullPresentation h = hull_from_global_t1(g);
      if (format == "json") {
        emit(hull_to_json(h).dump(2), output);
      } else {
        std::ostringstream os;
        os << h.vars.size() << " variables, ideal " << h.ideal_string() << "\nweights:";
        for (const HullVariable& v : h.vars) os << ' ' << v.name << '=' << to_string(v.weight);
        emit(os.str(), output);
      }
      return 0;
    }

    if (*auts) {
      MatrixGroup g = automorphisms(load_polytope(auts_input));
      if (format == "json") {
        Json j;
        j["order"] = g.order();
        Json els = Json::array();
        for (const IntMat& m : g.elements) {
          Json rows = Json::array();
          for (size_t i = 0; i < m.rows(); ++i) rows.push_back(int_vec_to_json(m.row(i)));
          els.push_back(rows);
        }
        j["elements"] = els;
        emit(j.dump(2), output);
      } else {
        emit("order " + std::to_string(g.order()), output);
      }
      return 0;
    }
  } catch (const UnsupportedChartError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
