#include "fanohull/analyze.hpp"

#include <sstream>

#include "fanohull/fixtures.hpp"

namespace fanohull {

AnalysisReport analyze_polytope(const LatticePolytope& p, int max_degree, int period_order) {
  AnalysisReport r;
  r.polytope = p;
  r.fano = fano_classify(p);
  r.facet_count = p.is_full_dim() ? facets(p).size() : 0;
  r.lattice_point_count = lattice_points(p).size();
  if (p.is_full_dim()) r.volume = normalized_volume(p);

  if (r.fano.fano) {
    r.polar_polytope = polar(p);
    r.polar_volume = normalized_volume(*r.polar_polytope);
    r.polar_lattice_point_count = lattice_points(*r.polar_polytope).size();
    r.k_polystable = k_polystable_toric(p);
  } else {
    r.notes.push_back("polytope is not Fano; polar analysis skipped");
  }

  bool is_paper = p == fixtures::paper_p();

  if (r.fano.fano && r.fano.canonical) {
    try {
      r.atlas = chart_atlas(p);
    } catch (const std::exception& e) {
      r.notes.push_back(std::string("chart atlas: ") + e.what());
    }
  } else if (r.fano.fano) {
    r.notes.push_back("polytope is not canonical; chart analysis skipped");
  }

  if (r.atlas) {
    try {
      r.t1 = global_t1(*r.atlas);
    } catch (const UnsupportedChartError& e) {
      r.notes.push_back(std::string("graded module computation: ") + e.what());
      r.exit_code = 2;
    }
  }

  if (r.t1) {
    try {
      r.hull = hull_from_global_t1(*r.t1);
    } catch (const UnsupportedChartError& e) {
      r.notes.push_back(std::string("hull assembly: ") + e.what());
      r.exit_code = 2;
    } catch (const std::exception& e) {
      r.notes.push_back(std::string("hull assembly: ") + e.what());
    }
  }

  if (r.hull) {
    try {
      MatrixGroup aut = automorphisms(p);
      r.automorphism_order = aut.order();
      GroupAction action = action_from_automorphisms(*r.hull, aut);
      if (is_paper) {
        r.invariant_certificate =
            verify_invariant_presentation(*r.hull, action, fixtures::paper_ag_claimed(), max_degree);
        r.invariant_sequence = r.invariant_certificate->invariant_sequence;
      } else {
        r.invariant_sequence = invariant_hilbert_function(*r.hull, action, max_degree);
      }
    } catch (const std::exception& e) {
      r.notes.push_back(std::string("invariant ring: ") + e.what());
    }
  } else if (p.is_full_dim()) {
    try {
      r.automorphism_order = automorphisms(p).order();
    } catch (const std::exception&) {
    }
  }

  if (is_paper) r.period = classical_period(fixtures::paper_f(), period_order);
  return r;
}

Json report_to_json(const AnalysisReport& r) {
  Json j;
  Json poly;
  poly["vertices"] = polytope_to_json(r.polytope)["vertices"];
  poly["vertex_count"] = r.polytope.vertices().size();
  poly["facet_count"] = r.facet_count;
  poly["lattice_point_count"] = r.lattice_point_count;
  poly["normalized_volume"] = rat_to_string(r.volume);
  poly["fano"] = r.fano.fano;
  poly["canonical"] = r.fano.canonical;
  poly["terminal"] = r.fano.terminal;
  poly["reflexive"] = r.fano.reflexive;
  poly["centrally_symmetric"] = r.fano.centrally_symmetric;
  j["polytope"] = poly;

  if (r.polar_polytope) {
    Json polar;
    polar["vertices"] = polytope_to_json(*r.polar_polytope)["vertices"];
    polar["vertex_count"] = r.polar_polytope->vertices().size();
    polar["lattice_point_count"] = r.polar_lattice_point_count;
    polar["normalized_volume"] = rat_to_string(r.polar_volume);
    j["polar"] = polar;
  }

  if (r.k_polystable) {
    Json k;
    k["k_polystable"] = r.k_polystable->polystable;
    Json bc = Json::array();
    for (const Rat& q : r.k_polystable->polar_barycentre) bc.push_back(rat_to_string(q));
    k["polar_barycentre"] = bc;
    j["k_polystable"] = k;
  }

  if (r.atlas) {
    Json charts = Json::array();
    for (const ChartReport& c : r.atlas->facet_charts) charts.push_back(chart_report_to_json(c));
    j["charts"] = charts;
    Json inter = Json::array();
    for (size_t e = 0; e < r.atlas->intersection_charts.size(); ++e) {
      Json c = chart_report_to_json(r.atlas->intersection_charts[e]);
      c["between"] = {r.atlas->singular_pairs[e].first, r.atlas->singular_pairs[e].second};
      inter.push_back(c);
    }
    j["singular_intersections"] = inter;
  }

  if (r.t1) {
    Json t;
    t["h0"] = module_to_json(r.t1->result.h0);
    t["h1"] = module_to_json(r.t1->result.h1);
    t["h1_vanishes"] = r.t1->result.h1.is_zero();
    Json w = Json::array();
    for (const IntVec& v : r.t1->weight_list) w.push_back(int_vec_to_json(v));
    t["weights"] = w;
    t["exceptional_classes"] = r.t1->result.exceptional.size();
    t["partition_classes"] = r.t1->result.classes.size();
    j["t1"] = t;
  }

  if (r.hull) j["hull"] = hull_to_json(*r.hull);
  if (r.automorphism_order) j["automorphism_order"] = *r.automorphism_order;
  if (r.invariant_certificate) j["invariants"] = certificate_to_json(*r.invariant_certificate);
  else if (r.invariant_sequence) {
    Json seq = Json::array();
    for (const Int& x : *r.invariant_sequence) seq.push_back(x.str());
    j["invariants"] = Json{{"invariant_hilbert_function", seq}};
  }

  if (r.period) {
    Json c = Json::array();
    for (const Int& x : r.period->coefficients) c.push_back(x.str());
    j["period"] = c;
  }

  j["notes"] = r.notes;
  j["exit_code"] = r.exit_code;
  return j;
}

std::string report_to_text(const AnalysisReport& r) {
  std::ostringstream os;
  os << "Polytope: " << r.polytope.vertices().size() << " vertices, " << r.facet_count
     << " facets, " << r.lattice_point_count << " lattice points\n";
  os << "  normalized volume: " << rat_to_string(r.volume) << "\n";
  os << "  fano=" << r.fano.fano << " canonical=" << r.fano.canonical
     << " terminal=" << r.fano.terminal << " reflexive=" << r.fano.reflexive
     << " centrally_symmetric=" << r.fano.centrally_symmetric << "\n";
  if (r.polar_polytope) {
    os << "Polar: " << r.polar_polytope->vertices().size() << " vertices, "
       << r.polar_lattice_point_count
       << " lattice points, normalized volume " << rat_to_string(r.polar_volume) << "\n";
  }
  if (r.k_polystable) {
    os << "K-polystable: " << (r.k_polystable->polystable ? "yes" : "no") << " (polar barycentre "
       << to_string(r.k_polystable->polar_barycentre) << ")\n";
  }
  if (r.atlas) {
    os << "Charts (" << r.atlas->facet_charts.size() << " facets, "
       << r.atlas->intersection_charts.size() << " singular intersections):\n";
    for (const ChartReport& c : r.atlas->facet_charts) {
      os << "  " << c.id << ": ";
      if (c.smooth)
        os << "smooth";
      else if (c.quotient && c.qg_rigid)
        os << "quotient " << c.quotient->str() << ", rigid";
      else if (c.presentation)
        os << "hypersurface " << c.presentation->type_string();
      else
        os << "Gorenstein, " << c.hilbert_basis_size << " semigroup generators";
      os << " (gorenstein index " << c.gorenstein_index << ")\n";
    }
    for (size_t e = 0; e < r.atlas->intersection_charts.size(); ++e) {
      const ChartReport& c = r.atlas->intersection_charts[e];
      os << "  " << c.id << " (intersection): ";
      if (c.presentation)
        os << "hypersurface " << c.presentation->type_string() << " with unit\n";
      else
        os << "singular, no presentation\n";
    }
  }
  if (r.t1) {
    auto total = r.t1->result.h0.total_dim();
    os << "Graded deformation module: H0 dimension "
       << (total ? total->str() : std::string("infinite")) << ", H1 "
       << (r.t1->result.h1.is_zero() ? "= 0" : "nonzero") << "\n";
    os << "  weights:";
    for (const IntVec& w : r.t1->weight_list) os << ' ' << to_string(w);
    os << "\n  partition classes: " << r.t1->result.classes.size() << " ("
       << r.t1->result.exceptional.size() << " exceptional)\n";
  }
  if (r.hull) {
    os << "Hull: " << r.hull->vars.size() << " variables, ideal " << r.hull->ideal_string() << "\n";
    os << "  weights:";
    for (const HullVariable& v : r.hull->vars) os << ' ' << v.name << "=" << to_string(v.weight);
    os << "\n";
  }
  if (r.automorphism_order) os << "Automorphism group order: " << *r.automorphism_order << "\n";
  if (r.invariant_certificate) {
    os << "Invariant ring vs claimed presentation: "
       << (r.invariant_certificate->match ? "MATCH" : "MISMATCH") << "\n  dims:";
    for (const Int& x : r.invariant_certificate->invariant_sequence) os << ' ' << x;
    os << "\n";
  } else if (r.invariant_sequence) {
    os << "Invariant Hilbert function:";
    for (const Int& x : *r.invariant_sequence) os << ' ' << x;
    os << "\n";
  }
  if (r.period) {
    os << "Classical period:";
    for (const Int& c : r.period->coefficients) os << ' ' << c;
    os << "\n";
  }
  for (const std::string& n : r.notes) os << "note: " << n << "\n";
  return os.str();
}

}  // namespace fanohull
