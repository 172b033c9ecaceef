#ifndef FANOHULL_ANALYZE_HPP
#define FANOHULL_ANALYZE_HPP

#include "fanohull/json_io.hpp"

namespace fanohull {

// Aggregated result of the full pipeline on one polytope. Stages that do
// not apply (or hit an unsupported chart) record a note instead of data.
struct AnalysisReport {
  LatticePolytope polytope;
  FanoReport fano;
  Rat volume = 0;
  size_t facet_count = 0;
  size_t lattice_point_count = 0;

  std::optional<RationalPolytope> polar_polytope;
  Rat polar_volume = 0;
  size_t polar_lattice_point_count = 0;
  std::optional<KPolystabilityCertificate> k_polystable;

  std::optional<ChartAtlas> atlas;
  std::optional<GlobalT1> t1;
  std::optional<HullPresentation> hull;
  std::optional<size_t> automorphism_order;
  std::optional<std::vector<Int>> invariant_sequence;
  std::optional<InvariantCertificate> invariant_certificate;  // paper fixture only
  std::optional<PeriodSeries> period;                         // paper fixture only

  std::vector<std::string> notes;
  int exit_code = 0;
};

AnalysisReport analyze_polytope(const LatticePolytope& p, int max_degree, int period_order);

Json report_to_json(const AnalysisReport& r);
std::string report_to_text(const AnalysisReport& r);

}  // namespace fanohull

#endif
