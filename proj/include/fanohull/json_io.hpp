#ifndef FANOHULL_JSON_IO_HPP
#define FANOHULL_JSON_IO_HPP

#include <json.hpp>

#include "fanohull/hull.hpp"
#include "fanohull/laurent.hpp"
#include "fanohull/ray_module.hpp"

namespace fanohull {

using Json = nlohmann::ordered_json;

Json polytope_to_json(const LatticePolytope& p);
LatticePolytope lattice_polytope_from_json(const Json& j);

Json polytope_to_json(const RationalPolytope& p);
RationalPolytope rational_polytope_from_json(const Json& j);

Json laurent_to_json(const LaurentPolynomial& f);
LaurentPolynomial laurent_from_json(const Json& j);

Json module_to_json(const RayFamilyModule& m);
RayFamilyModule module_from_json(const Json& j);

Json hull_to_json(const HullPresentation& h);
HullPresentation hull_from_json(const Json& j);

Json action_generators_to_json(const std::vector<std::pair<IntMat, std::vector<size_t>>>& gens);
std::vector<std::pair<IntMat, std::vector<size_t>>> action_generators_from_json(const Json& j);

Json chart_report_to_json(const ChartReport& r);
Json presentation_to_json(const ChartPresentation& p);
Json certificate_to_json(const InvariantCertificate& c);

Json int_vec_to_json(const IntVec& v);
IntVec int_vec_from_json(const Json& j);

}  // namespace fanohull

#endif
