#ifndef EVS_JSON_IO_HPP
#define EVS_JSON_IO_HPP

#include <json.hpp>

#include "evs/p1split.hpp"

namespace evs {

using json = nlohmann::json;

/// algebra.json: {"p", "dim", "labels", "brackets": [[i, j, [[k, c], ...]], ...],
/// "p_powers": [[i, [[k, c], ...]], ...], "matrix_realization": {"N", "mats"}?}.
/// Indices 0-based, coefficients reduced mod p, brackets listed for i < j only.
json algebra_to_json(const RestrictedLieAlgebra& L);
RestrictedLieAlgebra algebra_from_json(const json& j);

/// module.json: {"label", "dim", "actions": [[[row], ...], ...]} aligned with
/// the algebra's basis order.
json module_to_json(const UModule& M);
UModule module_from_json(const json& j, const FqCtx* ctx);

/// locus.json: {"sigma": [ints], "params": d, "coords": [{"i", "j", "poly"}],
/// "label"}; "poly" is a sparse list [[exponent-vector, coefficient], ...].
/// The ambient dimension n comes from the accompanying algebra.
json locus_to_json(const ChartParam& cp);
ChartParam locus_from_json(const json& j, const FqCtx* ctx, std::size_t n);

/// {j, generic: {ker, im}, points: [{coords, ker, im, soc, rad, agree}],
/// certified, sheaf_rank_constant, narrative}.
json sheaf_report_to_json(const SheafReport& rep);

/// {"rank", "twists", "hilbert", "entry_degree"}.
json splitting_to_json(const SplittingType& st);

json scan_report_to_json(const ScanReport& rep);
json constancy_to_json(const ConstancyCertificate& c);

}  // namespace evs

#endif
