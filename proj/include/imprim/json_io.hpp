#pragma once

#include <json.hpp>

#include "imprim/cherednik.hpp"
#include "imprim/seminormal.hpp"

namespace imprim {

using Json = nlohmann::ordered_json;

Json cyc_to_json(const CycNum& x);
CycNum cyc_from_json(const Json& j);

Json group_element_to_json(const MonomialMatrix& g);  // 1-indexed perm images
MonomialMatrix group_element_from_json(const Json& j, unsigned r);

Json multipartition_to_json(const MultiPartition& mp);
MultiPartition multipartition_from_json(const Json& j, unsigned p, unsigned d);

/// Per-component row-filled entry matrices.
Json tableau_to_json(const StdTableau& t);

Json matrix_to_json(const CycMatrix& m);

Json params_to_json(const HeckeParams& hp);

Json rep_to_json(const Rep& rep, bool include_matrices = true);

/// K-table config: {"coordinate": ["k1", ...], "difference": ["k1"]} with
/// rational strings for the interior entries (boundary zeros are implied).
KTable ktable_from_json(const Json& j, const Arrangement& arr);
Json ktable_to_json(const KTable& k, const Arrangement& arr);

}  // namespace imprim
