#pragma once

// JSON reports for the command line tool (schema 1).

#include <optional>

#include <gmpxx.h>
#include <json.hpp>

#include "ktori/census.hpp"
#include "ktori/complex.hpp"
#include "ktori/embedding.hpp"
#include "ktori/layers.hpp"

namespace ktori {

nlohmann::json to_json(const DistanceLayerReport& r);
nlohmann::json to_json(const EmbeddingCertificate& c);

// {schema, n, m, s, type, witnesses, layer_report, bound_value,
// bound_satisfied[, determinant]}. Layers are taken around the first vertex
// of the shortest non-separating witness.
nlohmann::json analysis_report(const Triangulation& t, const std::optional<mpz_class>& determinant = {});

// {schema, n, count, complete, by_type}; no timings, so output is reproducible
nlohmann::json census_summary(const CensusResult& r);

}  // namespace ktori
