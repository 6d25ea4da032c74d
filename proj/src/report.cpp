#include "ktori/report.hpp"

#include "ktori/cycles.hpp"

namespace ktori {

namespace {

nlohmann::json layer_list(const std::vector<LayerCount>& v) {
  auto out = nlohmann::json::array();
  for (const auto& c : v)
    out.push_back({{"i", c.index}, {"size", c.size}, {"required", c.required}, {"checked", c.checked}});
  return out;
}

nlohmann::json signature(const HomologySignature& s) { return nlohmann::json::array({s.p, s.q}); }

}  // namespace

nlohmann::json to_json(const DistanceLayerReport& r) {
  nlohmann::json j{{"m", r.m},
                   {"k", r.k},
                   {"level_sizes", r.level_sizes},
                   {"right_sizes", r.right_sizes},
                   {"left_sizes", r.left_sizes},
                   {"A", layer_list(r.a)},
                   {"B", layer_list(r.b)},
                   {"D", layer_list(r.d)},
                   {"E", layer_list(r.e)},
                   {"ambiguous", r.ambiguous},
                   {"violated", r.violated},
                   {"ok", r.ok()}};
  if (r.c) j["C"] = {{"i", r.c->index}, {"size", r.c->size}, {"required", r.c->required}};
  return j;
}

nlohmann::json to_json(const EmbeddingCertificate& c) {
  nlohmann::json j{{"embedded", c.embedded}, {"pairs_tested", c.pairs_tested}};
  if (c.violation)
    j["violation"] = {{"face_a", c.violation->face_a}, {"face_b", c.violation->face_b}, {"reason", c.violation->reason}};
  return j;
}

nlohmann::json analysis_report(const Triangulation& t, const std::optional<mpz_class>& determinant) {
  HomologyBasis basis(t);
  TorusTypeResult tt = stick_number_and_type(t, basis);
  DistanceLayerReport layers = distance_layers(t, tt.witness_m, tt.witness_m.vertices.front());
  long long bound = lower_bound(tt.m, tt.s);
  nlohmann::json j{{"schema", 1},
                   {"n", t.num_vertices()},
                   {"m", tt.m},
                   {"s", tt.s},
                   {"type", std::to_string(tt.m) + "x" + std::to_string(tt.s)},
                   {"witnesses",
                    {{"m", {{"cycle", tt.witness_m.vertices}, {"class", signature(tt.class_m)}}},
                     {"s", {{"cycle", tt.witness_s.vertices}, {"class", signature(tt.class_s)}}}}},
                   {"layer_report", to_json(layers)},
                   {"bound_value", bound},
                   {"bound_satisfied", t.num_vertices() >= bound}};
  if (determinant) {
    if (determinant->fits_slong_p()) j["determinant"] = determinant->get_si();
    else j["determinant"] = determinant->get_str();
  }
  return j;
}

nlohmann::json census_summary(const CensusResult& r) {
  return {{"schema", 1},
          {"n", r.n},
          {"count", r.records.size()},
          {"complete", r.complete},
          {"by_type", r.by_type()}};
}

}  // namespace ktori
