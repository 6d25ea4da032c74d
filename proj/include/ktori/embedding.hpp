#pragma once

#include <optional>
#include <string>

#include "ktori/mesh.hpp"

namespace ktori {

struct EmbeddingViolation {
  int face_a = -1;  // indices into complex.faces(); face_b = -1 for single-face problems
  int face_b = -1;
  std::string reason;
};

struct EmbeddingCertificate {
  bool embedded = true;
  std::optional<EmbeddingViolation> violation;  // first one found, in face-pair order
  long long pairs_tested = 0;
};

// Two faces may meet only in their common vertex or edge; everything else is a
// violation. Exact arithmetic throughout; a floating-point box test only
// skips pairs whose boxes are far apart. threads <= 0 uses the hardware count.
EmbeddingCertificate verify_embedding(const Mesh& mesh, int threads = 1);

}  // namespace ktori
