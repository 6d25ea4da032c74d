// ktori: generate, analyze, enumerate and realize triangulated tori.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "ktori/census.hpp"
#include "ktori/complement.hpp"
#include "ktori/complex_io.hpp"
#include "ktori/cyclic_polytope.hpp"
#include "ktori/embedding.hpp"
#include "ktori/error.hpp"
#include "ktori/generators.hpp"
#include "ktori/knots.hpp"
#include "ktori/mesh_io.hpp"
#include "ktori/report.hpp"
#include "ktori/stick_knot.hpp"
#include "ktori/tube.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

struct Output {
  std::string path;
  std::ofstream file;

  std::ostream& stream() {
    if (path.empty() || path == "-") return std::cout;
    if (!file.is_open()) {
      file.open(path);
      if (!file) throw ktori::Error(ktori::ErrorCode::IoError, "cannot write " + path);
    }
    return file;
  }
  bool to_stdout() const { return path.empty() || path == "-"; }
};

double time_budget() {
  const char* s = std::getenv("TORUS_TIME_BUDGET_SECS");
  if (!s || !*s) return 0;
  char* end = nullptr;
  double v = std::strtod(s, &end);
  return end && *end == '\0' && v > 0 ? v : 0;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace ktori;

  CLI::App app{"Triangulated tori: types, stick numbers, knotted realizations"};
  app.require_subcommand(1);
  app.fallthrough();
  int threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  app.add_option("--threads", threads, "worker threads for census and embedding checks")->check(CLI::PositiveNumber);
  std::string out_path;
  app.add_option("-o,--output", out_path, "output file (default stdout)");

  // generate
  auto* gen = app.add_subcommand("generate", "write a torus triangulation");
  std::string family;
  int gen_k = 0;
  gen->add_option("family", family, "moebius | minimal3k | tube-complex")
      ->required()
      ->check(CLI::IsMember({"moebius", "minimal3k", "tube-complex"}));
  gen->add_option("--k", gen_k, "k >= 3");

  // analyze
  auto* ana = app.add_subcommand("analyze", "JSON report: type, s(T), bound, distance layers");
  std::string complex_path;
  ana->add_option("complex", complex_path, "complex file")->required()->check(CLI::ExistingFile);

  // census
  auto* cen = app.add_subcommand("census", "isomorph-free enumeration of tori on n vertices");
  int cen_n = 0;
  int thm_k = 0;
  auto* n_opt = cen->add_option("--n", cen_n, "number of vertices")->check(CLI::Range(kCensusMin, kCensusMax));
  auto* k_opt = cen->add_option("--verify-thm31", thm_k, "check the 3k-2 bound and uniqueness for this k");
  n_opt->excludes(k_opt);

  // realize
  auto* rea = app.add_subcommand("realize", "embedded rational mesh with certificate");
  std::string construction, knot_path, eps_text, format = "off";
  int rea_k = 0, precision = 12;
  rea->add_option("construction", construction, "tube | complement | cyclic")
      ->required()
      ->check(CLI::IsMember({"tube", "complement", "cyclic"}));
  rea->add_option("--knot", knot_path, "stick knot file")->check(CLI::ExistingFile);
  rea->add_option("--eps", eps_text, "tube radius (decimal or p/q)");
  rea->add_option("--k", rea_k, "k for the cyclic realization");
  rea->add_option("--format", format, "off | obj")->check(CLI::IsMember({"off", "obj"}));
  rea->add_option("--precision", precision, "digits after the decimal point")->check(CLI::Range(1, 60));

  // knot det
  auto* kn = app.add_subcommand("knot", "knot invariants of a stick knot");
  std::string what;
  std::string det_knot;
  kn->add_option("what", what, "det")->required()->check(CLI::IsMember({"det"}));
  kn->add_option("--knot", det_knot, "stick knot file")->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  Output out{out_path, {}};
  auto usage = [&](const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    return kUsage;
  };

  try {
    if (*gen) {
      if (family != "moebius" && gen_k < 3) return usage("--k >= 3 required for " + family);
      write_complex(out.stream(), family == "moebius"     ? moebius_torus()
                                  : family == "minimal3k" ? minimal_torus_3k(gen_k)
                                                          : tube_complex(gen_k));
      return kOk;
    }

    if (*ana) {
      ParsedComplex pc = read_complex(complex_path);
      require_torus(pc.complex);
      out.stream() << analysis_report(pc.complex).dump(2) << "\n";
      return kOk;
    }

    if (*cen) {
      CensusOptions opts{threads, time_budget()};
      if (*k_opt) {
        MinimalTypeReport r = census_verify_theorem31(thm_k, opts);
        nlohmann::json j{{"schema", 1},
                         {"k", r.k},
                         {"count_by_n", nlohmann::json::object()},
                         {"none_below", r.none_below},
                         {"unique_at_minimum", r.unique_at_minimum},
                         {"matches_generator", r.matches_generator},
                         {"verified", r.verified()}};
        for (const auto& [n, c] : r.count_by_n) j["count_by_n"][std::to_string(n)] = c;
        out.stream() << j.dump(2) << "\n";
        return r.verified() ? kOk : kVerifyFailed;
      }
      if (!*n_opt) return usage("census needs --n or --verify-thm31");
      CensusResult r = run_census(cen_n, opts);
      auto& os = out.stream();
      for (const auto& rec : r.records) {
        for (std::size_t i = 0; i < rec.canonical_faces.size(); ++i) {
          const Face& f = rec.canonical_faces[i];
          os << (i ? " " : "") << f[0] << "," << f[1] << "," << f[2];
        }
        os << "\n";
      }
      os << census_summary(r).dump() << "\n";
      std::cerr << "census n=" << cen_n << ": " << r.records.size() << " in " << r.seconds << " s\n";
      return r.complete ? kOk : kVerifyFailed;
    }

    if (*rea) {
      std::optional<Mesh> mesh;
      mpz_class det;
      if (construction == "cyclic") {
        if (rea_k < 3) return usage("realize cyclic needs --k >= 3");
        CyclicRealization r = realize_cyclic(rea_k);
        det = r.core_determinant;
        mesh = std::move(r.mesh);
      } else {
        if (knot_path.empty()) return usage("realize " + construction + " needs --knot");
        StickKnot knot = load_stick_knot(knot_path);
        Q eps = eps_text.empty() ? choose_epsilon(knot) : parse_rational(eps_text);
        mesh = construction == "tube" ? tube_construction(knot, eps) : complement_construction(knot, eps);
        det = knot_determinant(knot);
      }
      EmbeddingCertificate cert = verify_embedding(*mesh, threads);
      export_mesh(out.stream(), *mesh, format == "off" ? MeshFormat::Off : MeshFormat::Obj, precision);
      std::ostream& info = out.to_stdout() ? std::cerr : std::cout;
      info << "vertices: " << mesh->coords.size() << "\n"
           << "faces: " << mesh->complex.num_faces() << "\n"
           << "embedded: " << (cert.embedded ? "true" : "false") << "\n"
           << "determinant: " << det << "\n";
      if (mesh->provenance.epsilon) info << "epsilon: " << *mesh->provenance.epsilon << "\n";
      for (const auto& note : mesh->provenance.notes) info << "note: " << note << "\n";
      if (cert.violation)
        info << "violation: faces " << cert.violation->face_a << ", " << cert.violation->face_b << ": "
             << cert.violation->reason << "\n";
      return cert.embedded ? kOk : kVerifyFailed;
    }

    if (*kn) {
      StickKnot knot = load_stick_knot(det_knot);
      KnotDiagram d = project_diagram(knot);
      auto& os = out.stream();
      os << "determinant: " << knot_determinant(d) << "\n"
         << "crossings: " << d.crossings.size() << "\n"
         << "gauss:";
      for (int g : d.gauss_code) os << " " << g;
      os << "\n";
      return kOk;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::ParseError:
      case ErrorCode::IoError:
      case ErrorCode::InvalidK:
      case ErrorCode::OutOfRange:
      case ErrorCode::InvalidArgument:
        return kUsage;
      default:
        return kVerifyFailed;
    }
  }
  return kUsage;
}
