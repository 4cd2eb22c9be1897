// Shipped vector sets and the data-file format for the rest.
//
// Builtins "new33" and "yuoh13" are constructed in code. Legacy sets
// ("peres33", "conway31", "schuette33", "penrose33") are JSON files in the
// data directory: $KSKIT_DATA_DIR if set, else the source tree's data/.
#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kskit/colorability.hpp"
#include "kskit/rays.hpp"

namespace kskit {

/// One basis of the 5x9 game, with its label ("x=3") and, when the printed
/// coordinates had to be repaired, a note saying how.
struct LabelledBasis {
  std::string label;
  Basis basis;
  std::optional<std::string> correction;
};

struct GameBases {
  std::vector<LabelledBasis> alice;  // x = 0..4
  std::vector<LabelledBasis> bob;    // y = 0..8
};

/// The 14 bases of the 33-ray set. Basis x=3 carries the repaired third
/// vector (ω²,-ω,1).
const GameBases& new33_game_bases();
/// Basis x=3 exactly as printed: {(1,-ω,ω²),(1,-1,1),(ω²,ω,1)}; not orthogonal.
std::array<Ray, 3> new33_x3_as_printed();
/// The note attached to new33 and to reports that use basis x=3.
const std::string& x3_correction_note();

std::vector<Ray> new33_rays();
std::vector<Ray> yuoh13_rays();
/// (1,1,1), (1,1,-1), (1,-1,1), (-1,1,1).
std::vector<Ray> yuoh_h_rays();

std::vector<std::string> builtin_names();
std::filesystem::path data_dir();

/// Throws UnknownSet for unknown names, DataUnavailable when a data file is missing.
KSInstance builtin(std::string_view name);

// ---------------------------------------------------------------------------
// Data files (JSON):
//
//   {
//     "name": "peres33",
//     "conductor": 8,
//     "provenance": "free text",
//     "rays": [ [c0, c1, c2], ... ],          // c = [[power, num, den], ...]
//     "labels": ["(1,0,0)", ...],             // optional, informational
//     "declared_bases": [[0, 1, 2], ...]      // optional, 0-based ray indices
//   }
//
// A component is the sum of (num/den)·ζ^power over its triples; [] is 0.
// num and den may be JSON integers or decimal strings.

struct VectorSetFile {
  std::string name;
  int conductor = 1;
  std::string provenance;
  std::vector<Components> rays;
  std::vector<std::string> labels;
  std::vector<Triangle> declared_bases;
};

/// Throws ParseError.
VectorSetFile parse_vector_set(std::string_view json_text);
std::string serialize_vector_set(const VectorSetFile& file);
/// Canonical rays of the instance, with its complete bases as declared bases.
VectorSetFile to_vector_set(const KSInstance& inst, int conductor);

struct DeclaredBasisIssue {
  std::size_t index = 0;  // position in declared_bases
  Triangle rays{};        // file ray indices
  BasisCheck check;
};

struct LoadedSet {
  KSInstance instance;
  std::vector<DeclaredBasisIssue> issues;  // declared bases that are not orthogonal
};

/// Reads, canonicalizes and validates a data file. Throws ParseError on
/// malformed files and on duplicate rays; non-orthogonal declared bases are
/// reported in `issues`, not thrown.
LoadedSet load_set(const std::filesystem::path& path);
LoadedSet load_set_text(std::string_view json_text, const std::string& origin = "<memory>");

/// A builtin name or a path to a data file.
KSInstance resolve_set(std::string_view name_or_path);

}  // namespace kskit
