#include "kskit/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "kskit/error.hpp"
#include "json.hpp"

#ifndef KSKIT_DEFAULT_DATA_DIR
#define KSKIT_DEFAULT_DATA_DIR "data"
#endif

namespace kskit {
namespace {

Basis basis_of(std::string_view a, std::string_view b, std::string_view c) {
  return Basis(parse_ray(a), parse_ray(b), parse_ray(c));
}

std::vector<Ray> rays_of(const GameBases& g) {
  std::vector<Ray> out;
  for (const auto* side : {&g.alice, &g.bob}) {
    for (const auto& lb : *side) {
      for (const auto& r : lb.basis.rays()) {
        if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
      }
    }
  }
  return out;
}

struct LegacyEntry {
  std::string_view name;
  std::string_view file;
};

constexpr LegacyEntry kLegacy[] = {
    {"peres33", "peres33.json"},
    {"conway31", "conway31.json"},
    {"schuette33", "schuette33.json"},
    {"penrose33", "penrose33.json"},
};

}  // namespace

const std::string& x3_correction_note() {
  static const std::string note =
      "basis x=3: printed third vector (ω²,ω,1) is not orthogonal to (1,-ω,ω²) (inner product -2) "
      "or to (1,-1,1) (inner product -2ω); replaced by the unique completion (ω²,-ω,1)";
  return note;
}

const GameBases& new33_game_bases() {
  static const GameBases bases = [] {
    GameBases g;
    g.alice.push_back({"x=0", basis_of("(0,0,1)", "(0,1,0)", "(1,0,0)"), std::nullopt});
    g.alice.push_back({"x=1", basis_of("(1,w,w^2)", "(1,1,1)", "(w^2,w,1)"), std::nullopt});
    g.alice.push_back({"x=2", basis_of("(1,w,-w^2)", "(1,1,-1)", "(w^2,w,-1)"), std::nullopt});
    g.alice.push_back({"x=3", basis_of("(1,-w,w^2)", "(1,-1,1)", "(w^2,-w,1)"), x3_correction_note()});
    g.alice.push_back({"x=4", basis_of("(-1,w,w^2)", "(-1,1,1)", "(-w^2,w,1)"), std::nullopt});
    g.bob.push_back({"y=0", basis_of("(0,0,1)", "(1,1,0)", "(1,-1,0)"), std::nullopt});
    g.bob.push_back({"y=1", basis_of("(0,0,1)", "(1,w,0)", "(1,-w,0)"), std::nullopt});
    g.bob.push_back({"y=2", basis_of("(0,0,1)", "(w,1,0)", "(w,-1,0)"), std::nullopt});
    g.bob.push_back({"y=3", basis_of("(0,1,0)", "(1,0,1)", "(1,0,-1)"), std::nullopt});
    g.bob.push_back({"y=4", basis_of("(0,1,0)", "(1,0,w)", "(1,0,-w)"), std::nullopt});
    g.bob.push_back({"y=5", basis_of("(0,1,0)", "(w,0,1)", "(w,0,-1)"), std::nullopt});
    g.bob.push_back({"y=6", basis_of("(1,0,0)", "(0,1,1)", "(0,1,-1)"), std::nullopt});
    g.bob.push_back({"y=7", basis_of("(1,0,0)", "(0,1,w)", "(0,1,-w)"), std::nullopt});
    g.bob.push_back({"y=8", basis_of("(1,0,0)", "(0,w,1)", "(0,w,-1)"), std::nullopt});
    return g;
  }();
  return bases;
}

std::array<Ray, 3> new33_x3_as_printed() {
  return {parse_ray("(1,-w,w^2)"), parse_ray("(1,-1,1)"), parse_ray("(w^2,w,1)")};
}

std::vector<Ray> new33_rays() { return rays_of(new33_game_bases()); }

std::vector<Ray> yuoh_h_rays() {
  return {parse_ray("(1,1,1)"), parse_ray("(1,1,-1)"), parse_ray("(1,-1,1)"), parse_ray("(-1,1,1)")};
}

std::vector<Ray> yuoh13_rays() {
  std::vector<Ray> out;
  for (const char* s : {"(1,0,0)", "(0,1,0)", "(0,0,1)", "(0,1,1)", "(0,1,-1)", "(1,0,1)", "(1,0,-1)", "(1,1,0)",
                        "(1,-1,0)"}) {
    out.push_back(parse_ray(s));
  }
  for (auto& h : yuoh_h_rays()) out.push_back(std::move(h));
  return out;
}

std::vector<std::string> builtin_names() {
  std::vector<std::string> names{"new33", "yuoh13"};
  for (const auto& e : kLegacy) names.emplace_back(e.name);
  return names;
}

std::filesystem::path data_dir() {
  if (const char* env = std::getenv("KSKIT_DATA_DIR"); env != nullptr && *env != '\0') return env;
  return KSKIT_DEFAULT_DATA_DIR;
}

KSInstance builtin(std::string_view name) {
  if (name == "new33") {
    const auto rays = new33_rays();
    return KSInstance("new33", rays, "33 rays from the 14 bases x=0..4, y=0..8 of the 5x9 game",
                      {x3_correction_note()});
  }
  if (name == "yuoh13") {
    const auto rays = yuoh13_rays();
    return KSInstance("yuoh13", rays, "13-ray state-independent contextuality set (Yu and Oh, 2012)");
  }
  for (const auto& e : kLegacy) {
    if (e.name != name) continue;
    const auto path = data_dir() / e.file;
    if (!std::filesystem::exists(path)) {
      throw DataUnavailable("no coordinates installed for " + std::string(name) + " (expected " + path.string() +
                            ")");
    }
    auto loaded = load_set(path);
    if (!loaded.issues.empty()) throw ParseError(path.string() + ": declared bases are not orthogonal");
    return std::move(loaded.instance);
  }
  throw UnknownSet("unknown set '" + std::string(name) + "'");
}

KSInstance resolve_set(std::string_view name_or_path) {
  const auto names = builtin_names();
  if (std::find(names.begin(), names.end(), name_or_path) != names.end()) return builtin(name_or_path);
  const std::filesystem::path path{std::string(name_or_path)};
  if (std::filesystem::exists(path)) return load_set(path).instance;
  throw UnknownSet("'" + std::string(name_or_path) + "' is neither a builtin set nor a readable file");
}

// ---------------------------------------------------------------------------
// JSON data files.

namespace {

using nlohmann::json;

Integer json_integer(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Integer(std::to_string(v.get<long long>()));
  if (v.is_string()) {
    try {
      return Integer(v.get<std::string>());
    } catch (const std::invalid_argument&) {
      // fall through
    }
  }
  throw ParseError(where + ": expected an integer");
}

CycNumber parse_component(const json& v, int conductor, const std::string& where) {
  if (!v.is_array()) throw ParseError(where + ": component must be a list of [power, num, den] triples");
  std::vector<CycTerm> terms;
  for (const auto& t : v) {
    if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer()) {
      throw ParseError(where + ": malformed term " + t.dump());
    }
    CycTerm term{t[0].get<std::int64_t>(), json_integer(t[1], where), json_integer(t[2], where)};
    if (term.denominator == 0) throw ParseError(where + ": zero denominator");
    terms.push_back(std::move(term));
  }
  return CycNumber::from_terms(conductor, terms);
}

json component_json(const CycNumber& c) {
  json out = json::array();
  for (const auto& t : c.terms()) {
    const auto num = t.numerator.fits_slong_p() ? json(t.numerator.get_si()) : json(t.numerator.get_str());
    const auto den = t.denominator.fits_slong_p() ? json(t.denominator.get_si()) : json(t.denominator.get_str());
    out.push_back(json::array({t.power, num, den}));
  }
  return out;
}

}  // namespace

VectorSetFile parse_vector_set(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("vector set file must be a JSON object");
  VectorSetFile f;
  try {
    f.name = doc.at("name").get<std::string>();
    f.conductor = doc.at("conductor").get<int>();
    f.provenance = doc.value("provenance", std::string{});
    if (f.conductor < 1) throw ParseError("conductor must be positive");
    const auto& rays = doc.at("rays");
    if (!rays.is_array() || rays.empty()) throw ParseError("'rays' must be a nonempty list");
    for (std::size_t i = 0; i < rays.size(); ++i) {
      const auto where = "ray " + std::to_string(i);
      if (!rays[i].is_array() || rays[i].size() != 3) throw ParseError(where + ": expected 3 components");
      Components c;
      for (std::size_t j = 0; j < 3; ++j) c[j] = parse_component(rays[i][j], f.conductor, where);
      if (c[0].is_zero() && c[1].is_zero() && c[2].is_zero()) throw ParseError(where + ": zero vector");
      f.rays.push_back(std::move(c));
    }
    if (doc.contains("labels")) f.labels = doc.at("labels").get<std::vector<std::string>>();
    if (doc.contains("declared_bases")) {
      for (const auto& b : doc.at("declared_bases")) {
        const auto idx = b.get<std::vector<std::size_t>>();
        if (idx.size() != 3) throw ParseError("declared basis must list 3 ray indices");
        for (auto k : idx) {
          if (k >= f.rays.size()) throw ParseError("declared basis index " + std::to_string(k) + " out of range");
        }
        f.declared_bases.push_back({idx[0], idx[1], idx[2]});
      }
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("vector set file: ") + e.what());
  }
  return f;
}

std::string serialize_vector_set(const VectorSetFile& file) {
  json doc;
  doc["name"] = file.name;
  doc["conductor"] = file.conductor;
  doc["provenance"] = file.provenance;
  json rays = json::array();
  for (const auto& r : file.rays) {
    rays.push_back(json::array({component_json(r[0]), component_json(r[1]), component_json(r[2])}));
  }
  doc["rays"] = std::move(rays);
  if (!file.labels.empty()) doc["labels"] = file.labels;
  if (!file.declared_bases.empty()) {
    json bases = json::array();
    for (const auto& b : file.declared_bases) bases.push_back(json::array({b[0], b[1], b[2]}));
    doc["declared_bases"] = std::move(bases);
  }
  return doc.dump(1) + "\n";
}

VectorSetFile to_vector_set(const KSInstance& inst, int conductor) {
  VectorSetFile f;
  f.name = inst.name();
  f.conductor = conductor;
  f.provenance = inst.provenance();
  for (const auto& r : inst.rays()) {
    const auto& c = r.canonical();
    f.rays.push_back({c[0].coerce(conductor), c[1].coerce(conductor), c[2].coerce(conductor)});
    f.labels.push_back(r.to_string());
  }
  f.declared_bases = inst.bases();
  return f;
}

LoadedSet load_set_text(std::string_view json_text, const std::string& origin) {
  VectorSetFile f;
  try {
    f = parse_vector_set(json_text);
  } catch (const ParseError& e) {
    throw ParseError(origin + ": " + e.what());
  }
  std::vector<Ray> rays;
  rays.reserve(f.rays.size());
  for (const auto& c : f.rays) rays.emplace_back(c);
  for (std::size_t i = 0; i < rays.size(); ++i) {
    for (std::size_t j = i + 1; j < rays.size(); ++j) {
      if (rays[i] == rays[j]) {
        throw ParseError(origin + ": rays " + std::to_string(i) + " and " + std::to_string(j) + " are the same ray " +
                         rays[i].to_string());
      }
    }
  }
  std::vector<DeclaredBasisIssue> issues;
  for (std::size_t b = 0; b < f.declared_bases.size(); ++b) {
    const auto& t = f.declared_bases[b];
    auto check = validate_basis({rays[t[0]], rays[t[1]], rays[t[2]]});
    if (!check.ok()) issues.push_back({b, t, std::move(check)});
  }
  return {KSInstance(f.name, rays, f.provenance), std::move(issues)};
}

LoadedSet load_set(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_set_text(buf.str(), path.string());
}

}  // namespace kskit
