#pragma once

// Dataset ingestion, canonical JSON serialization of invariants, the
// content-addressed result cache, and the pairwise comparison experiment.

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "qep/derived.hpp"

namespace qep {

using nlohmann::json;

inline json phi_to_json(const EnhancementPolynomial<Poly5>& p) {
  std::vector<std::pair<std::string, long>> parts;
  for (auto& [e, m] : p.entries()) parts.push_back({e.text(), m});
  std::sort(parts.begin(), parts.end());
  json arr = json::array();
  for (auto& [t, m] : parts)
    arr.push_back({{"multiplicity", m}, {"exponent_polynomial", t}});
  return arr;
}

inline json lk_to_json(const std::vector<int>& lk) {
  return json(lk);  // already sorted
}

// All invariants of one diagram, as canonical serializations.
struct InvariantSet {
  std::array<std::string, 5> phi;     // canonical JSON text per bracket
  std::array<std::string, 5> phi_tc;  // TC restriction per bracket
  std::string jones;
  std::string lk;

  json to_json() const {
    json j;
    for (int i = 0; i < 5; ++i) {
      j["phi" + std::to_string(i + 1)] = json::parse(phi[i]);
      j["phi_tc" + std::to_string(i + 1)] = json::parse(phi_tc[i]);
    }
    j["jones"] = jones;
    j["lk"] = json::parse(lk);
    return j;
  }

  static InvariantSet from_json(const json& j) {
    InvariantSet s;
    for (int i = 0; i < 5; ++i) {
      s.phi[i] = j.at("phi" + std::to_string(i + 1)).dump();
      s.phi_tc[i] = j.at("phi_tc" + std::to_string(i + 1)).dump();
    }
    s.jones = j.at("jones").get<std::string>();
    s.lk = j.at("lk").dump();
    return s;
  }
};

inline InvariantSet compute_invariants(const OrientedDiagram& d) {
  InvariantSet s;
  for (int i = 1; i <= 5; ++i) {
    Bracket<Poly5> u = universal(i);
    s.phi[i - 1] = phi_to_json(phi(d, u)).dump();
    s.phi_tc[i - 1] = phi_to_json(phi_tc(d, u)).dump();
  }
  s.jones = jones_from_beta(d).text();
  s.lk = lk_to_json(lk_multiset(d)).dump();
  return s;
}

// FNV-1a 64-bit over the PD text; stable across runs and platforms.
inline std::string content_hash(const std::string& text) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

struct DatasetEntry {
  std::string name;
  PDCode pd;
  std::optional<json> expected;
};

// Directory layout: *.pd files (first non-comment line is the diagram),
// optional sibling <name>.expected.json files.
inline std::vector<DatasetEntry> load_dataset(const std::string& dir) {
  namespace fs = std::filesystem;
  std::vector<DatasetEntry> out;
  std::vector<fs::path> files;
  for (auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".pd")
      files.push_back(e.path());
  std::sort(files.begin(), files.end());
  for (auto& path : files) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    DatasetEntry entry;
    entry.name = path.stem().string();
    entry.pd = parse_pd(ss.str());
    fs::path exp = path.parent_path() / (entry.name + ".expected.json");
    if (fs::exists(exp)) {
      std::ifstream ein(exp);
      entry.expected = json::parse(ein);
    }
    out.push_back(std::move(entry));
  }
  if (out.empty()) throw std::runtime_error("dataset has no .pd files");
  return out;
}

// One JSON file per content hash; written atomically (temp + rename).
class ResultCache {
 public:
  explicit ResultCache(std::string dir) : dir_(std::move(dir)) {
    if (!dir_.empty()) std::filesystem::create_directories(dir_);
  }

  std::optional<InvariantSet> lookup(const std::string& pd_text) const {
    if (dir_.empty()) return std::nullopt;
    auto path = entry_path(pd_text);
    if (!std::filesystem::exists(path)) return std::nullopt;
    std::ifstream in(path);
    json j = json::parse(in);
    if (j.at("pd") != pd_text) return std::nullopt;  // hash collision
    return InvariantSet::from_json(j.at("invariants"));
  }

  void store(const std::string& pd_text, const InvariantSet& inv) const {
    if (dir_.empty()) return;
    json j{{"pd", pd_text}, {"invariants", inv.to_json()}};
    auto path = entry_path(pd_text);
    auto tmp = path;
    tmp += ".tmp";
    {
      std::ofstream out(tmp);
      out << j.dump(2) << "\n";
    }
    std::filesystem::rename(tmp, path);
  }

 private:
  std::filesystem::path entry_path(const std::string& pd_text) const {
    return std::filesystem::path(dir_) / (content_hash(pd_text) + ".json");
  }
  std::string dir_;
};

struct ExperimentResult {
  std::vector<std::string> names;
  std::vector<InvariantSet> invariants;
  // pairwise sets of the experiment: x2[i] counts pairs distinguished by
  // phi^(i+1) but not by (J, LK); x2_pair[i][j] counts pairs equal under
  // phi^(i+1) and distinguished by phi^(j+1)
  std::array<long, 5> x2 = {};
  std::array<std::array<long, 5>, 5> x2_pair = {};
  bool prop61_phi13 = true;  // phi1 == phi3 entrywise on every link
  bool prop61_phi24 = true;
  bool tc_jones_consistent = true;  // phi_tc equal <=> jones equal, pairwise

  json to_json() const {
    json j;
    j["links"] = json::array();
    for (size_t i = 0; i < names.size(); ++i)
      j["links"].push_back({{"name", names[i]},
                            {"invariants", invariants[i].to_json()}});
    for (int i = 0; i < 5; ++i) j["x2"][std::to_string(i + 1)] = x2[i];
    for (int i = 0; i < 5; ++i)
      for (int k = 0; k < 5; ++k)
        if (i != k)
          j["x2_pair"][std::to_string(i + 1) + "," + std::to_string(k + 1)] =
              x2_pair[i][k];
    j["phi1_equals_phi3"] = prop61_phi13;
    j["phi2_equals_phi4"] = prop61_phi24;
    j["phi_tc_matches_jones"] = tc_jones_consistent;
    return j;
  }
};

inline ExperimentResult run_experiment(const std::vector<DatasetEntry>& data,
                                       const ResultCache& cache) {
  ExperimentResult res;
  for (const auto& entry : data) {
    std::string text = entry.pd.text();
    std::optional<InvariantSet> inv = cache.lookup(text);
    if (!inv) {
      inv = compute_invariants(OrientedDiagram::build(entry.pd));
      cache.store(text, *inv);
    }
    res.names.push_back(entry.name);
    res.invariants.push_back(std::move(*inv));
  }
  for (auto& inv : res.invariants) {
    if (inv.phi[0] != inv.phi[2]) res.prop61_phi13 = false;
    if (inv.phi[1] != inv.phi[3]) res.prop61_phi24 = false;
  }
  const size_t n = res.names.size();
  for (size_t a = 0; a < n; ++a)
    for (size_t b = a + 1; b < n; ++b) {
      const auto& A = res.invariants[a];
      const auto& B = res.invariants[b];
      bool jl = A.jones == B.jones && A.lk == B.lk;
      for (int i = 0; i < 5; ++i) {
        bool pe = A.phi[i] == B.phi[i];
        if (!pe && jl) res.x2[i]++;
        for (int k = 0; k < 5; ++k)
          if (i != k && pe && A.phi[k] != B.phi[k]) res.x2_pair[i][k]++;
        if ((A.phi_tc[i] == B.phi_tc[i]) != (A.jones == B.jones))
          res.tc_jones_consistent = false;
      }
    }
  return res;
}

}  // namespace qep
