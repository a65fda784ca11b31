#include "bruhat/serialize.hpp"

#include <sstream>

#include "bruhat/error.hpp"

namespace bruhat {

namespace {

Json one_based(const std::vector<int>& vertices) {
  Json out = Json::array();
  for (int k : vertices) out.push_back(k + 1);
  return out;
}

template <typename T>
T get_field(const Json& json, const char* key) {
  if (!json.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  try {
    return json.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("field '") + key + "': " + e.what());
  }
}

}  // namespace

Json to_json(const CartanSpec& cartan) {
  Json out;
  out["label"] = cartan.label().to_string();
  out["rank"] = cartan.rank();
  out["matrix"] = cartan.rows();
  return out;
}

Json to_json(const SignedWord& word) {
  Json out = Json::array();
  for (const auto& l : word.letters()) out.push_back(l.sign * (l.index + 1));
  return out;
}

SignedWord signed_word_from_json(const Json& json, const CartanSpec& cartan) {
  if (!json.is_array()) throw ParseError("signed word must be a JSON array");
  std::vector<Letter> letters;
  for (const auto& v : json) {
    if (!v.is_number_integer()) throw ParseError("signed word entries must be integers");
    const int x = v.get<int>();
    const int level = x < 0 ? -x : x;
    if (level < 1 || level > cartan.rank()) {
      throw ParseError("signed word letter " + std::to_string(x) + " out of range");
    }
    letters.push_back({x < 0 ? -1 : 1, level - 1});
  }
  return SignedWord(std::move(letters));
}

Json to_json(const SigmaGraph& graph) {
  const int d = graph.size();
  Json out;
  out["type"] = graph.cartan().label().to_string();
  out["word"] = to_json(graph.word());
  out["d"] = d;

  Json levels = Json::array();
  Json signs = Json::array();
  Json lminus = Json::array();
  for (int k = 0; k < d; ++k) {
    levels.push_back(graph.level(k) + 1);
    signs.push_back(graph.sign(k));
    lminus.push_back(graph.previous(k) + 1);
  }
  out["levels"] = std::move(levels);
  out["signs"] = std::move(signs);
  out["lminus"] = std::move(lminus);

  Json edges = Json::array();
  for (const auto& e : graph.edges()) {
    edges.push_back(Json{{"k", e.first + 1}, {"l", e.second + 1}, {"rule", to_string(e.rule)}});
  }
  out["edges"] = std::move(edges);

  Json omega = Json::array();
  for (int k = 0; k < d; ++k) {
    Json row = Json::array();
    for (int l = 0; l < d; ++l) row.push_back(graph.omega(k, l) ? 1 : 0);
    omega.push_back(std::move(row));
  }
  out["omega"] = std::move(omega);

  Json masks = Json::array();
  for (int r = 0; r < d; ++r) masks.push_back(one_based(graph.mask(r)));
  out["masks"] = std::move(masks);
  out["bounded"] = one_based(graph.bounded());

  if (graph.has_split()) {
    Json parts;
    parts["t"] = graph.split().threshold();
    std::vector<int> upper_levels;
    for (int i = 0; i < graph.split().rank(); ++i) {
      if (graph.split().is_upper(i)) upper_levels.push_back(i);
    }
    parts["upper_levels"] = one_based(upper_levels);
    parts["U"] = one_based(graph.upper());
    parts["L"] = one_based(graph.lower());
    parts["B_U"] = one_based(graph.bounded_upper());
    parts["B_L"] = one_based(graph.bounded_lower());
    parts["C_U"] = one_based(graph.free_upper());
    parts["C_L"] = one_based(graph.free_lower());
    out["partitions"] = std::move(parts);
  }
  return out;
}

Json to_json(const OrbitSummary& summary, bool with_representatives) {
  Json out;
  out["d"] = summary.dimension;
  out["orbit_count"] = summary.orbit_count;
  out["fixed_points"] = summary.fixed_points;
  out["nontrivial"] = summary.nontrivial;
  Json hist = Json::array();
  for (const auto& [size, mult] : summary.histogram) hist.push_back(Json::array({size, mult}));
  out["histogram"] = std::move(hist);
  if (with_representatives) {
    out["representatives"] = summary.representatives;
    if (summary.representatives_truncated) out["representatives_truncated"] = true;
  }
  return out;
}

Json to_json(const TransvectionSet& action) {
  Json out;
  out["d"] = action.dimension();
  Json gens = Json::array();
  for (const auto& t : action.generators()) {
    Json mask = Json::array();
    for (int k = 0; k < action.dimension(); ++k) {
      if ((t.mask >> k) & 1U) mask.push_back(k + 1);
    }
    gens.push_back(Json{{"target", t.target + 1}, {"mask", std::move(mask)}, {"bias", t.bias ? 1 : 0}});
  }
  out["generators"] = std::move(gens);
  return out;
}

TransvectionSet transvection_set_from_json(const Json& json) {
  if (!json.is_object()) throw ParseError("transvection set must be a JSON object");
  const int d = get_field<int>(json, "d");
  if (d < 0 || d > TransvectionSet::kMaxDimension) {
    throw ParseError("dimension d must lie in [0," + std::to_string(TransvectionSet::kMaxDimension) + "]");
  }
  std::vector<Transvection> gens;
  if (json.contains("generators")) {
    const auto& arr = json.at("generators");
    if (!arr.is_array()) throw ParseError("'generators' must be an array");
    for (const auto& g : arr) {
      Transvection t;
      const int target = get_field<int>(g, "target");
      if (target < 1 || target > d) throw ParseError("generator target out of range");
      t.target = target - 1;
      for (int k : get_field<std::vector<int>>(g, "mask")) {
        if (k < 1 || k > d) throw ParseError("mask coordinate out of range");
        t.mask |= State{1} << (k - 1);
      }
      if (g.contains("bias")) t.bias = get_field<int>(g, "bias") != 0;
      gens.push_back(t);
    }
  }
  try {
    return TransvectionSet(d, std::move(gens));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

Json to_json(const std::vector<KnownCount>& table) {
  Json out = Json::array();
  for (const auto& entry : table) {
    out.push_back(Json{{"type", entry.label.to_string()},
                       {"count", entry.count},
                       {"d", entry.dimension},
                       {"reference_only", entry.reference_only}});
  }
  return out;
}

std::string to_csv(const std::vector<KnownCount>& table) {
  std::ostringstream out;
  out << "type,count,d,reference_only\n";
  for (const auto& entry : table) {
    out << entry.label.to_string() << ',' << entry.count << ',' << entry.dimension << ','
        << (entry.reference_only ? "true" : "false") << '\n';
  }
  return out.str();
}

}  // namespace bruhat
