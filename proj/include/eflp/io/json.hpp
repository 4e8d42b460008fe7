#pragma once

// JSON encoding. Objects are key-sorted, degrees are "num/den" strings and
// literals are "p" or "-p", so equal values always print identically.

#include "eflp/oracles.hpp"

#include <json.hpp>

namespace eflp::io {

using nlohmann::json;

inline json to_json(const TruthValue& v) { return v.to_fraction(); }

inline json to_json(const ParaInterp& interp) {
  json out = json::object();
  for (std::size_t i = 0; i < interp.size(); ++i)
    out[interp.universe()->atom(i)] = json::array({to_json(interp[i].t), to_json(interp[i].f)});
  return out;
}

inline json to_json(const InterpPair& pair) {
  return json{{"lower", to_json(pair.lower)}, {"upper", to_json(pair.upper)}};
}

inline json to_json(const NonParaInterp& k) {
  json out = json::object();
  for (std::size_t i = 0; i < k.size(); ++i) out[k.universe()->atom(i)] = to_json(k[i]);
  return out;
}

inline json to_json(const LiteralSet& s) {
  json out = json::array();
  for (const auto& l : s) out.push_back(l.to_string());
  return out;
}

inline json to_json(const SakamaPair& p) {
  return json{{"proven", to_json(p.proven)}, {"defaults", to_json(p.defaults)}};
}

inline json to_json(const SaadInterp& g) {
  json out = json::object();
  for (const auto& [lit, v] : g.values) out[lit.to_string()] = to_json(v);
  return out;
}

inline json to_json(const SaadModel& m) {
  return json{{"interpretation", to_json(m.interp)}, {"inconsistent", m.inconsistent}};
}

template <class T>
json to_json(const std::vector<T>& items) {
  json out = json::array();
  for (const auto& i : items) out.push_back(to_json(i));
  return out;
}

inline TruthValue truth_from_json(const json& j) {
  if (j.is_string()) return TruthValue::parse(j.get<std::string>());
  if (j.is_number_integer()) {
    auto v = j.get<std::int64_t>();
    return TruthValue::fraction(v, 1);
  }
  throw ConfigError("truth degree must be a string like \"1/2\" or an integer, got " + j.dump());
}

/// Reads {"p": ["1/2", "0"], ...}. Atoms of the universe missing from the
/// object are (0,0); unknown atoms are an error.
inline ParaInterp interp_from_json(const json& j, const UniversePtr& universe) {
  if (!j.is_object()) throw ConfigError("interpretation must be a JSON object");
  ParaInterp out(universe);
  for (const auto& [atom, pair] : j.items()) {
    if (!universe->find(atom)) throw ConfigError("atom '" + atom + "' is not in the program");
    if (!pair.is_array() || pair.size() != 2) throw ConfigError("value of '" + atom + "' must be a pair");
    out.at(atom) = {truth_from_json(pair[0]), truth_from_json(pair[1])};
  }
  return out;
}

}  // namespace eflp::io
