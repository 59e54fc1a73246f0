#pragma once

// JSON and text exchange formats.  Requires nlohmann/json (vendor/json.hpp).

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "cherednik/bridge.hpp"
#include "cherednik/canonical.hpp"
#include "cherednik/characters.hpp"
#include "cherednik/crystal.hpp"
#include "cherednik/fock.hpp"
#include "cherednik/params.hpp"

namespace cherednik::io {

using nlohmann::json;

/// "symbolic" means the indeterminate k; anything else is scalar text.
inline Scalar parse_kappa(const std::string& text, int l) {
  if (text == "symbolic" || text == "k") return Scalar::kappa();
  return Scalar::parse(text, l);
}

inline Scalar scalar_from_json(const json& j, int l) {
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (j.is_string()) return Scalar::parse(j.get<std::string>(), l);
  throw PreconditionError("expected an integer or scalar text, got " + j.dump());
}

/// { "l":2, "n":2, "kappa":"symbolic", "s":[-1,0], "m":[0,0] }
inline ParamKS param_from_json(const json& j) {
  ParamKS p;
  p.l = j.at("l").get<int>();
  p.n = j.value("n", 1);
  const json& k = j.contains("kappa") ? j.at("kappa") : json("symbolic");
  p.kappa = k.is_string() ? parse_kappa(k.get<std::string>(), p.l) : scalar_from_json(k, p.l);
  for (const auto& x : j.at("s")) p.s.push_back(scalar_from_json(x, p.l));
  if (j.contains("m") && !j.at("m").is_null()) {
    std::vector<Rational> m;
    for (const auto& x : j.at("m"))
      m.push_back(x.is_string() ? parse_rational(x.get<std::string>()) : Rational(x.get<long>()));
    p.m = m;
  }
  p.validate();
  return p;
}

inline json param_to_json(const ParamKS& p) {
  json j;
  j["l"] = p.l;
  j["n"] = p.n;
  j["kappa"] = p.symbolic() && p.kappa == Scalar::kappa() ? "symbolic" : p.kappa.to_string();
  json s = json::array();
  for (const auto& x : p.s) {
    if (x.is_integer())
      s.push_back(x.rational_value().get_num().get_si());
    else
      s.push_back(x.to_string());
  }
  j["s"] = s;
  if (p.m) {
    json m = json::array();
    for (const auto& x : *p.m) m.push_back(x.get_str());
    j["m"] = m;
  }
  return j;
}

/// {"gamma":"<scalar>", "num":"<qpoly>", "den":[...]} per term.
inline json to_json(const GradedCharacter& g) {
  json out = json::array();
  for (const auto& t : g.terms) out.push_back({{"gamma", t.gamma.to_string()}, {"num", t.num.to_string('q')}, {"den", t.den}});
  return out.size() == 1 ? out.front() : out;
}

inline json to_json(const Tableau& A) { return {{"shape", A.shape.heights}, {"cols", A.cols}}; }

inline Tableau tableau_from_json(const json& j) {
  Tableau A;
  A.shape.heights = j.at("shape").get<std::vector<int>>();
  A.cols = j.at("cols").get<std::vector<std::vector<int>>>();
  if (!A.well_shaped()) throw PreconditionError("tableau columns do not match the shape");
  return A;
}

/// {"block":[lambda...], "rows":k, "entries":[[mu, lambda, "v+v^3"], ...]}
inline json to_json(const DMatrixBlock& b) {
  json block = json::array();
  for (const auto& x : b.block) block.push_back(x.to_string());
  json entries = json::array();
  for (const auto& lam : b.block)
    for (const auto& mu : b.block) {
      const VPoly d = b.at(mu, lam);
      if (!d.is_zero()) entries.push_back({mu.to_string(), lam.to_string(), d.to_string('v')});
    }
  return {{"block", block}, {"rows", b.block.size()}, {"entries", entries}};
}

inline json to_json(const CrystalGraph& g) {
  json nodes = json::array();
  for (const auto& x : g.nodes) nodes.push_back(x.to_string());
  json edges = json::array();
  for (const auto& e : g.edges) edges.push_back({{"from", e.from.to_string()}, {"to", e.to.to_string()}, {"i", e.i}});
  return {{"nodes", nodes}, {"edges", edges}};
}

inline json to_json(const FockVector& x) {
  json out = json::object();
  for (const auto& [lam, c] : x) out[lam.to_string()] = c.to_string('v');
  return out;
}

/// One "row col value" line per nonzero entry.
inline std::string to_triplets(const std::vector<SparseEntry>& entries) {
  std::ostringstream os;
  for (const auto& e : entries) os << e.row << ' ' << e.col << ' ' << e.value.to_string('v') << '\n';
  return os.str();
}

}  // namespace cherednik::io
