// Copyright 2026 The capacity Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CAPACITY_JSON_IO_HPP
#define CAPACITY_JSON_IO_HPP

#include <json.hpp>

#include <fstream>
#include <string>
#include <vector>

#include "capacity/combinat.hpp"
#include "capacity/fracchrom.hpp"
#include "capacity/haemers.hpp"
#include "capacity/hfrac.hpp"
#include "capacity/report.hpp"
#include "capacity/simplex.hpp"
#include "capacity/theta.hpp"

namespace capacity {

using Json = nlohmann::json;

namespace detail {

template <class T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw parse_error(std::string("missing JSON field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("bad JSON field '") + key + "': " + e.what());
  }
}

inline Rational rational_field(const Json& j, const char* key) {
  const auto& v = j.contains(key) ? j.at(key) : throw parse_error(std::string("missing JSON field '") + key + "'");
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long long>());
  throw parse_error(std::string("field '") + key + "' must be a \"num/den\" string");
}

inline Rational rational_value(const Json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long long>());
  throw parse_error("expected a \"num/den\" string");
}

inline void expect_type(const Json& j, const char* type) {
  if (j.contains("type") && j.at("type") != type)
    throw parse_error(std::string("expected a '") + type + "' document, got '" + j.at("type").dump() + "'");
}

}  // namespace detail

inline Json to_json(const FMatrix& m) {
  return Json{{"p", m.p()}, {"rows", m.rows()}, {"cols", m.cols()},
              {"entries", std::vector<std::uint32_t>(m.entries().begin(), m.entries().end())}};
}

inline FMatrix matrix_from_json(const Json& j) {
  auto p = detail::field<std::uint32_t>(j, "p");
  auto rows = detail::field<std::size_t>(j, "rows");
  auto cols = detail::field<std::size_t>(j, "cols");
  auto entries = detail::field<std::vector<std::int64_t>>(j, "entries");
  if (!is_prime(p)) throw parse_error("matrix modulus " + std::to_string(p) + " is not prime");
  for (auto x : entries)
    if (x < 0 || x >= static_cast<std::int64_t>(p)) throw parse_error("matrix entry out of range 0..p-1");
  return FMatrix(rows, cols, PrimeModulus(p), entries);
}

inline Json to_json(const FitCertificate& c) {
  Json j = to_json(c.matrix);
  j["type"] = "fit";
  j["graph"] = c.graph;
  j["graph_hash"] = c.graph_hash;
  j["claimed_rank"] = c.claimed_rank;
  return j;
}

inline FitCertificate fit_from_json(const Json& j) {
  detail::expect_type(j, "fit");
  return FitCertificate{j.value("graph_hash", std::string()), j.value("graph", std::string()), matrix_from_json(j),
                        detail::field<std::size_t>(j, "claimed_rank")};
}

inline Json to_json(const CliqueCover& c) { return Json{{"type", "clique_cover"}, {"classes", c.classes}}; }

inline CliqueCover clique_cover_from_json(const Json& j) {
  detail::expect_type(j, "clique_cover");
  return CliqueCover{detail::field<std::vector<std::vector<Vertex>>>(j, "classes")};
}

inline Json to_json(const FractionalCover& c) {
  Json classes = Json::array();
  for (const auto& wc : c.classes) classes.push_back({{"clique", wc.clique}, {"weight", to_fraction_string(wc.weight)}});
  return Json{{"value", to_fraction_string(c.value)}, {"d", c.d.convert_to<long long>()}, {"classes", classes}};
}

inline FractionalCover fractional_cover_from_json(const Json& j) {
  FractionalCover c;
  c.value = detail::rational_field(j, "value");
  c.d = detail::field<long long>(j, "d");
  for (const auto& wc : detail::field<Json>(j, "classes"))
    c.classes.push_back({detail::field<std::vector<Vertex>>(wc, "clique"), detail::rational_field(wc, "weight")});
  return c;
}

inline Json to_json(const DRep& r) { return Json{{"type", "drep"}, {"d", r.d}, {"matrix", to_json(r.matrix)}}; }

inline DRep drep_from_json(const Json& j) {
  detail::expect_type(j, "drep");
  return DRep{detail::field<std::size_t>(j, "d"), matrix_from_json(detail::field<Json>(j, "matrix"))};
}

inline Json to_json(const PairRep& r) {
  Json a = Json::array(), b = Json::array();
  for (const auto& m : r.a) a.push_back(to_json(m));
  for (const auto& m : r.b) b.push_back(to_json(m));
  return Json{{"type", "pairrep"}, {"n", r.n}, {"d", r.d}, {"a", a}, {"b", b}};
}

inline PairRep pairrep_from_json(const Json& j) {
  detail::expect_type(j, "pairrep");
  PairRep r{detail::field<std::size_t>(j, "n"), detail::field<std::size_t>(j, "d"), {}, {}};
  for (const auto& m : detail::field<Json>(j, "a")) r.a.push_back(matrix_from_json(m));
  for (const auto& m : detail::field<Json>(j, "b")) r.b.push_back(matrix_from_json(m));
  return r;
}

inline Json to_json(const RankRRep& r) {
  return Json{{"type", "rankrrep"}, {"r", r.r}, {"sizes", r.sizes}, {"matrix", to_json(r.matrix)}};
}

inline RankRRep rankrrep_from_json(const Json& j) {
  detail::expect_type(j, "rankrrep");
  return RankRRep{detail::field<std::size_t>(j, "r"), detail::field<std::vector<std::size_t>>(j, "sizes"),
                  matrix_from_json(detail::field<Json>(j, "matrix"))};
}

inline Json to_json(const SubspaceRep& r) {
  Json bases = Json::array();
  for (const auto& m : r.bases) bases.push_back(to_json(m));
  return Json{{"type", "subspacerep"}, {"n", r.n}, {"d", r.d}, {"bases", bases}};
}

inline SubspaceRep subspacerep_from_json(const Json& j) {
  detail::expect_type(j, "subspacerep");
  SubspaceRep r{detail::field<std::size_t>(j, "n"), detail::field<std::size_t>(j, "d"), {}};
  for (const auto& m : detail::field<Json>(j, "bases")) r.bases.push_back(matrix_from_json(m));
  return r;
}

inline Json to_json(const OrthoRep& r) {
  return Json{{"type", "orthorep"}, {"dim", r.dim}, {"vectors", r.vectors}, {"handle", r.handle}, {"tol", r.tol}};
}

inline OrthoRep orthorep_from_json(const Json& j) {
  detail::expect_type(j, "orthorep");
  return OrthoRep{detail::field<std::size_t>(j, "dim"), detail::field<std::vector<RealVector>>(j, "vectors"),
                  detail::field<RealVector>(j, "handle"), j.value("tol", kDefaultTol)};
}

inline Json to_json(const MatrixRep& r) {
  return Json{{"type", "matrixrep"}, {"dim", r.dim}, {"frames", r.frames}, {"handle", r.handle}, {"tol", r.tol}};
}

inline MatrixRep matrixrep_from_json(const Json& j) {
  detail::expect_type(j, "matrixrep");
  return MatrixRep{detail::field<std::size_t>(j, "dim"),
                   detail::field<std::vector<std::vector<RealVector>>>(j, "frames"),
                   detail::field<std::vector<RealVector>>(j, "handle"), j.value("tol", kDefaultTol)};
}

inline const char* relation_symbol(Relation r) {
  switch (r) {
    case Relation::less_equal: return "<=";
    case Relation::greater_equal: return ">=";
    case Relation::equal: return "=";
  }
  return "?";
}

inline Json rationals_to_json(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_fraction_string(x));
  return a;
}

inline std::vector<Rational> rationals_from_json(const Json& a) {
  if (!a.is_array()) throw parse_error("expected an array of rationals");
  std::vector<Rational> out;
  for (const auto& x : a) out.push_back(detail::rational_value(x));
  return out;
}

inline Json to_json(const LinearProgram& lp) {
  Json cons = Json::array(), bounds = Json::array();
  for (const auto& c : lp.constraints)
    cons.push_back({{"coeffs", rationals_to_json(c.coeffs)}, {"relation", relation_symbol(c.relation)},
                    {"rhs", to_fraction_string(c.rhs)}});
  for (std::size_t j = 0; j < lp.variables(); ++j) {
    auto b = lp.bound(j);
    bounds.push_back({{"lower", b.lower ? Json(to_fraction_string(*b.lower)) : Json(nullptr)},
                      {"upper", b.upper ? Json(to_fraction_string(*b.upper)) : Json(nullptr)}});
  }
  return Json{{"objective", rationals_to_json(lp.objective)},
              {"objective_constant", to_fraction_string(lp.objective_constant)},
              {"constraints", cons},
              {"bounds", bounds}};
}

inline LinearProgram lp_from_json(const Json& j) {
  LinearProgram lp;
  lp.objective = rationals_from_json(detail::field<Json>(j, "objective"));
  if (j.contains("objective_constant")) lp.objective_constant = detail::rational_field(j, "objective_constant");
  for (const auto& c : detail::field<Json>(j, "constraints")) {
    auto rel = detail::field<std::string>(c, "relation");
    Relation r = rel == "<=" ? Relation::less_equal
                 : rel == ">=" ? Relation::greater_equal
                 : rel == "=" ? Relation::equal
                              : throw parse_error("unknown relation '" + rel + "'");
    lp.constraints.push_back({rationals_from_json(detail::field<Json>(c, "coeffs")), r, detail::rational_field(c, "rhs")});
  }
  if (j.contains("bounds"))
    for (const auto& b : j.at("bounds")) {
      VariableBound vb;
      if (b.contains("lower") && !b.at("lower").is_null()) vb.lower = detail::rational_value(b.at("lower"));
      if (b.contains("upper") && !b.at("upper").is_null()) vb.upper = detail::rational_value(b.at("upper"));
      lp.bounds.push_back(vb);
    }
  lp.validate();
  return lp;
}

inline Json to_json(const LpSolution& s) {
  return Json{{"status", to_string(s.status)},
              {"value", to_fraction_string(s.value)},
              {"assignment", rationals_to_json(s.assignment)},
              {"dual", rationals_to_json(s.dual)}};
}

inline Json to_json(const BoundValue& v) {
  if (v.is_exact()) return to_fraction_string(*v.exact);
  return v.approx;
}

inline Json to_json(const BoundReport& r) {
  Json j{{"param", r.param},
         {"graph", r.graph},
         {"lower", to_json(r.lower)},
         {"upper", to_json(r.upper)},
         {"witness_refs", r.witness_refs}};
  if (r.tol) j["tol"] = *r.tol;
  if (r.runtime_ms) j["runtime_ms"] = *r.runtime_ms;
  if (r.derived_from_factors) j["derived_from_factors"] = true;
  return j;
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error("'" + path + "' is not valid JSON: " + e.what());
  }
}

inline void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw error("cannot write '" + path + "'");
  out << j.dump(2) << '\n';
}

}  // namespace capacity

#endif  // CAPACITY_JSON_IO_HPP
