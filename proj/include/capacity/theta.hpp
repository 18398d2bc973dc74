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

#ifndef CAPACITY_THETA_HPP
#define CAPACITY_THETA_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "capacity/graph.hpp"
#include "capacity/rational.hpp"
#include "capacity/report.hpp"
#include "capacity/simplex.hpp"

namespace capacity {

inline constexpr double kDefaultTol = 1e-9;

/// Circulant graph on Z_n with the given connection set.
inline Graph circulant_graph(std::size_t n, const std::set<std::size_t>& connection) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (auto s : connection) g.add_edge(u, (u + s) % n);
  return g;
}

/// Lovasz theta of a circulant graph, n * (-l_min) / (l_1 - l_min) over the
/// eigenvalues l_j = sum_{s in S} cos(2 pi j s / n). Supported families:
/// cycles (S = {a, n-a} with gcd(a, n) = 1) and complete graphs.
inline double theta_circulant(std::size_t n, const std::set<std::size_t>& connection) {
  if (n == 0) throw precondition_error("circulant needs n >= 1");
  for (auto s : connection) {
    if (s == 0 || s >= n) throw precondition_error("connection set entries must lie in 1..n-1");
    if (!connection.count(n - s)) throw precondition_error("connection set must be symmetric");
  }
  if (n == 1) return 1;
  if (connection.empty()) throw precondition_error("connection set must be nonempty");
  const bool complete = connection.size() == n - 1;
  const bool cycle = connection.size() <= 2 && std::gcd(*connection.begin(), n) == 1;
  if (!complete && !cycle)
    throw precondition_error("unsupported circulant: only cycles and complete graphs have a closed form here");
  std::vector<double> eig(n);
  for (std::size_t j = 0; j < n; ++j)
    for (auto s : connection)
      eig[j] += std::cos(2 * std::numbers::pi * static_cast<double>(j * s % n) / static_cast<double>(n));
  const double lmax = eig[0];
  const double lmin = *std::min_element(eig.begin(), eig.end());
  return static_cast<double>(n) * (-lmin) / (lmax - lmin);
}

inline double theta_cycle(std::size_t n) { return theta_circulant(n, n <= 2 ? std::set<std::size_t>{1} : std::set<std::size_t>{1, n - 1}); }

/// The two-variable LP for theta(J_n^p): maximize 1 + a_1 + a_{p+1} subject to
/// one constraint per u in 0..p+1.
inline LinearProgram johnson_theta_lp(std::uint32_t p, long long n) {
  const long long q = p;
  if (n < 2 * (q + 1)) throw precondition_error("the LP needs n >= 2(p+1)");
  LinearProgram lp;
  lp.objective = {Rational(1), Rational(1)};
  lp.objective_constant = 1;
  lp.bounds = {VariableBound::free(), VariableBound::free()};
  for (long long u = 0; u <= q + 1; ++u) {
    Rational a1 = ratio((q + 1 - u) * (n - q - u - 1) - u, (q + 1) * (n - q - 1));
    Rational ap = Rational(binomial(n - q - u - 1, q + 1 - u)) / Rational(binomial(n - q - 1, q + 1));
    if (u % 2) ap = -ap;
    lp.constraints.push_back({{a1, ap}, Relation::greater_equal, Rational(-1)});
  }
  return lp;
}

/// Exact theta(J_n^p) from the LP above.
inline Rational theta_johnson_lp(std::uint32_t p, long long n) {
  if (!is_prime(p)) throw precondition_error(std::to_string(p) + " is not prime");
  auto lp = johnson_theta_lp(p, n);
  auto sol = simplex_solve(lp);
  if (sol.status != LpStatus::optimal) throw error(std::string("theta LP is ") + to_string(sol.status));
  if (auto v = check_solution(lp, sol); !v) throw error("theta LP solution failed its check: " + v.reason);
  return sol.value;
}

/// n(n-2)(2n-11) / (3(3n-14)).
inline Rational theta_johnson2_formula(long long n) { return ratio(BigInt(n) * (n - 2) * (2 * n - 11), BigInt(3) * (3 * n - 14)); }

using RealVector = std::vector<double>;

inline double dot(const RealVector& a, const RealVector& b) {
  if (a.size() != b.size()) throw dimension_mismatch("vectors of different lengths");
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

/// Unit vectors x_v with x_u orthogonal to x_v on non-edges, and a unit handle h.
struct OrthoRep {
  std::size_t dim = 0;
  std::vector<RealVector> vectors;
  RealVector handle;
  double tol = kDefaultTol;
};

inline Verdict verify_orthorep(const Graph& g, const OrthoRep& rep) {
  if (rep.vectors.size() != g.order()) throw dimension_mismatch("orthonormal representation needs one vector per vertex");
  if (rep.handle.size() != rep.dim) throw dimension_mismatch("handle has the wrong dimension");
  for (const auto& x : rep.vectors)
    if (x.size() != rep.dim) throw dimension_mismatch("vector has the wrong dimension");
  if (std::abs(dot(rep.handle, rep.handle) - 1) > rep.tol) return Verdict::fail("handle is not a unit vector");
  for (Vertex v = 0; v < g.order(); ++v)
    if (std::abs(dot(rep.vectors[v], rep.vectors[v]) - 1) > rep.tol)
      return Verdict::fail("x_" + std::to_string(v) + " is not a unit vector");
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v) && std::abs(dot(rep.vectors[u], rep.vectors[v])) > rep.tol)
        return Verdict::fail("x_" + std::to_string(u) + " and x_" + std::to_string(v) + " are not orthogonal");
  return Verdict::pass();
}

/// max_v 1 / <x_v, h>^2; infinity when some x_v is orthogonal to h within tol.
inline double theta_upper_from_orthorep(const Graph& g, const OrthoRep& rep) {
  if (auto v = verify_orthorep(g, rep); !v) throw invalid_certificate(v.reason);
  double worst = 0;
  for (const auto& x : rep.vectors) {
    double c = dot(x, rep.handle);
    if (std::abs(c) <= rep.tol) return std::numeric_limits<double>::infinity();
    worst = std::max(worst, 1 / (c * c));
  }
  return worst;
}

/// sum_v <x_v, h>^2 for an orthonormal representation of complement(g).
inline double theta_lower_from_dual(const Graph& g, const OrthoRep& rep_of_complement) {
  if (auto v = verify_orthorep(complement(g), rep_of_complement); !v) throw invalid_certificate(v.reason);
  double s = 0;
  for (const auto& x : rep_of_complement.vectors) {
    double c = dot(x, rep_of_complement.handle);
    s += c * c;
  }
  return s;
}

/// Vertex v gets d_v orthonormal columns M_v; the k-handle H has k unit columns.
struct MatrixRep {
  std::size_t dim = 0;
  std::vector<std::vector<RealVector>> frames;  ///< frames[v][j] is column j of M_v
  std::vector<RealVector> handle;               ///< handle[j] is column j of H
  double tol = kDefaultTol;
};

inline Verdict verify_matrixrep(const Graph& g, const MatrixRep& rep) {
  if (rep.frames.size() != g.order()) throw dimension_mismatch("matrix representation needs one frame per vertex");
  for (const auto& f : rep.frames)
    for (const auto& c : f)
      if (c.size() != rep.dim) throw dimension_mismatch("frame column has the wrong dimension");
  for (const auto& c : rep.handle)
    if (c.size() != rep.dim) throw dimension_mismatch("handle column has the wrong dimension");
  if (rep.handle.empty()) return Verdict::fail("handle has no columns");
  for (std::size_t j = 0; j < rep.handle.size(); ++j)
    if (std::abs(dot(rep.handle[j], rep.handle[j]) - 1) > rep.tol)
      return Verdict::fail("handle column " + std::to_string(j) + " is not a unit vector");
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto& f = rep.frames[v];
    if (f.empty()) return Verdict::fail("M_" + std::to_string(v) + " has no columns");
    for (std::size_t i = 0; i < f.size(); ++i)
      for (std::size_t j = 0; j < f.size(); ++j)
        if (std::abs(dot(f[i], f[j]) - (i == j ? 1.0 : 0.0)) > rep.tol)
          return Verdict::fail("M_" + std::to_string(v) + " does not have orthonormal columns");
  }
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (g.adjacent(u, v)) continue;
      for (const auto& a : rep.frames[u])
        for (const auto& b : rep.frames[v])
          if (std::abs(dot(a, b)) > rep.tol)
            return Verdict::fail("M_" + std::to_string(u) + "^T M_" + std::to_string(v) + " is not zero");
    }
  return Verdict::pass();
}

/// max_v k / tr(M_v^T H H^T M_v).
inline double matrixrep_value(const Graph& g, const MatrixRep& rep) {
  if (auto v = verify_matrixrep(g, rep); !v) throw invalid_certificate(v.reason);
  const double k = static_cast<double>(rep.handle.size());
  double worst = 0;
  for (const auto& f : rep.frames) {
    double tr = 0;
    for (const auto& m : f)
      for (const auto& h : rep.handle) {
        double c = dot(h, m);
        tr += c * c;
      }
    if (tr <= rep.tol) throw precondition_error("a frame is orthogonal to the handle (zero trace)");
    worst = std::max(worst, k / tr);
  }
  return worst;
}

/// Unit vectors at equal angle to e_3 with cos^2 = 1/sqrt(5) and azimuths
/// 2*pi*step*i/5. step 1 represents the pentagon, step 2 its complement.
inline OrthoRep pentagon_umbrella(int step) {
  OrthoRep rep;
  rep.dim = 3;
  rep.handle = {0, 0, 1};
  const double c = std::sqrt(1 / std::sqrt(5.0));
  const double s = std::sqrt(1 - c * c);
  for (int i = 0; i < 5; ++i) {
    double phi = 2 * std::numbers::pi * step * i / 5;
    rep.vectors.push_back({s * std::cos(phi), s * std::sin(phi), c});
  }
  return rep;
}

/// Floating-point report on theta with value lo..hi at tolerance tol.
inline BoundReport theta_report(std::string graph, double lo, double hi, double tol, std::vector<std::string> refs) {
  BoundReport r{"theta", std::move(graph), BoundValue::real(lo), BoundValue::real(hi), std::move(refs), tol, std::nullopt,
                false};
  return r;
}

/// theta is multiplicative under the strong product; composes factor reports.
inline BoundReport compose_strong(const BoundReport& a, const BoundReport& b) {
  auto mul = [](const BoundValue& x, const BoundValue& y) {
    if (x.is_exact() && y.is_exact()) return BoundValue::rational(*x.exact * *y.exact);
    return BoundValue::real(x.approx * y.approx);
  };
  BoundReport r{a.param, "strong(" + a.graph + "," + b.graph + ")", mul(a.lower, b.lower), mul(a.upper, b.upper), {},
                std::nullopt, std::nullopt, true};
  if (a.tol || b.tol) {
    double ta = a.tol.value_or(0), tb = b.tol.value_or(0);
    r.tol = ta * std::abs(b.upper.approx) + tb * std::abs(a.upper.approx) + ta * tb;
  }
  for (const auto& w : a.witness_refs) r.witness_refs.push_back(w);
  for (const auto& w : b.witness_refs) r.witness_refs.push_back(w);
  return r;
}

}  // namespace capacity

#endif  // CAPACITY_THETA_HPP
