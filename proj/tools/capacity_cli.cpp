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

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "capacity/capacity.hpp"

namespace {

using namespace capacity;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 2;
constexpr int kBudget = 3;
constexpr int kUsage = 64;

struct Globals {
  bool json = false;
  bool timing = false;
  std::uint64_t seed = 0;
  Budget budget;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
};

Globals g_opts;

struct Usage : error {
  using error::error;
};

// A graph argument is a graph expression, or a path to a text graph file.
GraphExpr resolve_graph(const std::string& arg) {
  try {
      return parse_graph_expr(arg);
    } catch (const parse_error&) {
      if (std::filesystem::exists(arg)) {
        GraphExpr e;
        e.kind = GraphExpr::Kind::file;
        e.path = arg;
        return e;
      }
      throw;
    }
  }

  std::string interval_text(const BoundReport& r) {
    if (r.exact()) return to_string(r.upper);
    return "[" + to_string(r.lower) + ", " + to_string(r.upper) + "]";
  }

  int emit(BoundReport r, bool complete = true) {
    if (g_opts.timing)
      r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - g_opts.start).count();
    if (g_opts.json)
      std::cout << to_json(r).dump(2) << '\n';
    else
      std::cout << interval_text(r) << '\n';
    return complete ? kOk : kBudget;
  }

  BoundReport integer_report(std::string param, std::string graph, std::size_t lo, std::size_t hi,
                             std::vector<std::string> refs) {
    return BoundReport{std::move(param), std::move(graph), BoundValue::rational(Rational(static_cast<long long>(lo))),
                       BoundValue::rational(Rational(static_cast<long long>(hi))), std::move(refs), std::nullopt,
                       std::nullopt, false};
  }

  void write_or_print(const std::string& path, const Json& j) {
    if (path.empty())
      std::cout << j.dump(2) << '\n';
    else
      write_json_file(path, j);
  }

  std::set<std::size_t> parse_connection(const std::string& s) {
    std::set<std::size_t> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
      try {
        std::size_t used = 0;
        auto v = std::stoul(item, &used);
        if (used != item.size()) throw Usage("bad connection set entry '" + item + "'");
        out.insert(v);
      } catch (const std::logic_error&) {
        throw Usage("bad connection set entry '" + item + "'");
      }
    }
    return out;
  }

  // Verifies any certificate document against a graph; prints a one-line verdict.
  int verify_document(const Json& doc, const std::string& graph_arg) {
    std::string expr = graph_arg.empty() ? doc.value("graph", std::string()) : graph_arg;
    const std::string type = doc.value("type", doc.contains("value") && doc.contains("classes") ? "cover" : "");
    if (expr.empty()) throw Usage("no --graph given and the certificate does not name its graph");
    auto g = generate(resolve_graph(expr));
    Verdict v = Verdict::fail("unknown certificate type '" + type + "'");
    std::string detail;
    try {
    if (type == "fit") {
      auto c = fit_from_json(doc);
      v = verify_certificate(g, c);
      detail = "rank " + std::to_string(c.claimed_rank);
    } else if (type == "drep") {
      auto r = drep_from_json(doc);
      v = verify_drep(g, r);
      if (v) detail = "d " + std::to_string(r.d) + " ratio " + to_string(ratio_of(r));
    } else if (type == "pairrep") {
      auto r = pairrep_from_json(doc);
      v = verify_pairrep(g, r);
      detail = "n " + std::to_string(r.n) + " d " + std::to_string(r.d) + " ratio " +
               to_string(Rational(static_cast<long long>(r.n), static_cast<long long>(r.d)));
    } else if (type == "rankrrep") {
      auto r = rankrrep_from_json(doc);
      v = verify_rankrrep(g, r);
      detail = "r " + std::to_string(r.r) + " rank " + std::to_string(rank(r.matrix));
    } else if (type == "subspacerep") {
      auto r = subspacerep_from_json(doc);
      v = verify_subspacerep(g, r);
      detail = "n " + std::to_string(r.n) + " d " + std::to_string(r.d);
    } else if (type == "clique_cover") {
      auto c = clique_cover_from_json(doc);
      v = verify_clique_cover(g, c);
      detail = std::to_string(c.size()) + " cliques";
    } else if (type == "cover") {
      auto c = fractional_cover_from_json(doc);
      v = verify_cover(g, c);
      detail = "value " + to_string(c.value);
    } else if (type == "independent_set") {
      auto s = doc.at("vertices").get<std::vector<Vertex>>();
      v = is_independent_set(g, s) ? Verdict::pass() : Verdict::fail("vertex set is not independent");
      detail = "size " + std::to_string(s.size());
    } else if (type == "orthorep") {
      auto r = orthorep_from_json(doc);
      v = verify_orthorep(g, r);
      if (v) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "theta <= %.12g (tol %g)", theta_upper_from_orthorep(g, r), r.tol);
        detail = buf;
      }
    } else if (type == "matrixrep") {
      auto r = matrixrep_from_json(doc);
      v = verify_matrixrep(g, r);
      if (v) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "value %.12g (tol %g)", matrixrep_value(g, r), r.tol);
        detail = buf;
      }
    }
  } catch (const dimension_mismatch& e) {
    v = Verdict::fail(e.what());
  } catch (const invalid_certificate& e) {
    v = Verdict::fail(e.what());
  }
  if (g_opts.json) {
    Json out{{"type", type}, {"graph", expr}, {"ok", v.ok}};
    if (!v.ok) out["reason"] = v.reason;
    if (v.ok && !detail.empty()) out["detail"] = detail;
    std::cout << out.dump(2) << '\n';
  } else if (v) {
    std::cout << "OK " << type << (detail.empty() ? "" : " " + detail) << '\n';
  } else {
    std::cout << "FAIL " << type << ": " << v.reason << '\n';
  }
  return v ? kOk : kVerifyFailed;
}

int run_reproduce(bool quick) {
  auto results = reproduce({quick, g_opts.seed});
  bool all = true;
  for (const auto& r : results) all = all && (r.pass || r.skipped);
  if (g_opts.json) {
    Json claims = Json::array();
    for (const auto& r : results) {
      Json c{{"id", r.id},         {"title", r.title},       {"anchor", r.anchor}, {"pass", r.pass},
             {"value", r.value}, {"expected", r.expected}, {"limit_ms", r.limit_ms}};
      if (g_opts.timing) c["runtime_ms"] = r.runtime_ms;
      claims.push_back(c);
    }
    std::cout << Json{{"claims", claims}, {"pass", all}, {"quick", quick}, {"seed", g_opts.seed}}.dump(2) << '\n';
  } else {
    for (const auto& r : results) {
      std::printf("%s %2d  %-40s value=%s  expected=%s  %.1f ms\n", r.pass ? "PASS" : "FAIL", r.id,
                  r.anchor.c_str(), r.value.c_str(), r.expected.c_str(), r.runtime_ms);
    }
    std::printf("%s\n", all ? "all claims pass" : "some claims FAIL");
  }
  return all ? kOk : kVerifyFailed;
}

int run(int argc, char** argv) {
  CLI::App app{"Bounds on the Shannon capacity of graphs: independence number, fractional clique cover, "
               "minrank, fractional Haemers bound, Lovasz theta."};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", g_opts.json, "JSON output");
  app.add_flag("--timing", g_opts.timing, "include runtimes in JSON output");
  app.add_option("--seed", g_opts.seed, "seed for randomized steps")->capture_default_str();

  std::string graph, out, cert, connection, variant = "P", left, right;
  std::uint32_t p = 2, q = 3, modulus = 0;
  std::size_t n = 0, k = 0, dmax = 2, d = 1, extra = 0;
  bool quick = false;
  int code = kOk;

  auto* alpha_cmd = app.add_subcommand("alpha", "independence number");
  alpha_cmd->add_option("--graph", graph, "graph expression or file")->required();
  alpha_cmd->add_option("--out", out, "write the independent set witness here");
  alpha_cmd->callback([&] {
    auto e = resolve_graph(graph);
    auto gr = generate(e);
    auto a = alpha(gr, g_opts.budget);
    if (!out.empty())
      write_json_file(out, Json{{"type", "independent_set"}, {"graph", to_string(e)}, {"vertices", a.witness}});
    code = emit(integer_report("alpha", to_string(e), a.lower, a.upper, {out.empty() ? "search" : out}), a.exact);
  });

  auto* cover_cmd = app.add_subcommand("cover", "clique partition (chromatic number of the complement)");
  cover_cmd->add_option("--graph", graph, "graph expression or file")->required();
  cover_cmd->add_option("--k", k, "only decide whether k cliques suffice");
  cover_cmd->add_option("--out", out, "write the clique partition here");
  cover_cmd->callback([&] {
    auto e = resolve_graph(graph);
    auto gr = generate(e);
    if (k > 0) {
      auto r = clique_cover_leq(gr, k, g_opts.budget);
      if (r.status == SearchStatus::timeout) {
        std::cout << "timeout\n";
        code = kBudget;
        return;
      }
      if (r.status == SearchStatus::none) {
        std::cout << "none\n";
        return;
      }
      if (!out.empty()) {
        auto j = to_json(r.cover);
        j["graph"] = to_string(e);
        write_json_file(out, j);
      }
      std::cout << r.cover.size() << '\n';
      return;
    }
    auto best = greedy_clique_cover(gr);
    std::size_t lower = alpha(gr, g_opts.budget).lower;
    bool complete = true;
    while (best.size() > lower) {
      auto r = clique_cover_leq(gr, best.size() - 1, g_opts.budget);
      if (r.status == SearchStatus::found) {
        best = r.cover;
      } else {
        if (r.status == SearchStatus::none) lower = best.size();
        complete = r.status == SearchStatus::none;
        break;
      }
    }
    if (!out.empty()) {
      auto j = to_json(best);
      j["graph"] = to_string(e);
      write_json_file(out, j);
    }
    code = emit(integer_report("clique_cover", to_string(e), lower, best.size(), {out.empty() ? "search" : out}),
                complete);
  });

  auto* frac_cmd = app.add_subcommand("fracchrom", "fractional clique cover number (chi_f of the complement)");
  frac_cmd->add_option("--graph", graph, "graph expression or file")->required();
  frac_cmd->add_option("--out", out, "write the fractional cover here");
  frac_cmd->callback([&] {
    auto e = resolve_graph(graph);
    auto gr = generate(e);
    auto r = fractional_clique_cover(gr, g_opts.budget);
    if (!out.empty()) {
      auto j = to_json(r.cover);
      j["type"] = "cover";
      j["graph"] = to_string(e);
      write_json_file(out, j);
    }
    BoundReport rep{"fractional_clique_cover", to_string(e), BoundValue::rational(r.lower),
                    BoundValue::rational(r.cover.value), {out.empty() ? "column generation" : out}, std::nullopt,
                    std::nullopt, false};
    code = emit(rep, r.exact);
  });

  auto* minrank_cmd = app.add_subcommand("minrank", "Haemers minrank over GF(p)");
  minrank_cmd->add_option("--graph", graph, "graph expression or file")->required();
  minrank_cmd->add_option("--p", p, "field characteristic (prime)")->capture_default_str();
  minrank_cmd->add_option("--out", out, "write the fit certificate here");
  minrank_cmd->callback([&] {
    auto e = resolve_graph(graph);
    auto gr = generate(e);
    auto r = minrank_exact(gr, p, {}, g_opts.budget);
    r.witness.graph = to_string(e);
    if (!out.empty()) write_json_file(out, to_json(r.witness));
    code = emit(integer_report("minrank", to_string(e), r.lower, r.upper, {out.empty() ? "search" : out}), r.exact);
  });

  auto* hfrac_cmd = app.add_subcommand("hfrac", "fractional Haemers bound interval over GF(p)");
  hfrac_cmd->add_option("--graph", graph, "graph expression or file");
  hfrac_cmd->add_option("--p", p, "field characteristic (prime)")->capture_default_str();
  hfrac_cmd->add_option("--dmax", dmax, "largest d for directly built representations")->capture_default_str();
  hfrac_cmd->add_option("--out", out, "write the best representation here");
  auto* hverify = hfrac_cmd->add_subcommand("verify", "verify a representation certificate");
  hverify->add_option("--cert", cert, "certificate JSON file")->required();
  hverify->add_option("--graph", graph, "graph expression or file");
  hverify->callback([&] { code = verify_document(read_json_file(cert), graph); });
  hfrac_cmd->callback([&] {
    if (hverify->parsed()) return;
    if (graph.empty()) throw Usage("hfrac needs --graph");
    auto e = resolve_graph(graph);
    auto r = hfrac_upper_search(e, p, {dmax, {}}, g_opts.budget);
    if (!out.empty()) {
      auto j = to_json(r.certificate);
      j["graph"] = to_string(e);
      write_json_file(out, j);
      r.report.witness_refs.push_back(out);
    }
    code = emit(r.report);
  });

  auto* tc_cmd = app.add_subcommand("theta-circulant", "Lovasz theta of a cycle or complete circulant");
  tc_cmd->add_option("--n", n, "number of vertices")->required();
  tc_cmd->add_option("--connection", connection, "connection set, e.g. 1,4 (default: the cycle)");
  tc_cmd->callback([&] {
    auto s = connection.empty() ? std::set<std::size_t>{1, n - 1} : parse_connection(connection);
    if (connection.empty() && n <= 2) s = {1};
    double t = theta_circulant(n, s);
    if (g_opts.json) {
      std::string conn;
      for (auto x : s) conn += (conn.empty() ? "" : ",") + std::to_string(x);
      emit(theta_report("circulant:" + std::to_string(n) + ":" + conn, t, t, kDefaultTol, {"eigenvalues"}));
    } else {
      std::printf("%.12g\n", t);
    }
  });

  auto* tlp_cmd = app.add_subcommand("theta-lp", "exact theta of J_n^p from its two-variable LP");
  tlp_cmd->add_option("--p", p, "prime")->capture_default_str();
  tlp_cmd->add_option("--n", n, "ground set size, n >= 2(p+1)")->required();
  tlp_cmd->add_option("--out", out, "write the LP and its solution here");
  tlp_cmd->callback([&] {
    auto lp = johnson_theta_lp(p, static_cast<long long>(n));
    auto sol = simplex_solve(lp);
    if (sol.status != LpStatus::optimal) throw error(std::string("LP is ") + to_string(sol.status));
    if (!out.empty()) write_json_file(out, Json{{"lp", to_json(lp)}, {"solution", to_json(sol)}});
    std::string expr = "johnson:" + std::to_string(p) + "," + std::to_string(n);
    code = emit(BoundReport{"theta", expr, BoundValue::rational(sol.value), BoundValue::rational(sol.value),
                            {out.empty() ? "exact LP" : out}, std::nullopt, std::nullopt, false});
  });

  auto* certify_cmd = app.add_subcommand("certify", "build a certificate");
  certify_cmd->require_subcommand(1);
  auto* c_johnson = certify_cmd->add_subcommand("johnson", "incidence fit matrix of johnson:p,n");
  c_johnson->add_option("--p", p)->capture_default_str();
  c_johnson->add_option("--n", n)->required();
  c_johnson->add_option("--out", out);
  c_johnson->callback([&] { write_or_print(out, to_json(johnson_certificate(p, n))); });

  auto* c_alon = certify_cmd->add_subcommand("alon", "polynomial fit matrix for alon:p,q,n or its complement");
  c_alon->add_option("--variant", variant, "P, Q or R")->check(CLI::IsMember({"P", "Q", "R"}))->capture_default_str();
  c_alon->add_option("--p", p)->capture_default_str();
  auto* q_opt = c_alon->add_option("--q", q, "second prime (default 3; p for R)");
  c_alon->add_option("--n", n)->required();
  c_alon->add_option("--modulus", modulus, "field size (default p for P, q for Q, next prime after p for R)");
  c_alon->add_option("--out", out);
  c_alon->callback([&] {
    auto v = variant == "P" ? AlonVariant::P : variant == "Q" ? AlonVariant::Q : AlonVariant::R;
    if (v == AlonVariant::R && q_opt->count() == 0) q = p;
    std::uint32_t m = modulus ? modulus : v == AlonVariant::P ? p : v == AlonVariant::Q ? q : next_prime_after(p);
    auto c = alon_certificate(v, p, q, n, m);
    auto j = to_json(c.fit);
    j["rank_bound"] = c.rank_bound.str();
    write_or_print(out, j);
  });

  auto* c_cover = certify_cmd->add_subcommand("cover", "clique-partition fit matrix");
  c_cover->add_option("--graph", graph)->required();
  c_cover->add_option("--p", p)->capture_default_str();
  c_cover->add_option("--k", k, "number of cliques (default: greedy)");
  c_cover->add_option("--out", out);
  c_cover->callback([&] {
    auto e = resolve_graph(graph);
    auto gr = generate(e);
    CliqueCover cover = greedy_clique_cover(gr);
    if (k > 0) {
      auto r = clique_cover_leq(gr, k, g_opts.budget);
      if (r.status != SearchStatus::found) {
        std::cerr << "no clique partition into " << k << " cliques found\n";
        code = r.status == SearchStatus::timeout ? kBudget : kVerifyFailed;
        return;
      }
      cover = r.cover;
    }
    auto c = cover_certificate(gr, cover, p);
    c.graph = to_string(e);
    write_or_print(out, to_json(c));
  });

  auto* c_cycle = certify_cmd->add_subcommand("cycle", "(2k+1, 2)-representation of cycle:(2k+1)");
  c_cycle->add_option("--k", k)->required();
  c_cycle->add_option("--p", p)->capture_default_str();
  c_cycle->add_option("--out", out);
  c_cycle->callback([&] {
    auto j = to_json(cycle_drep(k, p));
    j["graph"] = "cycle:" + std::to_string(2 * k + 1);
    write_or_print(out, j);
  });

  auto* c_fc = certify_cmd->add_subcommand("fractional", "d-representation from the optimal fractional cover");
  c_fc->add_option("--graph", graph)->required();
  c_fc->add_option("--p", p)->capture_default_str();
  c_fc->add_option("--out", out);
  c_fc->callback([&] {
    auto e = resolve_graph(graph);
    auto gr = generate(e);
    auto r = fractional_clique_cover(gr, g_opts.budget);
    auto j = to_json(drep_from_fractional_cover(gr, r.cover, p));
    j["graph"] = to_string(e);
    write_or_print(out, j);
    if (!r.exact) code = kBudget;
  });

  auto* c_tensor = certify_cmd->add_subcommand("tensor", "tensor product of two d-representations");
  c_tensor->add_option("--left", left)->required();
  c_tensor->add_option("--right", right)->required();
  c_tensor->add_option("--out", out);
  c_tensor->callback([&] {
    auto a = read_json_file(left), b = read_json_file(right);
    auto j = to_json(tensor_dreps(drep_from_json(a), drep_from_json(b)));
    if (a.contains("graph") && b.contains("graph"))
      j["graph"] = "strong(" + a["graph"].get<std::string>() + "," + b["graph"].get<std::string>() + ")";
    write_or_print(out, j);
  });

  auto* c_pair = certify_cmd->add_subcommand("pairrep", "factor a d-representation into (A_v, B_v) pairs");
  c_pair->add_option("--cert", cert)->required();
  c_pair->add_option("--extra", extra, "randomize with this many extra coordinates (uses --seed)");
  c_pair->add_option("--out", out);
  c_pair->callback([&] {
    auto doc = read_json_file(cert);
    auto pr = pairrep_from_drep(drep_from_json(doc));
    if (extra > 0) {
      std::mt19937_64 rng(g_opts.seed);
      pr = randomize_pairrep(pr, rng, extra);
    }
    auto j = to_json(pr);
    if (doc.contains("graph")) j["graph"] = doc["graph"];
    write_or_print(out, j);
  });

  auto* c_sub = certify_cmd->add_subcommand("subspace", "subspace representation from a pair representation");
  c_sub->add_option("--cert", cert)->required();
  c_sub->add_option("--out", out);
  c_sub->callback([&] {
    auto doc = read_json_file(cert);
    auto j = to_json(subspace_from_pairrep(pairrep_from_json(doc)));
    if (doc.contains("graph")) j["graph"] = doc["graph"];
    write_or_print(out, j);
  });

  auto* c_umb = certify_cmd->add_subcommand("umbrella", "orthonormal umbrella of the pentagon (or its complement)");
  c_umb->add_option("--step", d, "1 for cycle:5, 2 for its complement")->capture_default_str();
  c_umb->add_option("--out", out);
  c_umb->callback([&] {
    if (d != 1 && d != 2) throw Usage("--step must be 1 or 2");
    auto j = to_json(pentagon_umbrella(static_cast<int>(d)));
    j["graph"] = d == 1 ? "cycle:5" : "complement(cycle:5)";
    write_or_print(out, j);
  });

  auto* verify_cmd = app.add_subcommand("verify", "verify a certificate file against a graph");
  verify_cmd->add_option("--cert", cert, "certificate JSON file")->required();
  verify_cmd->add_option("--graph", graph, "graph expression or file (default: the one named in the file)");
  verify_cmd->callback([&] { code = verify_document(read_json_file(cert), graph); });

  auto* gen_cmd = app.add_subcommand("generate", "write a graph in the text format");
  gen_cmd->add_option("--graph", graph, "graph expression or file")->required();
  gen_cmd->add_option("--out", out);
  gen_cmd->callback([&] {
    auto gr = generate(resolve_graph(graph));
    if (out.empty()) {
      write_graph(std::cout, gr);
    } else {
      std::ofstream f(out);
      if (!f) throw error("cannot write '" + out + "'");
      write_graph(f, gr);
    }
  });

  auto* rep_cmd = app.add_subcommand("reproduce", "run the claim suite");
  rep_cmd->add_flag("--quick", quick, "skip the 56-vertex independence search");
  rep_cmd->callback([&] { code = run_reproduce(quick); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  g_opts.budget = capacity::Budget::from_env();
  try {
    return run(argc, argv);
  } catch (const Usage& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const capacity::parse_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const capacity::precondition_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const capacity::dimension_mismatch& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const capacity::invalid_certificate& e) {
    std::cerr << "FAIL: " << e.what() << '\n';
    return kVerifyFailed;
  } catch (const capacity::guard_exceeded& e) {
    std::cerr << "limit: " << e.what() << '\n';
    return kBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
