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

#ifndef CAPACITY_GRAPH_EXPR_HPP
#define CAPACITY_GRAPH_EXPR_HPP

#include <cctype>
#include <fstream>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "capacity/generators.hpp"
#include "capacity/graph.hpp"

namespace capacity {

// Grammar:
//   expr := cycle:k | complete:k | empty:k | johnson:p,n | alon:p,q,n
//         | universal:p,n,d | complement(expr) | strong(expr,expr)
//         | lex(expr,expr) | file:path
struct GraphExpr {
  enum class Kind { cycle, complete, empty, johnson, alon, universal, complement, strong, lex, file };

  Kind kind = Kind::empty;
  std::vector<long long> params;
  std::vector<GraphExpr> children;
  std::string path;

  static GraphExpr leaf(Kind k, std::vector<long long> ps) { return GraphExpr{k, std::move(ps), {}, {}}; }
  static GraphExpr unary(Kind k, GraphExpr a) { return GraphExpr{k, {}, {std::move(a)}, {}}; }
  static GraphExpr binary(Kind k, GraphExpr a, GraphExpr b) {
    return GraphExpr{k, {}, {std::move(a), std::move(b)}, {}};
  }

  friend bool operator==(const GraphExpr&, const GraphExpr&) = default;
};

inline const char* kind_name(GraphExpr::Kind k) {
  using K = GraphExpr::Kind;
  switch (k) {
    case K::cycle: return "cycle";
    case K::complete: return "complete";
    case K::empty: return "empty";
    case K::johnson: return "johnson";
    case K::alon: return "alon";
    case K::universal: return "universal";
    case K::complement: return "complement";
    case K::strong: return "strong";
    case K::lex: return "lex";
    case K::file: return "file";
  }
  return "?";
}

/// Canonical text form; parse(to_string(e)) == e.
inline std::string to_string(const GraphExpr& e) {
  using K = GraphExpr::Kind;
  std::string s = kind_name(e.kind);
  switch (e.kind) {
    case K::file: return s + ":" + e.path;
    case K::complement:
    case K::strong:
    case K::lex: {
      s += "(";
      for (std::size_t i = 0; i < e.children.size(); ++i) s += (i ? "," : "") + to_string(e.children[i]);
      return s + ")";
    }
    default: {
      s += ":";
      for (std::size_t i = 0; i < e.params.size(); ++i) s += (i ? "," : "") + std::to_string(e.params[i]);
      return s;
    }
  }
}

namespace detail {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : s_(text) {}

  GraphExpr parse_all() {
    auto e = parse();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  using K = GraphExpr::Kind;

  [[noreturn]] void fail(const std::string& what) const {
    throw parse_error("graph expression '" + std::string(s_) + "' at offset " + std::to_string(pos_) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string word() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a graph name");
    return std::string(s_.substr(start, pos_ - start));
  }

  long long integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a non-negative integer");
    if (pos_ - start > 9) fail("integer parameter too large");
    return std::stoll(std::string(s_.substr(start, pos_ - start)));
  }

  std::vector<long long> params(std::size_t count) {
    expect(':');
    std::vector<long long> out;
    for (std::size_t i = 0; i < count; ++i) {
      if (i) expect(',');
      out.push_back(integer());
    }
    return out;
  }

  GraphExpr parse() {
    auto name = word();
    if (name == "cycle") return GraphExpr::leaf(K::cycle, params(1));
    if (name == "complete") return GraphExpr::leaf(K::complete, params(1));
    if (name == "empty") return GraphExpr::leaf(K::empty, params(1));
    if (name == "johnson") return GraphExpr::leaf(K::johnson, params(2));
    if (name == "alon") return GraphExpr::leaf(K::alon, params(3));
    if (name == "universal") return GraphExpr::leaf(K::universal, params(3));
    if (name == "file") {
      expect(':');
      GraphExpr e;
      e.kind = K::file;
      // Nested paths end at the next ',' or ')'; a top-level path takes the rest.
      std::size_t end = depth_ == 0 ? s_.size() : s_.find_first_of(",)", pos_);
      if (end == std::string_view::npos) end = s_.size();
      e.path = std::string(s_.substr(pos_, end - pos_));
      while (!e.path.empty() && std::isspace(static_cast<unsigned char>(e.path.back()))) e.path.pop_back();
      while (!e.path.empty() && std::isspace(static_cast<unsigned char>(e.path.front()))) e.path.erase(0, 1);
      if (e.path.empty()) fail("empty file path");
      pos_ = end;
      return e;
    }
    if (name == "complement") {
      expect('(');
      ++depth_;
      auto a = parse();
      --depth_;
      expect(')');
      return GraphExpr::unary(K::complement, std::move(a));
    }
    if (name == "strong" || name == "lex") {
      expect('(');
      ++depth_;
      auto a = parse();
      expect(',');
      auto b = parse();
      --depth_;
      expect(')');
      return GraphExpr::binary(name == "strong" ? K::strong : K::lex, std::move(a), std::move(b));
    }
    fail("unknown graph '" + name + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

}  // namespace detail

inline GraphExpr parse_graph_expr(std::string_view text) { return detail::ExprParser(text).parse_all(); }

inline Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open graph file '" + path + "'");
  return read_graph(in);
}

struct GenerateOptions {
  GraphLimits graph;
  std::uint64_t max_universal_candidates = 10'000'000;
};

inline Graph generate(const GraphExpr& e, const GenerateOptions& opts = {}) {
  using K = GraphExpr::Kind;
  auto size_param = [&](long long k) {
    auto n = static_cast<std::size_t>(k);
    check_order_guard(n, opts.graph, kind_name(e.kind));
    return n;
  };
  auto prime_param = [](long long p) {
    if (!is_prime(static_cast<std::uint64_t>(p))) throw precondition_error(std::to_string(p) + " is not prime");
    return static_cast<std::uint32_t>(p);
  };
  switch (e.kind) {
    case K::cycle: return cycle_graph(size_param(e.params[0]));
    case K::complete: return complete_graph(size_param(e.params[0]));
    case K::empty: return empty_graph(size_param(e.params[0]));
    case K::johnson: return johnson_graph(prime_param(e.params[0]), static_cast<std::size_t>(e.params[1]), opts.graph);
    case K::alon:
      return alon_graph(prime_param(e.params[0]), prime_param(e.params[1]), static_cast<std::size_t>(e.params[2]),
                        opts.graph);
    case K::universal:
      return universal_graph(prime_param(e.params[0]), static_cast<std::size_t>(e.params[1]),
                             static_cast<std::size_t>(e.params[2]), {opts.max_universal_candidates, opts.graph});
    case K::complement: return complement(generate(e.children[0], opts));
    case K::strong: return strong_product(generate(e.children[0], opts), generate(e.children[1], opts), opts.graph);
    case K::lex: return lex_product(generate(e.children[0], opts), generate(e.children[1], opts), opts.graph);
    case K::file: {
      auto g = read_graph_file(e.path);
      check_order_guard(g.order(), opts.graph, "file graph");
      return g;
    }
  }
  throw precondition_error("unhandled graph expression");
}

inline Graph generate(std::string_view text, const GenerateOptions& opts = {}) {
  return generate(parse_graph_expr(text), opts);
}

}  // namespace capacity

#endif  // CAPACITY_GRAPH_EXPR_HPP
