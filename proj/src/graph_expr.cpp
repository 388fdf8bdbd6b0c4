#include "csnd/graph_expr.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "csnd/errors.hpp"
#include "csnd/graph_products.hpp"

namespace csnd {

namespace {

// Grammar:
//   expr    := product | atom
//   product := ("wedge" "(" anchored "," anchored ")")
//            | ("comb" "(" expr "," anchored ")")
//            | ("free" "(" anchored "," anchored "," int ")")
//            | ("tree" "(" int ("," int)* ")")
//   atom    := ("K"|"C"|"P"|"S") int
//   anchored:= expr "@" label
struct Parser {
  const std::string& s;
  size_t pos = 0;

  explicit Parser(const std::string& text) : s(text) {}

  [[noreturn]] void fail(const std::string& why) const {
    throw ValidationError("bad graph expression at offset " +
                          std::to_string(pos) + ": " + why);
  }

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  int parse_int() {
    skip_ws();
    size_t start = pos;
    if (pos < s.size() && s[pos] == '-') ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected an integer");
    return std::stoi(s.substr(start, pos - start));
  }

  std::string parse_label() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && s[pos] != ',' && s[pos] != ')' && s[pos] != '@' &&
           !std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == start) fail("expected a vertex label");
    return s.substr(start, pos - start);
  }

  std::pair<Graph, std::string> parse_anchored() {
    Graph g = parse_expr();
    expect('@');
    std::string label = parse_label();
    g.index_of(label);
    return {std::move(g), std::move(label)};
  }

  Graph parse_expr() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]))) ++pos;
    std::string head = s.substr(start, pos - start);
    if (head.empty()) fail("expected a graph expression");

    if (head == "wedge") {
      expect('(');
      auto [g1, v1] = parse_anchored();
      expect(',');
      auto [g2, v2] = parse_anchored();
      expect(')');
      return wedge_sum(g1, v1, g2, v2);
    }
    if (head == "comb") {
      expect('(');
      Graph spine = parse_expr();
      expect(',');
      auto [tooth, v2] = parse_anchored();
      expect(')');
      return comb_product(spine, tooth, v2);
    }
    if (head == "free") {
      expect('(');
      auto [g1, v1] = parse_anchored();
      expect(',');
      auto [g2, v2] = parse_anchored();
      expect(',');
      int radius = parse_int();
      expect(')');
      return free_product_ball(g1, v1, g2, v2, radius);
    }
    if (head == "tree") {
      expect('(');
      std::vector<int> parents{parse_int()};
      while (eat(',')) parents.push_back(parse_int());
      expect(')');
      return tree_from_parent_array(parents);
    }
    if (head.size() == 1 && (head[0] == 'K' || head[0] == 'C' || head[0] == 'P' ||
                             head[0] == 'S')) {
      int n = parse_int();
      switch (head[0]) {
        case 'K': return complete_graph(n);
        case 'C': return cycle_graph(n);
        case 'P': return path_graph(n);
        default: return star_graph(n);
      }
    }
    fail("unknown constructor '" + head + "'");
  }
};

}  // namespace

Graph parse_graph_expr(const std::string& expr) {
  Parser p(expr);
  Graph g = p.parse_expr();
  p.skip_ws();
  if (p.pos != expr.size()) p.fail("trailing input");
  return g;
}

}  // namespace csnd
