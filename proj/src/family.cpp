#include "qng/family.hpp"

#include <cctype>
#include <functional>
#include <vector>

namespace qng {

namespace {

class FamilyParser {
 public:
  explicit FamilyParser(const std::string& text) : s_(text) {}

  Graph parse() {
    Graph g = expr();
    skip_space();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return g;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw FamilySyntaxError("family '" + s_ + "' at " + std::to_string(pos_) + ": " + what);
  }

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool at_digit() {
    skip_space();
    return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  int number() {
    if (!at_digit()) fail("expected a number");
    long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_++] - '0');
      if (v > 1000) fail("number too large");
    }
    return static_cast<int>(v);
  }

  std::string word() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  static void check_order(long n) {
    if (n > Graph::kMaxOrder) throw CapacityError("family exceeds " + std::to_string(Graph::kMaxOrder) + " vertices");
  }

  Graph expr() {
    int count = 1;
    if (at_digit()) count = number();
    if (count < 1) fail("copy count must be positive");
    Graph g = atom();
    if (count == 1) return g;
    check_order(static_cast<long>(count) * g.order());
    return copies(count, g);
  }

  Graph fold(const std::function<Graph(const Graph&, const Graph&)>& op) {
    expect('(');
    Graph acc = expr();
    while (accept(',')) {
      Graph next = expr();
      check_order(static_cast<long>(acc.order()) + next.order());
      acc = op(acc, next);
    }
    expect(')');
    return acc;
  }

  Graph atom() {
    if (accept('(')) {
      Graph g = expr();
      expect(')');
      return g;
    }
    const std::string w = word();
    if (w.empty()) fail("expected a graph");
    if (w == "join") return fold([](const Graph& a, const Graph& b) { return join(a, b); });
    if (w == "union") return fold([](const Graph& a, const Graph& b) { return disjoint_union(a, b); });
    if (w == "cp")
      return fold([](const Graph& a, const Graph& b) {
        check_order(static_cast<long>(a.order()) * b.order());
        return cartesian_product(a, b);
      });
    if (w == "comp") {
      expect('(');
      Graph g = expr();
      expect(')');
      return complement(g);
    }
    if (w == "petersen") return petersen_graph();
    if (w == "star") return sized(star_graph, 2);
    if (w == "H") {
      HFamilyParams p;
      p.s0 = number();
      p.s1 = number();
      p.s2 = number();
      check_order(p.order());
      return h_graph(p);
    }
    if (w == "K") {
      const int a = number();
      // "K3,3" is bipartite only when the comma is directly followed by a
      // bare number; "join(K3, 3K1)" and "join(K3,2K1)" separate arguments.
      if (bipartite_suffix()) {
        ++pos_;
        const int b = number();
        if (a < 1 || b < 1) fail("parts must be non-empty");
        check_order(static_cast<long>(a) + b);
        return complete_bipartite(a, b);
      }
      if (a < 1) fail("order must be positive");
      check_order(a);
      return complete_graph(a);
    }
    if (w == "P") return sized(path_graph, 1);
    if (w == "C") return sized(cycle_graph, 3);
    fail("unknown constructor '" + w + "'");
  }

  bool bipartite_suffix() const {
    std::size_t i = pos_;
    if (i >= s_.size() || s_[i] != ',') return false;
    ++i;
    if (i >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i]))) return false;
    while (i < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i]))) ++i;
    while (i < s_.size() && std::isspace(static_cast<unsigned char>(s_[i]))) ++i;
    return i == s_.size() || s_[i] == ',' || s_[i] == ')';
  }

  Graph sized(Graph (*make)(int), int minimum) {
    const int n = number();
    if (n < minimum) fail("order must be at least " + std::to_string(minimum));
    check_order(n);
    return make(n);
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

Graph parse_family(const std::string& text) { return FamilyParser(text).parse(); }

}  // namespace qng
