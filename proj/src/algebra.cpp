#include "gentle/algebra.hpp"

#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>

#include "gentle/error.hpp"

namespace gentle {

int Algebra::vertex_index(const std::string& id) const {
  for (int i = 0; i < num_vertices(); ++i)
    if (vertices[i] == id) return i;
  return -1;
}

int Algebra::arrow_index(const std::string& name) const {
  for (int i = 0; i < num_arrows(); ++i)
    if (arrows[i].name == name) return i;
  return -1;
}

std::vector<int> Algebra::arrows_from(int v) const {
  std::vector<int> out;
  for (int i = 0; i < num_arrows(); ++i)
    if (arrows[i].source == v) out.push_back(i);
  return out;
}

std::vector<int> Algebra::arrows_into(int v) const {
  std::vector<int> out;
  for (int i = 0; i < num_arrows(); ++i)
    if (arrows[i].target == v) out.push_back(i);
  return out;
}

void Algebra::add_vertex(const std::string& id) {
  if (vertex_index(id) >= 0) throw ParseError("duplicate vertex '" + id + "'");
  vertices.push_back(id);
}

int Algebra::add_arrow(const std::string& name, int source, int target) {
  if (arrow_index(name) >= 0) throw ParseError("duplicate arrow name '" + name + "'");
  arrows.push_back({name, source, target});
  return num_arrows() - 1;
}

void Algebra::add_relation(int a, int b) {
  if (arrows[a].target != arrows[b].source)
    throw ParseError("relation " + arrows[a].name + " " + arrows[b].name + " is not composable");
  relations.insert({a, b});
}

std::vector<Violation> Algebra::validate() const {
  std::vector<Violation> out;
  for (int v = 0; v < num_vertices(); ++v) {
    if (arrows_from(v).size() > 2)
      out.push_back({"G1", "vertex " + vertices[v] + " is the source of more than two arrows"});
    if (arrows_into(v).size() > 2)
      out.push_back({"G1", "vertex " + vertices[v] + " is the target of more than two arrows"});
  }
  for (int a = 0; a < num_arrows(); ++a) {
    int after_free = 0, after_rel = 0, before_free = 0, before_rel = 0;
    for (int b : arrows_from(arrows[a].target)) (has_relation(a, b) ? after_rel : after_free)++;
    for (int c : arrows_into(arrows[a].source)) (has_relation(c, a) ? before_rel : before_free)++;
    if (after_free > 1 || before_free > 1)
      out.push_back({"G2", "arrow " + arrows[a].name + " has two continuations outside I"});
    if (after_rel > 1 || before_rel > 1)
      out.push_back({"G3", "arrow " + arrows[a].name + " has two continuations inside I"});
  }
  for (const auto& r : long_relations) {
    std::string w;
    for (int a : r) w += arrows[a].name;
    out.push_back({"G4", "relation " + w + " has length " + std::to_string(r.size())});
  }
  // A relation-free oriented cycle makes kQ/I infinite dimensional.
  std::vector<int> state(num_arrows(), 0);
  bool cyclic = false;
  std::function<void(int)> dfs = [&](int a) {
    state[a] = 1;
    for (int b : arrows_from(arrows[a].target)) {
      if (has_relation(a, b)) continue;
      if (state[b] == 1) cyclic = true;
      if (state[b] == 0) dfs(b);
    }
    state[a] = 2;
  };
  for (int a = 0; a < num_arrows() && !cyclic; ++a)
    if (state[a] == 0) dfs(a);
  if (cyclic) out.push_back({"FD", "an oriented cycle avoids all relations (infinite dimensional)"});
  return out;
}

namespace {

// Union-find over sign variables with parity: value(x) = parity(x) * value(root).
struct ParityUnionFind {
  std::vector<int> parent, parity;
  explicit ParityUnionFind(int n) : parent(n), parity(n, 1) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::pair<int, int> find(int x) {
    if (parent[x] == x) return {x, 1};
    auto [root, p] = find(parent[x]);
    parent[x] = root;
    parity[x] *= p;
    return {root, parity[x]};
  }
  // Impose value(x) = rel * value(y); false on contradiction.
  bool unite(int x, int y, int rel) {
    auto [rx, px] = find(x);
    auto [ry, py] = find(y);
    if (rx == ry) return px * py == rel;
    parent[rx] = ry;
    parity[rx] = px * py * rel;
    return true;
  }
};

}  // namespace

void Algebra::compute_signs() {
  const int n = num_arrows();
  // variable 2a is sigma(a), 2a+1 is epsilon(a)
  ParityUnionFind uf(2 * n);
  auto require = [&](bool ok) {
    if (!ok) throw DomainError("sign constraints are unsatisfiable (algebra is not gentle)");
  };
  for (int v = 0; v < num_vertices(); ++v) {
    auto out = arrows_from(v), in = arrows_into(v);
    for (size_t i = 0; i < out.size(); ++i)
      for (size_t j = i + 1; j < out.size(); ++j) require(uf.unite(2 * out[i], 2 * out[j], -1));
    for (size_t i = 0; i < in.size(); ++i)
      for (size_t j = i + 1; j < in.size(); ++j)
        require(uf.unite(2 * in[i] + 1, 2 * in[j] + 1, -1));
    // Concatenation through v is legal exactly when sigma(b) = -epsilon(a).
    for (int a : in)
      for (int b : out) require(uf.unite(2 * b, 2 * a + 1, has_relation(a, b) ? 1 : -1));
  }
  std::vector<int> root_value(2 * n, 0);
  for (int a = 0; a < n; ++a) {
    for (int x : {2 * a, 2 * a + 1}) {
      auto [r, p] = uf.find(x);
      if (root_value[r] == 0) root_value[r] = p;  // makes value(x) = +1
    }
  }
  sigma.assign(n, 0);
  epsilon.assign(n, 0);
  for (int a = 0; a < n; ++a) {
    auto [r1, p1] = uf.find(2 * a);
    auto [r2, p2] = uf.find(2 * a + 1);
    sigma[a] = p1 * root_value[r1];
    epsilon[a] = p2 * root_value[r2];
  }
}

IntMatrix Algebra::exchange_matrix() const {
  IntMatrix b(num_vertices(), std::vector<int>(num_vertices(), 0));
  for (const auto& a : arrows) {
    if (a.source == a.target) continue;
    b[a.target][a.source] += 1;
    b[a.source][a.target] -= 1;
  }
  return b;
}

std::string Algebra::to_dsl() const {
  std::ostringstream os;
  os << "vertices";
  for (const auto& v : vertices) os << ' ' << v;
  os << '\n';
  for (const auto& a : arrows) os << "arrow " << a.name << ' ' << vertices[a.source] << ' '
                                  << vertices[a.target] << '\n';
  for (const auto& [a, b] : relations)
    os << "relation " << arrows[a].name << ' ' << arrows[b].name << '\n';
  for (const auto& r : long_relations) {
    os << "relation";
    for (int a : r) os << ' ' << arrows[a].name;
    os << '\n';
  }
  return os.str();
}

Algebra parse_algebra(const std::string& text) {
  Algebra alg;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    struct Token {
      std::string text;
      int column;
    };
    std::vector<Token> toks;
    for (size_t i = 0; i < line.size();) {
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      toks.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
      i = j;
    }
    if (toks.empty()) continue;
    const std::string& kw = toks[0].text;
    auto vertex = [&](const Token& t) {
      int v = alg.vertex_index(t.text);
      if (v < 0) throw ParseError("undeclared vertex '" + t.text + "'", lineno, t.column);
      return v;
    };
    auto arrow = [&](const Token& t) {
      int a = alg.arrow_index(t.text);
      if (a < 0) throw ParseError("undeclared arrow '" + t.text + "'", lineno, t.column);
      return a;
    };
    try {
      if (kw == "vertices") {
        for (size_t i = 1; i < toks.size(); ++i) alg.add_vertex(toks[i].text);
      } else if (kw == "arrow") {
        if (toks.size() != 4)
          throw ParseError("expected: arrow <name> <source> <target>", lineno, toks[0].column);
        if (toks[1].text.find('~') != std::string::npos || toks[1].text.find('(') != std::string::npos)
          throw ParseError("arrow names may not contain '~' or '('", lineno, toks[1].column);
        alg.add_arrow(toks[1].text, vertex(toks[2]), vertex(toks[3]));
      } else if (kw == "relation") {
        if (toks.size() < 3)
          throw ParseError("relation must have length at least 2", lineno, toks[0].column);
        std::vector<int> path;
        for (size_t i = 1; i < toks.size(); ++i) path.push_back(arrow(toks[i]));
        for (size_t i = 0; i + 1 < path.size(); ++i)
          if (alg.arrows[path[i]].target != alg.arrows[path[i + 1]].source)
            throw ParseError("relation is not a composable path", lineno, toks[i + 2].column);
        if (path.size() == 2)
          alg.add_relation(path[0], path[1]);
        else
          alg.long_relations.push_back(path);
      } else {
        throw ParseError("unknown keyword '" + kw + "'", lineno, toks[0].column);
      }
    } catch (const ParseError& e) {
      if (e.line() > 0) throw;
      throw ParseError(e.what(), lineno, toks[0].column);
    }
  }
  if (alg.vertices.empty()) throw ParseError("no vertices declared");
  if (alg.is_gentle()) alg.compute_signs();
  return alg;
}

Algebra load_algebra(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_algebra(ss.str());
}

bool same_presentation(const Algebra& a, const Algebra& b) {
  if (a.vertices != b.vertices || a.num_arrows() != b.num_arrows()) return false;
  for (int i = 0; i < a.num_arrows(); ++i) {
    int j = b.arrow_index(a.arrows[i].name);
    if (j < 0 || b.arrows[j].source != a.arrows[i].source ||
        b.arrows[j].target != a.arrows[i].target)
      return false;
  }
  std::set<std::pair<std::string, std::string>> ra, rb;
  for (auto [x, y] : a.relations) ra.insert({a.arrows[x].name, a.arrows[y].name});
  for (auto [x, y] : b.relations) rb.insert({b.arrows[x].name, b.arrows[y].name});
  return ra == rb && a.long_relations.size() == b.long_relations.size();
}

}  // namespace gentle
