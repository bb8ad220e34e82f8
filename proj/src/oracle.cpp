#include "gentle/oracle.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <map>
#include <numeric>
#include <sstream>

#include "gentle/error.hpp"

namespace gentle {

namespace {

int pos(int x) { return x > 0 ? x : 0; }

YPolynomial product(const Seed& s, int k, int sign) {
  const int n = s.rank();
  Exponent y(n, 0);
  for (int j = 0; j < n; ++j) y[j] = pos(sign * s.c[j][k]);
  YPolynomial r = YPolynomial::monomial(y);
  for (int i = 0; i < n; ++i)
    if (int p = pos(sign * s.b[i][k])) r = r * s.vars[i].f.pow(p);
  return r;
}

}  // namespace

std::vector<int> skew_symmetrizer(const IntMatrix& b) {
  const int n = static_cast<int>(b.size());
  for (const auto& row : b)
    if (static_cast<int>(row.size()) != n) return {};
  // rational weights propagated along nonzero entries, one component at a time
  std::vector<long long> num(n, 0), den(n, 1);
  for (int root = 0; root < n; ++root) {
    if (num[root]) continue;
    num[root] = 1;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      int i = queue.front();
      queue.pop_front();
      for (int j = 0; j < n; ++j) {
        if (b[i][j] == 0 && b[j][i] == 0) continue;
        if (b[i][j] == 0 || b[j][i] == 0 || (b[i][j] > 0) == (b[j][i] > 0)) return {};
        // d_j = -d_i b_ij / b_ji
        long long nj = -num[i] * b[i][j], dj = den[i] * b[j][i];
        if (dj < 0) nj = -nj, dj = -dj;
        long long g = std::gcd(nj, dj);
        nj /= g, dj /= g;
        if (!num[j]) {
          num[j] = nj, den[j] = dj;
          queue.push_back(j);
        } else if (num[j] * dj != nj * den[j]) {
          return {};
        }
      }
    }
  }
  for (int i = 0; i < n; ++i)
    if (b[i][i] != 0) return {};
  long long l = 1;
  for (int i = 0; i < n; ++i) l = std::lcm(l, den[i]);
  std::vector<int> d(n);
  for (int i = 0; i < n; ++i) d[i] = static_cast<int>(num[i] * (l / den[i]));
  return d;
}

Seed initial_seed(const IntMatrix& b) {
  if (b.empty() || skew_symmetrizer(b).empty()) throw DomainError("exchange matrix is not skew-symmetrizable");
  const int n = static_cast<int>(b.size());
  Seed s;
  s.b = s.b0 = b;
  s.c.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    s.c[i][i] = 1;
    GVector g(n, 0);
    g[i] = 1;
    s.vars.push_back({YPolynomial::one(n), g});
  }
  return s;
}

IntMatrix mutate_matrix(const IntMatrix& b, int k) {
  IntMatrix r = b;
  const int rows = static_cast<int>(b.size()), cols = static_cast<int>(b[0].size());
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      r[i][j] = (i == k || j == k) ? -b[i][j] : b[i][j] + pos(b[i][k]) * pos(b[k][j]) - pos(-b[i][k]) * pos(-b[k][j]);
  return r;
}

Seed mutate(const Seed& s, int k) {
  const int n = s.rank();
  if (k < 0 || k >= n) throw PreconditionError("mutation direction out of range", k);
  Seed r = s;
  r.vars[k].f = (product(s, k, 1) + product(s, k, -1)).divide_exact(s.vars[k].f);
  GVector g(n, 0);
  for (int t = 0; t < n; ++t) {
    g[t] = -s.vars[k].g[t];
    for (int i = 0; i < n; ++i) g[t] += pos(s.b[i][k]) * s.vars[i].g[t];
    for (int j = 0; j < n; ++j) g[t] -= pos(s.c[j][k]) * s.b0[t][j];
  }
  r.vars[k].g = g;
  r.b = mutate_matrix(s.b, k);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      r.c[i][j] = j == k ? -s.c[i][j]
                         : s.c[i][j] + pos(s.c[i][k]) * pos(s.b[k][j]) - pos(-s.c[i][k]) * pos(-s.b[k][j]);
  return r;
}

std::optional<bool> is_finite_type(const IntMatrix& b, int cap) {
  if (skew_symmetrizer(b).empty()) throw DomainError("exchange matrix is not skew-symmetrizable");
  std::set<IntMatrix> seen{b};
  std::deque<IntMatrix> queue{b};
  while (!queue.empty()) {
    IntMatrix m = std::move(queue.front());
    queue.pop_front();
    for (size_t i = 0; i < m.size(); ++i)
      for (size_t j = 0; j < m.size(); ++j)
        if (m[i][j] * m[j][i] < -3) return false;
    for (int k = 0; k < static_cast<int>(m.size()); ++k) {
      IntMatrix t = mutate_matrix(m, k);
      if (seen.insert(t).second) {
        if (static_cast<int>(seen.size()) > cap) return std::nullopt;
        queue.push_back(std::move(t));
      }
    }
  }
  return true;
}

Enumeration enumerate_variables(const IntMatrix& b, int cap) {
  if (is_finite_type(b, cap) == false) throw UnsupportedError("exchange matrix is of infinite type");
  Enumeration out;
  using Key = std::pair<IntMatrix, std::vector<ClusterVariable>>;
  auto key = [](const Seed& s) {
    auto v = s.vars;
    std::sort(v.begin(), v.end());
    return Key{s.b, v};
  };
  std::set<Key> seen;
  std::deque<Seed> queue;
  Seed first = initial_seed(b);
  seen.insert(key(first));
  queue.push_back(first);
  while (!queue.empty()) {
    Seed s = std::move(queue.front());
    queue.pop_front();
    if (++out.seeds > cap) throw PreconditionError("seed cap exceeded", cap);
    for (const auto& v : s.vars) out.variables.insert(v);
    for (int k = 0; k < s.rank(); ++k) {
      Seed t = mutate(s, k);
      if (seen.insert(key(t)).second) queue.push_back(std::move(t));
    }
  }
  return out;
}

IntMatrix parse_matrix(const std::string& text) {
  IntMatrix m;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::vector<int> row;
    std::string tok;
    while (ls >> tok) {
      try {
        size_t used = 0;
        row.push_back(std::stoi(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::logic_error&) {
        throw ParseError("expected an integer, got \"" + tok + "\"", lineno, 1);
      }
    }
    if (!row.empty()) m.push_back(row);
  }
  if (m.empty()) throw ParseError("empty matrix");
  for (const auto& row : m)
    if (row.size() != m.size()) throw ParseError("matrix must be square");
  return m;
}

}  // namespace gentle
