#include "fourierknot/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "fourierknot/error.hpp"

namespace fk {

// ---------------------------------------------------------------- LaurentPoly

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::Numeric, "polynomial", "coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::Numeric, "polynomial", "coefficient overflow");
  return r;
}

}  // namespace

LaurentPoly LaurentPoly::monomial(int exponent, std::int64_t coefficient) {
  LaurentPoly p;
  p.add_term(exponent, coefficient);
  return p;
}

std::int64_t LaurentPoly::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

void LaurentPoly::add_term(int exponent, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& rhs) const {
  LaurentPoly out = *this;
  out += rhs;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& rhs) const {
  LaurentPoly out = *this;
  for (const auto& [e, c] : rhs.terms_) out.add_term(e, checked_mul(c, -1));
  return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& rhs) const {
  LaurentPoly out;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : rhs.terms_) out.add_term(e1 + e2, checked_mul(c1, c2));
  return out;
}

LaurentPoly LaurentPoly::scaled(int shift, std::int64_t c) const {
  LaurentPoly out;
  for (const auto& [e, k] : terms_) out.add_term(e + shift, checked_mul(k, c));
  return out;
}

LaurentPoly LaurentPoly::mirrored() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.add_term(-e, c);
  return out;
}

LaurentPoly LaurentPoly::divided_by(const LaurentPoly& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorKind::InvalidArgument, "polynomial", "division by zero polynomial");
  const auto [low_e, low_c] = *divisor.terms_.begin();
  LaurentPoly quotient;
  LaurentPoly rest = *this;
  const int limit = is_zero() ? 0 : terms_.rbegin()->first - low_e;
  while (!rest.is_zero()) {
    const auto [e, c] = *rest.terms_.begin();
    if (e - low_e > limit || c % low_c != 0)
      throw Error(ErrorKind::Numeric, "polynomial", "inexact polynomial division");
    const LaurentPoly q = monomial(e - low_e, c / low_c);
    quotient += q;
    rest = rest - q * divisor;
  }
  return quotient;
}

LaurentPoly LaurentPoly::exponents_divided(int factor) const {
  if (factor == 0) throw Error(ErrorKind::InvalidArgument, "polynomial", "exponent factor must be non-zero");
  LaurentPoly out;
  for (const auto& [e, c] : terms_) {
    if (e % factor != 0)
      throw Error(ErrorKind::Numeric, "polynomial", "exponent " + std::to_string(e) + " not divisible by " +
                                                         std::to_string(factor));
    out.add_term(e / factor, c);
  }
  return out;
}

std::string LaurentPoly::to_string(const std::string& variable) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto [e, c] = *it;
    const std::int64_t mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    os << variable;
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

// ------------------------------------------------------------ braid diagrams

namespace {

enum class Closure { Trace, Plat };

// Crossing slots in counterclockwise order: NW, SW, SE, NE. Strands enter a
// braid crossing from above (NW, NE) and leave below (SW, SE).
constexpr int kNW = 0, kSW = 1, kSE = 2, kNE = 3;

PDCode pd_from_braid(const BraidWord& word, Closure closure) {
  const int n = word.width();
  const int count = static_cast<int>(word.size());
  const int top0 = 4 * count;
  const int bottom0 = top0 + n;
  const int nodes = bottom0 + n;

  std::vector<std::array<int, 2>> edges;
  std::vector<std::vector<int>> incident(static_cast<std::size_t>(nodes));
  auto connect = [&](int a, int b) {
    const int id = static_cast<int>(edges.size());
    edges.push_back({a, b});
    incident[static_cast<std::size_t>(a)].push_back(id);
    incident[static_cast<std::size_t>(b)].push_back(id);
  };

  std::vector<int> hanging(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) hanging[static_cast<std::size_t>(p)] = top0 + p;
  for (int c = 0; c < count; ++c) {
    const auto k = static_cast<std::size_t>(word.letters()[static_cast<std::size_t>(c)].index - 1);
    connect(hanging[k], 4 * c + kNW);
    connect(hanging[k + 1], 4 * c + kNE);
    hanging[k] = 4 * c + kSW;
    hanging[k + 1] = 4 * c + kSE;
  }
  for (int p = 0; p < n; ++p) connect(hanging[static_cast<std::size_t>(p)], bottom0 + p);
  if (closure == Closure::Trace) {
    for (int p = 0; p < n; ++p) connect(bottom0 + p, top0 + p);
  } else {
    for (int p = 0; p + 1 < n; p += 2) {
      connect(top0 + p, top0 + p + 1);
      connect(bottom0 + p, bottom0 + p + 1);
    }
  }

  std::vector<char> used(edges.size(), 0);
  std::vector<int> label(static_cast<std::size_t>(top0), 0);
  std::vector<char> entering(static_cast<std::size_t>(top0), 0);
  auto other_end = [&](int e, int node) {
    const auto& ed = edges[static_cast<std::size_t>(e)];
    return ed[0] == node ? ed[1] : ed[0];
  };
  // Follows the edge leaving `node` through boundary nodes to the next slot.
  auto follow = [&](int node) {
    int e = incident[static_cast<std::size_t>(node)][0];
    int cur = node;
    while (true) {
      used[static_cast<std::size_t>(e)] = 1;
      cur = other_end(e, cur);
      if (cur < top0) return cur;
      const auto& inc = incident[static_cast<std::size_t>(cur)];
      e = inc[0] == e ? inc[1] : inc[0];
    }
  };

  int next_label = 1;
  for (int c = 0; c < count; ++c) {
    for (int start_slot : {kSW, kSE}) {
      const int start = 4 * c + start_slot;
      if (label[static_cast<std::size_t>(start)] != 0) continue;
      int leaving = start;
      do {
        const int arc = next_label++;
        label[static_cast<std::size_t>(leaving)] = arc;
        const int arrive = follow(leaving);
        label[static_cast<std::size_t>(arrive)] = arc;
        entering[static_cast<std::size_t>(arrive)] = 1;
        leaving = 4 * (arrive / 4) + (arrive % 4 + 2) % 4;
      } while (leaving != start);
    }
  }

  PDCode pd;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (used[e]) continue;
    ++pd.loops;
    // Crossingless component: consume its boundary cycle.
    int cur = edges[e][0];
    int edge = static_cast<int>(e);
    while (!used[static_cast<std::size_t>(edge)]) {
      used[static_cast<std::size_t>(edge)] = 1;
      cur = other_end(edge, cur);
      const auto& inc = incident[static_cast<std::size_t>(cur)];
      edge = inc[0] == edge ? inc[1] : inc[0];
    }
  }

  for (int c = 0; c < count; ++c) {
    const int sign = word.letters()[static_cast<std::size_t>(c)].sign;
    const int a = sign > 0 ? kNW : kNE;
    const int b = sign > 0 ? kSE : kSW;
    const int u = entering[static_cast<std::size_t>(4 * c + a)] ? a : b;
    std::array<int, 4> t{};
    for (int k = 0; k < 4; ++k) t[static_cast<std::size_t>(k)] = label[static_cast<std::size_t>(4 * c + (u + k) % 4)];
    pd.crossings.push_back(t);
  }
  return pd;
}

struct Orientation {
  // entering[c][slot]: the strand enters crossing c through that slot.
  std::vector<std::array<bool, 4>> entering;
  int walks = 0;
  int min_label = 1;
};

Orientation orient(const PDCode& pd) {
  const std::size_t n = pd.crossings.size();
  Orientation o;
  o.entering.assign(n, {false, false, false, false});
  if (pd.loops < 0) throw Error(ErrorKind::InvalidArgument, "pd", "negative loop count");
  if (n == 0) return o;

  int lo = pd.crossings[0][0], hi = lo;
  for (const auto& t : pd.crossings)
    for (int x : t) {
      lo = std::min(lo, x);
      hi = std::max(hi, x);
    }
  if (static_cast<std::size_t>(hi - lo + 1) != 2 * n)
    throw Error(ErrorKind::InvalidArgument, "pd", "arc labels must be 2n consecutive integers");
  o.min_label = lo;

  std::vector<std::vector<std::pair<int, int>>> where(2 * n);
  for (std::size_t c = 0; c < n; ++c)
    for (int s = 0; s < 4; ++s)
      where[static_cast<std::size_t>(pd.crossings[c][static_cast<std::size_t>(s)] - lo)].emplace_back(
          static_cast<int>(c), s);
  for (std::size_t x = 0; x < where.size(); ++x)
    if (where[x].size() != 2)
      throw Error(ErrorKind::InvalidArgument, "pd",
                  "arc label " + std::to_string(static_cast<int>(x) + lo) + " appears " +
                      std::to_string(where[x].size()) + " times");

  std::vector<std::array<bool, 4>> visited(n, {false, false, false, false});
  auto walk = [&](int c0, int s0) {
    ++o.walks;
    int c = c0, s = s0;
    while (true) {
      if (s == 2) throw Error(ErrorKind::InvalidArgument, "pd", "under-strand direction inconsistent");
      visited[static_cast<std::size_t>(c)][static_cast<std::size_t>(s)] = true;
      o.entering[static_cast<std::size_t>(c)][static_cast<std::size_t>(s)] = true;
      const int exit = (s + 2) % 4;
      visited[static_cast<std::size_t>(c)][static_cast<std::size_t>(exit)] = true;
      const int arc = pd.crossings[static_cast<std::size_t>(c)][static_cast<std::size_t>(exit)];
      const auto& occ = where[static_cast<std::size_t>(arc - lo)];
      const auto nxt = occ[0] == std::make_pair(c, exit) ? occ[1] : occ[0];
      if (nxt.first == c0 && nxt.second == s0) return;
      if (visited[static_cast<std::size_t>(nxt.first)][static_cast<std::size_t>(nxt.second)])
        throw Error(ErrorKind::InvalidArgument, "pd", "arcs do not close into cycles consistently");
      c = nxt.first;
      s = nxt.second;
    }
  };
  for (std::size_t c = 0; c < n; ++c)
    if (!visited[c][0]) walk(static_cast<int>(c), 0);
  // Components that only pass over are oriented arbitrarily.
  for (std::size_t c = 0; c < n; ++c)
    if (!visited[c][3]) walk(static_cast<int>(c), 3);
  return o;
}

int sign_at(const Orientation& o, std::size_t c) { return o.entering[c][3] ? 1 : -1; }

}  // namespace

PDCode pd_from_closure(const BraidWord& word) { return pd_from_braid(word, Closure::Trace); }

PDCode pd_from_plat(const Plat& plat) { return pd_from_braid(plat.braid(), Closure::Plat); }

void validate(const PDCode& pd) { (void)orient(pd); }

int component_count(const PDCode& pd) {
  const Orientation o = orient(pd);
  const int total = o.walks + pd.loops;
  return total == 0 ? 1 : total;
}

std::vector<int> crossing_signs(const PDCode& pd) {
  const Orientation o = orient(pd);
  std::vector<int> signs;
  for (std::size_t c = 0; c < pd.crossings.size(); ++c) signs.push_back(sign_at(o, c));
  return signs;
}

int writhe(const PDCode& pd) {
  const auto s = crossing_signs(pd);
  return std::accumulate(s.begin(), s.end(), 0);
}

// ------------------------------------------------------------ Kauffman bracket

namespace {

// d = -A^2 - A^-2
LaurentPoly loop_value() { return LaurentPoly::monomial(2, -1) + LaurentPoly::monomial(-2, -1); }

LaurentPoly loop_power(int k) {
  LaurentPoly p = LaurentPoly::constant(1);
  const LaurentPoly d = loop_value();
  for (int i = 0; i < k; ++i) p = p * d;
  return p;
}

// Smoothings of X[i,j,k,l]: the A-smoothing joins (i,j),(k,l); the
// B-smoothing joins (i,l),(j,k).
constexpr std::array<std::array<int, 4>, 2> kSmoothing{{{0, 1, 2, 3}, {0, 3, 1, 2}}};

}  // namespace

LaurentPoly kauffman_bracket(const PDCode& pd, int max_crossings) {
  validate(pd);
  const int n = static_cast<int>(pd.crossings.size());
  if (n > max_crossings) throw Error(ErrorKind::Budget, "kauffman_bracket", "diagram too large for exact bracket");
  if (n == 0) return pd.loops == 0 ? LaurentPoly::constant(1) : loop_power(pd.loops - 1);

  int lo = pd.crossings[0][0];
  for (const auto& t : pd.crossings)
    for (int x : t) lo = std::min(lo, x);
  const int labels = 2 * n;

  // histogram[a_count][loops]
  std::vector<std::vector<std::int64_t>> histogram(static_cast<std::size_t>(n + 1),
                                                   std::vector<std::int64_t>(static_cast<std::size_t>(labels + 1), 0));
  std::vector<int> parent(static_cast<std::size_t>(labels));
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (std::uint64_t state = 0; state < (std::uint64_t{1} << n); ++state) {
    std::iota(parent.begin(), parent.end(), 0);
    int loops = labels;
    int a_count = 0;
    for (int c = 0; c < n; ++c) {
      const bool b_smoothing = (state >> c) & 1U;
      if (!b_smoothing) ++a_count;
      const auto& sm = kSmoothing[b_smoothing ? 1 : 0];
      const auto& t = pd.crossings[static_cast<std::size_t>(c)];
      for (int h = 0; h < 4; h += 2) {
        const int x = find(t[static_cast<std::size_t>(sm[static_cast<std::size_t>(h)])] - lo);
        const int y = find(t[static_cast<std::size_t>(sm[static_cast<std::size_t>(h + 1)])] - lo);
        if (x != y) {
          parent[static_cast<std::size_t>(x)] = y;
          --loops;
        }
      }
    }
    ++histogram[static_cast<std::size_t>(a_count)][static_cast<std::size_t>(loops)];
  }

  LaurentPoly out;
  std::vector<LaurentPoly> powers;
  for (int k = 0; k <= labels + pd.loops; ++k) powers.push_back(loop_power(k));
  for (int a = 0; a <= n; ++a)
    for (int loops = 1; loops <= labels; ++loops) {
      const std::int64_t count = histogram[static_cast<std::size_t>(a)][static_cast<std::size_t>(loops)];
      if (count != 0)
        out += powers[static_cast<std::size_t>(loops + pd.loops - 1)].scaled(a - (n - a), count);
    }
  return out;
}

LaurentPoly kauffman_bracket_contracted(const PDCode& pd) {
  validate(pd);
  const std::size_t n = pd.crossings.size();
  if (n == 0) return pd.loops == 0 ? LaurentPoly::constant(1) : loop_power(pd.loops - 1);

  // A state pairs up the open arc labels; key = flattened sorted pairs.
  using Matching = std::vector<int>;
  std::map<Matching, LaurentPoly> states;
  states.emplace(Matching{}, LaurentPoly::constant(1));
  std::map<int, int> open_count;
  std::vector<bool> done(n, false);
  const LaurentPoly d = loop_value();
  constexpr std::size_t kStateLimit = 4'000'000;

  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pick = n;
    int best = -1;
    for (std::size_t c = 0; c < n; ++c) {
      if (done[c]) continue;
      int shared = 0;
      for (int x : pd.crossings[c]) shared += open_count.count(x) ? 1 : 0;
      if (shared > best) {
        best = shared;
        pick = c;
      }
    }
    done[pick] = true;
    const auto& t = pd.crossings[pick];

    std::map<Matching, LaurentPoly> next;
    for (const auto& [matching, poly] : states) {
      std::unordered_map<int, int> partner;
      for (std::size_t q = 0; q < matching.size(); q += 2) {
        partner[matching[q]] = matching[q + 1];
        partner[matching[q + 1]] = matching[q];
      }
      for (int smoothing = 0; smoothing < 2; ++smoothing) {
        const auto& sm = kSmoothing[static_cast<std::size_t>(smoothing)];
        // Nodes 0..3 are slots; further nodes are old open labels.
        std::vector<std::vector<int>> adj(4);
        std::vector<int> node_label(4, 0);
        std::unordered_map<int, int> label_node;
        auto node_of_label = [&](int x) {
          auto it = label_node.find(x);
          if (it != label_node.end()) return it->second;
          const int id = static_cast<int>(adj.size());
          adj.emplace_back();
          node_label.push_back(x);
          label_node.emplace(x, id);
          return id;
        };
        auto link = [&](int a, int b) {
          adj[static_cast<std::size_t>(a)].push_back(b);
          adj[static_cast<std::size_t>(b)].push_back(a);
        };
        link(sm[0], sm[1]);
        link(sm[2], sm[3]);
        for (int r = 0; r < 4; ++r) {
          const int x = t[static_cast<std::size_t>(r)];
          node_label[static_cast<std::size_t>(r)] = x;
          if (partner.count(x)) {
            const int ln = node_of_label(x);
            link(r, ln);
            const int y = partner[x];
            const int yn = node_of_label(y);
            if (adj[static_cast<std::size_t>(ln)].size() == 1) link(ln, yn);
          } else {
            for (int r2 = r + 1; r2 < 4; ++r2)
              if (t[static_cast<std::size_t>(r2)] == x) link(r, r2);
          }
        }
        std::vector<bool> seen(adj.size(), false);
        Matching added;
        int closed = 0;
        for (std::size_t v = 0; v < adj.size(); ++v) {
          if (seen[v] || adj[v].size() != 1) continue;
          std::size_t prev = v, cur = v;
          seen[v] = true;
          while (true) {
            std::size_t nxt = static_cast<std::size_t>(adj[cur][0]) == prev && adj[cur].size() == 2
                                  ? static_cast<std::size_t>(adj[cur][1])
                                  : static_cast<std::size_t>(adj[cur][0]);
            if (cur != v && adj[cur].size() == 1) break;
            prev = cur;
            cur = nxt;
            seen[cur] = true;
          }
          const int a = node_label[v], b = node_label[cur];
          added.push_back(std::min(a, b));
          added.push_back(std::max(a, b));
        }
        for (std::size_t v = 0; v < adj.size(); ++v) {
          if (seen[v]) continue;
          ++closed;
          std::vector<std::size_t> stack{v};
          seen[v] = true;
          while (!stack.empty()) {
            const std::size_t u = stack.back();
            stack.pop_back();
            for (int w : adj[u])
              if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = true;
                stack.push_back(static_cast<std::size_t>(w));
              }
          }
        }
        std::vector<std::pair<int, int>> pairs;
        for (std::size_t q = 0; q < matching.size(); q += 2)
          if (!label_node.count(matching[q]) && !label_node.count(matching[q + 1]))
            pairs.emplace_back(matching[q], matching[q + 1]);
        for (std::size_t q = 0; q < added.size(); q += 2) pairs.emplace_back(added[q], added[q + 1]);
        std::sort(pairs.begin(), pairs.end());
        Matching key;
        for (const auto& [a, b] : pairs) {
          key.push_back(a);
          key.push_back(b);
        }
        LaurentPoly term = poly.scaled(smoothing == 0 ? 1 : -1);
        for (int k = 0; k < closed; ++k) term = term * d;
        next[key] += term;
      }
    }
    for (auto it = next.begin(); it != next.end();) it = it->second.is_zero() ? next.erase(it) : std::next(it);
    if (next.size() > kStateLimit)
      throw Error(ErrorKind::Budget, "kauffman_bracket", "diagram too wide for contraction");
    states = std::move(next);
    for (int x : t) {
      if (++open_count[x] == 2) open_count.erase(x);
    }
  }

  LaurentPoly total;
  for (const auto& [m, p] : states) {
    if (!m.empty()) throw Error(ErrorKind::Internal, "kauffman_bracket", "open arcs left after contraction");
    total += p;
  }
  return (total * loop_power(pd.loops)).divided_by(d);
}

LaurentPoly jones(const PDCode& pd) {
  const int w = writhe(pd);
  const LaurentPoly bracket = kauffman_bracket_contracted(pd);
  return bracket.scaled(-3 * w, (w % 2 == 0) ? 1 : -1);
}

LaurentPoly jones_in_t(const PDCode& pd) {
  if (component_count(pd) != 1) throw Error(ErrorKind::Precondition, "jones", "Jones in t requires a knot diagram");
  return jones(pd).exponents_divided(-4);
}

// ------------------------------------------------------------ determinant

namespace {

constexpr std::int64_t kPrimes[3] = {2147483647, 2147483629, 2147483587};

std::int64_t power_mod(std::int64_t base, std::int64_t exp, std::int64_t mod) {
  std::int64_t result = 1;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) result = static_cast<std::int64_t>(static_cast<__int128>(result) * base % mod);
    base = static_cast<std::int64_t>(static_cast<__int128>(base) * base % mod);
    exp >>= 1;
  }
  return result;
}

std::int64_t det_mod(std::vector<std::vector<std::int64_t>> m, std::int64_t p) {
  const std::size_t n = m.size();
  std::int64_t det = 1;
  for (auto& row : m)
    for (auto& v : row) v = ((v % p) + p) % p;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = (p - det) % p;
    }
    det = static_cast<std::int64_t>(static_cast<__int128>(det) * m[col][col] % p);
    const std::int64_t inv = power_mod(m[col][col], p - 2, p);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      const std::int64_t f = static_cast<std::int64_t>(static_cast<__int128>(m[r][col]) * inv % p);
      for (std::size_t k = col; k < n; ++k) {
        if (m[col][k] == 0) continue;
        m[r][k] = static_cast<std::int64_t>(
            (m[r][k] - static_cast<__int128>(f) * m[col][k] % p + p) % p);
      }
    }
  }
  return det;
}

}  // namespace

std::int64_t determinant(const PDCode& pd) {
  if (component_count(pd) != 1)
    throw Error(ErrorKind::Precondition, "determinant", "determinant requires a knot diagram");
  const std::size_t n = pd.crossings.size();
  if (n <= 1) return 1;

  int lo = pd.crossings[0][0];
  for (const auto& t : pd.crossings)
    for (int x : t) lo = std::min(lo, x);
  // Arcs of the diagram: labels joined where they pass over a crossing.
  std::vector<int> parent(2 * n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  for (const auto& t : pd.crossings) parent[static_cast<std::size_t>(find(t[1] - lo))] = find(t[3] - lo);
  std::map<int, std::size_t> arc_index;
  for (std::size_t x = 0; x < 2 * n; ++x) arc_index.try_emplace(find(static_cast<int>(x)), arc_index.size());
  if (arc_index.size() != n) throw Error(ErrorKind::Internal, "determinant", "arc count differs from crossing count");

  std::vector<std::vector<std::int64_t>> colouring(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t c = 0; c < n; ++c) {
    const auto& t = pd.crossings[c];
    colouring[c][arc_index[find(t[1] - lo)]] += 2;
    colouring[c][arc_index[find(t[0] - lo)]] -= 1;
    colouring[c][arc_index[find(t[2] - lo)]] -= 1;
  }
  std::vector<std::vector<std::int64_t>> minor(n - 1, std::vector<std::int64_t>(n - 1));
  for (std::size_t r = 1; r < n; ++r)
    for (std::size_t c = 1; c < n; ++c) minor[r - 1][c - 1] = colouring[r][c];

  std::int64_t residues[3];
  for (int k = 0; k < 3; ++k) residues[k] = det_mod(minor, kPrimes[k]);
  const __int128 p1 = kPrimes[0], p2 = kPrimes[1];
  const __int128 inv = power_mod(kPrimes[0] % kPrimes[1], kPrimes[1] - 2, kPrimes[1]);
  const __int128 diff = ((residues[1] - residues[0]) % p2 + p2) % p2;
  __int128 x = residues[0] + p1 * (diff * inv % p2);
  const __int128 modulus = p1 * p2;
  if (x > modulus / 2) x -= modulus;
  const __int128 check = ((x % kPrimes[2]) + kPrimes[2]) % kPrimes[2];
  if (check != residues[2]) throw Error(ErrorKind::Numeric, "determinant", "determinant exceeds exact range");
  return static_cast<std::int64_t>(x < 0 ? -x : x);
}

}  // namespace fk
