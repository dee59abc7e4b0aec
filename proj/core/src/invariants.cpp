#include "gridband/invariants.hpp"

#include "gridband/error.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <string>
#include <numeric>
#include <unordered_map>

namespace gridband {

namespace {

using Poly = LaurentPolynomial;

const Poly& loop_value() {
  static const Poly d{{2, -1}, {-2, -1}};
  return d;
}

void check_cap(const PlanarDiagram& d, int cap) {
  if (d.crossing_count() > cap)
    throw Error(ErrorCode::TooManyCrossings,
                std::to_string(d.crossing_count()) + " crossings exceed the cap of " + std::to_string(cap));
}

struct PairingHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = v.size();
    for (int x : v)
      h = h * 1000003u ^ static_cast<std::size_t>(x + 1);
    return h;
  }
};

// Joins edge ends u and v in the pairing `partner` (-1 = not open).
// Returns the number of closed loops (0 or 1).
int join(std::vector<int>& partner, int u, int v) {
  if (u == v)
    return 1;
  const int pu = partner[static_cast<std::size_t>(u)];
  const int pv = partner[static_cast<std::size_t>(v)];
  if (pu != -1 && pv != -1) {
    partner[static_cast<std::size_t>(u)] = partner[static_cast<std::size_t>(v)] = -1;
    if (pu == v)
      return 1;
    partner[static_cast<std::size_t>(pu)] = pv;
    partner[static_cast<std::size_t>(pv)] = pu;
  } else if (pu != -1) {
    partner[static_cast<std::size_t>(u)] = -1;
    partner[static_cast<std::size_t>(v)] = pu;
    partner[static_cast<std::size_t>(pu)] = v;
  } else if (pv != -1) {
    partner[static_cast<std::size_t>(v)] = -1;
    partner[static_cast<std::size_t>(u)] = pv;
    partner[static_cast<std::size_t>(pv)] = u;
  } else {
    partner[static_cast<std::size_t>(u)] = v;
    partner[static_cast<std::size_t>(v)] = u;
  }
  return 0;
}

// Greedy order keeping the set of open edges small: next is the crossing
// sharing the most edges with the already processed part.
std::vector<int> sweep_order(const PlanarDiagram& d) {
  const int c = d.crossing_count();
  std::vector<int> order;
  std::vector<char> done(static_cast<std::size_t>(c), 0);
  std::vector<int> touched(static_cast<std::size_t>(d.edge_count), 0);
  for (int step = 0; step < c; ++step) {
    int best = -1, best_score = -1;
    for (int k = 0; k < c; ++k) {
      if (done[static_cast<std::size_t>(k)])
        continue;
      int score = 0;
      for (int e : d.crossings[static_cast<std::size_t>(k)].pd)
        score += touched[static_cast<std::size_t>(e)] == 1 ? 1 : 0;
      if (score > best_score) {
        best = k;
        best_score = score;
      }
    }
    done[static_cast<std::size_t>(best)] = 1;
    order.push_back(best);
    for (int e : d.crossings[static_cast<std::size_t>(best)].pd)
      ++touched[static_cast<std::size_t>(e)];
  }
  return order;
}

Poly power(const Poly& base, int k) {
  Poly out{1};
  for (int i = 0; i < k; ++i)
    out *= base;
  return out;
}

// Fraction-free (Bareiss) determinant over Z[t, 1/t].
Poly determinant(std::vector<std::vector<Poly>> m) {
  const std::size_t size = m.size();
  if (size == 0)
    return Poly{1};
  Poly prev{1};
  int sign = 1;
  for (std::size_t k = 0; k + 1 < size; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < size && m[swap_row][k].is_zero())
        ++swap_row;
      if (swap_row == size)
        return Poly{};
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j < size; ++j) {
        Poly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        auto q = num.divide_exact(prev);
        if (!q)
          throw std::logic_error("Bareiss step is not exact");
        m[i][j] = std::move(*q);
      }
      m[i][k] = Poly{};
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[size - 1][size - 1] : -m[size - 1][size - 1];
}

// ---- Dubrovnik polynomial ----
//
// Unoriented crossings: four edge ids counterclockwise, slots 0 and 2 on the
// under strand. Every edge id occurs exactly twice in a diagram.

using Bi = BivariateLaurent;

struct UCrossing {
  std::array<int, 4> e;
};
using UDiagram = std::vector<UCrossing>;

std::size_t at(int i) { return static_cast<std::size_t>(i); }

// Deletes the listed crossings and connects the loose edge ends pairwise.
// Returns the number of closed loops created.
int remove_and_join(UDiagram& cs, std::vector<int> doomed, const std::vector<std::pair<int, int>>& joins) {
  std::unordered_map<int, int> parent;
  auto find = [&](int e) {
    for (auto it = parent.find(e); it != parent.end() && it->second != e; it = parent.find(e))
      e = it->second;
    return e;
  };
  int loops = 0;
  for (auto [u, v] : joins) {
    u = find(u);
    v = find(v);
    if (u == v)
      ++loops;
    else
      parent[v] = u;
  }
  std::sort(doomed.rbegin(), doomed.rend());
  for (int x : doomed)
    cs.erase(cs.begin() + x);
  for (auto& c : cs)
    for (int& e : c.e)
      e = find(e);
  return loops;
}

struct End {
  int crossing;
  int slot;
};

std::unordered_map<int, std::array<End, 2>> edge_ends(const UDiagram& cs) {
  std::unordered_map<int, std::array<End, 2>> ends;
  std::unordered_map<int, int> seen;
  for (int x = 0; x < static_cast<int>(cs.size()); ++x)
    for (int s = 0; s < 4; ++s) {
      const int e = cs[at(x)].e[at(s)];
      ends[e][at(seen[e]++)] = End{x, s};
    }
  return ends;
}

// Removes curls and bigons (Reidemeister I and II); curls contribute
// a^{+-1}. Returns the loops that closed up.
int reduce(UDiagram& cs, int& a_exp) {
  int loops = 0;
  for (bool changed = true; changed;) {
    changed = false;
    for (int x = 0; x < static_cast<int>(cs.size()) && !changed; ++x) {
      const auto e = cs[at(x)].e;
      for (int i = 0; i < 4; ++i) {
        if (e[at(i)] != e[at((i + 1) & 3)])
          continue;
        a_exp += i % 2 == 0 ? 1 : -1;
        loops += remove_and_join(cs, {x}, {{e[at((i + 2) & 3)], e[at((i + 3) & 3)]}});
        changed = true;
        break;
      }
    }
    if (changed)
      continue;
    const auto ends = edge_ends(cs);
    for (const auto& [p, pe] : ends) {
      const auto [x, i] = pe[0];
      const auto [y, j] = pe[1];
      if (x == y || i % 2 == 0 || j % 2 == 0)
        continue;
      for (int d : {1, -1}) {
        const int i2 = (i + d) & 3, j2 = (j - d) & 3;
        if (cs[at(x)].e[at(i2)] != cs[at(y)].e[at(j2)])
          continue;
        const auto& ex = cs[at(x)].e;
        const auto& ey = cs[at(y)].e;
        loops += remove_and_join(cs, {x, y},
                                 {{ex[at((i + 2) & 3)], ey[at((j + 2) & 3)]}, {ex[at((i2 + 2) & 3)], ey[at((j2 + 2) & 3)]}});
        changed = true;
        break;
      }
      if (changed)
        break;
    }
  }
  return loops;
}

class Dubrovnik {
public:
  Bi eval(UDiagram cs) {
    int a_exp = 0;
    const int loops = reduce(cs, a_exp);
    if (cs.empty())
      return mu_power(loops - 1).shifted(a_exp, 0);
    relabel(cs);
    std::string k;
    for (const auto& c : cs)
      for (int e : c.e)
        k += std::to_string(e) + ',';
    auto it = memo_.find(k);
    if (it == memo_.end())
      it = memo_.emplace(std::move(k), eval_reduced(cs)).first;
    return (it->second * mu_power(loops)).shifted(a_exp, 0);
  }

private:
  // Visits every strand once. first[x] is the slot through which crossing x
  // is entered first; entries[x] holds both entry slots with their
  // components.
  struct Walk {
    std::vector<int> order;
    std::vector<std::array<std::pair<int, int>, 2>> entries; // (slot, component)
    int components = 0;
  };

  static Walk walk(const UDiagram& cs) {
    const auto ends = edge_ends(cs);
    std::vector<int> edges;
    for (const auto& [e, _] : ends)
      edges.push_back(e);
    std::sort(edges.begin(), edges.end());
    Walk w;
    w.entries.assign(cs.size(), {std::pair{-1, -1}, std::pair{-1, -1}});
    std::vector<int> visits(cs.size(), 0);
    std::unordered_map<int, char> used;
    for (int start : edges) {
      if (used[start])
        continue;
      End at_end = ends.at(start)[1];
      int e = start;
      while (!used[e]) {
        used[e] = 1;
        const auto x = at(at_end.crossing);
        if (visits[x] == 0)
          w.order.push_back(at_end.crossing);
        w.entries[x][at(visits[x]++)] = {at_end.slot, w.components};
        const int out_slot = (at_end.slot + 2) & 3;
        e = cs[x].e[at(out_slot)];
        const auto& pair = ends.at(e);
        at_end = (pair[0].crossing == at_end.crossing && pair[0].slot == out_slot) ? pair[1] : pair[0];
      }
      ++w.components;
    }
    return w;
  }

  Bi eval_reduced(UDiagram cs) {
    static const Bi z = Bi::monomial(1, 0, 1);
    Bi total;
    const Walk w = walk(cs);
    for (int x : w.order) {
      if (w.entries[at(x)][0].first % 2 != 0)
        continue;
      // under first: D(L) = D(L switched) + z (D(A smoothing) - D(B smoothing))
      const auto e = cs[at(x)].e;
      UDiagram a = cs, b = cs;
      const int la = remove_and_join(a, {x}, {{e[0], e[1]}, {e[2], e[3]}});
      const int lb = remove_and_join(b, {x}, {{e[0], e[3]}, {e[1], e[2]}});
      total += z * (eval_with_loops(std::move(a), la) - eval_with_loops(std::move(b), lb));
      cs[at(x)].e = {e[1], e[2], e[3], e[0]};
    }
    // descending: a stack of framed unknots
    const Walk d = walk(cs);
    int writhe = 0;
    for (const auto& entry : d.entries) {
      if (entry[0].second != entry[1].second)
        continue;
      const int under = entry[0].first % 2 == 0 ? entry[0].first : entry[1].first;
      const int over = entry[0].first % 2 == 0 ? entry[1].first : entry[0].first;
      writhe += ((over - under) & 3) == 1 ? -1 : 1;
    }
    return total + mu_power(d.components - 1).shifted(writhe, 0);
  }

  Bi eval_with_loops(UDiagram cs, int loops) {
    if (cs.empty())
      return mu_power(loops - 1);
    return eval(std::move(cs)) * mu_power(loops);
  }

  static void relabel(UDiagram& cs) {
    std::unordered_map<int, int> id;
    for (auto& c : cs)
      for (int& e : c.e)
        e = id.try_emplace(e, static_cast<int>(id.size())).first->second;
  }

  const Bi& mu_power(int k) {
    static const Bi mu = Bi::monomial(1, 1, -1) - Bi::monomial(1, -1, -1) + Bi{1};
    while (static_cast<int>(mu_powers_.size()) <= k)
      mu_powers_.push_back(mu_powers_.empty() ? Bi{1} : mu_powers_.back() * mu);
    return mu_powers_[at(k)];
  }

  std::unordered_map<std::string, Bi> memo_;
  std::deque<Bi> mu_powers_; // stable references while recursing
};

} // namespace

LaurentPolynomial kauffman_bracket(const PlanarDiagram& d, int crossing_cap) {
  check_cap(d, crossing_cap);
  const Poly& loop = loop_value();
  if (d.crossings.empty())
    return d.free_loops == 0 ? Poly{1} : power(loop, d.free_loops - 1);

  const Poly a_factor = Poly::monomial(1, 1);
  const Poly b_factor = Poly::monomial(1, -1);
  std::unordered_map<std::vector<int>, Poly, PairingHash> states, next;
  states.emplace(std::vector<int>(static_cast<std::size_t>(d.edge_count), -1), Poly{1});

  for (int k : sweep_order(d)) {
    const auto& [a, b, c, e] = d.crossings[static_cast<std::size_t>(k)].pd;
    next.clear();
    for (const auto& [pairing, value] : states) {
      for (int smoothing = 0; smoothing < 2; ++smoothing) {
        std::vector<int> p = pairing;
        int loops = 0;
        if (smoothing == 0) { // A: a-b and c-d
          loops += join(p, a, b);
          loops += join(p, c, e);
        } else { // B: a-d and b-c
          loops += join(p, a, e);
          loops += join(p, b, c);
        }
        Poly term = value * (smoothing == 0 ? a_factor : b_factor);
        for (int l = 0; l < loops; ++l)
          term *= loop;
        auto [it, inserted] = next.try_emplace(std::move(p), term);
        if (!inserted)
          it->second += term;
      }
    }
    std::swap(states, next);
  }

  // Every state closed at least one loop; the final pairing is empty.
  Poly total;
  for (const auto& [pairing, value] : states)
    total += value;
  auto reduced = total.divide_exact(loop);
  if (!reduced)
    throw std::logic_error("state sum not divisible by the loop value");
  return *reduced * power(loop, d.free_loops);
}

LaurentPolynomial jones(const PlanarDiagram& d, int crossing_cap) {
  const int w = d.writhe();
  return Poly::monomial(w % 2 == 0 ? 1 : -1, -3 * w) * kauffman_bracket(d, crossing_cap);
}

LaurentPolynomial normalize_alexander(const LaurentPolynomial& p) {
  if (p.is_zero())
    return p;
  const int span = p.min_exponent() + p.max_exponent();
  if (span % 2 != 0)
    throw Error(ErrorCode::NotAKnot, "Alexander determinant has odd span");
  Poly out = p.shifted(-span / 2);
  return out.value_at_one() < 0 ? -out : out;
}

LaurentPolynomial alexander(const PlanarDiagram& d, int crossing_cap) {
  if (d.components != 1)
    throw Error(ErrorCode::NotAKnot, "Alexander polynomial needs a single component");
  check_cap(d, crossing_cap);
  const int c = d.crossing_count();
  if (c <= 1)
    return Poly{1};

  // Arcs are maximal over-strands: both over-edges at a crossing belong to
  // the same arc.
  std::vector<int> parent(static_cast<std::size_t>(d.edge_count));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int e) {
    while (parent[static_cast<std::size_t>(e)] != e)
      e = parent[static_cast<std::size_t>(e)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(e)])];
    return e;
  };
  for (const auto& x : d.crossings)
    parent[static_cast<std::size_t>(find(x.pd[1]))] = find(x.pd[3]);
  std::vector<int> arc_of(static_cast<std::size_t>(d.edge_count), -1);
  int arcs = 0;
  for (int e = 0; e < d.edge_count; ++e) {
    const int root = find(e);
    if (arc_of[static_cast<std::size_t>(root)] == -1)
      arc_of[static_cast<std::size_t>(root)] = arcs++;
    arc_of[static_cast<std::size_t>(e)] = arc_of[static_cast<std::size_t>(root)];
  }

  const Poly t = Poly::monomial(1, 1);
  const Poly one_minus_t = Poly{1} - t;
  std::vector<std::vector<Poly>> m(static_cast<std::size_t>(c), std::vector<Poly>(static_cast<std::size_t>(arcs)));
  for (int k = 0; k < c; ++k) {
    const auto& x = d.crossings[static_cast<std::size_t>(k)];
    auto& row = m[static_cast<std::size_t>(k)];
    const auto over = static_cast<std::size_t>(arc_of[static_cast<std::size_t>(x.pd[1])]);
    const auto in = static_cast<std::size_t>(arc_of[static_cast<std::size_t>(x.pd[0])]);
    const auto out = static_cast<std::size_t>(arc_of[static_cast<std::size_t>(x.pd[2])]);
    row[over] += one_minus_t;
    row[in] += x.sign > 0 ? t : Poly{-1};
    row[out] += x.sign > 0 ? Poly{-1} : t;
  }
  // Any first minor; drop the last row and column.
  m.pop_back();
  for (auto& row : m)
    row.pop_back();
  return normalize_alexander(determinant(std::move(m)));
}

InvariantKey key(const GridDiagram& g, int crossing_cap) {
  const PlanarDiagram d = to_planar(g);
  return {jones(d, crossing_cap), alexander(d, crossing_cap)};
}

InvariantKey mirror(const InvariantKey& k) { return {k.jones.inverted(), k.alexander}; }

BivariateLaurent kauffman_polynomial(const PlanarDiagram& d, int crossing_cap) {
  if (d.components != 1)
    throw Error(ErrorCode::NotAKnot, "Kauffman polynomial is computed for knots only");
  check_cap(d, crossing_cap);
  if (d.crossings.empty())
    return Bi{1};
  UDiagram cs;
  for (const auto& x : d.crossings)
    cs.push_back(UCrossing{x.pd});
  return Dubrovnik{}.eval(std::move(cs)).shifted(-d.writhe(), 0);
}

} // namespace gridband
