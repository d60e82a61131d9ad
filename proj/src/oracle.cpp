#include "oddchrome/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "oddchrome/sclass.hpp"
#include "oddchrome/structure.hpp"

namespace oddchrome {

namespace {

// Edge order for the backtracker: breadth-first over vertices, emitting each
// bouquet (parallel class) contiguously so the non-decreasing-color cut
// applies, and so every edge after the first of a component touches an
// already-visited vertex.
std::vector<EdgeId> search_order(const MultiGraph& g) {
  std::vector<char> vseen(g.order(), 0), eseen(g.size(), 0);
  std::vector<EdgeId> order;
  order.reserve(g.size());
  for (VertexId s = 0; s < g.order(); ++s) {
    if (vseen[s]) continue;
    std::vector<VertexId> queue{s};
    vseen[s] = 1;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      VertexId u = queue[qi];
      for (EdgeId e : g.incident(u)) {
        if (eseen[e]) continue;
        VertexId w = g.edge(e).other(u);
        for (EdgeId f : g.incident(u)) {  // whole bouquet u-w, ascending
          if (eseen[f]) continue;
          const Edge& fe = g.edge(f);
          if ((fe.u == u && fe.v == w) || (fe.u == w && fe.v == u)) {
            eseen[f] = 1;
            order.push_back(f);
          }
        }
        if (!vseen[w]) {
          vseen[w] = 1;
          queue.push_back(w);
        }
      }
    }
  }
  return order;
}

struct Searcher {
  const MultiGraph& g;
  int k;
  long long budget;
  int cap;  // small_class_cap, -1 for none

  std::vector<EdgeId> order;
  std::vector<int> color;               // per edge id, 0 = unset
  std::vector<std::vector<int>> cnt;    // [v][c] incidences of color c at v
  std::vector<int> remaining;           // uncolored edge-ends at v
  std::vector<int> bad;                 // nonempty even classes at v
  std::vector<int> class_size;          // [c] edges of color c
  long long nodes = 0;
  bool out_of_budget = false;

  explicit Searcher(const MultiGraph& graph, int kk, const SearchConfig& cfg)
      : g(graph), k(kk), budget(cfg.node_budget), cap(cfg.small_class_cap) {
    order = search_order(g);
    color.assign(g.size(), 0);
    cnt.assign(g.order(), std::vector<int>(k + 1, 0));
    remaining.assign(g.order(), 0);
    bad.assign(g.order(), 0);
    class_size.assign(k + 1, 0);
    for (VertexId v = 0; v < g.order(); ++v) remaining[v] = g.degree(v);
  }

  void bump(VertexId v, int c, int delta2) {  // delta2 = 1 edge-end or 2 (loop)
    int before = cnt[v][c];
    cnt[v][c] += delta2;
    remaining[v] -= delta2;
    int after = cnt[v][c];
    bool was_bad = before > 0 && before % 2 == 0;
    bool is_bad = after > 0 && after % 2 == 0;
    bad[v] += int(is_bad) - int(was_bad);
  }

  bool feasible(VertexId v) const { return bad[v] <= remaining[v]; }

  bool place(size_t pos, int used) {
    if (pos == order.size()) {
      if (cap >= 0) {
        int smallest = g.size();
        for (int c = 1; c <= k; ++c) smallest = std::min(smallest, class_size[c]);
        if (smallest > cap) return false;
      }
      return true;
    }
    EdgeId e = order[pos];
    VertexId u = g.edge(e).u, v = g.edge(e).v;
    bool loop = u == v;

    int lo = 1;
    if (pos > 0) {  // non-decreasing within a bouquet of parallel edges
      EdgeId p = order[pos - 1];
      const Edge& pe = g.edge(p);
      if ((pe.u == u && pe.v == v) || (pe.u == v && pe.v == u)) lo = color[p];
    }
    int hi = std::min(k, used + 1);

    for (int c = lo; c <= hi; ++c) {
      if (++nodes > budget) {
        out_of_budget = true;
        return false;
      }
      color[e] = c;
      ++class_size[c];
      bump(u, c, loop ? 2 : 1);
      if (!loop) bump(v, c, 1);
      bool ok = feasible(u) && (loop || feasible(v));
      if (ok && cap >= 0 && used == k) {
        // class sizes only grow; once every class exceeds the cap, give up
        int smallest = g.size();
        for (int cc = 1; cc <= k; ++cc)
          smallest = std::min(smallest, class_size[cc]);
        ok = smallest <= cap;
      }
      if (ok && place(pos + 1, std::max(used, c))) return true;
      bump(u, c, loop ? -2 : -1);
      if (!loop) bump(v, c, -1);
      --class_size[c];
      color[e] = 0;
      if (out_of_budget) return false;
    }
    return false;
  }
};

}  // namespace

SearchOutcome search_k(const MultiGraph& g, int k, const SearchConfig& cfg) {
  if (k < 1) throw std::invalid_argument("search_k: k must be positive");
  SearchOutcome out;
  if (g.size() == 0) {
    out.status = SearchStatus::found;
    out.coloring = EdgeColoring(0);
    return out;
  }
  Searcher s(g, k, cfg);
  bool found = s.place(0, 0);
  out.nodes = s.nodes;
  if (found) {
    out.status = SearchStatus::found;
    out.coloring = EdgeColoring(g.size());
    out.coloring.color = s.color;
    VerifyResult check = verify_odd(g, out.coloring);
    if (!check.ok) throw std::logic_error("search_k: invalid coloring produced");
  } else {
    out.status = s.out_of_budget ? SearchStatus::inconclusive
                                 : SearchStatus::absent;
  }
  return out;
}

OracleOutcome oracle_chi(const MultiGraph& g, const SearchConfig& cfg) {
  for (VertexId v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) continue;
    bool all_loops = true;
    for (EdgeId e : g.incident(v)) all_loops &= g.edge(e).is_loop();
    if (all_loops)
      throw std::invalid_argument(
          "oracle_chi: vertex meets only loops; no odd coloring exists");
  }
  OracleOutcome out;
  if (g.size() == 0) {
    out.status = SearchStatus::found;
    out.chi = 0;
    out.coloring = EdgeColoring(0);
    return out;
  }
  for (int k = 1; k <= cfg.max_k; ++k) {
    SearchOutcome s = search_k(g, k, cfg);
    out.nodes += s.nodes;
    if (s.status == SearchStatus::found) {
      out.status = SearchStatus::found;
      out.chi = k;
      out.coloring = s.coloring;
      return out;
    }
    if (s.status == SearchStatus::inconclusive) {
      out.status = SearchStatus::inconclusive;
      return out;
    }
  }
  out.status = SearchStatus::absent;  // chi > max_k, definitively
  return out;
}

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
  h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::vector<std::vector<int>> mult_matrix(const MultiGraph& g) {
  std::vector<std::vector<int>> m(g.order(), std::vector<int>(g.order(), 0));
  for (const Edge& e : g.edges()) {
    m[e.u][e.v] += 1;
    if (e.u != e.v) m[e.v][e.u] += 1;
  }
  return m;
}

}  // namespace

std::uint64_t iso_invariant(const MultiGraph& g) {
  int n = g.order();
  std::vector<std::uint64_t> lab(n), nxt(n);
  for (VertexId v = 0; v < n; ++v) {
    int loops = 0;
    for (EdgeId e : g.incident(v)) loops += g.edge(e).is_loop();
    lab[v] = mix(mix(0xabcdefULL, g.degree(v)), loops);
  }
  for (int round = 0; round < 3; ++round) {
    for (VertexId v = 0; v < n; ++v) {
      std::vector<std::uint64_t> sig;
      for (EdgeId e : g.incident(v)) {
        VertexId w = g.edge(e).other(v);
        sig.push_back(g.edge(e).is_loop() ? mix(lab[v], 7) : lab[w]);
      }
      std::sort(sig.begin(), sig.end());
      std::uint64_t h = lab[v];
      for (std::uint64_t x : sig) h = mix(h, x);
      nxt[v] = h;
    }
    lab = nxt;
  }
  std::sort(lab.begin(), lab.end());
  std::uint64_t h = mix(mix(0x5eedULL, g.order()), g.size());
  for (std::uint64_t x : lab) h = mix(h, x);
  return h;
}

bool is_isomorphic(const MultiGraph& a, const MultiGraph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  int n = a.order();
  std::vector<int> da(n), db(n);
  for (int v = 0; v < n; ++v) da[v] = a.degree(v);
  for (int v = 0; v < n; ++v) db[v] = b.degree(v);
  {
    std::vector<int> sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  auto ma = mult_matrix(a), mb = mult_matrix(b);

  // map a-vertices in decreasing-degree order
  std::vector<VertexId> vorder(n);
  std::iota(vorder.begin(), vorder.end(), 0);
  std::sort(vorder.begin(), vorder.end(),
            [&](VertexId x, VertexId y) { return da[x] > da[y]; });

  std::vector<VertexId> phi(n, -1);
  std::vector<char> used(n, 0);

  auto rec = [&](auto&& self, int idx) -> bool {
    if (idx == n) return true;
    VertexId v = vorder[idx];
    for (VertexId w = 0; w < n; ++w) {
      if (used[w] || da[v] != db[w] || ma[v][v] != mb[w][w]) continue;
      bool ok = true;
      for (int j = 0; j < idx && ok; ++j) {
        VertexId u = vorder[j];
        ok = ma[v][u] == mb[w][phi[u]];
      }
      if (!ok) continue;
      phi[v] = w;
      used[w] = 1;
      if (self(self, idx + 1)) return true;
      used[w] = 0;
      phi[v] = -1;
    }
    return false;
  };
  return rec(rec, 0);
}

namespace {

// Connected multigraphs with all degrees odd: enumerate descending odd
// degree sequences, realize them as multiplicity matrices row by row, and
// keep one representative per isomorphism class.
struct BaseEnumerator {
  int max_m;
  int max_n;
  std::vector<MultiGraph> reps;
  std::map<std::uint64_t, std::vector<int>> buckets;  // invariant -> rep ids

  void add_candidate(const MultiGraph& g) {
    std::uint64_t key = iso_invariant(g);
    for (int i : buckets[key])
      if (is_isomorphic(reps[i], g)) return;
    buckets[key].push_back(static_cast<int>(reps.size()));
    reps.push_back(g);
  }

  void realize(std::vector<int>& deg,
               std::vector<std::vector<int>>& mult,
               std::vector<int>& rem, int v, int w) {
    int n = static_cast<int>(deg.size());
    if (v == n) {
      MultiGraph g(n);
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
          for (int t = 0; t < mult[i][j]; ++t) g.add_edge(i, j);
      if (is_connected(g)) add_candidate(g);
      return;
    }
    if (w == n) {
      if (rem[v] == 0) realize(deg, mult, rem, v + 1, v + 1);
      return;
    }
    if (w == v) {  // loops consume two degree units
      for (int l = 0; 2 * l <= rem[v]; ++l) {
        mult[v][v] = l;
        rem[v] -= 2 * l;
        realize(deg, mult, rem, v, w + 1);
        rem[v] += 2 * l;
      }
      mult[v][v] = 0;
      return;
    }
    int cap = std::min(rem[v], rem[w]);
    for (int t = 0; t <= cap; ++t) {
      mult[v][w] = mult[w][v] = t;
      rem[v] -= t;
      rem[w] -= t;
      realize(deg, mult, rem, v, w + 1);
      rem[v] += t;
      rem[w] += t;
    }
    mult[v][w] = mult[w][v] = 0;
  }

  void degree_seq(std::vector<int>& deg, int left, int prev, int n) {
    int slots = n - static_cast<int>(deg.size());
    if (slots == 0) {
      if (left != 0) return;
      std::vector<std::vector<int>> mult(n, std::vector<int>(n, 0));
      std::vector<int> rem = deg;
      realize(deg, mult, rem, 0, 0);
      return;
    }
    // remaining degrees are odd, >= 1, <= prev, and must sum to `left`
    if (left < slots) return;
    int start = std::min(prev, left - (slots - 1));
    if (start % 2 == 0) --start;  // keep the sequence odd
    for (int d = start; d >= 1; d -= 2) {
      deg.push_back(d);
      degree_seq(deg, left - d, d, n);
      deg.pop_back();
    }
  }

  void run() {
    for (int m0 = 1; m0 <= max_m; ++m0)
      for (int n0 = 2; n0 <= std::min(m0 + 1, max_n); n0 += 2) {
        std::vector<int> deg;
        degree_seq(deg, 2 * m0, 2 * m0, n0);
      }
  }
};

void compositions(int total, int parts, std::vector<int>& cur,
                  const std::function<void(const std::vector<int>&)>& emit) {
  if (parts == 1) {
    cur.push_back(total);
    emit(cur);
    cur.pop_back();
    return;
  }
  for (int first = 0; first <= total; ++first) {
    cur.push_back(first);
    compositions(total - first, parts - 1, cur, emit);
    cur.pop_back();
  }
}

MultiGraph apply_subdivision(const MultiGraph& base, const std::vector<int>& c) {
  int extra = std::accumulate(c.begin(), c.end(), 0);
  MultiGraph g(base.order() + extra);
  int next = base.order();
  for (EdgeId e = 0; e < base.size(); ++e) {
    VertexId prev = base.edge(e).u;
    for (int j = 0; j < c[e]; ++j) {
      g.add_edge(prev, next);
      prev = next++;
    }
    g.add_edge(prev, base.edge(e).v);
  }
  return g;
}

}  // namespace

std::vector<MultiGraph> enumerate_s(int max_n, int max_m) {
  if (max_m > 10)
    throw BudgetExceeded("enumerate_s: max_m beyond desk scale (limit 10)");
  if (max_m < 1 || max_n < 2) return {};

  BaseEnumerator bases;
  bases.max_m = max_m;
  bases.max_n = std::min(max_n, max_m + 1);
  bases.run();

  std::vector<MultiGraph> out;
  std::map<std::uint64_t, std::vector<int>> buckets;
  auto add = [&](const MultiGraph& g) {
    std::uint64_t key = iso_invariant(g);
    for (int i : buckets[key])
      if (is_isomorphic(out[i], g)) return;
    buckets[key].push_back(static_cast<int>(out.size()));
    out.push_back(g);
  };

  for (const MultiGraph& base : bases.reps) {
    int max_extra = std::min(max_m - base.size(), max_n - base.order());
    for (int s = 0; s <= max_extra; ++s) {
      std::vector<int> cur;
      compositions(s, base.size(), cur, [&](const std::vector<int>& c) {
        add(apply_subdivision(base, c));
      });
    }
  }

  for (const MultiGraph& g : out)
    if (!is_in_s(g))
      throw std::logic_error("enumerate_s: emitted graph outside S");
  return out;
}

}  // namespace oddchrome
