#include "c4lab/graph.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <fstream>
#include <sstream>

namespace c4lab {

namespace {

int popcount_words(const std::uint64_t* a, int words) {
  int c = 0;
  for (int w = 0; w < words; ++w) c += std::popcount(a[w]);
  return c;
}

}  // namespace

// ---- VertexSet -------------------------------------------------------------

VertexSet::VertexSet(std::vector<int> members) : members_(std::move(members)) {
  for (int v : members_)
    if (v < 0) throw std::out_of_range("negative vertex index in set");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet VertexSet::range(int n) {
  std::vector<int> v((std::size_t)std::max(n, 0));
  for (int i = 0; i < n; ++i) v[(std::size_t)i] = i;
  VertexSet s;
  s.members_ = std::move(v);
  return s;
}

bool VertexSet::contains(int v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

bool VertexSet::is_subset_of(const VertexSet& o) const {
  return std::includes(o.members_.begin(), o.members_.end(), members_.begin(), members_.end());
}

bool VertexSet::intersects(const VertexSet& o) const {
  auto i = members_.begin();
  auto j = o.members_.begin();
  while (i != members_.end() && j != o.members_.end()) {
    if (*i == *j) return true;
    if (*i < *j)
      ++i;
    else
      ++j;
  }
  return false;
}

VertexSet VertexSet::unite(const VertexSet& o) const {
  std::vector<int> out;
  out.reserve(members_.size() + o.members_.size());
  std::set_union(members_.begin(), members_.end(), o.members_.begin(), o.members_.end(),
                 std::back_inserter(out));
  VertexSet s;
  s.members_ = std::move(out);
  return s;
}

VertexSet VertexSet::minus(const VertexSet& o) const {
  std::vector<int> out;
  std::set_difference(members_.begin(), members_.end(), o.members_.begin(), o.members_.end(),
                      std::back_inserter(out));
  VertexSet s;
  s.members_ = std::move(out);
  return s;
}

VertexSet VertexSet::intersect(const VertexSet& o) const {
  std::vector<int> out;
  std::set_intersection(members_.begin(), members_.end(), o.members_.begin(), o.members_.end(),
                        std::back_inserter(out));
  VertexSet s;
  s.members_ = std::move(out);
  return s;
}

// ---- EditSet ---------------------------------------------------------------

void EditSet::add(int u, int v, EditKind kind) {
  if (u == v) throw std::invalid_argument("edit with equal endpoints");
  if (u > v) std::swap(u, v);
  Edit e{u, v, kind};
  auto it = std::lower_bound(edits_.begin(), edits_.end(), e, [](const Edit& a, const Edit& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  if (it != edits_.end() && it->u == u && it->v == v)
    throw std::invalid_argument("duplicate pair in edit set");
  edits_.insert(it, e);
}

bool EditSet::touches_pair(int u, int v) const {
  if (u > v) std::swap(u, v);
  Edit probe{u, v, EditKind::Add};
  auto it = std::lower_bound(edits_.begin(), edits_.end(), probe,
                             [](const Edit& a, const Edit& b) {
                               return a.u != b.u ? a.u < b.u : a.v < b.v;
                             });
  return it != edits_.end() && it->u == u && it->v == v;
}

EditSet EditSet::reversed() const {
  EditSet out;
  out.edits_ = edits_;
  for (Edit& e : out.edits_)
    e.kind = e.kind == EditKind::Add ? EditKind::Delete : EditKind::Add;
  return out;
}

EditSet EditSet::restricted_to(const VertexSet& s) const {
  EditSet out;
  for (const Edit& e : edits_)
    if (s.contains(e.u) && s.contains(e.v)) out.edits_.push_back(e);
  return out;
}

void EditSet::merge(const EditSet& o) {
  for (const Edit& e : o.edits_) add(e.u, e.v, e.kind);
}

EditSet EditSet::diff(const Graph& from, const Graph& to) {
  if (from.vertex_count() != to.vertex_count())
    throw std::invalid_argument("edit diff of graphs with different vertex counts");
  EditSet out;
  int n = from.vertex_count();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      bool a = from.has_edge(u, v), b = to.has_edge(u, v);
      if (a != b) out.edits_.push_back(Edit{u, v, b ? EditKind::Add : EditKind::Delete});
    }
  return out;
}

// ---- Graph -----------------------------------------------------------------

Graph::Graph(int n) : n_(n), words_((n + 63) / 64), m_(0) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  // Row-bitmask storage is quadratic; this library targets desk-scale graphs.
  if (n > 20000) throw std::invalid_argument("vertex count above supported maximum (20000)");
  bits_.assign((std::size_t)n_ * words_, 0);
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loop");
  detail::require(!has_edge(u, v), "add_edge on existing edge");
  bits_[(std::size_t)u * words_ + (std::size_t)(v >> 6)] |= 1ULL << (v & 63);
  bits_[(std::size_t)v * words_ + (std::size_t)(u >> 6)] |= 1ULL << (u & 63);
  ++m_;
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  detail::require(has_edge(u, v), "remove_edge on missing edge");
  bits_[(std::size_t)u * words_ + (std::size_t)(v >> 6)] &= ~(1ULL << (v & 63));
  bits_[(std::size_t)v * words_ + (std::size_t)(u >> 6)] &= ~(1ULL << (u & 63));
  --m_;
}

void Graph::toggle_edge(int u, int v) {
  if (has_edge(u, v))
    remove_edge(u, v);
  else
    add_edge(u, v);
}

int Graph::degree(int u) const {
  check_vertex(u);
  return popcount_words(row(u), words_);
}

std::vector<int> Graph::neighbors(int u) const {
  check_vertex(u);
  std::vector<int> out;
  const std::uint64_t* r = row(u);
  for (int w = 0; w < words_; ++w) {
    std::uint64_t bitsw = r[w];
    while (bitsw) {
      int b = std::countr_zero(bitsw);
      out.push_back(w * 64 + b);
      bitsw &= bitsw - 1;
    }
  }
  return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve((std::size_t)m_);
  for (int u = 0; u < n_; ++u)
    for (int v : neighbors(u))
      if (v > u) out.emplace_back(u, v);
  return out;
}

// ---- parse / serialize -------------------------------------------------------

namespace {

bool parse_two_ints(const std::string& s, long long& a, long long& b) {
  std::istringstream in(s);
  if (!(in >> a >> b)) return false;
  std::string rest;
  if (in >> rest) return false;
  return true;
}

bool blank_or_comment(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace((unsigned char)c)) return false;
  }
  return true;
}

}  // namespace

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  long long n = -1, m = -1;
  Graph g;
  long long seen = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (blank_or_comment(line)) continue;
    long long a, b;
    if (n < 0) {
      if (!parse_two_ints(line, a, b) || a < 0 || b < 0)
        throw ParseError(lineno, "malformed header, expected \"n m\"");
      if (a > 20000) throw ParseError(lineno, "vertex count too large");
      n = a;
      m = b;
      g = Graph((int)n);
      continue;
    }
    if (seen == m) throw ParseError(lineno, "trailing data after declared edge count");
    if (!parse_two_ints(line, a, b))
      throw ParseError(lineno, "malformed edge line, expected \"u v\"");
    if (a == b) throw ParseError(lineno, "self-loop");
    if (a > b) throw ParseError(lineno, "edge endpoints not in increasing order");
    if (a < 0 || b >= n) throw ParseError(lineno, "vertex index out of range");
    if (g.has_edge((int)a, (int)b)) throw ParseError(lineno, "duplicate edge");
    g.add_edge((int)a, (int)b);
    ++seen;
  }
  if (n < 0) throw ParseError(lineno + 1, "missing header");
  if (seen != m)
    throw ParseError(lineno + 1, "expected " + std::to_string(m) + " edges, found " +
                                     std::to_string(seen));
  return g;
}

Graph parse_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

// ---- subset primitives -------------------------------------------------------

std::vector<std::uint64_t> set_mask(const Graph& g, const VertexSet& s) {
  std::vector<std::uint64_t> mask((std::size_t)g.words(), 0);
  for (int v : s) {
    if (v >= g.vertex_count()) throw std::out_of_range("set member outside host graph");
    mask[(std::size_t)(v >> 6)] |= 1ULL << (v & 63);
  }
  return mask;
}

long long edge_count_within(const Graph& g, const VertexSet& s) {
  auto mask = set_mask(g, s);
  long long twice = 0;
  for (int v : s) {
    const std::uint64_t* r = g.row(v);
    for (int w = 0; w < g.words(); ++w) twice += std::popcount(r[w] & mask[(std::size_t)w]);
  }
  assert(twice % 2 == 0);
  return twice / 2;
}

Rational density(const Graph& g, const VertexSet& s) {
  if (s.size() < 2) throw PreconditionError("density needs at least two vertices");
  long long pairs = (long long)s.size() * (s.size() - 1) / 2;
  return Rational(edge_count_within(g, s), pairs);
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  Graph h(s.size());
  for (int i = 0; i < s.size(); ++i)
    for (int j = i + 1; j < s.size(); ++j)
      if (g.has_edge(s[i], s[j])) h.add_edge(i, j);
  return h;
}

bool is_clique(const Graph& g, const VertexSet& s) {
  for (int i = 0; i < s.size(); ++i)
    for (int j = i + 1; j < s.size(); ++j)
      if (!g.has_edge(s[i], s[j])) return false;
  return true;
}

bool is_independent(const Graph& g, const VertexSet& s) {
  return edge_count_within(g, s) == 0;
}

// ---- induced C4 ------------------------------------------------------------

long long count_induced_c4(const Graph& g) {
  int n = g.vertex_count();
  int words = g.words();
  std::vector<std::uint64_t> common((std::size_t)words);
  long long total = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (g.has_edge(u, v)) continue;
      const std::uint64_t* ru = g.row(u);
      const std::uint64_t* rv = g.row(v);
      int c = 0;
      for (int w = 0; w < words; ++w) {
        common[(std::size_t)w] = ru[w] & rv[w];
        c += std::popcount(common[(std::size_t)w]);
      }
      if (c < 2) continue;
      // Non-adjacent pairs inside the common neighborhood.
      long long inside_edges = 0;
      for (int w = 0; w < words; ++w) {
        std::uint64_t bitsw = common[(std::size_t)w];
        while (bitsw) {
          int x = w * 64 + std::countr_zero(bitsw);
          bitsw &= bitsw - 1;
          const std::uint64_t* rx = g.row(x);
          for (int w2 = 0; w2 < words; ++w2)
            inside_edges += std::popcount(rx[w2] & common[(std::size_t)w2]);
        }
      }
      assert(inside_edges % 2 == 0);
      total += (long long)c * (c - 1) / 2 - inside_edges / 2;
    }
  }
  assert(total % 2 == 0);
  return total / 2;
}

std::optional<std::array<int, 4>> find_induced_c4(const Graph& g) {
  int n = g.vertex_count();
  int words = g.words();
  std::vector<std::uint64_t> common((std::size_t)words);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (g.has_edge(u, v)) continue;
      const std::uint64_t* ru = g.row(u);
      const std::uint64_t* rv = g.row(v);
      for (int w = 0; w < words; ++w) common[(std::size_t)w] = ru[w] & rv[w];
      std::vector<int> cs;
      for (int w = 0; w < words; ++w) {
        std::uint64_t bitsw = common[(std::size_t)w];
        while (bitsw) {
          cs.push_back(w * 64 + std::countr_zero(bitsw));
          bitsw &= bitsw - 1;
        }
      }
      for (std::size_t i = 0; i < cs.size(); ++i)
        for (std::size_t j = i + 1; j < cs.size(); ++j)
          if (!g.has_edge(cs[i], cs[j])) return std::array<int, 4>{u, cs[i], v, cs[j]};
    }
  return std::nullopt;
}

// ---- chordality --------------------------------------------------------------

namespace {

// v is simplicial within `alive` iff its alive neighborhood is a clique.
bool simplicial_in(const Graph& g, int v, const std::vector<std::uint64_t>& alive) {
  int words = g.words();
  std::vector<std::uint64_t> nbrs((std::size_t)words);
  const std::uint64_t* rv = g.row(v);
  for (int w = 0; w < words; ++w) nbrs[(std::size_t)w] = rv[w] & alive[(std::size_t)w];
  for (int w = 0; w < words; ++w) {
    std::uint64_t bitsw = nbrs[(std::size_t)w];
    while (bitsw) {
      int x = w * 64 + std::countr_zero(bitsw);
      bitsw &= bitsw - 1;
      const std::uint64_t* rx = g.row(x);
      for (int w2 = 0; w2 < words; ++w2) {
        std::uint64_t missing = nbrs[(std::size_t)w2] & ~rx[w2];
        if (w2 == (x >> 6)) missing &= ~(1ULL << (x & 63));
        if (missing) return false;
      }
    }
  }
  return true;
}

}  // namespace

ChordalityResult find_induced_cycle_geq4(const Graph& g) {
  int n = g.vertex_count();
  int words = g.words();
  std::vector<std::uint64_t> alive((std::size_t)words, 0);
  for (int v = 0; v < n; ++v) alive[(std::size_t)(v >> 6)] |= 1ULL << (v & 63);
  int remaining = n;

  // Greedy elimination never gets stuck on a chordal graph: induced subgraphs
  // of chordal graphs keep a simplicial vertex.
  while (remaining > 0) {
    int pick = -1;
    for (int v = 0; v < n && pick < 0; ++v) {
      if (!((alive[(std::size_t)(v >> 6)] >> (v & 63)) & 1)) continue;
      if (simplicial_in(g, v, alive)) pick = v;
    }
    if (pick < 0) break;
    alive[(std::size_t)(pick >> 6)] &= ~(1ULL << (pick & 63));
    --remaining;
  }
  if (remaining == 0) return ChordalityResult{true, {}};

  // Residual graph has no simplicial vertex, so it holds an induced cycle of
  // length >= 4: find non-adjacent u,w in N(v) joined by a path avoiding the
  // rest of N[v]. A shortest such path is induced, and v sees only its ends.
  std::vector<int> live;
  for (int v = 0; v < n; ++v)
    if ((alive[(std::size_t)(v >> 6)] >> (v & 63)) & 1) live.push_back(v);
  for (int v : live) {
    std::vector<int> nb;
    for (int x : live)
      if (x != v && g.has_edge(v, x)) nb.push_back(x);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        int u = nb[(std::size_t)i], w = nb[(std::size_t)j];
        if (g.has_edge(u, w)) continue;
        std::vector<int> blocked(n, 0);
        blocked[(std::size_t)v] = 1;
        for (int x : nb)
          if (x != u && x != w) blocked[(std::size_t)x] = 1;
        for (int x = 0; x < n; ++x)
          if (!((alive[(std::size_t)(x >> 6)] >> (x & 63)) & 1)) blocked[(std::size_t)x] = 1;
        std::vector<int> parent(n, -1);
        std::vector<int> queue{u};
        parent[(std::size_t)u] = u;
        for (std::size_t qi = 0; qi < queue.size() && parent[(std::size_t)w] < 0; ++qi) {
          int x = queue[qi];
          for (int y : live) {
            if (blocked[(std::size_t)y] || parent[(std::size_t)y] >= 0) continue;
            if (!g.has_edge(x, y)) continue;
            parent[(std::size_t)y] = x;
            queue.push_back(y);
          }
        }
        if (parent[(std::size_t)w] < 0) continue;
        std::vector<int> cycle{v};
        std::vector<int> path;
        for (int x = w; x != u; x = parent[(std::size_t)x]) path.push_back(x);
        path.push_back(u);
        for (auto it = path.rbegin(); it != path.rend(); ++it) cycle.push_back(*it);
        detail::require(cycle.size() >= 4 && induces_cycle(g, cycle),
                        "extracted cycle is not induced");
        return ChordalityResult{false, cycle};
      }
    }
  }
  throw std::logic_error("residual graph without simplicial vertex yielded no cycle");
}

bool induces_cycle(const Graph& g, const std::vector<int>& cycle) {
  std::size_t l = cycle.size();
  if (l < 3) return false;
  VertexSet distinct{std::vector<int>(cycle.begin(), cycle.end())};
  if ((std::size_t)distinct.size() != l) return false;
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = i + 1; j < l; ++j) {
      bool consecutive = (j == i + 1) || (i == 0 && j == l - 1);
      if (g.has_edge(cycle[i], cycle[j]) != consecutive) return false;
    }
  return true;
}

// ---- exact induced l-cycles ---------------------------------------------------

namespace {

struct CycleDfs {
  const Graph& g;
  int l;
  bool find_only;
  long long count = 0;
  std::vector<int> path;
  std::optional<std::vector<int>> found;
  const std::function<void(const std::vector<int>&)>* sink = nullptr;

  explicit CycleDfs(const Graph& g_, int l_, bool find_only_)
      : g(g_), l(l_), find_only(find_only_) {}

  // path holds an induced path with adjacency exactly along it; anchor
  // path[0] is the cycle minimum. Returns true to stop early.
  bool extend() {
    int j = (int)path.size();
    int last = path[(std::size_t)(j - 1)];
    int a = path[0];
    bool closing = j == l - 1;
    for (int w = a + 1; w < g.vertex_count(); ++w) {
      if (!g.has_edge(last, w)) continue;
      if (closing && !g.has_edge(a, w)) continue;
      // w may touch only the path's last vertex (plus the anchor when closing).
      bool ok = true;
      for (int t = closing ? 1 : 0; t <= j - 2 && ok; ++t)
        if (g.has_edge(path[(std::size_t)t], w)) ok = false;
      if (!ok) continue;
      bool present = false;
      for (int t = 0; t < j && !present; ++t)
        if (path[(std::size_t)t] == w) present = true;
      if (present) continue;
      if (closing) {
        if (path[1] > w) continue;  // one direction per cycle
        ++count;
        if (find_only) {
          found = path;
          found->push_back(w);
          return true;
        }
        if (sink) {
          std::vector<int> cycle = path;
          cycle.push_back(w);
          (*sink)(cycle);
        }
        continue;
      }
      path.push_back(w);
      if (extend()) return true;
      path.pop_back();
    }
    return false;
  }
};

void check_caps(const Graph& g, int l, const ExactCaps& caps) {
  if (l < 4) throw PreconditionError("cycle length below 4");
  if (l > caps.max_cycle_len)
    throw BudgetError("cycle length " + std::to_string(l) + " above exact cap " +
                      std::to_string(caps.max_cycle_len));
  if (g.vertex_count() > caps.max_n)
    throw BudgetError("graph size " + std::to_string(g.vertex_count()) +
                      " above exact cap " + std::to_string(caps.max_n));
}

}  // namespace

long long count_induced_cl(const Graph& g, int l, const ExactCaps& caps) {
  check_caps(g, l, caps);
  long long total = 0;
  for (int a = 0; a + l <= g.vertex_count(); ++a) {
    CycleDfs dfs(g, l, false);
    dfs.path = {a};
    dfs.extend();
    total += dfs.count;
  }
  return total;
}

void for_each_induced_cl(const Graph& g, int l,
                         const std::function<void(const std::vector<int>&)>& fn,
                         const ExactCaps& caps) {
  check_caps(g, l, caps);
  for (int a = 0; a + l <= g.vertex_count(); ++a) {
    CycleDfs dfs(g, l, false);
    dfs.sink = &fn;
    dfs.path = {a};
    dfs.extend();
  }
}

std::optional<std::vector<int>> find_induced_cl(const Graph& g, int l, const ExactCaps& caps) {
  check_caps(g, l, caps);
  for (int a = 0; a < g.vertex_count(); ++a) {
    CycleDfs dfs(g, l, true);
    dfs.path = {a};
    if (dfs.extend()) return dfs.found;
  }
  return std::nullopt;
}

// ---- max clique ----------------------------------------------------------------

namespace {

struct CliqueSolver {
  std::vector<std::vector<std::uint64_t>> adj;  // remapped adjacency rows
  int words;
  std::vector<int> best;
  std::vector<int> current;

  void expand(std::vector<std::uint64_t>& cand) {
    // Greedy coloring bound: vertices are assigned color classes; a vertex
    // with color c can extend the clique to at most |current| + c.
    std::vector<int> order, colors;
    std::vector<std::uint64_t> uncolored = cand;
    int color = 0;
    for (;;) {
      std::vector<std::uint64_t> cls = uncolored;
      bool any = false;
      ++color;
      for (int w = 0; w < words; ++w) {
        std::uint64_t bitsw = cls[(std::size_t)w];
        while (bitsw) {
          int v = w * 64 + std::countr_zero(bitsw);
          bitsw &= bitsw - 1;
          if (!((cls[(std::size_t)(v >> 6)] >> (v & 63)) & 1)) continue;
          any = true;
          order.push_back(v);
          colors.push_back(color);
          uncolored[(std::size_t)(v >> 6)] &= ~(1ULL << (v & 63));
          for (int w2 = 0; w2 < words; ++w2) cls[(std::size_t)w2] &= ~adj[(std::size_t)v][(std::size_t)w2];
          cls[(std::size_t)(v >> 6)] &= ~(1ULL << (v & 63));
        }
      }
      if (!any) break;
      bool left = false;
      for (int w = 0; w < words && !left; ++w)
        if (uncolored[(std::size_t)w]) left = true;
      if (!left) break;
    }
    for (int i = (int)order.size() - 1; i >= 0; --i) {
      int v = order[(std::size_t)i];
      if ((int)current.size() + colors[(std::size_t)i] <= (int)best.size()) return;
      std::vector<std::uint64_t> next((std::size_t)words);
      bool nonempty = false;
      for (int w = 0; w < words; ++w) {
        next[(std::size_t)w] = cand[(std::size_t)w] & adj[(std::size_t)v][(std::size_t)w];
        if (next[(std::size_t)w]) nonempty = true;
      }
      current.push_back(v);
      if (!nonempty) {
        if (current.size() > best.size()) best = current;
      } else {
        expand(next);
      }
      current.pop_back();
      cand[(std::size_t)(v >> 6)] &= ~(1ULL << (v & 63));
    }
  }
};

}  // namespace

CliqueResult max_clique(const Graph& g) {
  int n = g.vertex_count();
  if (n == 0) return CliqueResult{0, VertexSet{}};
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[(std::size_t)i] = i;
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    int da = g.degree(a), db = g.degree(b);
    return da != db ? da > db : a < b;
  });
  CliqueSolver s;
  s.words = (n + 63) / 64;
  s.adj.assign((std::size_t)n, std::vector<std::uint64_t>((std::size_t)s.words, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && g.has_edge(perm[(std::size_t)i], perm[(std::size_t)j]))
        s.adj[(std::size_t)i][(std::size_t)(j >> 6)] |= 1ULL << (j & 63);
  std::vector<std::uint64_t> cand((std::size_t)s.words, 0);
  for (int i = 0; i < n; ++i) cand[(std::size_t)(i >> 6)] |= 1ULL << (i & 63);
  s.expand(cand);
  std::vector<int> witness;
  witness.reserve(s.best.size());
  for (int v : s.best) witness.push_back(perm[(std::size_t)v]);
  VertexSet w{witness};
  detail::require(is_clique(g, w), "clique witness failed verification");
  return CliqueResult{w.size(), w};
}

// ---- construction -----------------------------------------------------------

Graph random_graph(int n, const Rational& p, Rng& rng) {
  if (p < Rational(0) || p > Rational(1)) throw std::domain_error("probability out of range");
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.chance(p)) g.add_edge(u, v);
  return g;
}

Graph apply_edits(const Graph& g, const EditSet& e) {
  Graph out = g;
  for (const Edit& ed : e) {
    if (ed.v >= g.vertex_count()) throw std::out_of_range("edit endpoint outside graph");
    bool present = out.has_edge(ed.u, ed.v);
    if (ed.kind == EditKind::Add) {
      if (present)
        throw PreconditionError("edit adds an existing edge", {ed.u, ed.v});
      out.add_edge(ed.u, ed.v);
    } else {
      if (!present)
        throw PreconditionError("edit deletes a missing edge", {ed.u, ed.v});
      out.remove_edge(ed.u, ed.v);
    }
  }
  return out;
}

}  // namespace c4lab
