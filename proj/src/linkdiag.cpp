#include "linkdiag.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "snf.hpp"

namespace hsikit {

namespace {

// dart id = 4*crossing + slot
struct Darts {
  std::vector<int> partner;  // dart -> dart of same arc
  std::map<int, std::vector<int>> by_arc;

  explicit Darts(const PDDiagram& d) {
    partner.assign(d.crossings.size() * 4, -1);
    for (size_t c = 0; c < d.crossings.size(); ++c)
      for (int s = 0; s < 4; ++s)
        by_arc[d.crossings[c][static_cast<size_t>(s)]].push_back(
            static_cast<int>(4 * c) + s);
    for (auto& [arc, ds] : by_arc) {
      if (ds.size() != 2)
        throw std::invalid_argument("PD code: arc " + std::to_string(arc) +
                                    " does not appear exactly twice");
      partner[static_cast<size_t>(ds[0])] = ds[1];
      partner[static_cast<size_t>(ds[1])] = ds[0];
    }
  }
};

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

// Faces of the planar embedding implied by the PD code.  Corner k of a
// crossing is the region between slots k and k+1; the corner on one side of
// the arc leaving via slot j pairs with corner s'-1 at the far end.
struct Faces {
  std::vector<int> corner_face;  // corner id (= dart id) -> face index
  int n_faces = 0;

  Faces(const PDDiagram& d, const Darts& darts) {
    size_t n = d.crossings.size() * 4;
    UnionFind uf(n);
    for (size_t c = 0; c < d.crossings.size(); ++c)
      for (int j = 0; j < 4; ++j) {
        int dart = static_cast<int>(4 * c) + j;
        int far = darts.partner[static_cast<size_t>(dart)];
        int far_c = far / 4, far_s = far % 4;
        uf.unite(dart, 4 * far_c + (far_s + 3) % 4);
      }
    corner_face.assign(n, -1);
    std::map<int, int> relabel;
    for (size_t i = 0; i < n; ++i) {
      int root = uf.find(static_cast<int>(i));
      auto [it, fresh] = relabel.try_emplace(root, n_faces);
      if (fresh) ++n_faces;
      corner_face[i] = it->second;
    }
  }
};

int crossing_components(const PDDiagram& d, const Darts& darts) {
  if (d.crossings.empty()) return 0;
  UnionFind uf(d.crossings.size());
  for (size_t c = 0; c < d.crossings.size(); ++c)
    for (int s = 0; s < 4; ++s) {
      int far = darts.partner[4 * c + static_cast<size_t>(s)];
      uf.unite(static_cast<int>(c), far / 4);
    }
  std::set<int> roots;
  for (size_t c = 0; c < d.crossings.size(); ++c)
    roots.insert(uf.find(static_cast<int>(c)));
  return static_cast<int>(roots.size());
}

}  // namespace

PDDiagram PDDiagram::trefoil() {
  return PDDiagram{{{{1, 4, 2, 5}}, {{3, 6, 4, 1}}, {{5, 2, 6, 3}}}, 0};
}

PDDiagram PDDiagram::figure_eight() {
  return PDDiagram{{{{4, 2, 5, 1}}, {{8, 6, 1, 5}}, {{6, 3, 7, 4}}, {{2, 7, 3, 8}}}, 0};
}

PDDiagram PDDiagram::hopf() { return PDDiagram{{{{1, 3, 2, 4}}, {{3, 1, 4, 2}}}, 0}; }

int PDDiagram::n_components() const {
  if (crossings.empty()) return free_loops;
  Darts darts(*this);
  // strand continuity: under 0<->2, over 1<->3, plus arc pairing
  UnionFind uf(crossings.size() * 4);
  for (size_t c = 0; c < crossings.size(); ++c) {
    uf.unite(static_cast<int>(4 * c), static_cast<int>(4 * c) + 2);
    uf.unite(static_cast<int>(4 * c) + 1, static_cast<int>(4 * c) + 3);
  }
  for (size_t i = 0; i < darts.partner.size(); ++i)
    uf.unite(static_cast<int>(i), darts.partner[i]);
  std::set<int> roots;
  for (size_t i = 0; i < crossings.size() * 4; ++i) roots.insert(uf.find(static_cast<int>(i)));
  return static_cast<int>(roots.size()) + free_loops;
}

bool PDDiagram::connected() const {
  if (crossings.empty()) return free_loops <= 1;
  if (free_loops > 0) return false;
  Darts darts(*this);
  return crossing_components(*this, darts) == 1;
}

void PDDiagram::validate() const {
  if (crossings.empty()) return;
  Darts darts(*this);
  Faces faces(*this, darts);
  long long v = static_cast<long long>(crossings.size());
  long long e = 2 * v;
  long long comps = crossing_components(*this, darts);
  if (v - e + faces.n_faces != 2 * comps)
    throw std::invalid_argument("PD code does not describe a planar diagram");
}

std::string PDDiagram::str() const {
  std::string s = "PD[";
  for (size_t i = 0; i < crossings.size(); ++i) {
    if (i) s += ",";
    s += "X(" + std::to_string(crossings[i][0]) + "," + std::to_string(crossings[i][1]) +
         "," + std::to_string(crossings[i][2]) + "," + std::to_string(crossings[i][3]) + ")";
  }
  s += "]";
  if (free_loops) s += "+" + std::to_string(free_loops) + "O";
  return s;
}

namespace {

long long goeritz_det(const PDDiagram& d) {
  if (d.crossings.empty()) return d.free_loops <= 1 ? 1 : 0;
  Darts darts(d);
  Faces faces(d, darts);

  // 2-color the faces (checkerboard): faces across an arc differ.
  std::vector<int> color(static_cast<size_t>(faces.n_faces), -1);
  std::vector<std::vector<int>> adj(static_cast<size_t>(faces.n_faces));
  for (size_t c = 0; c < d.crossings.size(); ++c)
    for (int j = 0; j < 4; ++j) {
      // the two sides of the arc leaving via slot j
      int fa = faces.corner_face[4 * c + static_cast<size_t>(j)];
      int fb = faces.corner_face[4 * c + static_cast<size_t>((j + 3) % 4)];
      adj[static_cast<size_t>(fa)].push_back(fb);
      adj[static_cast<size_t>(fb)].push_back(fa);
    }
  std::vector<int> stack;
  for (int start = 0; start < faces.n_faces; ++start) {
    if (color[static_cast<size_t>(start)] != -1) continue;
    color[static_cast<size_t>(start)] = 0;
    stack.push_back(start);
    while (!stack.empty()) {
      int f = stack.back();
      stack.pop_back();
      for (int g : adj[static_cast<size_t>(f)]) {
        if (color[static_cast<size_t>(g)] == -1) {
          color[static_cast<size_t>(g)] = 1 - color[static_cast<size_t>(f)];
          stack.push_back(g);
        } else if (color[static_cast<size_t>(g)] == color[static_cast<size_t>(f)]) {
          throw std::invalid_argument("PD code: checkerboard coloring failed");
        }
      }
    }
  }

  // white = color 0; Goeritz matrix over white regions
  std::vector<int> white_index(static_cast<size_t>(faces.n_faces), -1);
  int n_white = 0;
  for (int f = 0; f < faces.n_faces; ++f)
    if (color[static_cast<size_t>(f)] == 0) white_index[static_cast<size_t>(f)] = n_white++;
  if (n_white <= 1) return 1;

  BigMatrix g(static_cast<size_t>(n_white), std::vector<BigInt>(static_cast<size_t>(n_white), 0));
  for (size_t c = 0; c < d.crossings.size(); ++c) {
    // corners 0..3; white pair is {0,2} or {1,3}
    int f0 = faces.corner_face[4 * c + 0];
    int f1 = faces.corner_face[4 * c + 1];
    int f2 = faces.corner_face[4 * c + 2];
    int f3 = faces.corner_face[4 * c + 3];
    int wa, wb, eta;
    if (color[static_cast<size_t>(f0)] == 0) {
      wa = f0;
      wb = f2;
      eta = -1;
    } else {
      wa = f1;
      wb = f3;
      eta = +1;
    }
    if (wa == wb) continue;  // both white corners in one region
    int ia = white_index[static_cast<size_t>(wa)], ib = white_index[static_cast<size_t>(wb)];
    g[static_cast<size_t>(ia)][static_cast<size_t>(ib)] -= eta;
    g[static_cast<size_t>(ib)][static_cast<size_t>(ia)] -= eta;
    g[static_cast<size_t>(ia)][static_cast<size_t>(ia)] += eta;
    g[static_cast<size_t>(ib)][static_cast<size_t>(ib)] += eta;
  }
  // delete the last white region
  size_t m = static_cast<size_t>(n_white) - 1;
  BigMatrix gg(m, std::vector<BigInt>(m));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) gg[i][j] = g[i][j];
  BigInt det = big_det(gg);
  BigInt a = abs(det);
  if (!a.fits_slong_p()) throw std::overflow_error("determinant too large");
  return a.get_si();
}

}  // namespace

long long determinant(const PDDiagram& d) {
  if (!d.connected()) throw DisconnectedDiagram("determinant needs a connected diagram");
  return goeritz_det(d);
}

long long determinant_or_zero(const PDDiagram& d) {
  if (!d.connected()) return 0;
  return goeritz_det(d);
}

namespace {

/// Remove the listed crossings after uniting arcs as instructed; classes of
/// touched arcs with no remaining crossing occurrence become free loops.
PDDiagram rebuild(const PDDiagram& d, const std::set<size_t>& removed,
                  const std::vector<std::pair<int, int>>& arc_unions) {
  std::map<int, int> arc_ids;  // arc label -> dense id
  auto id_of = [&](int arc) {
    auto [it, fresh] = arc_ids.try_emplace(arc, static_cast<int>(arc_ids.size()));
    (void)fresh;
    return it->second;
  };
  for (const auto& x : d.crossings)
    for (int a : x) id_of(a);
  for (auto [a, b] : arc_unions) {
    id_of(a);
    id_of(b);
  }
  UnionFind uf(arc_ids.size());
  for (auto [a, b] : arc_unions) uf.unite(id_of(a), id_of(b));

  PDDiagram out;
  out.free_loops = d.free_loops;
  std::map<int, int> relabel;  // class root -> new arc label
  auto new_label = [&](int arc) {
    int root = uf.find(id_of(arc));
    auto [it, fresh] = relabel.try_emplace(root, static_cast<int>(relabel.size()) + 1);
    (void)fresh;
    return it->second;
  };
  for (size_t c = 0; c < d.crossings.size(); ++c) {
    if (removed.count(c)) continue;
    std::array<int, 4> x{};
    for (int s = 0; s < 4; ++s)
      x[static_cast<size_t>(s)] = new_label(d.crossings[c][static_cast<size_t>(s)]);
    out.crossings.push_back(x);
  }
  // classes touched by unions but absent from the remaining crossings closed
  // up into circles
  std::set<int> touched_roots, surviving_roots;
  for (auto [a, b] : arc_unions) {
    touched_roots.insert(uf.find(id_of(a)));
    touched_roots.insert(uf.find(id_of(b)));
  }
  for (size_t c = 0; c < d.crossings.size(); ++c) {
    if (removed.count(c)) continue;
    for (int a : d.crossings[c]) surviving_roots.insert(uf.find(id_of(a)));
  }
  for (int r : touched_roots)
    if (!surviving_roots.count(r)) ++out.free_loops;
  return out;
}

}  // namespace

PDDiagram resolve_crossing(const PDDiagram& d, size_t i, int r) {
  if (i >= d.crossings.size()) throw std::out_of_range("crossing index out of range");
  const auto& x = d.crossings[i];
  std::vector<std::pair<int, int>> unions;
  if (r == 0) {
    unions = {{x[0], x[1]}, {x[2], x[3]}};
  } else if (r == 1) {
    unions = {{x[0], x[3]}, {x[1], x[2]}};
  } else {
    throw std::invalid_argument("resolution direction must be 0 or 1");
  }
  return rebuild(d, {i}, unions);
}

namespace {

std::optional<PDDiagram> try_r1(const PDDiagram& d) {
  for (size_t c = 0; c < d.crossings.size(); ++c) {
    const auto& x = d.crossings[c];
    for (int k = 0; k < 4; ++k) {
      if (x[static_cast<size_t>(k)] != x[static_cast<size_t>((k + 1) % 4)]) continue;
      // monogon at slots (k, k+1); the strand continues through the others
      int y1 = x[static_cast<size_t>((k + 2) % 4)];
      int y2 = x[static_cast<size_t>((k + 3) % 4)];
      return rebuild(d, {c}, {{y1, y2}, {y1, x[static_cast<size_t>(k)]}});
    }
  }
  return std::nullopt;
}

std::optional<PDDiagram> try_r2(const PDDiagram& d) {
  for (size_t c1 = 0; c1 < d.crossings.size(); ++c1)
    for (size_t c2 = c1 + 1; c2 < d.crossings.size(); ++c2) {
      const auto& x1 = d.crossings[c1];
      const auto& x2 = d.crossings[c2];
      auto over = [](const std::array<int, 4>& x) { return std::array<int, 2>{x[1], x[3]}; };
      auto under = [](const std::array<int, 4>& x) { return std::array<int, 2>{x[0], x[2]}; };
      auto o1 = over(x1), o2 = over(x2), u1 = under(x1), u2 = under(x2);
      // need an arc over at both crossings and another under at both
      for (int a : o1)
        for (int b : u1) {
          if (a == b) continue;
          bool a_in_o2 = (o2[0] == a || o2[1] == a);
          bool b_in_u2 = (u2[0] == b || u2[1] == b);
          if (!a_in_o2 || !b_in_u2) continue;
          int p1 = (o1[0] == a) ? o1[1] : o1[0];
          int p2 = (o2[0] == a) ? o2[1] : o2[0];
          int q1 = (u1[0] == b) ? u1[1] : u1[0];
          int q2 = (u2[0] == b) ? u2[1] : u2[0];
          return rebuild(d, {c1, c2}, {{p1, a}, {a, p2}, {q1, b}, {b, q2}});
        }
    }
  return std::nullopt;
}

}  // namespace

PDDiagram simplify(const PDDiagram& d) {
  PDDiagram cur = d;
  for (;;) {
    if (auto r = try_r1(cur)) {
      cur = std::move(*r);
      continue;
    }
    if (auto r = try_r2(cur)) {
      cur = std::move(*r);
      continue;
    }
    return cur;
  }
}

namespace {

int fresh_arc(const PDDiagram& d) {
  int m = 0;
  for (const auto& x : d.crossings) m = std::max({m, x[0], x[1], x[2], x[3]});
  return m + 1;
}

// Split one occurrence of `arc` so a new crossing can be spliced in: the
// occurrence selected by `which` (0 or 1, scan order) is relabeled `fresh`.
PDDiagram split_arc(const PDDiagram& d, int arc, int fresh, int which) {
  PDDiagram out = d;
  int seen = 0;
  for (auto& x : out.crossings)
    for (auto& a : x)
      if (a == arc && seen++ == which) a = fresh;
  return out;
}

bool planar(const PDDiagram& d) {
  try {
    d.validate();
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

}  // namespace

PDDiagram add_kink(const PDDiagram& d, int arc, int variant) {
  int z = fresh_arc(d);
  int x2 = z + 1;
  if (d.crossings.empty() || [&] {
        for (const auto& x : d.crossings)
          for (int a : x)
            if (a == arc) return false;
        return true;
      }()) {
    // kink a crossingless circle
    if (d.free_loops < 1) throw std::invalid_argument("kink: no such arc");
    PDDiagram out = d;
    out.free_loops -= 1;
    out.crossings.push_back((variant & 1) ? std::array<int, 4>{z, x2, x2, z}
                                          : std::array<int, 4>{z, z, x2, x2});
    return out;
  }
  PDDiagram out = split_arc(d, arc, x2, 1);
  switch (variant & 3) {
    case 0: out.crossings.push_back({arc, z, z, x2}); break;
    case 1: out.crossings.push_back({arc, x2, z, z}); break;
    case 2: out.crossings.push_back({z, z, x2, arc}); break;
    default: out.crossings.push_back({z, arc, x2, z}); break;
  }
  return out;
}

PDDiagram add_ripple(const PDDiagram& d, int arc_x, int arc_y) {
  if (arc_x == arc_y) throw std::invalid_argument("ripple needs two distinct arcs");
  int xm = fresh_arc(d);
  int x2 = xm + 1, ym = xm + 2, y2 = xm + 3;
  // the planar splice depends on which ends are joined and on which side the
  // over-strand passes, so search the local arrangements for one that keeps
  // the code planar
  for (int wx = 0; wx < 2; ++wx)
    for (int wy = 0; wy < 2; ++wy) {
      PDDiagram base = split_arc(d, arc_x, x2, wx);
      base = split_arc(base, arc_y, y2, wy);
      for (const auto& pair :
           {std::array<std::array<int, 4>, 2>{{{arc_x, ym, xm, arc_y}, {xm, ym, x2, y2}}},
            {{{arc_x, arc_y, xm, ym}, {xm, y2, x2, ym}}},
            {{{arc_x, ym, xm, y2}, {xm, arc_y, x2, ym}}},
            {{{arc_x, y2, xm, arc_y}, {xm, ym, x2, y2}}},
            {{{arc_x, arc_y, xm, y2}, {xm, ym, x2, y2}}},
            {{{arc_x, y2, xm, ym}, {xm, arc_y, x2, ym}}}}) {
        PDDiagram out = base;
        out.crossings.push_back(pair[0]);
        out.crossings.push_back(pair[1]);
        if (planar(out)) return out;
      }
    }
  throw std::invalid_argument("ripple: arcs do not share a face");
}

std::string canonical_code(const PDDiagram& d) {
  if (d.crossings.empty())
    return "O" + std::to_string(d.free_loops);
  Darts darts(d);
  size_t n = d.crossings.size();
  std::string best;
  for (size_t c0 = 0; c0 < n; ++c0)
    for (int s0 = 0; s0 < 4; ++s0) {
      // relabel arcs by strand traversal from the start dart
      std::map<int, int> relab;
      std::vector<bool> dart_done(4 * n, false);
      auto visit_strand = [&](int dart) {
        while (!dart_done[static_cast<size_t>(dart)]) {
          int c = dart / 4, s = dart % 4;
          int arc = d.crossings[static_cast<size_t>(c)][static_cast<size_t>(s)];
          relab.try_emplace(arc, static_cast<int>(relab.size()) + 1);
          int out_dart = 4 * c + (s + 2) % 4;
          dart_done[static_cast<size_t>(dart)] = dart_done[static_cast<size_t>(out_dart)] = true;
          int arc2 = d.crossings[static_cast<size_t>(c)][static_cast<size_t>((s + 2) % 4)];
          relab.try_emplace(arc2, static_cast<int>(relab.size()) + 1);
          dart = darts.partner[static_cast<size_t>(out_dart)];
        }
      };
      visit_strand(static_cast<int>(4 * c0) + s0);
      for (size_t i = 0; i < 4 * n; ++i)
        if (!dart_done[i]) visit_strand(static_cast<int>(i));
      std::vector<std::array<int, 4>> rel;
      for (const auto& x : d.crossings) {
        std::array<int, 4> y{};
        for (int s = 0; s < 4; ++s) y[static_cast<size_t>(s)] = relab.at(x[static_cast<size_t>(s)]);
        rel.push_back(y);
      }
      std::sort(rel.begin(), rel.end());
      std::string code;
      for (const auto& x : rel)
        code += std::to_string(x[0]) + "," + std::to_string(x[1]) + "," +
                std::to_string(x[2]) + "," + std::to_string(x[3]) + ";";
      if (best.empty() || code < best) best = std::move(code);
    }
  return best + "O" + std::to_string(d.free_loops);
}

bool QACertificate::verify() const {
  long long det_here = determinant_or_zero(diagram);
  if (det_here != det) return false;
  if (leaf) {
    PDDiagram s = simplify(diagram);
    return s.crossings.empty() && s.n_components() == 1 && det == 1;
  }
  if (det0 < 1 || det1 < 1 || det != det0 + det1) return false;
  if (!child0 || !child1) return false;
  PDDiagram d0 = simplify(resolve_crossing(diagram, crossing, 0));
  PDDiagram d1 = simplify(resolve_crossing(diagram, crossing, 1));
  if (determinant_or_zero(d0) != det0 || determinant_or_zero(d1) != det1) return false;
  return child0->verify() && child1->verify();
}

int QACertificate::node_count() const {
  int n = 1;
  if (child0) n += child0->node_count();
  if (child1) n += child1->node_count();
  return n;
}

namespace {

struct QASearch {
  std::map<std::string, std::optional<QACertificate>> memo;
  int budget;

  std::optional<QACertificate> run(const PDDiagram& input, int depth) {
    PDDiagram d = simplify(input);
    std::string key = canonical_code(d);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    std::optional<QACertificate> result;
    if (d.crossings.empty()) {
      if (d.n_components() == 1) {
        QACertificate leaf;
        leaf.diagram = d;
        leaf.det = 1;
        leaf.leaf = true;
        result = leaf;
      }
    } else if (depth > 0 && d.connected()) {
      long long det = determinant_or_zero(d);
      for (size_t i = 0; i < d.crossings.size() && !result; ++i) {
        PDDiagram d0 = resolve_crossing(d, i, 0);
        PDDiagram d1 = resolve_crossing(d, i, 1);
        long long det0 = determinant_or_zero(simplify(d0));
        long long det1 = determinant_or_zero(simplify(d1));
        if (det0 < 1 || det1 < 1 || det != det0 + det1) continue;
        auto c0 = run(d0, depth - 1);
        if (!c0) continue;
        auto c1 = run(d1, depth - 1);
        if (!c1) continue;
        QACertificate node;
        node.diagram = d;
        node.det = det;
        node.leaf = false;
        node.crossing = i;
        node.det0 = det0;
        node.det1 = det1;
        node.child0 = std::make_shared<QACertificate>(*c0);
        node.child1 = std::make_shared<QACertificate>(*c1);
        result = node;
      }
    }
    memo[key] = result;
    return result;
  }
};

}  // namespace

std::optional<QACertificate> certify_quasi_alternating(const PDDiagram& d, int depth_limit) {
  d.validate();
  QASearch search;
  return search.run(d, depth_limit);
}

}  // namespace hsikit
