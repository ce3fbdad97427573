#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace shapeslab {

// Closed oriented triangulated surface, combinatorics only.  Faces are
// ordered corner triples (counterclockwise); side i of a face runs from
// corner i to corner i+1.  The edge pairing is stored explicitly because
// these meshes legitimately contain multi-edges and folded edges (a face
// glued to itself), where matching by vertex pairs alone is ambiguous.
struct Mesh {
  struct Half {
    int face = -1;
    int side = -1;
    friend bool operator==(Half a, Half b) { return a.face == b.face && a.side == b.side; }
  };

  int face_count = 0;
  std::vector<std::array<Half, 3>> twin;   // twin[f][s]
  std::vector<std::array<int, 3>> corner;  // corner[f][c] = vertex id (derived)
  int vertex_count = 0;
  std::vector<int> valence;                // per vertex id

  Half twin_of(Half h) const { return twin[h.face][h.side]; }

  // Next outgoing half-edge around the origin vertex of (f, s).
  Half rot_origin(Half h) const {
    Half t = twin_of(h);
    return {t.face, (t.side + 1) % 3};
  }

  int vertex_of(Half h) const { return corner[h.face][h.side]; }

  // Derives vertex ids and valences from the pairing: corners around one
  // vertex form one orbit of rot_origin.
  void index_vertices() {
    corner.assign(face_count, {-1, -1, -1});
    int next = 0;
    for (int f = 0; f < face_count; ++f)
      for (int s = 0; s < 3; ++s) {
        if (corner[f][s] >= 0) continue;
        Half h{f, s};
        do {
          corner[h.face][h.side] = next;
          h = rot_origin(h);
        } while (!(h == Half{f, s}));
        ++next;
      }
    vertex_count = next;
    valence.assign(vertex_count, 0);
    for (int f = 0; f < face_count; ++f)
      for (int s = 0; s < 3; ++s) ++valence[corner[f][s]];
  }

  int edge_count() const { return face_count * 3 / 2; }
  int euler() const { return vertex_count - edge_count() + face_count; }

  std::vector<int> valence_histogram(int max_val = 16) const {
    std::vector<int> h(max_val + 1, 0);
    for (int v : valence) h[std::min(v, max_val)]++;
    return h;
  }
};

inline Mesh mesh_from_pairing(int faces, const std::vector<std::array<Mesh::Half, 3>>& twin) {
  Mesh m;
  m.face_count = faces;
  m.twin = twin;
  for (int f = 0; f < faces; ++f)
    for (int s = 0; s < 3; ++s) {
      Mesh::Half t = m.twin[f][s];
      if (t.face < 0 || t.face >= faces || t.side < 0 || t.side > 2)
        throw std::invalid_argument("mesh pairing out of range");
      Mesh::Half back = m.twin[t.face][t.side];
      if (!(back == Mesh::Half{f, s})) throw std::invalid_argument("mesh pairing not involutive");
      if (t == Mesh::Half{f, s}) throw std::invalid_argument("mesh pairing has fixed half-edge");
    }
  m.index_vertices();
  return m;
}

// Builds a mesh from counterclockwise vertex triples; each oriented edge
// (u, v) must appear exactly once and match a unique (v, u).  Suitable for
// simple meshes (platonic solids, doubles); generators with multi-edges
// construct the pairing themselves.
inline Mesh mesh_from_triples(const std::vector<std::array<int, 3>>& tris) {
  std::map<std::pair<int, int>, Mesh::Half> by_edge;
  for (int f = 0; f < (int)tris.size(); ++f)
    for (int s = 0; s < 3; ++s) {
      auto key = std::make_pair(tris[f][s], tris[f][(s + 1) % 3]);
      if (by_edge.count(key)) throw std::invalid_argument("duplicate oriented edge");
      by_edge[key] = {f, s};
    }
  std::vector<std::array<Mesh::Half, 3>> twin(tris.size());
  for (auto& [key, h] : by_edge) {
    auto rev = by_edge.find({key.second, key.first});
    if (rev == by_edge.end()) throw std::invalid_argument("unmatched oriented edge");
    twin[h.face][h.side] = rev->second;
  }
  Mesh m = mesh_from_pairing((int)tris.size(), twin);
  return m;
}

struct MeshReport {
  bool ok = true;
  std::vector<std::string> failures;
  void fail(const std::string& why) {
    ok = false;
    failures.push_back(why);
  }
  std::string str() const {
    if (ok) return "pass";
    std::string s = "fail:";
    for (auto& f : failures) s += " [" + f + "]";
    return s;
  }
};

// Checks the closed-surface invariants: involutive fixed-point-free pairing
// (enforced at construction), Euler characteristic 2, valences in 1..6 and
// the combinatorial Gauss-Bonnet sum.
inline MeshReport validate(const Mesh& m, bool require_curvature_range = true) {
  MeshReport r;
  if (m.face_count == 0) {
    r.fail("empty mesh");
    return r;
  }
  if (m.face_count % 2 != 0) r.fail("odd face count");
  if (m.euler() != 2) r.fail("euler characteristic " + std::to_string(m.euler()) + " != 2");
  int64_t gb = 0;
  for (int v = 0; v < m.vertex_count; ++v) {
    gb += 6 - m.valence[v];
    if (require_curvature_range && (m.valence[v] < 1 || m.valence[v] > 6))
      r.fail("valence " + std::to_string(m.valence[v]) + " out of range at vertex " +
             std::to_string(v));
  }
  if (gb != 12) r.fail("sum(6 - valence) = " + std::to_string(gb) + " != 12");
  return r;
}

// ---------------------------------------------------------------------------
// Canonical form: minimal BFS code over all oriented rooted starts.  Two
// meshes are isomorphic (as oriented combinatorial maps) iff codes match.

inline std::vector<int32_t> bfs_code(const Mesh& m, Mesh::Half root) {
  std::vector<int> id(m.face_count, -1);       // face -> bfs index
  std::vector<int> entry(m.face_count, -1);    // side the face was entered through
  std::vector<int> order;
  order.reserve(m.face_count);
  id[root.face] = 0;
  entry[root.face] = root.side;
  order.push_back(root.face);
  for (size_t q = 0; q < order.size(); ++q) {
    int f = order[q];
    for (int k = 0; k < 3; ++k) {
      int s = (entry[f] + k) % 3;
      Mesh::Half t = m.twin[f][s];
      if (id[t.face] < 0) {
        id[t.face] = (int)order.size();
        entry[t.face] = t.side;
        order.push_back(t.face);
      }
    }
  }
  std::vector<int32_t> code;
  code.reserve(m.face_count * 6);
  for (int f : order)
    for (int k = 0; k < 3; ++k) {
      int s = (entry[f] + k) % 3;
      Mesh::Half t = m.twin[f][s];
      code.push_back(id[t.face]);
      code.push_back((t.side - entry[t.face] + 3) % 3);
    }
  return code;
}

inline std::vector<int32_t> canonical_code(const Mesh& m) {
  std::vector<int32_t> best;
  for (int f = 0; f < m.face_count; ++f)
    for (int s = 0; s < 3; ++s) {
      auto c = bfs_code(m, {f, s});
      if (best.empty() || c < best) best = std::move(c);
    }
  return best;
}

inline bool isomorphic(const Mesh& a, const Mesh& b) {
  if (a.face_count != b.face_count) return false;
  return canonical_code(a) == canonical_code(b);
}

// ---------------------------------------------------------------------------
// Exports.  No global isometric embedding exists in general, so the OFF
// export lays each triangle out flat as its own unit equilateral triangle;
// the combinatorial export lists shared vertex indices instead.

inline std::string to_off(const Mesh& m) {
  std::ostringstream os;
  os << "OFF\n" << 3 * m.face_count << " " << m.face_count << " " << m.edge_count() << "\n";
  const double h = 0.8660254037844386;
  for (int f = 0; f < m.face_count; ++f) {
    double x0 = 1.5 * f;
    os << x0 << " 0 0\n" << x0 + 1.0 << " 0 0\n" << x0 + 0.5 << " " << h << " 0\n";
  }
  for (int f = 0; f < m.face_count; ++f)
    os << "3 " << 3 * f << " " << 3 * f + 1 << " " << 3 * f + 2 << "\n";
  return os.str();
}

inline std::string to_face_list(const Mesh& m) {
  std::ostringstream os;
  os << "vertices " << m.vertex_count << "\nfaces " << m.face_count << "\n";
  for (int f = 0; f < m.face_count; ++f)
    os << m.corner[f][0] << " " << m.corner[f][1] << " " << m.corner[f][2] << "\n";
  return os.str();
}

}  // namespace shapeslab
