#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "shapeslab/mesh.hpp"

using namespace shapeslab;

static Mesh icosahedron() {
  return mesh_from_triples({{0, 1, 2},  {0, 2, 3},  {0, 3, 4},  {0, 4, 5},  {0, 5, 1},
                            {1, 5, 10}, {1, 10, 6}, {1, 6, 2},  {2, 6, 7},  {2, 7, 3},
                            {3, 7, 8},  {3, 8, 4},  {4, 8, 9},  {4, 9, 5},  {5, 9, 10},
                            {6, 10, 11}, {7, 6, 11}, {8, 7, 11}, {9, 8, 11}, {10, 9, 11}});
}

static Mesh octahedron() {
  return mesh_from_triples({{0, 1, 2},
                            {0, 2, 3},
                            {0, 3, 4},
                            {0, 4, 1},
                            {5, 2, 1},
                            {5, 3, 2},
                            {5, 4, 3},
                            {5, 1, 4}});
}

static Mesh tetrahedron() {
  return mesh_from_triples({{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}});
}

TEST_CASE("platonic meshes validate") {
  Mesh ico = icosahedron();
  CHECK(validate(ico).ok);
  CHECK(ico.vertex_count == 12);
  CHECK(ico.valence_histogram()[5] == 12);

  Mesh tet = tetrahedron();
  CHECK(validate(tet).ok);
  CHECK(tet.valence_histogram()[3] == 4);

  Mesh oct = octahedron();
  CHECK(validate(oct).ok);
  CHECK(oct.valence_histogram()[4] == 6);
}

TEST_CASE("open edge is rejected") {
  CHECK_THROWS_WITH_AS(mesh_from_triples({{0, 1, 2}}), "unmatched oriented edge",
                       std::invalid_argument);
}

TEST_CASE("doubled triangle: folds and tiny meshes") {
  // two faces glued along all three edges
  Mesh m = mesh_from_triples({{0, 1, 2}, {2, 1, 0}});
  CHECK(validate(m).ok);
  CHECK(m.vertex_count == 3);
  CHECK(m.valence == std::vector<int>{2, 2, 2});
}

TEST_CASE("isomorphism is label-independent") {
  Mesh a = octahedron();
  // same octahedron with scrambled labels and rotated face lists
  Mesh b = mesh_from_triples({{2, 0, 4},
                              {3, 0, 2},
                              {0, 3, 5},
                              {0, 5, 4},
                              {1, 4, 5},
                              {1, 5, 3},
                              {1, 3, 2},
                              {1, 2, 4}});
  CHECK(isomorphic(a, b));
  CHECK_FALSE(isomorphic(a, tetrahedron()));
}

TEST_CASE("canonical code distinguishes valence pattern") {
  CHECK_FALSE(isomorphic(icosahedron(), octahedron()));
}

TEST_CASE("off export shape") {
  Mesh tet = tetrahedron();
  std::string off = to_off(tet);
  CHECK(off.substr(0, 4) == "OFF\n");
  CHECK(off.find("12 4 6") != std::string::npos);
  std::string faces = to_face_list(tet);
  CHECK(faces.find("vertices 4") != std::string::npos);
  CHECK(faces.find("faces 4") != std::string::npos);
}
