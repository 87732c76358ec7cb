#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "helpers.hpp"
#include "ibound/errors.hpp"
#include "ibound/paley.hpp"
#include "ibound/subgraph.hpp"

using namespace ibound;
using namespace ibound::testing;

TEST_CASE("the published gadget image is a genuine induced copy") {
  // oracle: check the spec'd vertex images edge by edge against the residues
  const auto residues = quadratic_residues(17);
  const auto is_edge = [&](int u, int v) {
    const int d = ((u - v) % 17 + 17) % 17;
    return std::binary_search(residues.begin(), residues.end(), d);
  };
  const Graph pattern = triangle_gadget_pattern();
  const std::vector<int> image = {0, 1, 2, 14, 6, 12, 7};
  int edges = 0, non_edges = 0;
  for (int i = 0; i < 7; ++i)
    for (int j = i + 1; j < 7; ++j) {
      REQUIRE(pattern.has_edge(i, j) == is_edge(image[i], image[j]));
      (pattern.has_edge(i, j) ? edges : non_edges) += 1;
    }
  CHECK(edges == 8);
  CHECK(non_edges == 13);

  const auto copies = find_induced_copies(pattern, paley(17));
  CHECK(std::find(copies.maps.begin(), copies.maps.end(), image) != copies.maps.end());
}

TEST_CASE("triangle-gadget pattern census in P(17)") {
  const Graph pattern = triangle_gadget_pattern();
  const Graph p17 = paley(17);
  const auto copies = find_induced_copies(pattern, p17);

  // Both counting conventions.  Each image set admits the pattern's single
  // nontrivial automorphism, so labeled maps are exactly twice the sets.
  CHECK(copies.image_sets.size() == 136);
  CHECK(copies.maps.size() == 272);

  // every image carries exactly one triangle, and every triangle of P(17)
  // lies in exactly two of the images
  std::map<Triangle, int> per_triangle;
  for (const auto& image : copies.image_sets) {
    const auto sub = induced_subgraph(p17, image);
    const auto tris = triangles(sub.graph);
    REQUIRE(tris.size() == 1);
    Triangle host = {sub.vertices[tris[0][0]], sub.vertices[tris[0][1]],
                     sub.vertices[tris[0][2]]};
    std::sort(host.begin(), host.end());
    ++per_triangle[host];
  }
  CHECK(per_triangle.size() == 68);
  for (const auto& [t, count] : per_triangle) CHECK(count == 2);

  // survivors after deleting vertex 0
  const auto survivors = std::count_if(
      copies.image_sets.begin(), copies.image_sets.end(),
      [](const auto& image) { return !std::binary_search(image.begin(), image.end(), 0); });
  CHECK(survivors == 80);

  const auto minus0 = find_induced_copies(pattern, delete_vertex(p17, 0).graph);
  CHECK(minus0.image_sets.size() == 80);
}

TEST_CASE("copy search budget") {
  const Graph big(10, {{0, 1}});
  const Graph host = paley(13);
  CHECK_THROWS_AS(find_induced_copies(big, host), budget_error);
  // existence queries may exceed the enumeration budget
  CHECK(find_induced_copies(paley(13), paley(13), {.max_pattern = 13, .first_only = true})
            .maps.size() == 1);
}

TEST_CASE("copy search small cases") {
  const Graph k3(3, {{0, 1}, {0, 2}, {1, 2}});
  const Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  const auto copies = find_induced_copies(k3, k4);
  CHECK(copies.image_sets.size() == 4);
  CHECK(copies.maps.size() == 24);  // 4 subsets x 3! labelings

  // pattern larger than host
  CHECK(find_induced_copies(k4, k3).maps.empty());

  // non-edges must be preserved: K3 has no induced copy in a path
  const Graph path(3, {{0, 1}, {1, 2}});
  CHECK(find_induced_copies(k3, path).maps.empty());
  // and an induced path has no copy inside K3
  CHECK(find_induced_copies(path, k3).maps.empty());
}
