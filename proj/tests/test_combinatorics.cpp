#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "graph_catalog.hpp"
#include "ngpoly/combinatorics.hpp"

using namespace ngpoly;
using fixtures::hull;

namespace {

SimpleGraph complete_bipartite(std::size_t a, std::size_t b) {
  EdgeList edges;
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) edges.push_back({i, a + j});
  return SimpleGraph(a + b, edges);
}

EdgeList complete_edges(std::size_t n, std::size_t offset = 0) {
  EdgeList edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges.push_back({offset + i, offset + j});
  return edges;
}

EdgeList cycle_edges(std::size_t n, std::size_t offset = 0) {
  EdgeList edges;
  for (std::size_t i = 0; i < n; ++i) edges.push_back({offset + i, offset + (i + 1) % n});
  return edges;
}

// K_4 on 0..3 and a cycle of length c sharing vertex 3.
Multigraph k4_wedge_cycle(std::size_t c) {
  EdgeList edges = complete_edges(4);
  for (std::size_t i = 0; i < c; ++i) {
    std::size_t u = i == 0 ? 3 : 3 + i, v = i + 1 == c ? 3 : 4 + i;
    edges.push_back({u, v});
  }
  return Multigraph(3 + c, edges);
}

std::vector<LatticePoint> product_points(const std::vector<LatticePoint>& a,
                                         const std::vector<LatticePoint>& b) {
  std::vector<LatticePoint> out;
  for (const auto& x : a)
    for (const auto& y : b) {
      LatticePoint z = x;
      z.insert(z.end(), y.begin(), y.end());
      out.push_back(z);
    }
  return out;
}

std::vector<LatticePoint> simplex_vertices(std::size_t n) {
  std::vector<LatticePoint> out;
  for (std::size_t i = 0; i < n; ++i) {
    LatticePoint e(n, 0);
    e[i] = 1;
    out.push_back(e);
  }
  return out;
}

// Tree count via the matrix-tree theorem, determinant by exact elimination.
long kirchhoff(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<Rational>> l(n - 1, std::vector<Rational>(n - 1, 0));
  for (auto [u, v] : g.edges()) {
    if (u < n - 1) l[u][u] += 1;
    if (v < n - 1) l[v][v] += 1;
    if (u < n - 1 && v < n - 1) {
      l[u][v] -= 1;
      l[v][u] -= 1;
    }
  }
  Rational det = 1;
  for (std::size_t c = 0; c + 1 < n; ++c) {
    std::size_t pivot = c;
    while (pivot + 1 < n && l[pivot][c] == 0) ++pivot;
    if (pivot + 1 == n) return 0;
    if (pivot != c) {
      std::swap(l[pivot], l[c]);
      det = -det;
    }
    det *= l[c][c];
    for (std::size_t r = c + 1; r + 1 < n; ++r) {
      Rational f = l[r][c] / l[c][c];
      for (std::size_t k = c; k + 1 < n; ++k) l[r][k] -= f * l[c][k];
    }
  }
  return det.get_num().get_si();
}

// Odd cycle condition by brute force: odd vertex sets carrying a Hamiltonian
// cycle, then pairwise disjointness and adjacency.
bool odd_cycle_oracle(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::uint64_t> odd;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    std::vector<std::size_t> verts;
    for (std::size_t v = 0; v < n; ++v)
      if (s >> v & 1) verts.push_back(v);
    if (verts.size() < 3 || verts.size() % 2 == 0) continue;
    bool found = false;
    do {
      bool ok = true;
      for (std::size_t i = 0; i < verts.size() && ok; ++i)
        ok = g.adjacent(verts[i], verts[(i + 1) % verts.size()]);
      found = ok;
    } while (!found && std::next_permutation(verts.begin() + 1, verts.end()));
    if (found) odd.push_back(s);
  }
  for (auto a : odd)
    for (auto b : odd) {
      if (a & b) continue;
      bool joined = false;
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
          if ((a >> u & 1) && (b >> v & 1) && g.adjacent(u, v)) joined = true;
      if (!joined) return false;
    }
  return true;
}

std::size_t projection_size(const std::vector<LatticePoint>& vertices,
                            const std::vector<std::size_t>& coords) {
  std::set<LatticePoint> out;
  for (const auto& v : vertices) {
    LatticePoint p;
    for (auto c : coords) p.push_back(v[c]);
    out.insert(p);
  }
  return out.size();
}

// A factor is a product of two coordinate blocks iff projection sizes multiply.
bool factor_splits(const std::vector<LatticePoint>& vertices, const std::vector<std::size_t>& coords) {
  const std::size_t k = coords.size();
  const std::size_t total = projection_size(vertices, coords);
  for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << k); ++mask) {
    if (!(mask & 1)) continue;
    std::vector<std::size_t> a, b;
    for (std::size_t i = 0; i < k; ++i) (mask >> i & 1 ? a : b).push_back(coords[i]);
    if (projection_size(vertices, a) * projection_size(vertices, b) == total) return true;
  }
  return false;
}

std::vector<LatticePoint> sorted(std::vector<LatticePoint> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("graph basics") {
  Multigraph g(4, {{1, 0}, {2, 3}});
  CHECK(g.edges()[0] == std::pair<std::size_t, std::size_t>{0, 1});
  CHECK(g.components() == std::vector<std::vector<std::size_t>>{{0, 1}, {2, 3}});
  CHECK_FALSE(g.is_connected());
  CHECK_THROWS_WITH(Multigraph(2, {{0, 0}}), "loop at vertex 0");
  CHECK_THROWS_WITH(Multigraph(2, {{0, 2}}), doctest::Contains("out of range"));
  CHECK_THROWS_WITH(SimpleGraph(2, {{0, 1}, {1, 0}}), "graph has parallel edges");
  CHECK(Multigraph(2, {{0, 1}, {0, 1}}).is_connected());
}

TEST_CASE("odd cycle condition") {
  CHECK(odd_cycle_condition(complete_bipartite(3, 3)).holds);
  CHECK(odd_cycle_condition(complete_bipartite(3, 3)).odd_cycle_count == 0);

  EdgeList two = cycle_edges(3);
  auto second = cycle_edges(3, 3);
  two.insert(two.end(), second.begin(), second.end());
  auto disjoint = odd_cycle_condition(SimpleGraph(6, two));
  CHECK_FALSE(disjoint.holds);
  REQUIRE(disjoint.violation);
  CHECK(disjoint.violation->first == std::vector<std::size_t>{0, 1, 2});
  CHECK(disjoint.violation->second == std::vector<std::size_t>{3, 4, 5});

  two.push_back({2, 3});
  CHECK(odd_cycle_condition(SimpleGraph(6, two)).holds);
  CHECK(odd_cycle_condition(SimpleGraph(5, complete_edges(5))).odd_cycle_count == 11);  // 10 triangles, one 5-set

  std::mt19937_64 rng(5);
  std::bernoulli_distribution coin(0.35);
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t n = 4 + trial % 5;
    EdgeList edges;
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v)
        if (coin(rng)) edges.push_back({u, v});
    SimpleGraph graph(n, edges);
    CHECK(odd_cycle_condition(graph).holds == odd_cycle_oracle(graph));
  }
}

TEST_CASE("edge polytopes are IDP exactly under the odd cycle condition") {
  std::mt19937_64 rng(11);
  std::bernoulli_distribution coin(0.5);
  int checked = 0;
  while (checked < 40) {
    std::size_t n = 5 + checked % 2;
    EdgeList edges;
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v)
        if (coin(rng)) edges.push_back({u, v});
    SimpleGraph g(n, edges);
    if (!g.is_connected()) continue;
    auto p = edge_polytope(g);
    if (p.dim() == 0) continue;
    CHECK(is_idp(p.projected).holds == odd_cycle_condition(g).holds);
    ++checked;
  }
}

TEST_CASE("edge polytope examples") {
  auto k23 = ng_edge_polytope(complete_bipartite(2, 3));
  CHECK(k23.engine.is_ng());
  CHECK_FALSE(k23.gorenstein);
  CHECK(k23.is_k_n_n_plus_1);
  CHECK(k23.agree());

  auto k33 = ng_edge_polytope(complete_bipartite(3, 3));
  CHECK(k33.gorenstein);
  CHECK(k33.engine.status == NGStatus::gorenstein);

  auto k24 = ng_edge_polytope(complete_bipartite(2, 4));
  CHECK_FALSE(k24.engine.is_ng());
  CHECK_FALSE(k24.formula);

  CHECK(edge_polytope(SimpleGraph(3, cycle_edges(3))).dim() == 2);
  CHECK(edge_polytope(complete_bipartite(2, 3)).dim() == 3);
  CHECK_THROWS_WITH(edge_polytope(SimpleGraph(4, {{0, 1}, {2, 3}})),
                    "graph is disconnected; components: {0,1} {2,3}");
  EdgeList bad = cycle_edges(3);
  auto other = cycle_edges(3, 3);
  bad.insert(bad.end(), other.begin(), other.end());
  bad.push_back({0, 6});
  CHECK_THROWS_WITH(ng_edge_polytope(SimpleGraph(7, bad)), doctest::Contains("odd cycle condition fails"));
}

TEST_CASE("complete bipartite recognition") {
  CHECK(complete_bipartite_sides(complete_bipartite(3, 2)) == std::make_pair<std::size_t, std::size_t>(2, 3));
  CHECK_FALSE(complete_bipartite_sides(SimpleGraph(4, cycle_edges(4))) ==
              std::make_pair<std::size_t, std::size_t>(1, 3));
  CHECK(complete_bipartite_sides(SimpleGraph(4, cycle_edges(4))) ==
        std::make_pair<std::size_t, std::size_t>(2, 2));
  CHECK_FALSE(complete_bipartite_sides(SimpleGraph(3, cycle_edges(3))));
  CHECK_FALSE(complete_bipartite_sides(SimpleGraph(6, cycle_edges(6))));
}

TEST_CASE("product decomposition") {
  auto square = product_decompose_01(fixtures::cube(2).lattice_vertices());
  REQUIRE(square.factors.size() == 2);
  CHECK(square.factors[0].coordinates == std::vector<std::size_t>{0});
  CHECK(square.factors[1].vertices == std::vector<LatticePoint>{{0}, {1}});

  auto xor_set = product_decompose_01({{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
  REQUIRE(xor_set.factors.size() == 1);
  CHECK(xor_set.factors[0].coordinates == std::vector<std::size_t>{0, 1, 2});

  // edge polytope of K_{2,3} in its original coordinates
  auto k23 = edge_polytope(complete_bipartite(2, 3));
  auto split = product_decompose_01(k23.original.lattice_vertices());
  REQUIRE(split.factors.size() == 2);
  CHECK(split.factors[0].coordinates == std::vector<std::size_t>{0, 1});
  CHECK(sorted(split.factors[0].vertices) == sorted(simplex_vertices(2)));
  CHECK(split.factors[1].coordinates == std::vector<std::size_t>{2, 3, 4});
  CHECK(sorted(split.factors[1].vertices) == sorted(simplex_vertices(3)));

  auto constant = product_decompose_01({{1, 0, 0}, {1, 1, 1}});
  REQUIRE(constant.factors.size() == 2);
  CHECK(constant.factors[0].trivial());
  CHECK(constant.factors[1].coordinates == std::vector<std::size_t>{1, 2});

  CHECK_THROWS_WITH(product_decompose_01({{0, 2}}), "not a (0,1)-polytope");
}

TEST_CASE("product decomposition invariants") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t d = 2 + trial % 4;
    std::uniform_int_distribution<std::uint32_t> bits(1, (1u << (1u << d)) - 1);
    std::vector<LatticePoint> points;
    std::uint32_t mask = bits(rng);
    for (std::size_t v = 0; v < (std::size_t{1} << d); ++v)
      if (mask >> v & 1) {
        LatticePoint p(d);
        for (std::size_t i = 0; i < d; ++i) p[i] = v >> i & 1;
        points.push_back(p);
      }
    if (trial % 3 == 0) points = product_points(points, simplex_vertices(2));
    auto dec = product_decompose_01(points);
    CHECK(reassemble(dec) == sorted(points));
    std::vector<std::size_t> covered;
    for (const auto& f : dec.factors) {
      covered.insert(covered.end(), f.coordinates.begin(), f.coordinates.end());
      if (f.coordinates.size() > 1) CHECK_FALSE(factor_splits(points, f.coordinates));
    }
    std::sort(covered.begin(), covered.end());
    CHECK(covered.size() == points[0].size());
    CHECK(std::adjacent_find(covered.begin(), covered.end()) == covered.end());
  }
}

TEST_CASE("(0,1) verdicts") {
  auto cube = ng_01_check(fixtures::cube(3).lattice_vertices());
  CHECK(cube.formula);
  CHECK(cube.factors.size() == 3);
  REQUIRE(cube.engine);
  CHECK(cube.engine->status == NGStatus::gorenstein);

  auto d1d2 = ng_01_check(product_points(simplex_vertices(2), simplex_vertices(3)));
  CHECK(d1d2.formula);
  REQUIRE(d1d2.factors.size() == 2);
  CHECK(d1d2.factors[0].gorenstein.codegree == 2);
  CHECK(d1d2.factors[1].gorenstein.codegree == 3);
  CHECK(d1d2.agree());

  auto d1d3 = ng_01_check(product_points(simplex_vertices(2), simplex_vertices(4)));
  CHECK_FALSE(d1d3.formula);
  CHECK(d1d3.agree());

  // two triangles joined only through a third vertex violate the odd cycle
  // condition, so their edge polytope is not IDP
  EdgeList two = cycle_edges(3);
  auto second = cycle_edges(3, 3);
  two.insert(two.end(), second.begin(), second.end());
  two.push_back({0, 6});
  two.push_back({3, 6});
  auto bad = edge_polytope(SimpleGraph(7, two));
  CHECK_THROWS_WITH(ng_01_check(bad.original.lattice_vertices()), doctest::Contains("not IDP"));
}

TEST_CASE("levelness") {
  auto cube = is_level(fixtures::cube(3));
  CHECK(cube.status == LevelStatus::level);
  CHECK(cube.codegree == 2);
  CHECK(cube.generator_counts.front() == std::pair<long, std::size_t>{2, 1});

  auto d1d2 = project_to_full_dimension(product_points(simplex_vertices(2), simplex_vertices(3)));
  auto level = is_level(d1d2.projected);
  CHECK(level.status == LevelStatus::level);
  CHECK(level.codegree == 3);

  auto stop = is_level(fixtures::stop_sign());
  CHECK(stop.status == LevelStatus::level);
  CHECK(stop.codegree == 1);
  CHECK(stop.generator_counts.front().second == int_slice(fixtures::stop_sign(), 1).size());

  auto bounded = is_level(fixtures::cube(3), 2);
  CHECK(bounded.status == LevelStatus::unknown);
}

TEST_CASE("order polytopes") {
  auto antichain = order_polytope(Poset(2, {}));
  CHECK(polytope_equal(antichain, fixtures::cube(2)));
  CHECK(hibi_ng_formula(Poset(2, {})).nearly_gorenstein);

  Poset chain2_point(3, {{0, 1}});
  auto f = hibi_ng_formula(chain2_point);
  CHECK(f.nearly_gorenstein);
  CHECK(f.invariants == std::vector<std::optional<long>>{1, 0});
  CHECK(ng_01_check(order_polytope(chain2_point).lattice_vertices()).agree());
  CHECK(ng_01_check(order_polytope(chain2_point).lattice_vertices()).formula);

  Poset chain3_point(4, {{0, 1}, {1, 2}});
  CHECK_FALSE(hibi_ng_formula(chain3_point).nearly_gorenstein);
  auto v = ng_01_check(order_polytope(chain3_point).lattice_vertices());
  CHECK_FALSE(v.formula);
  REQUIRE(v.engine);
  CHECK_FALSE(v.engine->is_ng());

  // a "V" (two elements above one) is pure; adding a longer chain on one side is not
  CHECK(hibi_ng_formula(Poset(3, {{0, 1}, {0, 2}})).invariants == std::vector<std::optional<long>>{1});
  CHECK_FALSE(hibi_ng_formula(Poset(4, {{0, 1}, {0, 2}, {2, 3}})).invariants[0]);
  CHECK(Poset(3, {{0, 1}, {1, 2}, {0, 2}}).covers().size() == 2);
  CHECK_THROWS_WITH(Poset(2, {{0, 1}, {1, 0}}), doctest::Contains("cycle"));
}

TEST_CASE("order and stable set formulas agree with the engine") {
  std::mt19937_64 rng(31);
  std::bernoulli_distribution coin(0.3);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 2 + trial % 4;
    EdgeList relations;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (coin(rng)) relations.push_back({a, b});
    Poset poset(n, relations);
    auto formula = hibi_ng_formula(poset);
    ZeroOneOptions options;
    options.assume_idp = true;  // order polytopes are compressed
    auto check = ng_01_check(order_polytope(poset).lattice_vertices(), options);
    CHECK(check.formula == formula.nearly_gorenstein);
    CHECK(check.agree());
  }
}

TEST_CASE("stable set polytopes") {
  auto k3 = stable_set_polytope(SimpleGraph(3, complete_edges(3)));
  CHECK(polytope_equal(k3, fixtures::simplex(3)));
  CHECK(stab_ng_formula(SimpleGraph(3, complete_edges(3))).nearly_gorenstein);

  auto k3k2_edges = complete_edges(3);
  k3k2_edges.push_back({3, 4});
  SimpleGraph k3k2(5, k3k2_edges);
  auto f = stab_ng_formula(k3k2);
  CHECK(f.nearly_gorenstein);
  CHECK(f.invariants == std::vector<std::optional<long>>{3, 2});
  auto v = ng_01_check(stable_set_polytope(k3k2).lattice_vertices());
  CHECK(v.formula);
  CHECK(v.agree());

  auto k4k2_edges = complete_edges(4);
  k4k2_edges.push_back({4, 5});
  SimpleGraph k4k2(6, k4k2_edges);
  CHECK_FALSE(stab_ng_formula(k4k2).nearly_gorenstein);
  ZeroOneOptions options;
  options.assume_idp = true;  // perfect graph
  auto w = ng_01_check(stable_set_polytope(k4k2).lattice_vertices(), options);
  CHECK_FALSE(w.formula);
  CHECK(w.agree());

  // a path on three vertices has maximal cliques of size 2 only
  CHECK(stab_ng_formula(SimpleGraph(3, {{0, 1}, {1, 2}})).invariants[0] == 2);
  // a triangle with a pendant edge mixes clique sizes 3 and 2
  CHECK_FALSE(stab_ng_formula(SimpleGraph(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}})).invariants[0]);
}

TEST_CASE("spanning trees") {
  CHECK(spanning_trees(Multigraph(3, cycle_edges(3))).size() == 3);
  CHECK(spanning_trees(Multigraph(2, {{0, 1}, {0, 1}})).size() == 2);
  CHECK(spanning_trees(Multigraph(4, complete_edges(4))).size() == 16);
  CHECK(spanning_trees(Multigraph(1, {})) == std::vector<std::vector<std::size_t>>{{}});
  CHECK_THROWS_WITH(spanning_trees(Multigraph(4, complete_edges(4)), 10), "more than 10 spanning trees");
  CHECK_THROWS_WITH(spanning_trees(Multigraph(3, {{0, 1}})), doctest::Contains("disconnected"));

  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::size_t> pick(0, 5);
  for (int trial = 0; trial < 60; ++trial) {
    EdgeList edges;
    for (std::size_t v = 1; v < 6; ++v) edges.push_back({v, pick(rng) % v});  // spanning tree
    for (int extra = 0; extra < trial % 6; ++extra) {
      std::size_t u = pick(rng), v = pick(rng);
      if (u != v) edges.push_back({u, v});
    }
    Multigraph g(6, edges);
    auto trees = spanning_trees(g);
    CHECK(static_cast<long>(trees.size()) == kirchhoff(g));
    CHECK(std::is_sorted(trees.begin(), trees.end()));
  }
}

TEST_CASE("matroid validation") {
  CHECK_NOTHROW(validate_matroid({3, {{0}, {1}, {2}}}));
  CHECK_THROWS_WITH(validate_matroid({4, {{0, 1}, {2, 3}}}),
                    "basis exchange fails for {0,1} and {2,3} at element 0");
  CHECK_THROWS_WITH(validate_matroid({2, {{1, 0}}}), doctest::Contains("not strictly sorted"));
  CHECK_THROWS_WITH(validate_matroid({2, {}}), doctest::Contains("at least one basis"));
}

TEST_CASE("base polytopes") {
  auto c3 = base_polytope(Multigraph(3, cycle_edges(3)));
  CHECK(c3.dim() == 2);
  CHECK(c3.original.lattice_vertices().size() == 3);

  auto k4 = base_polytope(Multigraph(4, complete_edges(4)));
  CHECK(k4.original.lattice_vertices().size() == 16);
  CHECK(k4.original.ambient_dim() == 6);
  CHECK(k4.dim() == 5);

  auto u12 = base_polytope(MatroidBases{2, {{0}, {1}}});
  CHECK(u12.dim() == 1);
  CHECK(lattice_points(u12.projected).size() == 2);

  CHECK(base_polytope_axiom_check(k4.original));
  CHECK_FALSE(base_polytope_axiom_check(fixtures::cube(2)));
  CHECK(base_polytope_axiom_check(hull(simplex_vertices(3))));

  // White's lemma and the axioms on random graphs
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<std::size_t> pick(0, 4);
  for (int trial = 0; trial < 15; ++trial) {
    EdgeList edges;
    for (std::size_t v = 1; v < 5; ++v) edges.push_back({v, pick(rng) % v});
    for (int extra = 0; extra < 1 + trial % 3; ++extra) {
      std::size_t u = pick(rng), v = pick(rng);
      if (u != v) edges.push_back({u, v});
    }
    auto b = base_polytope(Multigraph(5, edges));
    CHECK(base_polytope_axiom_check(b.original));
    if (b.dim() > 0) CHECK(is_idp(b.projected).holds);
  }
}

TEST_CASE("blocks") {
  EdgeList bowtie = cycle_edges(3);
  bowtie.push_back({2, 3});
  bowtie.push_back({3, 4});
  bowtie.push_back({4, 2});
  auto b = blocks(Multigraph(5, bowtie));
  REQUIRE(b.size() == 2);
  CHECK(b[0].vertices == std::vector<std::size_t>{0, 1, 2});
  CHECK(b[1].edge_ids == std::vector<std::size_t>{3, 4, 5});

  CHECK(blocks(Multigraph(4, complete_edges(4))).size() == 1);
  CHECK(blocks(Multigraph(4, {{0, 1}, {1, 2}, {2, 3}})).size() == 3);
  CHECK(blocks(Multigraph(2, {{0, 1}, {0, 1}})).size() == 1);

  // the base polytope is the product of the block base polytopes
  for (std::size_t c = 3; c <= 4; ++c) {
    auto g = k4_wedge_cycle(c);
    auto whole = sorted(base_polytope(g).original.lattice_vertices());
    std::vector<LatticePoint> combined{LatticePoint(g.edges().size(), 0)};
    for (const auto& block : blocks(g)) {
      std::vector<LatticePoint> next;
      for (const auto& v : base_polytope(block.graph).original.lattice_vertices())
        for (const auto& p : combined) {
          LatticePoint q = p;
          for (std::size_t i = 0; i < v.size(); ++i) q[block.edge_ids[i]] = v[i];
          next.push_back(q);
        }
      combined = next;
    }
    CHECK(sorted(combined) == whole);
  }
}

TEST_CASE("graphic matroid verdicts") {
  auto k4 = ng_graphic_matroid(Multigraph(4, complete_edges(4)));
  REQUIRE(k4.blocks.size() == 1);
  CHECK(k4.blocks[0].gorenstein.holds);
  CHECK(k4.blocks[0].gorenstein.codegree == 2);
  CHECK(k4.agree());

  for (std::size_t a = 3; a <= 5; ++a) {
    auto cycle = base_polytope(Multigraph(a, cycle_edges(a)));
    auto g = is_gorenstein(cycle.projected);
    CHECK(g.holds);
    CHECK(g.codegree == static_cast<long>(a));
  }

  auto with_c3 = ng_graphic_matroid(k4_wedge_cycle(3));
  CHECK(with_c3.formula);
  CHECK(with_c3.agree());
  REQUIRE(with_c3.zero_one.engine);
  CHECK(with_c3.zero_one.engine->is_ng());

  auto with_c4 = ng_graphic_matroid(k4_wedge_cycle(4));
  CHECK_FALSE(with_c4.formula);
  CHECK(with_c4.agree());
  REQUIRE(with_c4.zero_one.engine);
  CHECK_FALSE(with_c4.zero_one.engine->is_ng());

  // bridges are point factors and do not enter the codegree comparison
  EdgeList pendant = complete_edges(4);
  pendant.push_back({3, 4});
  CHECK(ng_graphic_matroid(Multigraph(5, pendant)).formula);
  CHECK_THROWS_WITH(ng_graphic_matroid(Multigraph(3, {{0, 1}, {1, 2}})), doctest::Contains("forest"));
}

TEST_CASE("edge polytope formula matches the engine on small graphs") {
  std::size_t checked = 0;
  for (std::size_t n = 3; n <= 6; ++n)
    for (const auto& edges : catalog::connected_graphs(n)) {
      SimpleGraph g(n, edges);
      if (!odd_cycle_condition(g).holds) continue;
      auto v = ng_edge_polytope(g);
      CHECK(v.agree());
      ++checked;
    }
  CHECK(checked > 100);
  CHECK(catalog::connected_graphs(4).size() == 6);
  CHECK(catalog::connected_graphs(5).size() == 21);
  CHECK(catalog::connected_graphs(6).size() == 112);
}

TEST_CASE("(0,1) differential test and levelness") {
  auto corpus = random_idp_01_polytopes(2024, 60, 4);
  for (const auto& vertices : corpus) {
    ZeroOneOptions options;
    options.assume_idp = true;  // filtered by the catalog
    auto v = ng_01_check(vertices, options);
    REQUIRE(v.engine);
    CHECK(v.agree());
    if (v.formula) {
      auto level = is_level(project_to_full_dimension(vertices).projected);
      CHECK(level.status == LevelStatus::level);
    }
  }
}
