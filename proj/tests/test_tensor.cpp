#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <sstream>

#include "hocent/measures.hpp"
#include "hocent/tensor.hpp"
#include "oracles.hpp"

using hocent::enumerate_triangles;
using hocent::Graph;
using hocent::NodeId;
using hocent::tensor_apply;
using hocent::TensorSpec;
using hocent::TensorVariant;
using hocent::TriangleSet;

namespace {

Graph from_edges(const std::string& text) {
  std::istringstream in(text);
  return hocent::load_graph(in, hocent::GraphFormat::EdgeList);
}

const std::string kDiamond = "1 2\n1 3\n2 3\n2 4\n3 4\n";

std::vector<double> random_nonneg(NodeId n, hocent::rng::Engine& eng) {
  std::vector<double> x(n);
  for (double& v : x) v = hocent::rng::canonical(eng);
  return x;
}

constexpr TensorVariant kAllVariants[] = {
    TensorVariant::Binary, TensorVariant::RandomWalk, TensorVariant::Clustering,
    TensorVariant::Closure};

}  // namespace

TEST_CASE("applying to the all-ones vector recovers the static measures") {
  const Graph g = oracle::random_graph(15, 0.35, 5);
  const TriangleSet ts = enumerate_triangles(g);
  const std::vector<double> ones(g.node_count(), 1.0);
  for (const double p : {-5.0, -1.0, 0.0, 1.0, 5.0}) {
    const auto tb = tensor_apply(g, ts, {TensorVariant::Binary}, p, ones);
    for (NodeId i = 0; i < g.node_count(); ++i)
      CHECK(tb[i] == 2.0 * static_cast<double>(ts.per_node_count[i]));
  }
  const auto tc = tensor_apply(g, ts, {TensorVariant::Clustering}, 2.0, ones);
  const auto ws = hocent::ws_clustering(g, ts).values;
  const auto tl = tensor_apply(g, ts, {TensorVariant::Closure}, -3.0, ones);
  const auto lc = hocent::local_closure(g, ts).values;
  for (NodeId i = 0; i < g.node_count(); ++i) {
    CHECK_THAT(tc[i], Catch::Matchers::WithinRel(ws[i], 1e-13) ||
                          Catch::Matchers::WithinAbs(0.0, 1e-300));
    CHECK_THAT(tl[i], Catch::Matchers::WithinRel(lc[i], 1e-13) ||
                          Catch::Matchers::WithinAbs(0.0, 1e-300));
  }
}

TEST_CASE("geometric-mean application matches the dense contraction on the diamond") {
  const Graph g = from_edges(kDiamond);
  const TriangleSet ts = enumerate_triangles(g);
  const std::vector<double> x{1, 4, 9, 16};
  const auto got = tensor_apply(g, ts, {TensorVariant::Binary}, 0.0, x);
  const oracle::DenseTensor dense(g, TensorVariant::Binary);
  const auto want = dense.contract(0.0, x);
  for (NodeId i = 0; i < g.node_count(); ++i)
    CHECK_THAT(got[i], Catch::Matchers::WithinRel(want[i], 1e-12) ||
                           Catch::Matchers::WithinAbs(0.0, 1e-300));
}

TEST_CASE("all variants match the dense contraction on random graphs") {
  hocent::rng::Engine eng(17);
  for (const std::uint64_t seed : {21ull, 22ull}) {
    const Graph g = oracle::random_graph(12, 0.4, seed);
    const TriangleSet ts = enumerate_triangles(g);
    for (const TensorVariant variant : kAllVariants) {
      const oracle::DenseTensor dense(g, variant);
      for (const double p : {-2.0, 0.0, 1.0, 3.0}) {
        const auto x = random_nonneg(g.node_count(), eng);
        const auto got = tensor_apply(g, ts, {variant}, p, x);
        const auto want = dense.contract(p, x);
        for (NodeId i = 0; i < g.node_count(); ++i)
          CHECK_THAT(got[i], Catch::Matchers::WithinRel(want[i], 1e-11) ||
                                 Catch::Matchers::WithinAbs(0.0, 1e-300));
      }
    }
  }
}

TEST_CASE("linearized matrix values") {
  const Graph diamond = from_edges(kDiamond);
  const TriangleSet ts = enumerate_triangles(diamond);
  const auto mb = hocent::linearized_matrix(diamond, ts, {TensorVariant::Binary});
  // entry (2,3) in original labels: two triangles share that edge
  CHECK(mb.value_at(1, 2) == 2.0);
  CHECK(mb.value_at(0, 1) == 1.0);
  CHECK(mb.value_at(0, 3) == 0.0);

  const Graph k3 = from_edges("1 2\n2 3\n3 1\n");
  const TriangleSet ts3 = enumerate_triangles(k3);
  const auto mc = hocent::linearized_matrix(k3, ts3, {TensorVariant::Clustering});
  for (NodeId i = 0; i < 3; ++i) {
    double row_sum = 0.0;
    for (NodeId j = 0; j < 3; ++j) row_sum += mc.value_at(i, j);
    CHECK_THAT(row_sum, Catch::Matchers::WithinRel(1.0, 1e-14));
  }
}

TEST_CASE("linearized matrix equals sum_k T_ijk from the dense tensor") {
  const Graph g = oracle::random_graph(12, 0.4, 23);
  const TriangleSet ts = enumerate_triangles(g);
  for (const TensorVariant variant : kAllVariants) {
    const auto sparse = hocent::linearized_matrix(g, ts, {variant});
    const auto dense = oracle::DenseTensor(g, variant).collapse();
    for (NodeId i = 0; i < g.node_count(); ++i)
      for (NodeId j = 0; j < g.node_count(); ++j)
        CHECK_THAT(sparse.value_at(i, j),
                   Catch::Matchers::WithinRel(dense(i, j), 1e-12) ||
                       Catch::Matchers::WithinAbs(0.0, 1e-300));
  }
}

TEST_CASE("p = 1 application is the linearized matrix-vector product") {
  hocent::rng::Engine eng(29);
  const Graph g = oracle::random_graph(12, 0.4, 31);
  const TriangleSet ts = enumerate_triangles(g);
  for (const TensorVariant variant : kAllVariants) {
    const auto matrix = hocent::linearized_matrix(g, ts, {variant});
    for (int rep = 0; rep < 20; ++rep) {
      const auto x = random_nonneg(g.node_count(), eng);
      const auto got = tensor_apply(g, ts, {variant}, 1.0, x);
      const auto want = matrix.multiply(x);
      for (NodeId i = 0; i < g.node_count(); ++i)
        CHECK_THAT(got[i], Catch::Matchers::WithinRel(want[i], 1e-12) ||
                               Catch::Matchers::WithinAbs(0.0, 1e-300));
    }
  }
}

TEST_CASE("homogeneity and monotonicity") {
  hocent::rng::Engine eng(37);
  const Graph g = oracle::random_graph(14, 0.3, 41);
  const TriangleSet ts = enumerate_triangles(g);
  for (const TensorVariant variant : kAllVariants) {
    for (const double p : {-3.0, 0.0, 1.0, 2.5}) {
      const auto x = random_nonneg(g.node_count(), eng);
      const double theta = 0.5 + 2.0 * hocent::rng::canonical(eng);
      auto scaled = x;
      for (double& v : scaled) v *= theta;
      const auto tx = tensor_apply(g, ts, {variant}, p, x);
      const auto t_scaled = tensor_apply(g, ts, {variant}, p, scaled);
      auto bigger = x;
      for (double& v : bigger) v += hocent::rng::canonical(eng);
      const auto t_bigger = tensor_apply(g, ts, {variant}, p, bigger);
      for (NodeId i = 0; i < g.node_count(); ++i) {
        CHECK_THAT(t_scaled[i], Catch::Matchers::WithinRel(theta * tx[i], 1e-12) ||
                                    Catch::Matchers::WithinAbs(0.0, 1e-300));
        CHECK(t_bigger[i] >= tx[i] * (1 - 1e-14));
      }
    }
  }
}

TEST_CASE("output vanishes exactly on triangle-free nodes") {
  // diamond plus one pendant: node 5 hangs off node 4
  const Graph g = from_edges(kDiamond + "4 5\n");
  const TriangleSet ts = enumerate_triangles(g);
  std::vector<double> x(g.node_count(), 1.0);
  for (const double p : {-1.0, 0.0, 2.0}) {
    const auto out = tensor_apply(g, ts, {TensorVariant::Binary}, p, x);
    for (NodeId i = 0; i < g.node_count(); ++i) {
      if (ts.per_node_count[i] == 0)
        CHECK(out[i] == 0.0);
      else
        CHECK(out[i] > 0.0);
    }
  }
}

TEST_CASE("permutation equivariance") {
  const Graph g = oracle::random_graph(10, 0.4, 53);
  const TriangleSet ts = enumerate_triangles(g);
  // relabel i -> (i * 3 + 1) mod 10 is a permutation of 0..9
  std::vector<hocent::Label> perm(g.node_count());
  for (NodeId i = 0; i < g.node_count(); ++i)
    perm[i] = (3 * static_cast<hocent::Label>(i) + 1) % 10;
  std::vector<std::pair<hocent::Label, hocent::Label>> relabeled;
  for (const auto& [u, v] : g.edges()) relabeled.emplace_back(perm[u], perm[v]);
  const Graph h = Graph::build(relabeled);
  const TriangleSet hts = enumerate_triangles(h);

  hocent::rng::Engine eng(59);
  const auto x = random_nonneg(g.node_count(), eng);
  std::vector<double> hx(g.node_count());
  for (NodeId i = 0; i < g.node_count(); ++i) hx[*h.find_label(perm[i])] = x[i];

  for (const TensorVariant variant : kAllVariants) {
    const auto tg = tensor_apply(g, ts, {variant}, 0.0, x);
    const auto th = tensor_apply(h, hts, {variant}, 0.0, hx);
    for (NodeId i = 0; i < g.node_count(); ++i)
      CHECK_THAT(th[*h.find_label(perm[i])],
                 Catch::Matchers::WithinRel(tg[i], 1e-13) ||
                     Catch::Matchers::WithinAbs(0.0, 1e-300));
  }
}

TEST_CASE("tensor_apply input validation") {
  const Graph g = from_edges(kDiamond);
  const TriangleSet ts = enumerate_triangles(g);
  CHECK_THROWS_AS(tensor_apply(g, ts, {}, 1.0, std::vector<double>{1, 2}), hocent::Error);
  CHECK_THROWS_AS(tensor_apply(g, ts, {}, 1.0, std::vector<double>{1, 2, -1, 4}),
                  hocent::Error);
}
