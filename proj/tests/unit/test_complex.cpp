#include "doctest.h"

#include <numeric>
#include <random>

#include "opcoh/errors.hpp"
#include "opcoh/homology.hpp"
#include "opcoh/morse.hpp"
#include "oracles.hpp"

using namespace opcoh;

namespace {

Orientation all_first(const Complex2& c) { return Orientation(c.edge_count(), 1); }

std::vector<std::vector<long long>> to_ll(const IntMatrix& m) {
  std::vector<std::vector<long long>> out(m.rows(), std::vector<long long>(m.cols()));
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) out[i][j] = static_cast<long long>(m(i, j));
  }
  return out;
}

}  // namespace

TEST_CASE("validation") {
  CHECK_NOTHROW(validate(fixtures::pentagon_disk()));
  CHECK_NOTHROW(validate(fixtures::square_disk()));
  CHECK_NOTHROW(validate(fixtures::outgoing_poly()));

  Complex2 bad = fixtures::pentagon_disk();
  bad.cells[0].edges[0] = {2, 1};
  CHECK_THROWS_AS(validate(bad), DanglingReference);

  Complex2 oob = fixtures::cycle(3);
  oob.edges.push_back({0, 7});
  CHECK_THROWS_AS(validate(oob), DanglingReference);

  // Figure eight: two triangles sharing vertex 0, walked as one cell.
  Complex2 eight;
  eight.vertex_count = 5;
  eight.edges = {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}};
  Cell walk;
  walk.vertices = {0, 1, 2, 0, 3, 4};
  walk.edges = {{0, 1}, {1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1}};
  eight.cells.push_back(walk);
  CHECK_THROWS_AS(validate(eight), NonRegular);

  Complex2 loop;
  loop.vertex_count = 1;
  loop.edges = {{0, 0}};
  CHECK_THROWS_AS(validate(loop), NonRegular);

  CHECK_THROWS_AS(cell_from_cycle(fixtures::cycle(5), {0, 2, 4}), DanglingReference);
}

TEST_CASE("outgoing links") {
  Complex2 p = fixtures::pentagon_disk();
  Orientation o = all_first(p);
  o[4] = 0;  // arcs 0-1-2-3-4 and 0-4
  OutgoingLink src = outgoing_link(p, o, 0);
  CHECK(src.edges.size() == 2);
  CHECK(src.links.size() == 1);
  CHECK(src.connected());

  OutgoingLink sink = outgoing_link(p, o, 4);
  CHECK(sink.edges.empty());
  CHECK(sink.connected());
  CHECK(sink.components == 0);

  // Inner vertex of an arc: one outgoing edge, no link edges.
  OutgoingLink mid = outgoing_link(p, o, 2);
  CHECK(mid.edges.size() == 1);
  CHECK(mid.links.empty());
  CHECK(mid.connected());
}

TEST_CASE("Morse certificates on small complexes") {
  Complex2 p = fixtures::pentagon_disk();
  Orientation o = all_first(p);
  o[4] = 0;
  auto r = morse_certificate(p, o);
  REQUIRE(std::holds_alternative<MorseCertificate>(r));
  const auto& cert = std::get<MorseCertificate>(r);
  CHECK(cert.global_sink == 4);
  CHECK(cert.faces[0] == FacePoles{0, 4});
  CHECK(cert.topological_order == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(check_morse_certificate(p, o, cert).ok);

  MorseCertificate bad = cert;
  bad.global_sink = 3;
  CHECK_FALSE(check_morse_certificate(p, o, bad).ok);
  bad = cert;
  std::swap(bad.topological_order[0], bad.topological_order[1]);
  CHECK_FALSE(check_morse_certificate(p, o, bad).ok);
  bad = cert;
  bad.faces[0].sink = 3;
  CHECK_FALSE(check_morse_certificate(p, o, bad).ok);
  bad = cert;
  bad.link_trees[0].clear();
  CHECK_FALSE(check_morse_certificate(p, o, bad).ok);

  // Directed cycle.
  auto cyc = morse_certificate(p, all_first(p));
  REQUIRE(std::holds_alternative<CounterexampleReport>(cyc));
  CHECK(std::get<CounterexampleReport>(cyc).has(MorseFailure::Cycle));

  // Two sinks on a square: 0 -> 1 <- 2 -> 3 <- 0.
  Complex2 sq = fixtures::square_disk();
  Orientation two{1, 0, 1, 0};
  auto ts = morse_certificate(sq, two);
  REQUIRE(std::holds_alternative<CounterexampleReport>(ts));
  const auto& rep = std::get<CounterexampleReport>(ts);
  CHECK(rep.has(MorseFailure::MultipleSinks));
  CHECK(rep.has(MorseFailure::FaceNotBipolar));
  CHECK_FALSE(rep.has(MorseFailure::Cycle));
}

TEST_CASE("Smith normal form") {
  IntMatrix m(2, 2);
  m(0, 0) = 2;
  m(0, 1) = 4;
  m(1, 0) = 6;
  m(1, 1) = 8;
  auto d = smith_invariants(m);
  REQUIRE(d.size() == 2);
  CHECK(d[0] == 2);
  CHECK(d[1] == 4);

  IntMatrix z(3, 2);
  CHECK(smith_invariants(z).empty());

  IntMatrix coprime(2, 2);
  coprime(0, 0) = 2;
  coprime(1, 1) = 3;
  d = smith_invariants(coprime);
  REQUIRE(d.size() == 2);
  CHECK(d[0] == 1);
  CHECK(d[1] == 6);
}

TEST_CASE("Smith normal form is invariant under row and column shuffles") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> val(-4, 4);
  for (int trial = 0; trial < 60; ++trial) {
    const int r = 2 + trial % 5;
    const int c = 2 + (trial / 5) % 5;
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < c; ++j) m(i, j) = (val(rng) % 3 == 0) ? val(rng) : 0;
    }
    std::vector<int> rows(r);
    std::vector<int> cols(c);
    std::iota(rows.begin(), rows.end(), 0);
    std::iota(cols.begin(), cols.end(), 0);
    std::shuffle(rows.begin(), rows.end(), rng);
    std::shuffle(cols.begin(), cols.end(), rng);
    IntMatrix s(r, c);
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < c; ++j) s(i, j) = m(rows[i], cols[j]);
    }
    auto a = smith_invariants(m);
    auto b = smith_invariants(s);
    CHECK(a == b);
    CHECK(static_cast<int>(a.size()) == oracle::rational_rank(to_ll(m)));
    for (std::size_t k = 1; k < a.size(); ++k) CHECK(a[k] % a[k - 1] == 0);
  }
}

TEST_CASE("homology of fixtures") {
  HomologyReport disk = homology(fixtures::pentagon_disk());
  CHECK(disk.betti_zero == 1);
  CHECK(disk.betti_one == 0);
  CHECK(disk.betti_two == 0);
  CHECK(disk.torsion_one.empty());
  CHECK(disk.euler_characteristic == 1);

  HomologyReport circle = homology(fixtures::cycle(5));
  CHECK(circle.betti_zero == 1);
  CHECK(circle.betti_one == 1);
  CHECK(circle.euler_characteristic == 0);

  Complex2 poly = fixtures::outgoing_poly();
  CHECK(poly.vertex_count == 16);
  CHECK(poly.edge_count() == 24);
  CHECK(poly.cell_count() == 9);
  HomologyReport h = homology(poly);
  CHECK(h.betti_zero == 1);
  CHECK(h.betti_one == 0);
  CHECK(h.torsion_one.empty());
  const int r1 = oracle::rational_rank(to_ll(boundary_one(poly)));
  const int r2 = oracle::rational_rank(to_ll(boundary_two(poly)));
  CHECK(h.betti_one == poly.edge_count() - r1 - r2);
  CHECK(h.euler_characteristic == h.betti_zero - h.betti_one + h.betti_two);

  IntMatrix twice(1, 1);
  twice(0, 0) = 2;
  CHECK(smith_invariants(twice) == std::vector<BigInt>{2});
}

TEST_CASE("certify simply connected") {
  Complex2 p = fixtures::pentagon_disk();
  Orientation o = all_first(p);
  o[4] = 0;
  auto v = certify_simply_connected(p, {all_first(p), o});
  CHECK(v.verdict == SimplyConnected::Certified);
  CHECK(v.orientation_index == 1);

  CHECK(certify_simply_connected(fixtures::cycle(5), {}).verdict == SimplyConnected::Refuted);

  auto none = certify_simply_connected(p, {all_first(p)});
  CHECK(none.verdict == SimplyConnected::Inconclusive);
  auto brute = certify_simply_connected(p, {all_first(p)}, true);
  CHECK(brute.verdict == SimplyConnected::Certified);
  CHECK(brute.orientation_index == -1);
}
