#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "kac/kacsum.hpp"

using namespace kac;

namespace {

IntPoly P(const std::vector<long>& asc) {
  IntPoly p;
  for (size_t i = 0; i < asc.size(); ++i)
    p += IntPoly::monomial(asc[i], static_cast<int>(i));
  return p;
}

PermTuple T(const std::string& text) { return parse_perm_tuple(text); }

MultiPartition MP(int r, std::vector<std::vector<int>> legs) {
  std::vector<Partition> ps;
  for (auto& leg : legs) ps.emplace_back(std::move(leg));
  return make_multipartition(r, std::move(ps));
}

std::map<std::string, IntPoly> cell_map(const std::vector<CellReport>& cells,
                                        int min_inv) {
  std::map<std::string, IntPoly> m;
  for (const CellReport& c : cells)
    if (c.inversion_count >= min_inv) m[perm_tuple_str(c.tuple)] = c.rw;
  return m;
}

}  // namespace

TEST_CASE("cell polynomials") {
  CHECK(rw_polynomial(T("34512")) == P({7, 4, 1}));
  CHECK(rw_polynomial(T("312|312")) == P({1, 2, 1}));
  CHECK(rw_polynomial(T("123|312")) == P({1}));
  CHECK(rw_polynomial(T("3421")) == P({4, 3, 1}));
  CHECK(rw_polynomial(T("34125")) == IntPoly());
  CHECK(rw_polynomial(T("1234")) == IntPoly());
  CHECK(rw_polynomial(T("1")) == P({1}));
}

TEST_CASE("cell polynomial agrees with the subset-expansion sum") {
  std::mt19937 rng(31);
  for (int t = 0; t < 60; ++t) {
    int r = 2 + static_cast<int>(rng() % 3);
    std::vector<Permutation> perms;
    for (int c = 0; c < 1 + static_cast<int>(rng() % 2); ++c) {
      std::vector<int> img(static_cast<size_t>(r));
      std::iota(img.begin(), img.end(), 1);
      std::shuffle(img.begin(), img.end(), rng);
      perms.emplace_back(std::move(img));
    }
    PermTuple wt = make_perm_tuple(perms);
    CHECK(rw_polynomial(wt) ==
          external_activity_subgraph_sum(inversion_graph(wt)));
  }
}

TEST_CASE("kac polynomials of the worked examples") {
  CHECK(kac_polynomial(MP(5, {{2}})).kac == P({11, 5, 1}));
  CHECK(kac_polynomial(MP(4, {{1, 1}})).kac == P({11, 5, 1}));
  CHECK(kac_polynomial(MP(3, {{1}, {1}})).kac == P({7, 4, 1}));
  CHECK(kac_polynomial(MP(4, {{1, 1, 1}})).kac == P({33, 20, 6, 1}));
  CHECK(kac_polynomial(MP(3, {{2}})).kac == P({1}));
  CHECK(kac_polynomial(MP(1, {{1}})).kac == P({1}));
}

TEST_CASE("grassmannian cell report") {
  KacOptions all;
  all.all_cells = true;
  KacReport rep = kac_polynomial(MP(5, {{2}}), all);
  CHECK(rep.kac == P({11, 5, 1}));
  CHECK(!rep.warning_outside_M);
  CHECK(rep.cells.size() == 10);

  std::map<std::string, IntPoly> heavy = cell_map(rep.cells, 4);
  CHECK(heavy.size() == 4);
  CHECK(heavy.at("31452") == P({1}));
  CHECK(heavy.at("34125") == IntPoly());
  CHECK(heavy.at("34152") == P({3, 1}));
  CHECK(heavy.at("34512") == P({7, 4, 1}));
  for (const CellReport& c : rep.cells)
    CHECK(c.connected == !(c.rw == IntPoly()));

  KacReport def = kac_polynomial(MP(5, {{2}}));
  CHECK(def.cells.size() == 3);
  for (const CellReport& c : def.cells) {
    CHECK(c.connected);
    CHECK(c.inversion_count >= 4);
  }
}

TEST_CASE("two-step flag cell report") {
  KacOptions all;
  all.all_cells = true;
  KacReport rep = kac_polynomial(MP(4, {{1, 1}}), all);
  CHECK(rep.kac == P({11, 5, 1}));
  CHECK(rep.cells.size() == 12);

  std::map<std::string, IntPoly> heavy = cell_map(rep.cells, 3);
  CHECK(heavy.size() == 6);
  CHECK(heavy.at("3142") == P({1}));
  CHECK(heavy.at("3214") == IntPoly());
  CHECK(heavy.at("3412") == P({3, 1}));
  CHECK(heavy.at("2341") == P({1}));
  CHECK(heavy.at("3241") == P({2, 1}));
  CHECK(heavy.at("3421") == P({4, 3, 1}));
}

TEST_CASE("projective plane pair cell report") {
  KacReport rep = kac_polynomial(MP(3, {{1}, {1}}));
  CHECK(rep.kac == P({7, 4, 1}));
  CHECK(rep.cells.size() == 5);

  std::set<std::string> labels;
  std::multiset<std::string> values;
  for (const CellReport& c : rep.cells) {
    labels.insert(perm_tuple_str(c.tuple));
    values.insert(c.rw.str());
    CHECK(c.tuple.perms.size() == 2);
  }
  CHECK(labels == std::set<std::string>{"123|231", "213|231", "231|123",
                                        "231|213", "231|231"});
  CHECK(values == std::multiset<std::string>{"1", "1", "q+2", "q+2",
                                             "q^2+2q+1"});
}

TEST_CASE("full flag table") {
  KacReport rep = kac_polynomial(MP(4, {{1, 1, 1}}));
  CHECK(rep.kac == P({33, 20, 6, 1}));
  CHECK(rep.cells.size() == 13);

  std::map<std::string, IntPoly> m = cell_map(rep.cells, 0);
  CHECK(m.at("4321") == P({6, 6, 3, 1}));
  CHECK(m.at("4312") == P({4, 3, 1}));
  CHECK(m.at("4231") == P({4, 3, 1}));
  CHECK(m.at("4213") == P({2, 1}));
  CHECK(m.at("4132") == P({2, 1}));
  CHECK(m.at("4123") == P({1}));
  CHECK(m.at("3421") == P({4, 3, 1}));
  CHECK(m.at("3412") == P({3, 1}));
  CHECK(m.at("3241") == P({2, 1}));
  CHECK(m.at("3142") == P({1}));
  CHECK(m.at("2431") == P({2, 1}));
  CHECK(m.at("2413") == P({1}));
  CHECK(m.at("2341") == P({1}));
}

TEST_CASE("all-ones shortcut") {
  ColoredMultigraph k32 = make_graph(
      5, {{1, 4}, {1, 5}, {2, 4}, {2, 5}, {3, 4}, {3, 5}});
  CHECK(kac_all_ones(k32) == P({7, 4, 1}));
  CHECK(kac_all_ones(make_graph(2, {{1, 2}})) == P({1}));
  CHECK(kac_all_ones(make_graph(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}})) ==
        P({3, 1}));
  CHECK_THROWS_AS(kac_all_ones(make_graph(3, {{1, 2}})), Disconnected);
  CHECK_THROWS_AS(kac_all_ones(make_graph(2, {{1, 1}, {1, 2}})), InvalidInput);

  for (int r = 1; r <= 5; ++r) {
    for (int k = 1; k <= 3; ++k) {
      MultiPartition mu = MP(r, std::vector<std::vector<int>>(
                                    static_cast<size_t>(k), {1}));
      auto [qv, v] = build_supernova(mu);
      CHECK(kac_all_ones(underlying_graph(qv)) == kac_polynomial(mu).kac);
    }
  }
}

TEST_CASE("thread counts do not change the report") {
  for (auto mu : {MP(4, {{1, 1, 1}}), MP(3, {{1}, {1}}), MP(5, {{2, 1}})}) {
    KacReport one = kac_polynomial(mu, KacOptions{.threads = 1});
    KacReport four = kac_polynomial(mu, KacOptions{.threads = 4});
    CHECK(one.kac == four.kac);
    CHECK(one.cells == four.cells);
    KacOptions all1{.threads = 1, .all_cells = true};
    KacOptions all8{.threads = 8, .all_cells = true};
    CHECK(kac_polynomial(mu, all1).cells == kac_polynomial(mu, all8).cells);
  }
}

TEST_CASE("fundamental domain warning flag") {
  CHECK(!kac_polynomial(MP(5, {{2}})).warning_outside_M);
  CHECK(!kac_polynomial(MP(4, {{1, 1}})).warning_outside_M);
  CHECK(kac_polynomial(MP(3, {{2}})).warning_outside_M);
  CHECK(kac_polynomial(MP(2, {{1}})).warning_outside_M);
  CHECK(kac_polynomial(MP(4, {{3}})).warning_outside_M);
}

TEST_CASE("input validation and budgets") {
  CHECK_THROWS_AS(kac_polynomial(MP(3, {{3, 1}})), InvalidInput);
  CHECK_THROWS_AS(kac_polynomial(MP(4, {{1, 1, 1}}), KacOptions{.cell_budget = 3}),
                  TooLarge);
  CHECK_THROWS_AS(kac_polynomial(MP(3, {{1}}), KacOptions{.threads = 0}),
                  InvalidInput);
}

TEST_CASE("conjugating the cross-section by the longest element is invisible") {
  for (auto mu : {MP(5, {{2}}), MP(4, {{1, 1}})}) {
    int r = mu.r;
    std::vector<int> parts{r - mu.legs[0].size()};
    parts.insert(parts.end(), mu.legs[0].parts().begin(),
                 mu.legs[0].parts().end());
    std::vector<Permutation> xs = cross_section(Composition(parts));

    std::vector<int> w0img(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) w0img[static_cast<size_t>(i)] = r - i;
    Permutation w0(w0img);

    IntPoly direct, conjugated;
    std::multiset<std::string> direct_vals, conj_vals;
    for (const Permutation& w : xs) {
      std::vector<int> img(static_cast<size_t>(r));
      for (int i = 1; i <= r; ++i)
        img[static_cast<size_t>(i - 1)] = w0.image(w.image(w0.image(i)));
      IntPoly a = rw_polynomial(make_perm_tuple({w}));
      IntPoly b = rw_polynomial(make_perm_tuple({Permutation(img)}));
      direct += a;
      conjugated += b;
      direct_vals.insert(a.str());
      conj_vals.insert(b.str());
    }
    CHECK(direct == conjugated);
    CHECK(direct == kac_polynomial(mu).kac);
    CHECK(direct_vals == conj_vals);
  }
}

TEST_CASE("degree and positivity laws on the worked examples") {
  for (auto mu : {MP(5, {{2}}), MP(4, {{1, 1}}), MP(3, {{1}, {1}}),
                  MP(4, {{1, 1, 1}})}) {
    auto [qv, v] = build_supernova(mu);
    IntPoly a = kac_polynomial(mu).kac;
    CHECK(a.degree() == delta(qv, v) + 1);
    CHECK(a.leading() == 1);
    for (int d = 0; d <= a.degree(); ++d) CHECK(a.coeff(d) >= 0);
  }
}
