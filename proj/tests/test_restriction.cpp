#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "fixtures.hpp"
#include "lrc/restriction.hpp"
#include "oracle.hpp"

using namespace lrc;

namespace {

GroupPtr grp(const std::string& s) { return std::make_shared<const FiniteGroup>(parse_group(s)); }

std::string temp_file(const std::string& body) {
  static int n = 0;
  std::string path = "/tmp/lrc_restriction_test_" + std::to_string(n++) + ".txt";
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST_SUITE("restriction") {
  TEST_CASE("carlitz vertex counts") {
    auto g = grp("Z:5");
    CHECK(restrict_carlitz(g, 1).size() == 20);
    CHECK(restrict_carlitz(g, 2).size() == 60);
    auto D = restrict_carlitz(g, 1);
    CHECK(D.sigma() == 2);
    CHECK(D.warnings.empty());
    CHECK(D.legal({0, 1, 0, 2}));
    CHECK_FALSE(D.legal({0, 1, 1}));
    CHECK(D.legal({3}));
    CHECK_FALSE(restrict_carlitz(grp("Z:2"), 1).warnings.empty());
  }

  TEST_CASE("overlap arcs") {
    auto D = full_debruijn(grp("Z:3"), 2);
    CHECK(D.size() == 9);
    CHECK(D.arc_count() == 27);
    const auto a = std::size_t(D.index_of(D.encode({0, 1}))), b = std::size_t(D.index_of(D.encode({1, 2})));
    CHECK(D.has_arc(a, b));
    CHECK_FALSE(D.has_arc(b, a));
  }

  TEST_CASE("forbidden subwords match oracle legality") {
    auto g = grp("Z:3");
    std::vector<std::vector<Elem>> U{{0, 0}, {1, 2}};
    auto D = restrict_forbidden_subwords(g, 2, U);
    CHECK(D.size() == 7);
    oracle::words(3, 5, [&](const std::vector<Elem>& w) {
      bool bad = false;
      for (std::size_t i = 0; i + 1 < w.size(); ++i)
        for (auto& u : U) bad |= w[i] == u[0] && w[i + 1] == u[1];
      CHECK(D.legal(w) == !bad);
    });
  }

  TEST_CASE("mullen and window sum") {
    auto g = grp("Z:5");
    auto M = restrict_mullen(g, 2);
    // pairs with no part 0 and a+b != 0
    CHECK(M.size() == 12);
    auto W = restrict_window_sum(g, 1);
    CHECK(W.size() == 20);
    CHECK_FALSE(W.legal({2, 3}));
    CHECK(W.legal({2, 2, 2}));
  }

  TEST_CASE("subword pattern uses the group order") {
    auto D = restrict_subword_pattern(grp("Z:5"), "132");
    CHECK(D.size() == 125 - 10);
    CHECK_FALSE(D.legal({0, 4, 2}));
    CHECK(D.legal({0, 2, 4}));
    CHECK_THROWS_AS(restrict_subword_pattern(grp("Z:5"), "142"), SpecError);
  }

  TEST_CASE("noinverse equals window sum with d = 1") {
    auto g = grp("perm:(1854)(2763);(1256)(3478)");
    auto a = parse_restriction(g, "noinverse:");
    auto b = parse_restriction(g, "windowsum:1");
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a.code(i) == b.code(i));
  }

  TEST_CASE("forbid and graph files") {
    auto g = grp("Z:2");
    auto f = temp_file("0,0\n1,1\n");
    auto D = parse_restriction(g, "forbid:@" + f);
    CHECK(D.size() == 2);
    CHECK(D.legal({0, 1, 0, 1}));
    std::remove(f.c_str());

    auto E = parse_restriction(g, "graph:@" + fixture_path("equalfail.graph"));
    CHECK(E.size() == 6);
    CHECK(E.arc_count() == 7);
    CHECK(E.explicit_arcs());
    // 0,0,0,0,1,1 walks 0000 -> 0001 -> 0011
    CHECK(E.legal({0, 0, 0, 0, 1, 1}));
    // 1,1,0,0,0,1 needs 1000 -> 0001, which is not an arc
    CHECK_FALSE(E.legal({1, 1, 0, 0, 0, 1}));
  }

  TEST_CASE("explicit arcs must satisfy the overlap rule") {
    auto g = grp("Z:2");
    auto f = temp_file("vertex 0,0\nvertex 1,1\narc 0,0 1,1\n");
    CHECK_THROWS_AS(parse_restriction(g, "graph:@" + f), SpecError);
    std::remove(f.c_str());
  }

  TEST_CASE("start and finish sets from a graph file") {
    auto g = grp("Z:2");
    auto f = temp_file("vertex 0,1\nvertex 1,0\narc 0,1 1,0\narc 1,0 0,1\nstart 0,1\nfinish 0,1\n");
    auto D = parse_restriction(g, "graph:@" + f);
    std::remove(f.c_str());
    CHECK(D.start()[std::size_t(D.index_of(D.encode({0, 1})))]);
    CHECK_FALSE(D.start()[std::size_t(D.index_of(D.encode({1, 0})))]);
    // must start and finish on 01
    CHECK(oracle::path_legal(D, {0, 1, 0, 1}));
    CHECK_FALSE(oracle::path_legal(D, {0, 1, 0}));
    CHECK_FALSE(oracle::path_legal(D, {1, 0, 1}));
  }

  TEST_CASE("tuple text") {
    auto g = parse_group("perm:(12);(123)");
    auto t = parse_tuple(g, "(12),id,(123)");
    CHECK(t.size() == 3);
    CHECK(tuple_string(g, t) == "(12),id,(123)");
  }

  TEST_CASE("bad restriction specs") {
    auto g = grp("Z:3");
    CHECK_THROWS_AS(parse_restriction(g, "carlitz"), SpecError);
    CHECK_THROWS_AS(parse_restriction(g, "carlitz:0"), SpecError);
    CHECK_THROWS_AS(parse_restriction(g, "bogus:1"), SpecError);
    CHECK_THROWS_AS(parse_restriction(g, "forbid:nofile"), SpecError);
    CHECK_THROWS_AS(parse_restriction(g, "forbid:@/nonexistent/file"), SpecError);
  }

  TEST_CASE("vertex cap") {
    CHECK_THROWS_AS(full_debruijn(grp("Z:10"), 7), CapError);
  }
}
