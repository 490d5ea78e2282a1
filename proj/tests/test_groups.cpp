#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "covkit/group.hpp"
#include "covkit/perm.hpp"
#include "covkit/rational.hpp"

using namespace covkit;

TEST_CASE("permutations: composition, parity, order, printing") {
  Perm a = perm_from_cycles(5, {{0, 1, 2}});
  Perm b = perm_from_cycles(5, {{2, 3, 4}});
  // (a*b)(x) = a(b(x)): b sends 2->3, a fixes 3.
  CHECK(perm_mult(a, b).img[2] == 3);
  CHECK(perm_mult(a, b).img[4] == 0);
  CHECK(perm_is_identity(perm_mult(a, perm_inverse(a))));
  CHECK(cycle_type(a) == std::vector<int>{3, 1, 1});
  CHECK(perm_order(perm_from_cycles(6, {{0, 1}, {2, 3, 4}})) == 6);
  CHECK(perm_is_even(a));
  CHECK_FALSE(perm_is_even(perm_from_cycles(4, {{0, 1}})));
  CHECK(perm_cycles_str(a) == "(1 2 3)");
  CHECK(perm_cycles_str(perm_identity(4)) == "()");
  CHECK(perm_parse_cycles(5, "(1 2 3)") == a);
  CHECK(perm_parse_cycles(6, "(1 2)(3 4 5)").img[4] == 2);
  CHECK(perm_parse_cycles(3, "()") == perm_identity(3));
  CHECK_THROWS_AS(perm_parse_cycles(3, "(1 4)"), UsageError);
  CHECK_THROWS_AS(perm_parse_cycles(3, "(1 1)"), UsageError);
  CHECK_THROWS_AS(perm_parse_cycles(3, "(1 2"), UsageError);
}

TEST_CASE("permutations: conjugator construction and alternating-class split") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 3 + (int)(rng() % 8);
    Perm a = perm_identity(n), w = perm_identity(n);
    std::shuffle(a.img.begin(), a.img.end(), rng);
    std::shuffle(w.img.begin(), w.img.end(), rng);
    Perm b = perm_mult(perm_mult(w, a), perm_inverse(w));
    auto u = conjugating_perm(a, b);
    REQUIRE(u.has_value());
    CHECK(perm_mult(perm_mult(*u, a), perm_inverse(*u)) == b);
  }
  CHECK(class_splits_in_alt({5}));
  CHECK(class_splits_in_alt({7, 3, 1}));
  CHECK_FALSE(class_splits_in_alt({5, 1, 1}));
  CHECK_FALSE(class_splits_in_alt({4, 3}));
  // In degree 5 the two halves of the 5-cycles: a 5-cycle is never conjugate
  // to its square by an even permutation.
  Perm five = perm_parse_cycles(5, "(1 2 3 4 5)");
  Perm fivesq = perm_mult(five, five);
  CHECK_FALSE(same_alt_class(five, fivesq));
  CHECK(same_alt_class(five, perm_mult(perm_mult(five, five), perm_mult(five, five))));
  // 5-cycles in degree 7 do not split (repeated fixed points).
  Perm f7 = perm_parse_cycles(7, "(1 2 3 4 5)");
  Perm f7sq = perm_mult(f7, f7);
  CHECK(same_alt_class(f7, f7sq));
}

TEST_CASE("descriptors: parsing, naming, and rejection") {
  CHECK(parse_descriptor("sl2:q=7").q == 7);
  CHECK(parse_descriptor("psu3:q=3").kind == "psu3");
  CHECK(parse_descriptor("alt:n=9").n == 9);
  CHECK(parse_descriptor("sym:n=8").name() == "sym:n=8");
  CHECK(parse_descriptor("gl2:q=9").name() == "gl2:q=9");
  CHECK_THROWS_AS(parse_descriptor("so5:q=3"), UsageError);
  CHECK_THROWS_AS(parse_descriptor("sl2"), UsageError);
  CHECK_THROWS_AS(parse_descriptor("sl2:q=6"), UsageError);
  CHECK_THROWS_AS(parse_descriptor("sl2:q=1"), UsageError);
  CHECK_THROWS_AS(parse_descriptor("sl2:n=5"), UsageError);
  CHECK_THROWS_AS(parse_descriptor("alt:n=0"), UsageError);
  CHECK_THROWS_AS(parse_descriptor("alt:n=17"), UsageError);
  CHECK_THROWS_AS(parse_descriptor("alt:q=5"), UsageError);
  CHECK_THROWS_AS(parse_descriptor("sym:n=x"), UsageError);
}

TEST_CASE("group orders match the classical formulas") {
  CHECK(Group::build("sl2:q=4").order() == 60);
  CHECK(Group::build("psl2:q=5").order() == 60);
  CHECK(Group::build("psl2:q=4").order() == 60);
  CHECK(Group::build("gl2:q=4").order() == 3600 / 20);  // (16-1)(16-4)
  CHECK(Group::build("pgl2:q=5").order() == 120);
  CHECK(Group::build("sl3:q=2").order() == 168);
  CHECK(Group::build("psl3:q=3").order() == 5616);
  CHECK(Group::build("su3:q=2").order() == 216);
  CHECK(Group::build("psu3:q=2").order() == 72);
  CHECK(Group::build("psu3:q=3").order() == 6048);
  CHECK(Group::build("alt:n=5").order() == 60);
  CHECK(Group::build("alt:n=2").order() == 1);
  CHECK(Group::build("sym:n=6").order() == 720);
  CHECK(Group::build("sym:n=1").order() == 1);
}

TEST_CASE("budget control") {
  CHECK_THROWS_AS(Group::build("sym:n=13"), MathError);
  CHECK_THROWS_AS(Group::build("sl2:q=256"), MathError);
  CHECK(Group::build("sym:n=8", 40320).order() == 40320);
  CHECK_THROWS_AS(Group::build("sym:n=8", 40319), MathError);
  CHECK_THROWS_AS(Group::build("ingested"), UsageError);
}

TEST_CASE("conjugacy classes: pinned small groups") {
  auto sizes = [](const Group& G) {
    std::vector<long> s;
    for (const auto& c : G.classes()) s.push_back(c.size);
    return s;
  };
  auto orders = [](const Group& G) {
    std::vector<long> s;
    for (const auto& c : G.classes()) s.push_back(c.element_order);
    return s;
  };

  Group psl25 = Group::build("psl2:q=5");
  CHECK(sizes(psl25) == std::vector<long>{1, 15, 20, 12, 12});
  CHECK(orders(psl25) == std::vector<long>{1, 2, 3, 5, 5});

  Group alt5 = Group::build("alt:n=5");
  CHECK(sizes(alt5) == std::vector<long>{1, 15, 20, 12, 12});

  Group psl27 = Group::build("psl2:q=7");
  CHECK(orders(psl27) == std::vector<long>{1, 2, 3, 4, 7, 7});
  CHECK(psl27.classes().size() == 6);

  // One central-quotient pair where the covering group distinguishes more:
  // order-10 elements exist in the double cover but not downstairs.
  Group sl25 = Group::build("sl2:q=5");
  CHECK(sl25.classes().size() == 9);
  long n5 = 0, n10 = 0;
  for (const auto& c : sl25.classes()) {
    if (c.element_order == 5) ++n5;
    if (c.element_order == 10) ++n10;
  }
  CHECK(n5 == 2);
  CHECK(n10 == 2);

  // Same order, different groups: degree-3 over F4 vs alternating of degree 8.
  Group l34 = Group::build("psl3:q=4");
  Group a8 = Group::build("alt:n=8");
  CHECK(l34.order() == 20160);
  CHECK(a8.order() == 20160);
  CHECK(l34.classes().size() == 10);
  CHECK(a8.classes().size() == 14);

  CHECK(Group::build("psl3:q=3").classes().size() == 12);
  CHECK(Group::build("psu3:q=3").classes().size() == 14);

  // The two degree-3 realizations of the order-168 group agree numerically.
  Group sl32 = Group::build("sl3:q=2");
  auto s1 = sizes(sl32), s2 = sizes(psl27);
  std::sort(s1.begin(), s1.end());
  std::sort(s2.begin(), s2.end());
  CHECK(s1 == s2);
  CHECK(orders(sl32) == orders(psl27));
}

TEST_CASE("centralizers: direct counts") {
  Group alt5 = Group::build("alt:n=5");
  CHECK(alt5.centralizer_order(alt5.identity()) == 60);
  // A 5-cycle sits in a class of size 12, so its centralizer has order 5.
  for (const auto& c : alt5.classes())
    if (c.element_order == 5) CHECK(alt5.centralizer_order(c.rep) == 5);

  Group sl24 = Group::build("sl2:q=4");
  for (const auto& c : sl24.classes())
    if (c.element_order == 5) CHECK(sl24.centralizer_order(c.rep) == 5);
}

TEST_CASE("class structure invariants across a panel of groups") {
  for (const char* name :
       {"sl2:q=4", "sl2:q=5", "sl2:q=9", "psl2:q=7", "psl2:q=8", "pgl2:q=5", "pgl2:q=7",
        "gl2:q=3", "sl3:q=2", "psl3:q=3", "su3:q=2", "psu3:q=2", "psu3:q=3", "alt:n=5",
        "alt:n=6", "alt:n=7", "sym:n=3", "sym:n=5", "sym:n=6"}) {
    CAPTURE(name);
    Group G = Group::build(name);
    const auto& cls = G.classes();

    long total = 0;
    for (const auto& c : cls) total += c.size;
    CHECK(total == G.order());

    // Identity class first after the canonical sort.
    CHECK(cls[0].element_order == 1);
    CHECK(cls[0].size == 1);
    CHECK(cls[0].rep == G.identity());

    for (const auto& c : cls) {
      CHECK(c.size * G.centralizer_order(c.rep) == G.order());
      CHECK(G.element_order(c.rep) == c.element_order);
      CHECK(G.class_of(c.rep) == c.index);
      // The representative is the least element index in its class.
      CHECK(G.class_elements(c.index).front() == c.rep);
    }

    // Inversion permutes classes and preserves size and element order.
    std::set<int> hit;
    for (const auto& c : cls) {
      int ci = G.class_of(G.inv(c.rep));
      hit.insert(ci);
      CHECK(cls[(std::size_t)ci].size == c.size);
      CHECK(cls[(std::size_t)ci].element_order == c.element_order);
    }
    CHECK(hit.size() == cls.size());

    // Every class is closed under conjugation by the verified generators.
    for (const auto& c : cls) {
      for (int g : G.generators()) {
        int y = G.mult(G.mult(g, c.rep), G.inv(g));
        CHECK(G.class_of(y) == c.index);
      }
    }
  }
}

TEST_CASE("group arithmetic: inverses, associativity samples, identity") {
  std::mt19937 rng(11);
  for (const char* name : {"psl2:q=9", "psu3:q=2", "sl3:q=2", "sym:n=5", "pgl2:q=4"}) {
    CAPTURE(name);
    Group G = Group::build(name);
    int n = (int)G.order();
    for (int t = 0; t < 200; ++t) {
      int a = (int)(rng() % (unsigned)n), b = (int)(rng() % (unsigned)n),
          c = (int)(rng() % (unsigned)n);
      CHECK(G.mult(a, G.inv(a)) == G.identity());
      CHECK(G.mult(G.identity(), a) == a);
      CHECK(G.mult(G.mult(a, b), c) == G.mult(a, G.mult(b, c)));
    }
  }
}

TEST_CASE("class counts follow the rank-1 dichotomy") {
  for (long q : {4, 5, 7, 8, 9, 11, 13}) {
    Group G = Group::build("psl2:q=" + std::to_string(q));
    long expected = q % 2 == 0 ? q + 1 : (q + 5) / 2;
    CHECK((long)G.classes().size() == expected);
  }
}

TEST_CASE("fusion: diagonal outer action on psl2") {
  Group G = Group::build("psl2:q=7");
  auto orbits = aut_fusion(G, AutAction::PGL2OnPSL2);
  // Two order-7 classes fuse; 2,3,4 stay alone.
  std::map<int, std::vector<long>> fused;  // orbit -> element orders
  int pairs = 0;
  for (const auto& o : orbits) {
    if (o.class_indices.size() == 2) {
      ++pairs;
      CHECK(G.classes()[(std::size_t)o.class_indices[0]].element_order == 7);
      CHECK(G.classes()[(std::size_t)o.class_indices[1]].element_order == 7);
    } else {
      CHECK(o.class_indices.size() == 1);
    }
  }
  CHECK(pairs == 1);
  CHECK(orbits.size() == 4);  // 2a, 3a, 4a, {7a,7b}

  // For q=9 the unipotent (order-3) classes fuse but the order-5 classes do
  // not: that fusion belongs to a different outer involution.
  Group G9 = Group::build("psl2:q=9");
  auto orbits9 = aut_fusion(G9, AutAction::PGL2OnPSL2);
  for (const auto& o : orbits9) {
    long eo = G9.classes()[(std::size_t)o.class_indices[0]].element_order;
    if (eo == 3)
      CHECK(o.class_indices.size() == 2);
    else
      CHECK(o.class_indices.size() == 1);
  }

  // Even q: the outer action is inner, nothing fuses.
  Group G8 = Group::build("psl2:q=8");
  for (const auto& o : aut_fusion(G8, AutAction::PGL2OnPSL2))
    CHECK(o.class_indices.size() == 1);
}

TEST_CASE("fusion: transposition action on alternating groups") {
  Group A5 = Group::build("alt:n=5");
  auto orbits = aut_fusion(A5, AutAction::SnOnAn);
  int pairs = 0;
  for (const auto& o : orbits) {
    if (o.class_indices.size() == 2) {
      ++pairs;
      CHECK(A5.classes()[(std::size_t)o.class_indices[0]].element_order == 5);
    }
  }
  CHECK(pairs == 1);

  // A6: the two 5-classes fuse under the transposition, the two order-3
  // classes have different cycle types and stay apart.
  Group A6 = Group::build("alt:n=6");
  for (const auto& o : aut_fusion(A6, AutAction::SnOnAn)) {
    long eo = A6.classes()[(std::size_t)o.class_indices[0]].element_order;
    if (eo == 5)
      CHECK(o.class_indices.size() == 2);
    else
      CHECK(o.class_indices.size() == 1);
  }
}

TEST_CASE("fusion: applicability and the trivial action") {
  Group A5 = Group::build("alt:n=5");
  auto triv = aut_fusion(A5, AutAction::ConjugationOnly);
  CHECK(triv.size() == A5.classes().size() - 1);
  for (const auto& o : triv) CHECK(o.class_indices.size() == 1);
  CHECK_THROWS_AS(aut_fusion(A5, AutAction::PGL2OnPSL2), UsageError);
  Group P7 = Group::build("psl2:q=7");
  CHECK_THROWS_AS(aut_fusion(P7, AutAction::SnOnAn), UsageError);
}

TEST_CASE("element printing") {
  Group A5 = Group::build("alt:n=5");
  CHECK(A5.element_str(A5.identity()) == "()");
  Group S = Group::build("sl2:q=2");
  CHECK(S.element_str(S.identity()) == "[[1,0],[0,1]]");
  // Raw locate round-trip for a nontrivial element.
  for (const auto& c : A5.classes())
    if (c.element_order == 5) {
      CHECK(A5.locate(A5.raw(c.rep)) == c.rep);
      CHECK(A5.element_str(c.rep).front() == '(');
    }
}
