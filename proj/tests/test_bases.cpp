#include "codeal/bases.hpp"

#include <map>
#include <random>

#include "codeal/render.hpp"
#include "corpus.hpp"
#include "doctest.h"

using namespace codeal;
using namespace testutil;

namespace {

ExponentVector ev(std::vector<std::int64_t> e) {
  return ExponentVector(std::move(e));
}

Binomial parse3(const std::string& s) { return parse_binomial(s, 3); }

// A [6,3] code with the weight-4 codeword 111100 whose complement columns
// {5,6} have rank 1 < k-1: it fails the rank condition.
LinearCode non_singleton_63() {
  return make_code(2, {{1, 1, 0, 0, 0, 0}, {0, 0, 1, 1, 0, 0}, {0, 0, 0, 0, 1, 1}});
}

}  // namespace

TEST_CASE("primitivity on the demo code (paper examples)") {
  LinearCode c = demo_f7();
  MembershipOracle oracle(c);

  CHECK_FALSE(is_primitive(parse3("a^3 - b^5"), c, oracle));
  CHECK(is_primitive(parse3("a^2 - b"), c, oracle));
  CHECK_FALSE(is_primitive(parse3("b^6 - a^5"), c, oracle));
  CHECK(is_primitive(parse3("a*c^4 - 1"), c, oracle));

  // x_i^p - 1 is primitive by convention
  CHECK(is_primitive(Binomial::power_relation(3, 0, Prime(7)), c, oracle));

  // not in the ideal
  CHECK_THROWS_AS(is_primitive(parse3("a - 1"), c, oracle), NotInIdeal);
}

TEST_CASE("binary minus-one exclusion") {
  LinearCode rep = make_code(2, {{1, 1}});
  MembershipOracle oracle(rep);
  // x1 x2 - 1 is in the ideal but is not primitive for binary codes
  CHECK_FALSE(is_primitive(Binomial(ev({1, 1}), ev({0, 0})), rep, oracle));
  CHECK(is_primitive(Binomial(ev({1, 0}), ev({0, 1})), rep, oracle));
  CHECK(is_primitive(Binomial::power_relation(2, 0, Prime(2)), rep, oracle));
}

TEST_CASE("graver basis of the repetition code") {
  LinearCode rep = make_code(2, {{1, 1}});
  BasisSet g = graver(rep);
  std::set<Binomial> expect{Binomial(ev({1, 0}), ev({0, 1})),
                            Binomial::power_relation(2, 0, Prime(2)),
                            Binomial::power_relation(2, 1, Prime(2))};
  CHECK(element_set(g) == expect);
  CHECK(g.unordered_count == 3);
  CHECK(g.oriented_count == 4);  // x1 - x2 counts twice
}

TEST_CASE("graver basis of the demo code contains a*c^4 - 1") {
  LinearCode c = demo_f7();
  BasisSet g = graver(c);
  CHECK(element_set(g).count(parse3("a*c^4 - 1").canonical()));
  // every element is a member and primitive
  MembershipOracle oracle(c);
  for (const Binomial& b : g.elements) {
    CHECK(is_primitive(b, c, oracle));
  }
}

TEST_CASE("circuits of the demo code match the published list") {
  LinearCode c = demo_f7();
  BasisSet cir = circuits(c);
  CHECK(cir.unordered_count == 11);
  CHECK(cir.oriented_count == 22);

  const char* listed[] = {
      "b - c^6",   "a - c^3",   "c^6 - b",   "b^2 - c^5", "c^3 - a",
      "a^2 - b",   "b - a^2",   "a^3 - c^2", "c^2 - a^3", "a^5 - c",
      "c - a^5",   "c^5 - b^2", "b^3 - c^4", "c^4 - b^3", "b^4 - c^3",
      "b^4 - a",   "c^3 - b^4", "b^5 - c^2", "a - b^4",   "c^2 - b^5",
      "b^6 - c",   "c - b^6"};
  std::set<Binomial> expect;
  for (const char* s : listed) expect.insert(parse3(s));
  CHECK(oriented_expansion(cir) == expect);
}

TEST_CASE("every listed universal basis element is a primitive member") {
  LinearCode c = demo_f7();
  MembershipOracle oracle(c);
  const char* extras[] = {"b*c - 1",     "a^2*c - 1", "a*b^3 - 1",
                          "b^2 - a*c^2", "a*b - c^2", "b^3 - a*c",
                          "a*c^2 - b^2", "c^2 - a*b", "a*b^2 - c",
                          "a*c - b^3",   "c - a*b^2", "a^7 - 1",
                          "b^7 - 1",     "c^7 - 1"};
  for (const char* s : extras) {
    Binomial b = parse3(s);
    CHECK(oracle.contains(b));
    CHECK(is_primitive(b, c, oracle));
  }
}

TEST_CASE("circuits of binary codes") {
  // Hamming [7,4]: the 14 codewords of weight 3 and 4 all have minimal
  // support, giving 7*3 + 7*7 unordered two-sided splits.
  BasisSet cir = circuits(hamming74());
  CHECK(cir.unordered_count == 70);
  CHECK(cir.oriented_count == 140);

  BasisSet rep = circuits(make_code(2, {{1, 1}}));
  CHECK(rep.unordered_count == 1);
  CHECK(rep.elements.front() == Binomial(ev({1, 0}), ev({0, 1})));

  // supports form an antichain
  for (const Binomial& a : cir.elements) {
    for (const Binomial& b : cir.elements) {
      if (a.support_mask() == b.support_mask()) continue;
      CHECK((a.support_mask() & b.support_mask()) != a.support_mask());
    }
  }
}

TEST_CASE("circuit supports form an antichain on the demo code") {
  BasisSet cir = circuits(demo_f7());
  for (const Binomial& a : cir.elements) {
    for (const Binomial& b : cir.elements) {
      if (a.support_mask() == b.support_mask()) continue;
      CHECK((a.support_mask() & b.support_mask()) != a.support_mask());
    }
  }
}

TEST_CASE("universal basis of the Hamming code") {
  BasisSet u = universal_gb_binary(hamming74());
  CHECK(u.oriented_count == 147);
  CHECK(u.unordered_count == 77);

  // per-weight breakdown: 7 squares, 42 from weight 3, 98 from weight 4
  LinearCode ham = hamming74();
  std::map<std::size_t, std::size_t> oriented_by_weight;
  std::size_t squares = 0;
  for (const Binomial& b : u.elements) {
    if (b.is_power_relation(Prime(2))) {
      ++squares;
      continue;
    }
    Codeword w = ham.codeword(word_of_binomial(b, Prime(2)));
    oriented_by_weight[w.weight()] += b.two_sided() ? 2 : 1;
  }
  CHECK(squares == 7);
  CHECK(oriented_by_weight[3] == 42);
  CHECK(oriented_by_weight[4] == 98);

  // no element other than the squares has minus side 1
  for (const Binomial& b : u.elements) {
    if (b.minus_is_one()) CHECK(b.is_power_relation(Prime(2)));
  }
}

TEST_CASE("universal basis of the repetition and parity check codes") {
  BasisSet u = universal_gb_binary(make_code(2, {{1, 1}}));
  std::set<Binomial> expect{Binomial(ev({1, 0}), ev({0, 1})),
                            Binomial::power_relation(2, 0, Prime(2)),
                            Binomial::power_relation(2, 1, Prime(2))};
  CHECK(element_set(u) == expect);

  // [n, n-1] parity check code: splits of the weight-2 codewords + squares
  LinearCode pc = parity_code(5);
  BasisSet upc = universal_gb_binary(pc);
  std::size_t two_sided = 0;
  for (const Binomial& b : upc.elements) {
    if (b.two_sided()) {
      Codeword w = pc.codeword(word_of_binomial(b, Prime(2)));
      CHECK(w.weight() == 2);
      ++two_sided;
    }
  }
  CHECK(two_sided == 10);  // C(5,2) weight-2 words, one unordered split each
  CHECK(upc.unordered_count == 15);

  CHECK_THROWS_AS(universal_gb_binary(demo_f7()), NotBinary);
}

TEST_CASE("rank condition") {
  LinearCode ham = hamming74();
  for (const Codeword& w : enumerate_codewords(ham)) {
    if (w.weight() == 3) CHECK(rank_condition(ham, w));
  }

  LinearCode id = make_code(2, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(rank_condition(id, id.codeword({1, 0, 0})));

  LinearCode bad = non_singleton_63();
  CHECK_FALSE(rank_condition(bad, bad.codeword({1, 1, 1, 1, 0, 0})));
  CHECK(rank_condition(bad, bad.codeword({1, 1, 0, 0, 0, 0})));

  CHECK_THROWS_AS(rank_condition(ham, ham.zero_codeword()), ZeroWord);
}

TEST_CASE("singleton classification") {
  CHECK(is_singleton_code(hamming74()).is_singleton);
  CHECK(is_singleton_code(simplex73()).is_singleton);
  CHECK(is_singleton_code(rm13()).is_singleton);
  for (std::size_t n = 2; n <= 8; ++n) {
    CHECK(is_singleton_code(parity_code(n)).is_singleton);
  }

  SingletonResult bad = is_singleton_code(non_singleton_63());
  CHECK_FALSE(bad.is_singleton);
  REQUIRE(bad.witness.has_value());
  CHECK_FALSE(rank_condition(non_singleton_63(), *bad.witness));
  CHECK(bad.witness->weight() <= 4);

  CHECK_THROWS_AS(is_singleton_code(demo_f7()), NotBinary);
}

TEST_CASE("verify chain on binary codes") {
  ChainReport ham = verify_chain(hamming74());
  CHECK(ham.ok);
  CHECK(ham.binary);
  CHECK(ham.universal_oriented == 147);
  CHECK(ham.universal_unordered == 77);
  CHECK(ham.graver_oriented == 147);
  CHECK(ham.circuits_unordered == 70);

  std::mt19937 rng(55);
  for (int t = 0; t < 15; ++t) {
    std::uniform_int_distribution<std::size_t> nd(2, 6);
    std::size_t n = nd(rng);
    std::uniform_int_distribution<std::size_t> kd(1, n);
    ChainReport r = verify_chain(random_code(rng, 2, n, kd(rng)));
    CHECK(r.ok);
  }
}

TEST_CASE("verify chain on the demo code") {
  ChainReport r = verify_chain(demo_f7());
  CHECK(r.ok);
  CHECK_FALSE(r.binary);
  // circuits lie strictly inside the graver basis: a*c^4 - 1 is in the gap
  CHECK(r.circuits_unordered < r.graver_unordered);
  BasisSet g = graver(demo_f7());
  BasisSet c = circuits(demo_f7());
  Binomial gap = parse3("a*c^4 - 1").canonical();
  CHECK(element_set(g).count(gap));
  CHECK_FALSE(element_set(c).count(gap));
}

TEST_CASE("primitive binomials are exactly the weight-rank splits (small sweep)") {
  for (const LinearCode& c : binary_corpus(4)) {
    BasisSet gr = graver(c);
    BasisSet uni = universal_gb_binary(c);
    std::set<Binomial> prim_two_sided, qualified;
    for (const Binomial& b : gr.elements)
      if (b.two_sided()) prim_two_sided.insert(b);
    for (const Binomial& b : uni.elements)
      if (b.two_sided()) qualified.insert(b);
    CHECK(prim_two_sided == qualified);

    const std::size_t bound = c.length() - c.dimension() + 1;
    for (const Binomial& b : prim_two_sided) {
      Codeword w = c.codeword(word_of_binomial(b, c.modulus()));
      CHECK(w.weight() <= bound);
      CHECK(rank_condition(c, w));
    }
  }
}

TEST_CASE("generator invariance of the classifier and the basis sets") {
  std::mt19937 rng(77);
  for (const LinearCode& c :
       {hamming74(), non_singleton_63(), parity_code(5)}) {
    SingletonResult base = is_singleton_code(c);
    BasisSet gr = graver(c);
    BasisSet cir = circuits(c);
    BasisSet uni = universal_gb_binary(c);
    for (int t = 0; t < 10; ++t) {
      LinearCode moved =
          transformed(c, random_invertible(rng, c.dimension(), c.p()));
      CHECK(is_singleton_code(moved).is_singleton == base.is_singleton);
      CHECK(element_set(graver(moved)) == element_set(gr));
      CHECK(element_set(circuits(moved)) == element_set(cir));
      CHECK(element_set(universal_gb_binary(moved)) == element_set(uni));
      for (const Codeword& w : enumerate_codewords(c)) {
        if (w.is_zero()) continue;
        CHECK(rank_condition(moved, moved.codeword(w.values())) ==
              rank_condition(c, w));
      }
    }
  }
}

TEST_CASE("engine bases under graded orders land inside the universal basis") {
  // The complete universal basis of the demo code: both orientations of the
  // 11 circuits, the 11 extra listed elements, and the three p-th powers.
  const char* universal_list[] = {
      "b - c^6",     "a - c^3",   "c^6 - b",     "b^2 - c^5", "c^3 - a",
      "a^2 - b",     "b - a^2",   "a^3 - c^2",   "c^2 - a^3", "a^5 - c",
      "c - a^5",     "c^5 - b^2", "b^3 - c^4",   "c^4 - b^3", "b^4 - c^3",
      "b^4 - a",     "c^3 - b^4", "b^5 - c^2",   "a - b^4",   "c^2 - b^5",
      "b^6 - c",     "c - b^6",   "b*c - 1",     "a^2*c - 1", "a*b^3 - 1",
      "b^2 - a*c^2", "a*b - c^2", "b^3 - a*c",   "a*c^2 - b^2", "c^2 - a*b",
      "a*b^2 - c",   "a*c - b^3", "c - a*b^2",   "a^7 - 1",   "b^7 - 1",
      "c^7 - 1"};
  std::set<Binomial> universal;
  for (const char* s : universal_list) universal.insert(parse_binomial(s, 3));
  REQUIRE(universal.size() == 36);

  LinearCode c = demo_f7();
  IdealPresentation pres = code_ideal_presentation(c);
  std::vector<MonomialOrder> orders;
  orders.push_back(MonomialOrder::grlex(MonomialOrder::identity_priority(3)));
  orders.push_back(MonomialOrder::grevlex(MonomialOrder::identity_priority(3)));
  orders.push_back(MonomialOrder::grlex({2, 0, 1}));
  orders.push_back(MonomialOrder::grevlex({1, 2, 0}));
  orders.push_back(MonomialOrder::lex({2, 1, 0}));
  for (const auto& order : orders) {
    for (const Binomial& b : buchberger(pres, order).elements) {
      CHECK(universal.count(b));
    }
  }
}

TEST_CASE("Hamming engine bases land inside the combinatorial universal basis") {
  LinearCode ham = hamming74();
  std::set<Binomial> universal = oriented_expansion(universal_gb_binary(ham));
  IdealPresentation pres = code_ideal_presentation(ham);
  for (const auto& order :
       {MonomialOrder::grevlex(MonomialOrder::identity_priority(7)),
        MonomialOrder::grlex({3, 5, 0, 1, 6, 2, 4}),
        MonomialOrder::lex({6, 5, 4, 3, 2, 1, 0})}) {
    for (const Binomial& b : buchberger(pres, order).elements) {
      CHECK(universal.count(b));
    }
  }
}

TEST_CASE("reduced basis elements are primitive (two-sided ones)") {
  // Every two-sided element of a reduced basis lies in the Graver basis.
  // (Binary x^c - 1 elements, which occur only for codes with weight-1
  // codewords, are excluded from the binary Graver basis by convention.)
  std::mt19937 rng(123);
  for (std::uint32_t p : {2u, 3u}) {
    for (int t = 0; t < 5; ++t) {
      LinearCode c = random_code(rng, p, 4, 2);
      MembershipOracle oracle(c);
      for (const auto& j : information_sets(c)) {
        for (const Binomial& b : closed_form_gb(c, j).elements) {
          if (p == 2 && b.minus_is_one() && !b.is_power_relation(Prime(2)))
            continue;
          CHECK(is_primitive(b, c, oracle));
        }
      }
    }
  }
}
