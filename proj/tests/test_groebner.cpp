#include "codeal/groebner.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "codeal/render.hpp"
#include "corpus.hpp"
#include "doctest.h"

using namespace codeal;
using namespace testutil;

namespace {

ExponentVector ev(std::vector<std::int64_t> e) {
  return ExponentVector(std::move(e));
}

std::set<Binomial> sorted_set(const GroebnerBasis& gb) {
  return {gb.elements.begin(), gb.elements.end()};
}

}  // namespace

TEST_CASE("reduce") {
  MonomialOrder lex = MonomialOrder::lex(MonomialOrder::identity_priority(2));
  std::vector<Binomial> basis{Binomial(ev({2, 0}), ev({0, 0}))};  // x1^2 - 1
  CHECK_FALSE(reduce(Binomial(ev({2, 0}), ev({0, 0})), basis, lex).has_value());

  // no divisor: unchanged
  std::vector<Binomial> basis2{Binomial(ev({0, 2}), ev({0, 0}))};
  auto r = reduce(Binomial(ev({1, 0}), ev({0, 0})), basis2, lex);
  REQUIRE(r.has_value());
  CHECK(*r == Binomial(ev({1, 0}), ev({0, 0})));

  // a^3 - b^5 lies in the demo code ideal: zero normal form
  LinearCode c = demo_f7();
  GroebnerBasis gb = closed_form_gb(c, c.first_information_set());
  CHECK_FALSE(reduce(Binomial(ev({3, 0, 0}), ev({0, 5, 0})), gb.elements,
                     gb.order)
                  .has_value());
}

TEST_CASE("closed form basis for the demo code, J = (2,1)") {
  LinearCode c = demo_f7();
  std::vector<std::size_t> j{1, 0};
  GroebnerBasis gb = closed_form_gb(c, j);
  // b - c^6, a - c^3, c^7 - 1
  std::set<Binomial> expect{Binomial(ev({0, 1, 0}), ev({0, 0, 6})),
                            Binomial(ev({1, 0, 0}), ev({0, 0, 3})),
                            Binomial(ev({0, 0, 7}), ev({0, 0, 0}))};
  CHECK(sorted_set(gb) == expect);
  CHECK(gb.reduced);
  CHECK(gb.order.priority() == std::vector<std::size_t>{1, 0, 2});
}

TEST_CASE("closed form basis for systematic binary codes") {
  // G = (I | M): { x_i - x^{m_i} } u { x_j^2 - 1, j > k }
  LinearCode ham = hamming74();
  std::vector<std::size_t> j{0, 1, 2, 3};
  GroebnerBasis gb = closed_form_gb(ham, j);
  std::set<Binomial> expect{
      Binomial(ev({1, 0, 0, 0, 0, 0, 0}), ev({0, 0, 0, 0, 0, 1, 1})),
      Binomial(ev({0, 1, 0, 0, 0, 0, 0}), ev({0, 0, 0, 0, 1, 0, 1})),
      Binomial(ev({0, 0, 1, 0, 0, 0, 0}), ev({0, 0, 0, 0, 1, 1, 0})),
      Binomial(ev({0, 0, 0, 1, 0, 0, 0}), ev({0, 0, 0, 0, 1, 1, 1})),
      Binomial::power_relation(7, 4, Prime(2)),
      Binomial::power_relation(7, 5, Prime(2)),
      Binomial::power_relation(7, 6, Prime(2))};
  CHECK(sorted_set(gb) == expect);
}

TEST_CASE("closed form on the identity code") {
  LinearCode id = make_code(5, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  GroebnerBasis gb = closed_form_gb(id, id.first_information_set());
  std::set<Binomial> expect{Binomial(ev({1, 0, 0}), ev({0, 0, 0})),
                            Binomial(ev({0, 1, 0}), ev({0, 0, 0})),
                            Binomial(ev({0, 0, 1}), ev({0, 0, 0}))};
  CHECK(sorted_set(gb) == expect);
}

TEST_CASE("closed form rejects non-information sets") {
  LinearCode ham = hamming74();
  std::vector<std::size_t> bad{3, 4, 5, 6};  // rank 3
  CHECK_THROWS_AS(closed_form_gb(ham, bad), NotInformationSet);
  std::vector<std::size_t> wrong_size{0, 1};
  CHECK_THROWS_AS(closed_form_gb(ham, wrong_size), NotInformationSet);
}

TEST_CASE("buchberger on the full binary code") {
  LinearCode full = make_code(2, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  GroebnerBasis gb =
      buchberger(code_ideal_presentation(full),
                 MonomialOrder::lex(MonomialOrder::identity_priority(3)));
  std::set<Binomial> expect{Binomial(ev({1, 0, 0}), ev({0, 0, 0})),
                            Binomial(ev({0, 1, 0}), ev({0, 0, 0})),
                            Binomial(ev({0, 0, 1}), ev({0, 0, 0}))};
  CHECK(sorted_set(gb) == expect);
}

TEST_CASE("buchberger on the binary repetition code") {
  LinearCode rep = make_code(2, {{1, 1}});
  GroebnerBasis gb =
      buchberger(code_ideal_presentation(rep),
                 MonomialOrder::lex(MonomialOrder::identity_priority(2)));
  std::set<Binomial> expect{Binomial(ev({1, 0}), ev({0, 1})),
                            Binomial::power_relation(2, 1, Prime(2))};
  CHECK(sorted_set(gb) == expect);
}

TEST_CASE("buchberger agrees with the closed form on the demo code") {
  LinearCode c = demo_f7();
  for (const auto& j :
       {std::vector<std::size_t>{0, 1}, std::vector<std::size_t>{1, 0},
        std::vector<std::size_t>{1, 2}, std::vector<std::size_t>{2, 0}}) {
    if (!is_information_set(c, j)) continue;
    GroebnerBasis closed = closed_form_gb(c, j);
    GroebnerBasis engine =
        buchberger(code_ideal_presentation(c), closed.order);
    CHECK(closed.elements == engine.elements);
    // must contain a - c^3 and b - c^6 for J = {1,2} (either order)
    if (j[0] + j[1] == 1) {
      CHECK(sorted_set(closed).count(
          Binomial(ev({1, 0, 0}), ev({0, 0, 3}))));
      CHECK(sorted_set(closed).count(
          Binomial(ev({0, 1, 0}), ev({0, 0, 6}))));
    }
  }
}

TEST_CASE("oracle agreement on random codes over several fields") {
  std::mt19937 rng(2024);
  int tested = 0;
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    for (int t = 0; t < 10; ++t) {
      std::uniform_int_distribution<std::size_t> nd(2, 6);
      std::size_t n = nd(rng);
      std::uniform_int_distribution<std::size_t> kd(1, std::min<std::size_t>(3, n));
      LinearCode c = random_code(rng, p, n, kd(rng));
      for (const auto& j : information_sets(c)) {
        GroebnerBasis closed = closed_form_gb(c, j);
        GroebnerBasis engine =
            buchberger(code_ideal_presentation(c), closed.order);
        CHECK(closed.elements == engine.elements);
        ++tested;
      }
    }
  }
  CHECK(tested > 50);
}

TEST_CASE("reduced basis is unique under generator permutations") {
  std::mt19937 rng(99);
  LinearCode c = demo_f7();
  IdealPresentation pres = code_ideal_presentation(c);
  MonomialOrder lex = MonomialOrder::lex(MonomialOrder::identity_priority(3));
  GroebnerBasis ref = buchberger(pres, lex);
  for (int t = 0; t < 5; ++t) {
    IdealPresentation shuffled = pres;
    std::shuffle(shuffled.generators.begin(), shuffled.generators.end(), rng);
    CHECK(buchberger(shuffled, lex).elements == ref.elements);
  }
}

TEST_CASE("presentation generators are members") {
  for (std::uint32_t p : {2u, 7u}) {
    LinearCode c = p == 2 ? hamming74() : demo_f7();
    IdealPresentation pres = code_ideal_presentation(c);
    CHECK(pres.generators.size() == c.length() + c.dimension());
    for (const Binomial& g : pres.generators) {
      CHECK(c.contains(word_of_binomial(g, c.modulus())));
      CHECK(is_member(g, c));
    }
  }
}

TEST_CASE("membership") {
  LinearCode c = demo_f7();
  CHECK(is_member(Binomial(ev({2, 0, 0}), ev({0, 1, 0})), c));  // a^2 - b
  CHECK(is_member(Binomial::power_relation(3, 0, Prime(7)), c));
  CHECK(is_member(Binomial::power_relation(3, 2, Prime(7)), c));

  LinearCode ham = hamming74();
  CHECK_FALSE(is_member(
      Binomial(ev({1, 0, 0, 0, 0, 0, 0}), ev({0, 0, 0, 0, 0, 0, 0})), ham));
  CHECK(is_member(Binomial::power_relation(7, 3, Prime(2)), ham));
}

TEST_CASE("membership coincides with codeword membership exhaustively") {
  // all binomials with exponents < p on small codes
  std::mt19937 rng(7);
  for (std::uint32_t p : {2u, 3u}) {
    LinearCode c = random_code(rng, p, 3, 2);
    MembershipOracle oracle(c);
    const std::size_t n = 3;
    std::vector<std::int64_t> pe(n), me(n);
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < 2 * n; ++i) total *= p;
    for (std::uint64_t x = 0; x < total; ++x) {
      std::uint64_t v = x;
      for (std::size_t i = 0; i < n; ++i) {
        pe[i] = static_cast<std::int64_t>(v % p);
        v /= p;
      }
      for (std::size_t i = 0; i < n; ++i) {
        me[i] = static_cast<std::int64_t>(v % p);
        v /= p;
      }
      auto b = Binomial::difference(ExponentVector(pe), ExponentVector(me));
      if (!b) continue;
      CHECK(oracle.contains(*b) ==
            c.contains(word_of_binomial(*b, c.modulus())));
    }
  }
}

TEST_CASE("membership does not depend on the order used to decide it") {
  std::mt19937 rng(314);
  for (std::uint32_t p : {2u, 3u}) {
    LinearCode c = random_code(rng, p, 3, 2);
    MembershipOracle oracle(c);
    GroebnerBasis grevlex_gb =
        buchberger(code_ideal_presentation(c),
                   MonomialOrder::grevlex(MonomialOrder::identity_priority(3)));
    std::vector<std::int64_t> pe(3), me(3);
    std::uint64_t total = 1;
    for (int i = 0; i < 6; ++i) total *= p;
    for (std::uint64_t x = 0; x < total; ++x) {
      std::uint64_t v = x;
      for (std::size_t i = 0; i < 3; ++i) {
        pe[i] = static_cast<std::int64_t>(v % p);
        v /= p;
      }
      for (std::size_t i = 0; i < 3; ++i) {
        me[i] = static_cast<std::int64_t>(v % p);
        v /= p;
      }
      auto b = Binomial::difference(ExponentVector(pe), ExponentVector(me));
      if (!b) continue;
      CHECK(oracle.contains(*b) ==
            !reduce(*b, grevlex_gb.elements, grevlex_gb.order).has_value());
    }
  }
}

TEST_CASE("a circuit enters the reduced basis of its elimination order") {
  // For the circuit b - c^6 of the demo code (codeword (0,1,1)), weight the
  // plus-side variable by the minus-side degree and vice versa, push the
  // off-support variable above everything, and break ties by lex with the
  // plus side greatest. The circuit must then appear in the reduced basis.
  LinearCode c = demo_f7();
  MonomialOrder order = MonomialOrder::weighted(
      {1000, 6, 1}, MonomialOrder::lex({1, 2, 0}));
  GroebnerBasis gb = buchberger(code_ideal_presentation(c), order);
  Binomial circuit(ExponentVector({0, 1, 0}), ExponentVector({0, 0, 6}));
  CHECK(std::find(gb.elements.begin(), gb.elements.end(), circuit) !=
        gb.elements.end());

  // same device for a - c^3 (codeword (1,0,4), plus side {a})
  MonomialOrder order2 = MonomialOrder::weighted(
      {3, 1000, 1}, MonomialOrder::lex({0, 2, 1}));
  GroebnerBasis gb2 = buchberger(code_ideal_presentation(c), order2);
  Binomial circuit2(ExponentVector({1, 0, 0}), ExponentVector({0, 0, 3}));
  CHECK(std::find(gb2.elements.begin(), gb2.elements.end(), circuit2) !=
        gb2.elements.end());
}

TEST_CASE("engine handles graded orders") {
  LinearCode c = demo_f7();
  for (auto order :
       {MonomialOrder::grlex(MonomialOrder::identity_priority(3)),
        MonomialOrder::grevlex(MonomialOrder::identity_priority(3))}) {
    GroebnerBasis gb = buchberger(code_ideal_presentation(c), order);
    CHECK(gb.reduced);
    CHECK_FALSE(gb.elements.empty());
    // every element is a member and correctly oriented
    for (const Binomial& b : gb.elements) {
      CHECK(c.contains(word_of_binomial(b, c.modulus())));
      CHECK(order.compare(b.plus(), b.minus()) == Ordering::GT);
    }
    // reduced: leading monomials pairwise non-dividing, tails irreducible
    for (std::size_t i = 0; i < gb.elements.size(); ++i) {
      for (std::size_t j = 0; j < gb.elements.size(); ++j) {
        if (i == j) continue;
        CHECK_FALSE(gb.elements[j].plus().divides(gb.elements[i].plus()));
        CHECK_FALSE(gb.elements[j].plus().divides(gb.elements[i].minus()));
      }
    }
    // generators reduce to zero
    for (const Binomial& g : code_ideal_presentation(c).generators) {
      CHECK_FALSE(reduce(g, gb.elements, order).has_value());
    }
  }
}
