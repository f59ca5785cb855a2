#include "codeal/groebner.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace codeal {

IdealPresentation code_ideal_presentation(const LinearCode& code) {
  const std::size_t n = code.length();
  std::vector<Binomial> gens;
  const MatrixFp& r = code.generator_rref();
  const auto& pivots = code.first_information_set();
  for (std::size_t i = 0; i < r.rows(); ++i) {
    Codeword row = code.codeword(r.row(i));
    gens.push_back(binomial_of_split(row, {pivots[i]}));
  }
  for (std::size_t i = 0; i < n; ++i) {
    gens.push_back(Binomial::power_relation(n, i, code.modulus()));
  }
  return {code, std::move(gens)};
}

std::optional<Binomial> reduce(const Binomial& b,
                               std::span<const Binomial> basis,
                               const MonomialOrder& order) {
  ExponentVector head = b.plus(), tail = b.minus();
  if (order.compare(head, tail) == Ordering::LT) std::swap(head, tail);

  auto step = [&](ExponentVector& m) -> bool {
    for (const Binomial& g : basis) {
      if (g.plus().divides(m)) {
        m.replace(g.plus(), g.minus());
        return true;
      }
    }
    return false;
  };

  while (true) {
    if (step(head)) {
      if (head == tail) return std::nullopt;
      if (order.compare(head, tail) == Ordering::LT) std::swap(head, tail);
      continue;
    }
    if (step(tail)) {
      if (head == tail) return std::nullopt;
      // A reduction step strictly decreases the tail, so head stays leading.
      continue;
    }
    break;
  }
  return Binomial(std::move(head), std::move(tail));
}

namespace {

struct PairEntry {
  std::size_t i, j;
  ExponentVector lcm;
};

// Normal selection strategy: smallest lcm first, ties by index pair.
struct PairCompare {
  const MonomialOrder* order;
  bool operator()(const PairEntry& a, const PairEntry& b) const {
    Ordering c = order->compare(a.lcm, b.lcm);
    if (c == Ordering::LT) return true;
    if (c == Ordering::GT) return false;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

std::vector<Binomial> interreduce(std::vector<Binomial> basis,
                                  const MonomialOrder& order) {
  // Minimalize: drop any element whose leading monomial is divisible by the
  // leading monomial of another kept element.
  std::vector<char> keep(basis.size(), 1);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!keep[i]) continue;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j || !keep[j]) continue;
      if (basis[j].plus().divides(basis[i].plus()) &&
          !(basis[i].plus() == basis[j].plus() && j > i)) {
        keep[i] = 0;
        break;
      }
    }
  }
  std::vector<Binomial> kept;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (keep[i]) kept.push_back(basis[i]);
  }

  // Tail-reduce to a fixpoint. Heads are irreducible after minimalization,
  // so reduce() only rewrites tails here.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < kept.size(); ++i) {
      std::vector<Binomial> others;
      others.reserve(kept.size() - 1);
      for (std::size_t j = 0; j < kept.size(); ++j) {
        if (j != i) others.push_back(kept[j]);
      }
      std::optional<Binomial> r = reduce(kept[i], others, order);
      assert(r.has_value());
      if (*r != kept[i]) {
        kept[i] = *r;
        changed = true;
      }
    }
  }

  std::sort(kept.begin(), kept.end(),
            [&](const Binomial& a, const Binomial& b) {
              Ordering c = order.compare(a.plus(), b.plus());
              if (c != Ordering::EQ) return c == Ordering::GT;
              return a < b;
            });
  return kept;
}

}  // namespace

GroebnerBasis buchberger(const IdealPresentation& pres,
                         const MonomialOrder& order) {
  if (order.num_vars() != pres.code.length())
    throw Error("order arity does not match the code length");

  std::vector<Binomial> basis;
  std::set<PairEntry, PairCompare> queue(PairCompare{&order});

  auto add_element = [&](const Binomial& oriented) {
    const std::size_t idx = basis.size();
    basis.push_back(oriented);
    for (std::size_t i = 0; i < idx; ++i) {
      if (ExponentVector::coprime(basis[i].plus(), oriented.plus())) continue;
      queue.insert(
          {i, idx, ExponentVector::lcm(basis[i].plus(), oriented.plus())});
    }
  };

  for (const Binomial& g : pres.generators) {
    Binomial og = orient(g, order);
    if (std::find(basis.begin(), basis.end(), og) == basis.end()) {
      add_element(og);
    }
  }

  while (!queue.empty()) {
    PairEntry e = *queue.begin();
    queue.erase(queue.begin());
    const Binomial &f = basis[e.i], &g = basis[e.j];
    // For f = x^a - x^b, g = x^c - x^d and L = lcm(x^a, x^c):
    // S(f, g) = x^{L-a} f - x^{L-c} g = x^{L-c+d} - x^{L-a+b}.
    ExponentVector s1 = e.lcm.minus(g.plus()).plus(g.minus());
    ExponentVector s2 = e.lcm.minus(f.plus()).plus(f.minus());
    std::optional<Binomial> s = Binomial::difference(s1, s2);
    if (!s) continue;
    std::optional<Binomial> r = reduce(orient(*s, order), basis, order);
    if (r) add_element(*r);
  }

  GroebnerBasis out{interreduce(std::move(basis), order), order, true};
  return out;
}

GroebnerBasis closed_form_gb(const LinearCode& code,
                             std::span<const std::size_t> info_set) {
  const std::size_t n = code.length(), k = code.dimension();
  const std::uint32_t p = code.p();
  if (info_set.size() != k) throw NotInformationSet();
  RrefWrtResult r = rref_wrt(code.generator(), info_set);
  if (r.rank != k) throw NotInformationSet();

  std::vector<char> in_j(n, 0);
  for (std::size_t c : info_set) in_j[c] = 1;

  // Order: J-variables greatest (in the given order), then the remaining
  // variables ascending.
  std::vector<std::size_t> priority(info_set.begin(), info_set.end());
  for (std::size_t c = 0; c < n; ++c) {
    if (!in_j[c]) priority.push_back(c);
  }
  MonomialOrder order = MonomialOrder::lex(std::move(priority));

  std::vector<Binomial> elems;
  // Row j has its pivot 1 at column info_set[j]; the binomial associated
  // with the row-codeword via the pivot split is x_{i_j} - x^{(p - row) off J}.
  for (std::size_t j = 0; j < k; ++j) {
    ExponentVector plus(n), minus(n);
    plus.set(info_set[j], 1);
    for (std::size_t c = 0; c < n; ++c) {
      if (in_j[c]) continue;
      const std::uint32_t v = r.reduced.at(j, c);
      if (v != 0) minus.set(c, p - v);
    }
    elems.emplace_back(std::move(plus), std::move(minus));
  }
  for (std::size_t c = 0; c < n; ++c) {
    if (!in_j[c]) elems.push_back(Binomial::power_relation(n, c, code.modulus()));
  }

  std::sort(elems.begin(), elems.end(),
            [&](const Binomial& a, const Binomial& b) {
              Ordering c = order.compare(a.plus(), b.plus());
              if (c != Ordering::EQ) return c == Ordering::GT;
              return a < b;
            });
  return {std::move(elems), std::move(order), true};
}

MembershipOracle::MembershipOracle(const LinearCode& code)
    : gb_(closed_form_gb(code, code.first_information_set())) {}

bool MembershipOracle::contains(const Binomial& b) const {
  auto key = std::make_pair(b.plus().exps(), b.minus().exps());
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  const bool member = !reduce(b, gb_.elements, gb_.order).has_value();
  memo_.emplace(std::move(key), member);
  return member;
}

bool is_member(const Binomial& b, const LinearCode& code) {
  return MembershipOracle(code).contains(b);
}

}  // namespace codeal
