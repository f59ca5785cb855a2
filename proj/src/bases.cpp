#include "codeal/bases.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

#include "codeal/render.hpp"

namespace codeal {

std::string to_string(BasisKind k) {
  switch (k) {
    case BasisKind::circuits:
      return "circuits";
    case BasisKind::graver:
      return "graver";
    case BasisKind::universal:
      return "universal";
    case BasisKind::reduced:
      return "reduced";
  }
  return "?";
}

namespace {

std::size_t oriented_weight(const Binomial& b) {
  return b.two_sided() ? 2 : 1;
}

}  // namespace

BasisSet basis_set_from(BasisKind kind, const LinearCode& code,
                        std::vector<Binomial> canonical_elements) {
  std::sort(canonical_elements.begin(), canonical_elements.end());
  canonical_elements.erase(
      std::unique(canonical_elements.begin(), canonical_elements.end()),
      canonical_elements.end());
  BasisSet s{kind, code, std::move(canonical_elements), 0, 0};
  s.unordered_count = s.elements.size();
  for (const Binomial& b : s.elements) s.oriented_count += oriented_weight(b);
  return s;
}

BasisSet basis_set_from_gb(const LinearCode& code, const GroebnerBasis& gb) {
  BasisSet s{BasisKind::reduced, code, gb.elements, gb.elements.size(),
             gb.elements.size()};
  return s;
}

namespace {

// Odometer over all componentwise divisor pairs (u <= plus, u' <= minus),
// skipping (0, 0) and (plus, minus). The sides have disjoint supports, so
// u = u' never occurs elsewhere and every visited pair is a genuine binomial.
bool has_termwise_divisor_in_ideal(const Binomial& b,
                                   const MembershipOracle& oracle) {
  const std::size_t n = b.num_vars();
  std::vector<std::size_t> vars;
  std::vector<std::int64_t> bound;
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t e = b.plus()[i] + b.minus()[i];  // disjoint supports
    if (e != 0) {
      vars.push_back(i);
      bound.push_back(e);
    }
  }
  std::vector<std::int64_t> cur(vars.size(), 0);
  while (true) {
    // advance odometer
    std::size_t pos = 0;
    while (pos < vars.size() && cur[pos] == bound[pos]) {
      cur[pos] = 0;
      ++pos;
    }
    if (pos == vars.size()) return false;  // wrapped: all pairs visited
    ++cur[pos];

    bool full = true;
    for (std::size_t t = 0; t < vars.size(); ++t) {
      if (cur[t] != bound[t]) {
        full = false;
        break;
      }
    }
    if (full) continue;  // (plus, minus) itself

    ExponentVector u(n), v(n);
    for (std::size_t t = 0; t < vars.size(); ++t) {
      const std::size_t i = vars[t];
      if (b.plus()[i] != 0) {
        u.set(i, cur[t]);
      } else {
        v.set(i, cur[t]);
      }
    }
    std::optional<Binomial> w = Binomial::difference(u, v);
    assert(w.has_value());
    if (oracle.contains(*w)) return true;
  }
}

bool is_primitive_impl(const Binomial& b, const LinearCode& code,
                       const MembershipOracle& oracle) {
  Binomial c = b.canonical();
  if (c.is_power_relation(code.modulus())) return true;
  if (!oracle.contains(c)) throw NotInIdeal();
  if (code.p() == 2 && c.minus_is_one()) return false;
  return !has_termwise_divisor_in_ideal(c, oracle);
}

std::uint64_t splits_work_checked(const LinearCode& code, std::uint64_t cap) {
  const std::uint64_t words = codeword_count_checked(code, cap);
  std::size_t wmax = 0;
  for (const Codeword& w : enumerate_codewords(code, cap)) {
    wmax = std::max(wmax, w.weight());
  }
  if (wmax >= 63 || (words > (cap >> wmax))) {
    throw TooLarge("p^k * 2^max_weight split enumeration exceeds the cap " +
                   std::to_string(cap));
  }
  return words;
}

// Inclusion-minimal masks of a set of support masks.
std::set<std::uint64_t> minimal_masks(const std::set<std::uint64_t>& masks) {
  std::set<std::uint64_t> out;
  for (std::uint64_t m : masks) {
    bool minimal = true;
    for (std::uint64_t o : masks) {
      if (o != m && (o & m) == o) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.insert(m);
  }
  return out;
}

}  // namespace

bool is_primitive(const Binomial& b, const LinearCode& code,
                  const MembershipOracle& oracle) {
  return is_primitive_impl(b, code, oracle);
}

bool is_primitive(const Binomial& b, const LinearCode& code) {
  return is_primitive_impl(b, code, MembershipOracle(code));
}

BasisSet graver(const LinearCode& code, std::uint64_t cap) {
  splits_work_checked(code, cap);
  const MembershipOracle oracle(code);
  const bool binary = code.p() == 2;

  std::set<Binomial> out;
  std::set<Binomial> seen;
  for (const Codeword& w : enumerate_codewords(code, cap)) {
    if (w.is_zero()) continue;
    const std::vector<std::size_t> supp = w.support();
    const std::size_t s = supp.size();
    // Splits with a nonempty plus side; the empty split of w is covered as a
    // split of -w. For binary codes minus = 1 is excluded outright.
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << s); ++mask) {
      if (binary && mask + 1 == (std::uint64_t{1} << s)) continue;
      std::vector<std::size_t> plus_side;
      for (std::size_t i = 0; i < s; ++i) {
        if (mask & (std::uint64_t{1} << i)) plus_side.push_back(supp[i]);
      }
      Binomial b = binomial_of_split(w, plus_side).canonical();
      if (!seen.insert(b).second) continue;
      if (is_primitive_impl(b, code, oracle)) out.insert(b);
    }
  }
  for (std::size_t i = 0; i < code.length(); ++i) {
    out.insert(Binomial::power_relation(code.length(), i, code.modulus()));
  }
  return basis_set_from(BasisKind::graver, code,
                        {out.begin(), out.end()});
}

BasisSet circuits(const LinearCode& code, std::uint64_t cap) {
  splits_work_checked(code, cap);

  if (code.p() == 2) {
    // Codewords of inclusion-minimal support; every two-sided split of such
    // a codeword is a circuit.
    auto word_mask = [](const Codeword& w) {
      std::uint64_t m = 0;
      for (std::size_t i : w.support()) m |= std::uint64_t{1} << i;
      return m;
    };
    std::set<std::uint64_t> supports;
    for (const Codeword& w : enumerate_codewords(code, cap)) {
      if (!w.is_zero()) supports.insert(word_mask(w));
    }
    std::set<std::uint64_t> minimal = minimal_masks(supports);
    std::vector<Binomial> elems;
    for (const Codeword& w : enumerate_codewords(code, cap)) {
      if (w.is_zero() || w.weight() < 2) continue;
      if (!minimal.count(word_mask(w))) continue;
      for (const Binomial& b : all_splits(w, false)) {
        elems.push_back(b.canonical());
      }
    }
    return basis_set_from(BasisKind::circuits, code, std::move(elems));
  }

  // General p: primitive two-sided binomials of inclusion-minimal support.
  const MembershipOracle oracle(code);
  std::set<Binomial> primitive;
  std::set<Binomial> seen;
  for (const Codeword& w : enumerate_codewords(code, cap)) {
    if (w.is_zero() || w.weight() < 2) continue;
    for (const Binomial& raw : all_splits(w, false)) {
      Binomial b = raw.canonical();
      if (!seen.insert(b).second) continue;
      if (is_primitive_impl(b, code, oracle)) primitive.insert(b);
    }
  }
  std::set<std::uint64_t> supports;
  for (const Binomial& b : primitive) supports.insert(b.support_mask());
  std::set<std::uint64_t> minimal = minimal_masks(supports);
  std::vector<Binomial> elems;
  for (const Binomial& b : primitive) {
    if (minimal.count(b.support_mask())) elems.push_back(b);
  }
  return basis_set_from(BasisKind::circuits, code, std::move(elems));
}

BasisSet universal_gb_binary(const LinearCode& code, std::uint64_t cap) {
  if (code.p() != 2) throw NotBinary();
  splits_work_checked(code, cap);
  const std::size_t bound = code.length() - code.dimension() + 1;

  std::vector<Binomial> elems;
  for (const Codeword& w : enumerate_codewords(code, cap)) {
    if (w.is_zero() || w.weight() > bound) continue;
    if (!rank_condition(code, w)) continue;
    if (w.weight() < 2) continue;  // no two-sided splits
    for (const Binomial& b : all_splits(w, false)) {
      elems.push_back(b.canonical());
    }
  }
  for (std::size_t i = 0; i < code.length(); ++i) {
    elems.push_back(Binomial::power_relation(code.length(), i, code.modulus()));
  }
  return basis_set_from(BasisKind::universal, code, std::move(elems));
}

bool rank_condition(const LinearCode& code, const Codeword& c) {
  if (c.is_zero()) throw ZeroWord();
  std::vector<std::size_t> complement;
  for (std::size_t i = 0; i < code.length(); ++i) {
    if (c.at(i) == 0) complement.push_back(i);
  }
  return rank_of_columns(code.generator(), complement) == code.dimension() - 1;
}

SingletonResult is_singleton_code(const LinearCode& code, std::uint64_t cap) {
  if (code.p() != 2) throw NotBinary();
  const std::size_t bound = code.length() - code.dimension() + 1;
  for (const Codeword& w : enumerate_codewords(code, cap)) {
    if (w.is_zero() || w.weight() > bound) continue;
    if (!rank_condition(code, w)) return {false, w};
  }
  return {true, std::nullopt};
}

namespace {

std::set<Binomial> element_set(const BasisSet& s) {
  return {s.elements.begin(), s.elements.end()};
}

void report_difference(const std::set<Binomial>& a, const std::set<Binomial>& b,
                       const std::string& label, std::vector<std::string>* out) {
  for (const Binomial& x : a) {
    if (!b.count(x)) {
      out->push_back(label + ": " + binomial_text(x, false));
    }
  }
}

}  // namespace

ChainReport verify_chain(const LinearCode& code, std::uint64_t cap) {
  ChainReport rep;
  rep.binary = code.p() == 2;

  BasisSet cir = circuits(code, cap);
  BasisSet gr = graver(code, cap);
  rep.circuits_unordered = cir.unordered_count;
  rep.circuits_oriented = cir.oriented_count;
  rep.graver_unordered = gr.unordered_count;
  rep.graver_oriented = gr.oriented_count;

  std::set<Binomial> gr_set = element_set(gr);

  if (rep.binary) {
    BasisSet uni = universal_gb_binary(code, cap);
    rep.universal_unordered = uni.unordered_count;
    rep.universal_oriented = uni.oriented_count;

    std::set<Binomial> cir_plus_squares = element_set(cir);
    for (std::size_t i = 0; i < code.length(); ++i) {
      cir_plus_squares.insert(
          Binomial::power_relation(code.length(), i, code.modulus()));
    }
    std::set<Binomial> uni_set = element_set(uni);
    report_difference(cir_plus_squares, uni_set,
                      "circuits+squares \\ universal", &rep.violations);
    report_difference(uni_set, cir_plus_squares,
                      "universal \\ circuits+squares", &rep.violations);
    report_difference(uni_set, gr_set, "universal \\ graver", &rep.violations);
    report_difference(gr_set, uni_set, "graver \\ universal", &rep.violations);
  } else {
    report_difference(element_set(cir), gr_set, "circuits \\ graver",
                      &rep.violations);
    // Every closed-form reduced basis element, over every information set,
    // must be primitive, i.e. lie in the Graver basis.
    for (const auto& j : information_sets(code)) {
      GroebnerBasis gb = closed_form_gb(code, j);
      for (const Binomial& b : gb.elements) {
        if (!gr_set.count(b.canonical())) {
          rep.violations.push_back("reduced basis element not in graver: " +
                                   binomial_text(b, false));
        }
      }
    }
  }
  rep.ok = rep.violations.empty();
  return rep;
}

}  // namespace codeal
