#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "codeal/groebner.hpp"

namespace codeal {

enum class BasisKind { circuits, graver, universal, reduced };

std::string to_string(BasisKind k);

/// A labeled set of binomials attached to a code. For circuits / graver /
/// universal the elements are stored once per unordered binomial, in the
/// canonical (grevlex-greater side first) orientation and sorted; for
/// `reduced` the elements keep the orientation of the originating order.
/// oriented_count counts two-sided elements twice and x^c - 1 forms
/// (including x_i^p - 1) once.
struct BasisSet {
  BasisKind kind;
  LinearCode code;
  std::vector<Binomial> elements;
  std::size_t unordered_count = 0;
  std::size_t oriented_count = 0;
};

BasisSet basis_set_from(BasisKind kind, const LinearCode& code,
                        std::vector<Binomial> canonical_elements);

/// Converts a reduced Groebner basis into a renderable BasisSet without
/// touching the orientation of its elements.
BasisSet basis_set_from_gb(const LinearCode& code, const GroebnerBasis& gb);

/// True iff no other binomial x^u - x^u' of the code ideal divides b
/// termwise (x^u | plus, x^u' | minus). Every x_i^p - 1 is primitive by
/// convention; for p = 2 any other binomial with minus = 1 is not. Throws
/// NotInIdeal when b does not belong to the code ideal.
bool is_primitive(const Binomial& b, const LinearCode& code);
bool is_primitive(const Binomial& b, const LinearCode& code,
                  const MembershipOracle& oracle);

/// All primitive binomials over all codewords and splits, plus x_i^p - 1.
BasisSet graver(const LinearCode& code, std::uint64_t cap = kDefaultCap);

/// Binary: all two-sided splits of the codewords of inclusion-minimal
/// support. General p: the primitive two-sided binomials whose support
/// (supp(plus) ∪ supp(minus)) is inclusion-minimal among those.
BasisSet circuits(const LinearCode& code, std::uint64_t cap = kDefaultCap);

/// The combinatorial universal Groebner basis of a binary code: all
/// two-sided splits of codewords c with wt(c) <= n-k+1 whose complement
/// submatrix has rank k-1, plus the squares x_i^2 - 1. Throws NotBinary.
BasisSet universal_gb_binary(const LinearCode& code,
                             std::uint64_t cap = kDefaultCap);

/// rank(G restricted to the complement of supp(c)) == k-1. Throws ZeroWord.
bool rank_condition(const LinearCode& code, const Codeword& c);

struct SingletonResult {
  bool is_singleton = false;
  std::optional<Codeword> witness;  // failing codeword when not Singleton
};

/// Binary only: every nonzero codeword of weight <= n-k+1 satisfies the rank
/// condition. On failure the witness codeword is returned.
SingletonResult is_singleton_code(const LinearCode& code,
                                  std::uint64_t cap = kDefaultCap);

struct ChainReport {
  bool ok = false;
  bool binary = false;
  std::size_t circuits_unordered = 0, circuits_oriented = 0;
  std::size_t graver_unordered = 0, graver_oriented = 0;
  std::size_t universal_unordered = 0, universal_oriented = 0;
  std::vector<std::string> violations;
};

/// Binary: checks circuits ∪ {squares} = universal = graver as unordered
/// sets. General p: checks circuits ⊆ graver and that every closed-form
/// reduced basis element over every information set lies in the Graver
/// basis. Sizes are reported either way.
ChainReport verify_chain(const LinearCode& code,
                         std::uint64_t cap = kDefaultCap);

}  // namespace codeal
