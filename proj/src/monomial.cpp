#include "codeal/monomial.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace codeal {

ExponentVector::ExponentVector(std::vector<std::int64_t> e) : e_(std::move(e)) {
  for (std::int64_t x : e_) {
    if (x < 0) throw Error("negative exponent");
  }
}

void ExponentVector::set(std::size_t i, std::int64_t v) {
  if (v < 0) throw Error("negative exponent");
  e_[i] = v;
}

std::int64_t ExponentVector::degree() const {
  return std::accumulate(e_.begin(), e_.end(), std::int64_t{0});
}

bool ExponentVector::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](auto x) { return x == 0; });
}

std::vector<std::size_t> ExponentVector::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] != 0) s.push_back(i);
  return s;
}

std::uint64_t ExponentVector::support_mask() const {
  assert(e_.size() <= 64);
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] != 0) m |= std::uint64_t{1} << i;
  return m;
}

bool ExponentVector::divides(const ExponentVector& other) const {
  if (size() != other.size()) throw LengthMismatch();
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > other.e_[i]) return false;
  return true;
}

ExponentVector ExponentVector::plus(const ExponentVector& o) const {
  if (size() != o.size()) throw LengthMismatch();
  ExponentVector r(size());
  for (std::size_t i = 0; i < size(); ++i) r.e_[i] = e_[i] + o.e_[i];
  return r;
}

ExponentVector ExponentVector::minus(const ExponentVector& o) const {
  if (size() != o.size()) throw LengthMismatch();
  ExponentVector r(size());
  for (std::size_t i = 0; i < size(); ++i) {
    assert(e_[i] >= o.e_[i]);
    r.e_[i] = e_[i] - o.e_[i];
  }
  return r;
}

void ExponentVector::replace(const ExponentVector& sub,
                             const ExponentVector& add) {
  if (size() != sub.size() || size() != add.size()) throw LengthMismatch();
  for (std::size_t i = 0; i < e_.size(); ++i) {
    e_[i] = e_[i] - sub.e_[i] + add.e_[i];
    assert(e_[i] >= 0);
  }
}

ExponentVector ExponentVector::lcm(const ExponentVector& a,
                                   const ExponentVector& b) {
  if (a.size() != b.size()) throw LengthMismatch();
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r.e_[i] = std::max(a.e_[i], b.e_[i]);
  return r;
}

ExponentVector ExponentVector::gcd(const ExponentVector& a,
                                   const ExponentVector& b) {
  if (a.size() != b.size()) throw LengthMismatch();
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r.e_[i] = std::min(a.e_[i], b.e_[i]);
  return r;
}

bool ExponentVector::coprime(const ExponentVector& a, const ExponentVector& b) {
  if (a.size() != b.size()) throw LengthMismatch();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a.e_[i] != 0 && b.e_[i] != 0) return false;
  return true;
}

MonomialOrder::MonomialOrder(Kind kind, std::size_t n) : kind_(kind), n_(n) {}

namespace {
void check_priority(const std::vector<std::size_t>& pri) {
  std::vector<char> seen(pri.size(), 0);
  for (std::size_t v : pri) {
    if (v >= pri.size() || seen[v]) throw Error("priority is not a permutation");
    seen[v] = 1;
  }
}
}  // namespace

std::vector<std::size_t> MonomialOrder::identity_priority(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

MonomialOrder MonomialOrder::lex(std::vector<std::size_t> priority) {
  check_priority(priority);
  MonomialOrder o(Kind::lex, priority.size());
  o.priority_ = std::move(priority);
  return o;
}

MonomialOrder MonomialOrder::grlex(std::vector<std::size_t> priority) {
  check_priority(priority);
  MonomialOrder o(Kind::grlex, priority.size());
  o.priority_ = std::move(priority);
  return o;
}

MonomialOrder MonomialOrder::grevlex(std::vector<std::size_t> priority) {
  check_priority(priority);
  MonomialOrder o(Kind::grevlex, priority.size());
  o.priority_ = std::move(priority);
  return o;
}

MonomialOrder MonomialOrder::weighted(std::vector<std::int64_t> weights,
                                      MonomialOrder tiebreak) {
  if (weights.size() != tiebreak.num_vars())
    throw Error("weight vector length does not match tie-break order");
  for (std::int64_t w : weights) {
    if (w < 0) throw Error("weights must be non-negative");
  }
  MonomialOrder o(Kind::weighted, weights.size());
  o.weights_ = std::move(weights);
  o.tiebreak_ = std::make_shared<const MonomialOrder>(std::move(tiebreak));
  return o;
}

namespace {

Ordering from_int(std::int64_t d) {
  if (d > 0) return Ordering::GT;
  if (d < 0) return Ordering::LT;
  return Ordering::EQ;
}

Ordering lex_scan(const std::vector<std::size_t>& pri, const ExponentVector& a,
                  const ExponentVector& b) {
  for (std::size_t v : pri) {
    if (a[v] != b[v]) return from_int(a[v] - b[v]);
  }
  return Ordering::EQ;
}

Ordering grevlex_scan(const std::vector<std::size_t>& pri,
                      const ExponentVector& a, const ExponentVector& b) {
  std::int64_t d = a.degree() - b.degree();
  if (d != 0) return from_int(d);
  // Last variable (in priority order) where they differ: the side with the
  // smaller exponent there is the greater monomial.
  for (std::size_t i = pri.size(); i > 0; --i) {
    std::size_t v = pri[i - 1];
    if (a[v] != b[v]) return from_int(b[v] - a[v]);
  }
  return Ordering::EQ;
}

}  // namespace

Ordering MonomialOrder::compare(const ExponentVector& a,
                                const ExponentVector& b) const {
  if (a.size() != n_ || b.size() != n_) throw LengthMismatch();
  switch (kind_) {
    case Kind::lex:
      return lex_scan(priority_, a, b);
    case Kind::grlex: {
      std::int64_t d = a.degree() - b.degree();
      if (d != 0) return from_int(d);
      return lex_scan(priority_, a, b);
    }
    case Kind::grevlex:
      return grevlex_scan(priority_, a, b);
    case Kind::weighted: {
      std::int64_t wa = 0, wb = 0;
      for (std::size_t i = 0; i < n_; ++i) {
        wa += weights_[i] * a[i];
        wb += weights_[i] * b[i];
      }
      if (wa != wb) return from_int(wa - wb);
      return tiebreak_->compare(a, b);
    }
  }
  throw Error("unreachable");
}

std::string MonomialOrder::describe() const {
  auto pri_text = [this]() {
    std::string s;
    for (std::size_t i = 0; i < priority_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(priority_[i] + 1);
    }
    return s;
  };
  switch (kind_) {
    case Kind::lex:
      return "lex:" + pri_text();
    case Kind::grlex:
      return "grlex:" + pri_text();
    case Kind::grevlex:
      return "grevlex:" + pri_text();
    case Kind::weighted:
      return "weighted";
  }
  return "?";
}

Ordering compare_grevlex(const ExponentVector& a, const ExponentVector& b) {
  if (a.size() != b.size()) throw LengthMismatch();
  std::int64_t d = a.degree() - b.degree();
  if (d > 0) return Ordering::GT;
  if (d < 0) return Ordering::LT;
  for (std::size_t i = a.size(); i > 0; --i) {
    if (a[i - 1] != b[i - 1])
      return b[i - 1] > a[i - 1] ? Ordering::GT : Ordering::LT;
  }
  return Ordering::EQ;
}

}  // namespace codeal
