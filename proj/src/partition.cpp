#include "schur_ample/partition.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "schur_ample/multiindex.hpp"

namespace schur_ample {

Partition::Partition(std::vector<long> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("partition: no parts");
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition: parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition: parts must be weakly decreasing");
  }
}

Partition Partition::parse(const std::string& csv) {
  std::vector<long> parts;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    long v = std::stol(item, &pos);
    if (pos != item.size()) throw std::invalid_argument("partition: bad part '" + item + "'");
    parts.push_back(v);
  }
  return Partition(parts);
}

long Partition::weight() const {
  long w = 0;
  for (long p : parts_) w += p;
  return w;
}

long Partition::part(long i) const {
  if (i < 1) throw std::invalid_argument("partition: part index is 1-based");
  return i <= num_parts() ? parts_[i - 1] : 0;
}

Partition Partition::conjugate() const {
  // λ*_j = #{i | λ_i >= j}
  std::vector<long> conj(parts_[0], 0);
  for (long p : parts_)
    for (long j = 0; j < p; ++j) ++conj[j];
  return Partition(conj);
}

Partition Partition::scaled(long m) const {
  if (m <= 0) throw std::invalid_argument("partition: scale must be positive");
  std::vector<long> parts = parts_;
  for (long& p : parts) p *= m;
  return Partition(parts);
}

long Partition::parts_gcd() const {
  long g = 0;
  for (long p : parts_) g = std::gcd(g, p);
  return g;
}

Partition Partition::primitive() const {
  long g = parts_gcd();
  std::vector<long> parts = parts_;
  for (long& p : parts) p /= g;
  return Partition(parts);
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

JumpSequence jump_sequence(const Partition& lambda) {
  // λ_i > λ_{i+1} (with λ_{k+1} = 0) exactly at the jump indices.
  JumpSequence s;
  long k = lambda.num_parts();
  for (long i = k; i >= 1; --i) {
    long next = (i == k) ? 0 : lambda.part(i + 1);
    if (lambda.part(i) > next) s.values.push_back(i);
  }
  // Multiplicities from λ* = (s₁^{b₁}, …, s_t^{b_t}).
  Partition conj = lambda.conjugate();
  s.multiplicities.assign(s.values.size(), 0);
  for (long p : conj.parts())
    for (std::size_t i = 0; i < s.values.size(); ++i)
      if (p == s.values[i]) ++s.multiplicities[i];
  return s;
}

long ampleness_weight(const Partition& lambda) {
  return lambda.weight() + lambda.part(1);
}

long ampleness_weight_primitive(const Partition& lambda) {
  return ampleness_weight(lambda) / lambda.parts_gcd();
}

bool br_vanishes(long N, long c, const Partition& lambda) {
  if (c < 1 || c > N) throw std::invalid_argument("br_vanishes: need 1 <= c <= N");
  Partition conj = lambda.conjugate();
  long sum = 0;
  for (long j = 1; j <= c; ++j) sum += conj.part(j);  // missing parts read 0
  return sum < N - c;
}

OptimalityReport optimality_audit(long N, long c, const Partition& lambda, long m_max) {
  OptimalityReport rep;
  rep.N = N;
  rep.c = c;
  long k = lambda.num_parts();
  rep.precondition_ok = (k + 1) * c < N;
  if (!rep.precondition_ok) return rep;  // the theorem's codimension regime applies instead
  rep.m_lo = c;
  rep.m_hi = m_max;
  for (long m = c; m <= m_max; ++m)
    if (!br_vanishes(N, c, lambda.scaled(m))) rep.violations.push_back(m);
  return rep;
}

mpz_class schur_dim(const Partition& lambda, long n) {
  if (lambda.num_parts() > n) return 0;
  // Hook content: dim = prod over cells (n + j - i) / hook(i,j), 0-based cells.
  Partition conj = lambda.conjugate();
  mpq_class acc = 1;
  for (long i = 0; i < lambda.num_parts(); ++i) {
    for (long j = 0; j < lambda.part(i + 1); ++j) {
      long arm = lambda.part(i + 1) - j - 1;
      long leg = conj.part(j + 1) - i - 1;
      long hook = arm + leg + 1;
      acc *= mpq_class(n + j - i, hook);
    }
  }
  acc.canonicalize();
  if (acc.get_den() != 1) throw std::runtime_error("schur_dim: hook content not integral");
  return acc.get_num();
}

QuotientBound quotient_upper_bound(const Partition& lambda, long n) {
  JumpSequence s = jump_sequence(lambda);
  if (s.s1() > n) throw std::invalid_argument("quotient_upper_bound: need s1 <= n");
  QuotientBound out;
  out.lhs = schur_dim(lambda, n);
  // Factor at level i: S^{λ_{s_i} - λ_{s_{i-1}}} of Λ^{s_i}(n-space), λ_{s₀} = 0.
  out.rhs = 1;
  long prev = 0;
  for (long i = 0; i < s.t(); ++i) {
    long e = lambda.part(s.values[i]) - prev;
    mpz_class dim_wedge = binomial(n, s.values[i]);
    long dw = static_cast<long>(dim_wedge.get_si());
    out.rhs *= binomial(dw + e - 1, e);  // dim S^e of a dw-dimensional space
    prev = lambda.part(s.values[i]);
  }
  out.ok = out.lhs <= out.rhs;
  return out;
}

long flag_dim(const JumpSequence& s, long n) {
  if (s.s1() > n - 1) throw std::invalid_argument("flag_dim: need s1 <= n-1");
  long dim = 0, prev = n;  // s₀ = n
  for (long v : s.values) {
    dim += v * (prev - v);
    prev = v;
  }
  return dim;
}

}  // namespace schur_ample
