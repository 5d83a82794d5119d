#include "shv/jordan.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace shv {

std::size_t JordanType::total_dimension() const {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.size * b.multiplicity;
  return n;
}

Matrix JordanType::to_matrix() const {
  std::size_t n = total_dimension();
  Matrix m(n, n);
  std::size_t off = 0;
  for (const auto& b : blocks)
    for (std::size_t c = 0; c < b.multiplicity; ++c) {
      for (std::size_t i = 0; i < b.size; ++i) {
        m.at(off + i, off + i) = b.eigenvalue;
        if (i + 1 < b.size) m.at(off + i, off + i + 1) = 1;
      }
      off += b.size;
    }
  return m;
}

namespace {

Rational eval_poly(const std::vector<Rational>& p, const Rational& x) {
  Rational v;
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + *it;
  return v;
}

// Divides p by (x - r); p must have r as a root.
std::vector<Rational> deflate(const std::vector<Rational>& p, const Rational& r) {
  std::vector<Rational> q(p.size() - 1);
  Rational carry;
  for (std::size_t i = p.size(); i-- > 1;) {
    carry = p[i] + carry * r;
    q[i - 1] = carry;
  }
  return q;
}

std::vector<BigInt> divisors(BigInt n) {
  if (n < 0) n = -n;
  std::map<BigInt, int> factors;
  for (BigInt d = 2; d * d <= n && d < 1000000; ++d)
    while (n % d == 0) {
      ++factors[d];
      n /= d;
    }
  if (n > 1) factors[n] = 1;  // leftover, prime or not; still a usable candidate
  std::vector<BigInt> divs{1};
  for (const auto& [p, e] : factors) {
    std::vector<BigInt> next;
    BigInt pk = 1;
    for (int k = 0; k <= e; ++k) {
      for (const auto& d : divs) next.push_back(d * pk);
      pk *= p;
    }
    divs = std::move(next);
    if (divs.size() > 200000) break;  // candidate cap; unsplit factors get reported
  }
  return divs;
}

std::string poly_str(const std::vector<Rational>& p) {
  std::ostringstream os;
  for (std::size_t i = p.size(); i-- > 0;) {
    os << p[i] << "*x^" << i;
    if (i) os << " + ";
  }
  return os.str();
}

// All rational roots with multiplicity; throws when p does not split.
std::map<Rational, std::size_t> rational_roots(std::vector<Rational> p) {
  std::map<Rational, std::size_t> roots;
  while (p.size() > 1) {
    if (p.size() == 2) {  // linear: x + c
      roots[-(p[0] / p[1])]++;
      break;
    }
    BigInt denom_lcm = 1;
    for (const auto& c : p) denom_lcm = boost::multiprecision::lcm(denom_lcm, c.denominator());
    BigInt a0 = (p.front() * Rational(denom_lcm)).numerator();
    BigInt an = (p.back() * Rational(denom_lcm)).numerator();
    bool found = false;
    for (const auto& num : divisors(a0)) {
      for (const auto& den : divisors(an)) {
        for (int s : {1, -1}) {
          Rational cand(s > 0 ? num : -num, den);
          if (eval_poly(p, cand).is_zero()) {
            // Take the full multiplicity of this root at once.
            while (p.size() > 1 && eval_poly(p, cand).is_zero()) {
              roots[cand]++;
              p = deflate(p, cand);
            }
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) throw SpectrumNotRational(poly_str(p));
  }
  return roots;
}

}  // namespace

JordanType jordan_blocks(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("jordan_blocks: non-square matrix");
  std::size_t n = m.rows();
  std::vector<Rational> p = char_poly(m);
  if (p[0].is_zero()) throw NotInvertible();
  auto roots = rational_roots(p);
  std::size_t covered = 0;
  for (const auto& [r, mult] : roots) covered += mult;
  if (covered != n) throw SpectrumNotRational(poly_str(p));

  JordanType jt;
  for (const auto& [lambda, alg_mult] : roots) {
    Matrix shifted = m - Matrix::identity(n) * lambda;
    // d[k] = dim ker shifted^k; blocks of size k: 2 d_k - d_{k-1} - d_{k+1}.
    std::vector<std::size_t> d{0};
    Matrix powk = Matrix::identity(n);
    while (d.back() < alg_mult) {
      powk = powk * shifted;
      d.push_back(n - powk.rank());
    }
    d.push_back(d.back());
    for (std::size_t k = 1; k + 1 < d.size(); ++k) {
      std::size_t cnt = 2 * d[k] - d[k - 1] - d[k + 1];
      if (cnt > 0) jt.blocks.push_back({lambda, k, cnt});
    }
  }
  std::sort(jt.blocks.begin(), jt.blocks.end());
  return jt;
}

}  // namespace shv
