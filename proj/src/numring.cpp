#include "gtl/numring.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace gtl {

namespace {

using IPoly = std::vector<Int>;  // ascending coefficients
using RPoly = std::vector<Rat>;

IPoly poly_mul(const IPoly& a, const IPoly& b) {
  IPoly r(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

IPoly poly_add(const IPoly& a, const IPoly& b) {
  IPoly r(std::max(a.size(), b.size()), Int(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

// Exact division by a monic divisor; throws if the remainder is nonzero.
IPoly poly_divexact(IPoly num, const IPoly& den) {
  if (num.size() < den.size()) throw std::logic_error("poly_divexact: degree");
  IPoly quot(num.size() - den.size() + 1, Int(0));
  for (size_t i = quot.size(); i-- > 0;) {
    Int c = num[i + den.size() - 1];
    quot[i] = c;
    if (c == 0) continue;
    for (size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
  }
  for (const Int& c : num)
    if (c != 0) throw std::logic_error("poly_divexact: remainder");
  return quot;
}

// Monic Chebyshev-like S_k: S_0 = 1, S_1 = x, S_k = x S_{k-1} - S_{k-2}.
// Roots of S_k are 2cos(j pi / (k+1)), j = 1..k.
IPoly cheb_s(int k) {
  IPoly prev{Int(1)}, cur{Int(0), Int(1)};
  if (k == 0) return prev;
  for (int i = 2; i <= k; ++i) {
    IPoly next(cur.size() + 1, Int(0));
    for (size_t j = 0; j < cur.size(); ++j) next[j + 1] = cur[j];
    for (size_t j = 0; j < prev.size(); ++j) next[j] -= prev[j];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

// Product over 1 <= j < n/2, gcd-free of nothing: prod (x - 2cos(2 pi j / n)).
IPoly cos_product(int n) {
  if (n % 2 == 0) return cheb_s(n / 2 - 1);
  return poly_add(cheb_s((n - 1) / 2), cheb_s((n - 3) / 2));
}

// Minimal polynomial of 2cos(2 pi / n) for n >= 3.
IPoly min_poly_2cos(int n) {
  IPoly g = cos_product(n);
  for (int d = 3; d < n; ++d)
    if (n % d == 0) g = poly_divexact(g, min_poly_2cos(d));
  return g;
}

Rat eval(const IPoly& p, const Rat& x) {
  Rat r = 0;
  for (size_t i = p.size(); i-- > 0;) r = r * x + Rat(p[i]);
  return r;
}

RPoly to_rpoly(const IPoly& p) {
  RPoly r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[i] = Rat(p[i]);
  return r;
}

void rtrim(RPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RPoly rpoly_rem(RPoly num, const RPoly& den) {
  while (num.size() >= den.size() && !num.empty()) {
    Rat c = num.back() / den.back();
    size_t off = num.size() - den.size();
    for (size_t j = 0; j < den.size(); ++j) num[off + j] -= c * den[j];
    num.pop_back();
    rtrim(num);
  }
  return num;
}

int sign_changes(const std::vector<RPoly>& chain, const Rat& x) {
  int count = 0, last = 0;
  for (const RPoly& p : chain) {
    Rat val = 0;
    for (size_t i = p.size(); i-- > 0;) val = val * x + p[i];
    int s = val == 0 ? 0 : (val > 0 ? 1 : -1);
    if (s != 0) {
      if (last != 0 && s != last) ++count;
      last = s;
    }
  }
  return count;
}

}  // namespace

NumberRing::NumberRing(const std::vector<int>& finite_bonds) {
  int m = 1;
  for (int b : finite_bonds)
    if (b >= 4) m = std::lcm(m, b);
  m_ = m;
  if (m_ == 1) {
    minpoly_ = {Int(0), Int(1)};  // unused placeholder; the ring is Z
    lo_ = hi_ = 0;
    return;
  }
  minpoly_ = min_poly_2cos(2 * m_);

  // Sturm chain, used once to isolate a = the largest root of the minimal
  // polynomial inside (lo_, hi_].
  std::vector<RPoly> chain;
  chain.push_back(to_rpoly(minpoly_));
  RPoly der(minpoly_.size() - 1);
  for (size_t i = 1; i < minpoly_.size(); ++i) der[i - 1] = Rat(minpoly_[i] * Int(i));
  chain.push_back(der);
  while (chain.back().size() > 1) {
    RPoly r = rpoly_rem(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (Rat& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  auto count = [&](const Rat& a, const Rat& b) {
    return sign_changes(chain, a) - sign_changes(chain, b);
  };
  Rat lo = -2, hi = 2;
  while (count(lo, hi) > 1) {
    Rat mid = (lo + hi) / 2;
    if (count(mid, hi) >= 1)
      lo = mid;
    else
      hi = mid;
  }
  lo_ = lo;
  hi_ = hi;
}

NumberRing::Elem NumberRing::integer(long c) const {
  Elem e = zero();
  e[0] = c;
  return e;
}

NumberRing::Elem NumberRing::gen() const {
  if (degree() < 2) throw std::logic_error("gen: ring is Z");
  Elem e = zero();
  e[1] = 1;
  return e;
}

NumberRing::Elem NumberRing::cosval(int m) const {
  if (m == 0) return integer(2);  // infinite bond
  if (m == 2) return integer(0);
  if (m == 3) return integer(1);
  if (m < 2 || m_ % m != 0)
    throw std::invalid_argument("cosval: bond strength outside ring level");
  // 2cos(k t) from 2cos(t) by the Dickson recurrence, k = M/m.
  int k = m_ / m;
  Elem prev = integer(2), cur = gen();
  for (int i = 2; i <= k; ++i) {
    Elem next = sub(mul(gen(), cur), prev);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return k == 0 ? prev : cur;
}

bool NumberRing::is_zero(const Elem& x) const {
  for (const Int& c : x)
    if (c != 0) return false;
  return true;
}

NumberRing::Elem NumberRing::add(const Elem& x, const Elem& y) const {
  Elem r = x;
  for (int i = 0; i < degree(); ++i) r[i] += y[i];
  return r;
}

NumberRing::Elem NumberRing::sub(const Elem& x, const Elem& y) const {
  Elem r = x;
  for (int i = 0; i < degree(); ++i) r[i] -= y[i];
  return r;
}

NumberRing::Elem NumberRing::neg(const Elem& x) const {
  Elem r = x;
  for (Int& c : r) c = -c;
  return r;
}

NumberRing::Elem NumberRing::mul(const Elem& x, const Elem& y) const {
  int d = degree();
  if (d == 1) return {x[0] * y[0]};
  std::vector<Int> conv(2 * d - 1, Int(0));
  for (int i = 0; i < d; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < d; ++j) conv[i + j] += x[i] * y[j];
  }
  for (int i = 2 * d - 2; i >= d; --i) {
    Int c = conv[i];
    if (c == 0) continue;
    for (int j = 0; j <= d; ++j) conv[i - d + j] -= c * minpoly_[j];
  }
  conv.resize(d);
  return conv;
}

NumberRing::Elem NumberRing::mul_int(const Elem& x, const Int& c) const {
  Elem r = x;
  for (Int& v : r) v *= c;
  return r;
}

void NumberRing::refine_interval() const {
  Rat mid = (lo_ + hi_) / 2;
  if (eval(minpoly_, mid) > 0)
    hi_ = mid;
  else
    lo_ = mid;
}

int NumberRing::sign(const Elem& x) const {
  if (is_zero(x)) return 0;
  if (degree() == 1) return x[0] > 0 ? 1 : -1;
  // Interval Horner evaluation over the isolating interval; x is reduced mod
  // an irreducible polynomial, so x(a) != 0 and bisection terminates.
  for (;;) {
    Rat lo = 0, hi = 0;
    for (size_t i = x.size(); i-- > 0;) {
      Rat c1 = lo * lo_, c2 = lo * hi_, c3 = hi * lo_, c4 = hi * hi_;
      lo = std::min(std::min(c1, c2), std::min(c3, c4)) + Rat(x[i]);
      hi = std::max(std::max(c1, c2), std::max(c3, c4)) + Rat(x[i]);
    }
    if (lo > 0) return 1;
    if (hi < 0) return -1;
    refine_interval();
  }
}

NumberRing::Elem NumberRing::exact_div(const Elem& num, const Elem& den) const {
  if (is_zero(den)) throw std::invalid_argument("exact_div: zero divisor");
  if (degree() == 1) {
    if (num[0] % den[0] != 0) throw std::logic_error("exact_div: not exact");
    return {num[0] / den[0]};
  }
  // Invert den in Q[x]/minpoly by the extended Euclid algorithm, then check
  // that the quotient has integer coordinates.
  RPoly r0 = to_rpoly(minpoly_), r1(den.size());
  for (size_t i = 0; i < den.size(); ++i) r1[i] = Rat(den[i]);
  rtrim(r1);
  RPoly s0{}, s1{Rat(1)};  // coefficients of den in r0, r1
  while (!r1.empty() && r1.size() > 1) {
    // r0 = q r1 + r; s two steps behind
    RPoly q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0, Rat(0));
    RPoly rem = r0;
    while (rem.size() >= r1.size() && !rem.empty()) {
      Rat c = rem.back() / r1.back();
      q[rem.size() - r1.size()] = c;
      size_t off = rem.size() - r1.size();
      for (size_t j = 0; j < r1.size(); ++j) rem[off + j] -= c * r1[j];
      rem.pop_back();
      rtrim(rem);
    }
    // s_next = s0 - q s1
    RPoly qs(q.size() + s1.size(), Rat(0));
    if (!s1.empty())
      for (size_t i = 0; i < q.size(); ++i)
        for (size_t j = 0; j < s1.size(); ++j) qs[i + j] += q[i] * s1[j];
    RPoly snext(std::max(s0.size(), qs.size()), Rat(0));
    for (size_t i = 0; i < s0.size(); ++i) snext[i] += s0[i];
    for (size_t i = 0; i < qs.size(); ++i) snext[i] -= qs[i];
    rtrim(snext);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(snext);
  }
  if (r1.empty()) throw std::logic_error("exact_div: divisor not invertible");
  // r1 is a nonzero constant: inverse of den is s1 / r1[0].
  RPoly inv = s1;
  for (Rat& c : inv) c /= r1[0];
  // quotient = num * inv mod minpoly, over Q
  RPoly conv(num.size() + inv.size(), Rat(0));
  for (size_t i = 0; i < num.size(); ++i)
    for (size_t j = 0; j < inv.size(); ++j) conv[i + j] += Rat(num[i]) * inv[j];
  size_t d = minpoly_.size() - 1;
  for (size_t i = conv.size(); i-- > d;) {
    Rat c = conv[i];
    if (c == 0) continue;
    for (size_t j = 0; j <= d; ++j) conv[i - d + j] -= c * Rat(minpoly_[j]);
  }
  Elem out = zero();
  for (size_t i = 0; i < d && i < conv.size(); ++i) {
    if (boost::multiprecision::denominator(conv[i]) != 1)
      throw std::logic_error("exact_div: not exact");
    out[i] = boost::multiprecision::numerator(conv[i]);
  }
  return out;
}

}  // namespace gtl
