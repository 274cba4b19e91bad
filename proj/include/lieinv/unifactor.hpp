#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "lieinv/rational.hpp"

namespace lieinv {

// Dense Z[x], coefficients low to high, no trailing zeros (zero = empty).
using ZPoly = std::vector<Int>;

namespace zx {

inline void trim(ZPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline int deg(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }

inline ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

inline Int content(const ZPoly& f) {
  Int g(0);
  for (const auto& c : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

inline ZPoly primitive(ZPoly f) {
  Int g = content(f);
  if (g > 1)
    for (auto& c : f) c /= g;
  return f;
}

// true (and quotient) when d divides f exactly over Z
inline bool try_divide(const ZPoly& f, const ZPoly& d, ZPoly& q) {
  if (d.empty()) throw std::invalid_argument("division by zero");
  ZPoly r = f;
  q.assign(f.size(), Int(0));
  while (deg(r) >= deg(d)) {
    Int rem;
    mpz_tdiv_r(rem.get_mpz_t(), r.back().get_mpz_t(), d.back().get_mpz_t());
    if (rem != 0) return false;
    Int c = r.back() / d.back();
    int shift = deg(r) - deg(d);
    q[shift] = c;
    for (std::size_t i = 0; i < d.size(); ++i) r[i + shift] -= c * d[i];
    trim(r);
    if (r.empty()) break;
  }
  trim(q);
  return r.empty();
}

}  // namespace zx

// ---------------------------------------------------------------------------
// F_p[x] arithmetic, p an odd prime < 2^31.
// ---------------------------------------------------------------------------

namespace fpx {

using FpPoly = std::vector<std::uint64_t>;

struct Fp {
  std::uint64_t p;
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p - b) % p; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % p; }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  std::uint64_t inv(std::uint64_t a) const { return pow(a % p, p - 2); }
};

inline void trim(FpPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline int deg(const FpPoly& f) { return static_cast<int>(f.size()) - 1; }

inline FpPoly from_z(const ZPoly& f, const Fp& K) {
  FpPoly r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    Int m = f[i] % static_cast<long>(K.p);
    if (m < 0) m += static_cast<long>(K.p);
    r[i] = m.get_ui();
  }
  trim(r);
  return r;
}

inline FpPoly mul(const FpPoly& a, const FpPoly& b, const Fp& K) {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % K.p;
  }
  trim(r);
  return r;
}

inline FpPoly monic(FpPoly f, const Fp& K) {
  if (f.empty()) return f;
  std::uint64_t il = K.inv(f.back());
  for (auto& c : f) c = K.mul(c, il);
  return f;
}

inline FpPoly rem(FpPoly a, const FpPoly& b, const Fp& K) {
  if (b.empty()) throw std::invalid_argument("mod by zero polynomial");
  std::uint64_t il = K.inv(b.back());
  while (deg(a) >= deg(b)) {
    std::uint64_t c = K.mul(a.back(), il);
    int shift = deg(a) - deg(b);
    for (std::size_t i = 0; i < b.size(); ++i)
      a[i + shift] = K.sub(a[i + shift], K.mul(c, b[i]));
    trim(a);
  }
  return a;
}

inline FpPoly gcd(FpPoly a, FpPoly b, const Fp& K) {
  while (!b.empty()) {
    FpPoly r = rem(a, b, K);
    a = std::move(b);
    b = std::move(r);
  }
  return a.empty() ? a : monic(std::move(a), K);
}

inline FpPoly derivative(const FpPoly& f, const Fp& K) {
  FpPoly r;
  for (std::size_t i = 1; i < f.size(); ++i) r.push_back(f[i] * (i % K.p) % K.p);
  trim(r);
  return r;
}

inline FpPoly powmod(FpPoly base, const Int& e, const FpPoly& mod, const Fp& K) {
  FpPoly r{1};
  base = rem(std::move(base), mod, K);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    r = rem(mul(r, r, K), mod, K);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = rem(mul(r, base, K), mod, K);
  }
  return r;
}

// equal-degree splitting (Cantor-Zassenhaus), f monic squarefree, all
// irreducible factors of degree d
inline void edf(const FpPoly& f, int d, const Fp& K, std::mt19937_64& rng,
                std::vector<FpPoly>& out) {
  if (deg(f) == d) {
    out.push_back(f);
    return;
  }
  Int exponent = (int_pow(Int(static_cast<unsigned long>(K.p)),
                          static_cast<unsigned long>(d)) - 1) / 2;
  while (true) {
    FpPoly a(static_cast<std::size_t>(deg(f)), 0);
    for (auto& c : a) c = rng() % K.p;
    trim(a);
    if (deg(a) < 1) continue;
    FpPoly g = gcd(f, a, K);
    if (deg(g) > 0 && deg(g) < deg(f)) {
      // lucky split straight from the gcd
    } else {
      FpPoly b = powmod(a, exponent, f, K);
      if (b.empty()) continue;
      b[0] = K.sub(b[0], 1);
      trim(b);
      g = gcd(f, b, K);
      if (deg(g) <= 0 || deg(g) >= deg(f)) continue;
    }
    // exact quotient f / g
    FpPoly q;
    {
      FpPoly a2 = f;
      std::uint64_t il = K.inv(g.back());
      q.assign(f.size(), 0);
      while (deg(a2) >= deg(g)) {
        std::uint64_t c = K.mul(a2.back(), il);
        int shift = deg(a2) - deg(g);
        q[static_cast<std::size_t>(shift)] = c;
        for (std::size_t i = 0; i < g.size(); ++i)
          a2[i + shift] = K.sub(a2[i + shift], K.mul(c, g[i]));
        trim(a2);
      }
      trim(q);
    }
    edf(g, d, K, rng, out);
    edf(monic(std::move(q), K), d, K, rng, out);
    return;
  }
}

// full factorization of a monic squarefree f over F_p
inline std::vector<FpPoly> factor_squarefree(FpPoly f, const Fp& K, std::mt19937_64& rng) {
  std::vector<FpPoly> out;
  FpPoly h{0, 1};  // x
  const FpPoly x{0, 1};
  int d = 0;
  while (deg(f) > 0 && 2 * (d + 1) <= deg(f)) {
    ++d;
    h = powmod(std::move(h), Int(static_cast<unsigned long>(K.p)), f, K);
    FpPoly hx = h;
    if (hx.size() < 2) hx.resize(2, 0);
    hx[1] = K.sub(hx[1], 1);
    trim(hx);
    FpPoly g = gcd(f, hx, K);
    if (deg(g) > 0) {
      edf(g, d, K, rng, out);
      // f /= g
      FpPoly q;
      std::uint64_t il = K.inv(g.back());
      q.assign(f.size(), 0);
      while (deg(f) >= deg(g)) {
        std::uint64_t c = K.mul(f.back(), il);
        int shift = deg(f) - deg(g);
        q[static_cast<std::size_t>(shift)] = c;
        for (std::size_t i = 0; i < g.size(); ++i)
          f[i + shift] = K.sub(f[i + shift], K.mul(c, g[i]));
        trim(f);
      }
      trim(q);
      f = monic(std::move(q), K);
      h = rem(h, f, K);
    }
  }
  if (deg(f) > 0) out.push_back(f);
  return out;
}

}  // namespace fpx

// ---------------------------------------------------------------------------
// Hensel lifting and Zassenhaus recombination.
// ---------------------------------------------------------------------------

namespace detail_hensel {

inline ZPoly mod_sym(ZPoly f, const Int& m) {
  for (auto& c : f) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (2 * r >= m) r -= m;
    c = r;
  }
  zx::trim(f);
  return f;
}

inline ZPoly mod_pos(ZPoly f, const Int& m) {
  for (auto& c : f) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    c = r;
  }
  zx::trim(f);
  return f;
}

// division with remainder by a monic divisor, coefficients mod m
inline void divrem_monic_mod(const ZPoly& a, const ZPoly& b, const Int& m, ZPoly& q,
                             ZPoly& r) {
  r = mod_pos(a, m);
  q.assign(std::max<std::size_t>(a.size(), 1), Int(0));
  while (zx::deg(r) >= zx::deg(b)) {
    Int c = r.back();
    int shift = zx::deg(r) - zx::deg(b);
    q[static_cast<std::size_t>(shift)] = c;
    // b monic: the leading term cancels exactly over Z
    for (std::size_t i = 0; i < b.size(); ++i) r[i + shift] -= c * b[i];
    r = mod_pos(std::move(r), m);
  }
  zx::trim(q);
}

// One quadratic Hensel step (von zur Gathen & Gerhard, Alg. 15.10):
// f = g h (mod m), s g + t h = 1 (mod m), h monic  ==>  same mod m^2.
inline void hensel_step(const Int& m, const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s,
                        ZPoly& t) {
  const Int m2 = m * m;
  ZPoly e = mod_pos(ZPoly(f), m2);
  {
    ZPoly gh = zx::mul(g, h);
    for (std::size_t i = 0; i < gh.size(); ++i) {
      if (i >= e.size()) e.resize(i + 1, Int(0));
      e[i] -= gh[i];
    }
    e = mod_pos(std::move(e), m2);
  }
  ZPoly q, r;
  divrem_monic_mod(zx::mul(s, e), h, m2, q, r);
  ZPoly gstar = g;
  {
    ZPoly te = zx::mul(t, e), qg = zx::mul(q, g);
    std::size_t n = std::max({gstar.size(), te.size(), qg.size()});
    gstar.resize(n, Int(0));
    for (std::size_t i = 0; i < te.size(); ++i) gstar[i] += te[i];
    for (std::size_t i = 0; i < qg.size(); ++i) gstar[i] += qg[i];
    gstar = mod_pos(std::move(gstar), m2);
  }
  ZPoly hstar = h;
  {
    std::size_t n = std::max(hstar.size(), r.size());
    hstar.resize(n, Int(0));
    for (std::size_t i = 0; i < r.size(); ++i) hstar[i] += r[i];
    hstar = mod_pos(std::move(hstar), m2);
  }
  // Bezout update
  ZPoly b;
  {
    ZPoly sg = zx::mul(s, gstar), th = zx::mul(t, hstar);
    std::size_t n = std::max(sg.size(), th.size());
    b.assign(n, Int(0));
    for (std::size_t i = 0; i < sg.size(); ++i) b[i] += sg[i];
    for (std::size_t i = 0; i < th.size(); ++i) b[i] += th[i];
    if (b.empty()) b.assign(1, Int(0));
    b[0] -= 1;
    b = mod_pos(std::move(b), m2);
  }
  ZPoly c, d;
  divrem_monic_mod(zx::mul(s, b), hstar, m2, c, d);
  ZPoly sstar = s;
  {
    std::size_t n = std::max(sstar.size(), d.size());
    sstar.resize(n, Int(0));
    for (std::size_t i = 0; i < d.size(); ++i) sstar[i] -= d[i];
    sstar = mod_pos(std::move(sstar), m2);
  }
  ZPoly tstar;
  {
    ZPoly tb = zx::mul(t, b), cg = zx::mul(c, gstar);
    std::size_t n = std::max({t.size(), tb.size(), cg.size()});
    tstar.assign(n, Int(0));
    for (std::size_t i = 0; i < t.size(); ++i) tstar[i] += t[i];
    for (std::size_t i = 0; i < tb.size(); ++i) tstar[i] -= tb[i];
    for (std::size_t i = 0; i < cg.size(); ++i) tstar[i] -= cg[i];
    tstar = mod_pos(std::move(tstar), m2);
  }
  g = std::move(gstar);
  h = std::move(hstar);
  s = std::move(sstar);
  t = std::move(tstar);
}

// extended euclid over F_p for initial Bezout cofactors
inline void fp_bezout(const fpx::FpPoly& g, const fpx::FpPoly& h, const fpx::Fp& K,
                      fpx::FpPoly& s, fpx::FpPoly& t) {
  fpx::FpPoly r0 = g, r1 = h;
  fpx::FpPoly s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    // divide r0 by r1
    fpx::FpPoly q(std::max<std::size_t>(r0.size(), 1), 0);
    fpx::FpPoly rr = r0;
    std::uint64_t il = K.inv(r1.back());
    while (fpx::deg(rr) >= fpx::deg(r1)) {
      std::uint64_t c = K.mul(rr.back(), il);
      int shift = fpx::deg(rr) - fpx::deg(r1);
      q[static_cast<std::size_t>(shift)] = c;
      for (std::size_t i = 0; i < r1.size(); ++i)
        rr[i + shift] = K.sub(rr[i + shift], K.mul(c, r1[i]));
      fpx::trim(rr);
    }
    fpx::trim(q);
    auto combine = [&](const fpx::FpPoly& a0, const fpx::FpPoly& a1) {
      fpx::FpPoly qa = fpx::mul(q, a1, K);
      fpx::FpPoly res = a0;
      if (res.size() < qa.size()) res.resize(qa.size(), 0);
      for (std::size_t i = 0; i < qa.size(); ++i) res[i] = K.sub(res[i], qa[i]);
      fpx::trim(res);
      return res;
    };
    fpx::FpPoly s2 = combine(s0, s1), t2 = combine(t0, t1);
    r0 = std::move(r1);
    r1 = std::move(rr);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  // r0 = gcd (a unit for coprime inputs); normalize to 1
  if (fpx::deg(r0) != 0) throw std::logic_error("hensel bezout: factors not coprime");
  std::uint64_t il = K.inv(r0[0]);
  for (auto& c : s0) c = K.mul(c, il);
  for (auto& c : t0) c = K.mul(c, il);
  s = std::move(s0);
  t = std::move(t0);
}

inline ZPoly z_from_fp(const fpx::FpPoly& f) {
  ZPoly r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = Int(static_cast<unsigned long>(f[i]));
  return r;
}

// Lifts f = lc(f) * prod(fac_i) (mod p) to the same congruence mod p^2^steps
// via a factor tree.  fac_i monic mod p, pairwise coprime.  Output entries
// are mod-p^(2^steps) images; the first carries lc(f).
inline void lift_tree(const ZPoly& f, std::vector<fpx::FpPoly> facs, const fpx::Fp& K,
                      int steps, std::vector<ZPoly>& out) {
  if (facs.size() == 1) {
    Int modulus(static_cast<unsigned long>(K.p));
    for (int i = 0; i < steps; ++i) modulus *= modulus;
    out.push_back(mod_pos(f, modulus));
    return;
  }
  std::size_t half = facs.size() / 2;
  fpx::FpPoly gm{1}, hm{1};
  for (std::size_t i = 0; i < half; ++i) gm = fpx::mul(gm, facs[i], K);
  for (std::size_t i = half; i < facs.size(); ++i) hm = fpx::mul(hm, facs[i], K);
  // attach lc(f) to the left part
  ZPoly fz = f;
  Int lc = fz.back();
  fpx::FpPoly lcg = gm;
  {
    Int lp = lc % static_cast<long>(K.p);
    if (lp < 0) lp += static_cast<long>(K.p);
    for (auto& c : lcg) c = K.mul(c, lp.get_ui());
  }
  fpx::FpPoly s, t;
  fp_bezout(lcg, hm, K, s, t);
  ZPoly g = z_from_fp(lcg), h = z_from_fp(hm), sz = z_from_fp(s), tz = z_from_fp(t);
  Int m(static_cast<unsigned long>(K.p));
  for (int i = 0; i < steps; ++i) {
    hensel_step(m, fz, g, h, sz, tz);
    m *= m;
  }
  std::vector<fpx::FpPoly> left(facs.begin(), facs.begin() + static_cast<std::ptrdiff_t>(half));
  std::vector<fpx::FpPoly> right(facs.begin() + static_cast<std::ptrdiff_t>(half), facs.end());
  lift_tree(g, std::move(left), K, steps, out);
  lift_tree(h, std::move(right), K, steps, out);
}

}  // namespace detail_hensel

// Irreducible factors over Q of a primitive squarefree f in Z[x] with
// deg f >= 1 (Zassenhaus: factor mod p, Hensel lift, subset recombination).
inline std::vector<ZPoly> factor_univariate_squarefree(const ZPoly& f_in) {
  ZPoly f = f_in;
  zx::trim(f);
  if (zx::deg(f) < 1) throw std::invalid_argument("univariate factor: not a polynomial");
  if (zx::deg(f) == 1) return {f};

  static const std::uint64_t primes[] = {
      3,   5,   7,   11,  13,  17,  19,  23,  29,  31,  37,  41,  43,  53,  59,
      61,  67,  71,  73,  79,  83,  89,  97,  101, 103, 107, 109, 113, 127, 131,
      137, 139, 149, 151, 157, 163, 167, 173, 179, 181, 191, 193, 197, 199, 211,
      223, 227, 229, 233, 239, 241, 251, 257, 263, 269, 271, 277, 281, 283, 293,
      307, 311, 313, 317, 331, 337, 347, 349, 353, 359, 367, 373, 379, 383, 389,
      397, 401, 409, 419, 421, 431, 433, 439, 443, 449, 457, 461, 463, 467, 479,
      487, 491, 499, 503, 509, 521, 523, 541, 547, 557, 563, 569, 571, 577, 587};

  std::mt19937_64 rng(0x5eed1234abcdefULL);
  for (std::uint64_t pv : primes) {
    fpx::Fp K{pv};
    if (f.back() % static_cast<long>(pv) == 0) continue;
    fpx::FpPoly fp = fpx::from_z(f, K);
    if (fpx::deg(fp) != zx::deg(f)) continue;
    fpx::FpPoly d = fpx::derivative(fp, K);
    if (d.empty()) continue;
    fpx::FpPoly g = fpx::gcd(fp, d, K);
    if (fpx::deg(g) != 0) continue;  // not squarefree mod p

    std::vector<fpx::FpPoly> modular = fpx::factor_squarefree(fpx::monic(fp, K), K, rng);
    if (modular.size() == 1) return {f};
    std::sort(modular.begin(), modular.end(),
              [](const fpx::FpPoly& a, const fpx::FpPoly& b) {
                return a.size() != b.size() ? a.size() < b.size() : a < b;
              });

    // coefficient bound: |factor coeffs| * |lc| <= 2^n * ||f||_1 * |lc|
    Int bound = abs(f.back());
    {
      Int norm(0);
      for (const auto& c : f) norm += abs(c);
      bound *= norm;
      bound <<= static_cast<unsigned long>(zx::deg(f) + 1);
    }
    Int modulus(static_cast<unsigned long>(pv));
    int steps = 0;
    while (modulus <= 2 * bound) {
      modulus *= modulus;
      ++steps;
    }
    std::vector<ZPoly> lifted;
    detail_hensel::lift_tree(f, modular, K, steps, lifted);
    // strip the lc attached to the first lifted image: recombination
    // rescales every candidate by lc anyway, so normalize all to monic-like
    // mod-images of the monic modular factors
    // (lifted[i] = lc * g_i for i == 0; make it monic mod modulus)
    {
      Int lc = f.back();
      Int linv;
      if (mpz_invert(linv.get_mpz_t(), lc.get_mpz_t(), modulus.get_mpz_t()) == 0)
        continue;  // should not happen: p chosen coprime to lc
      for (auto& c : lifted[0]) c = (c * linv) % modulus;
      lifted[0] = detail_hensel::mod_pos(std::move(lifted[0]), modulus);
    }

    // subset recombination
    std::vector<ZPoly> result;
    std::vector<int> alive(lifted.size(), 1);
    ZPoly rem = f;
    std::size_t nalive = lifted.size();
    for (std::size_t card = 1; card <= nalive; ++card) {
      if (card > nalive / 2 + (nalive % 2)) break;
      // enumerate index subsets of size card over alive factors
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < lifted.size(); ++i)
        if (alive[i]) idx.push_back(i);
      if (card > idx.size()) break;
      std::vector<std::size_t> comb(card);
      for (std::size_t i = 0; i < card; ++i) comb[i] = i;
      bool advanced = true;
      while (advanced) {
        // candidate = lc * prod of chosen, symmetric mod
        ZPoly cand{rem.back()};
        for (std::size_t i = 0; i < card; ++i) {
          cand = zx::mul(cand, lifted[idx[comb[i]]]);
          cand = detail_hensel::mod_pos(std::move(cand), modulus);
        }
        cand = detail_hensel::mod_sym(std::move(cand), modulus);
        cand = zx::primitive(std::move(cand));
        ZPoly q;
        if (!cand.empty() && zx::deg(cand) >= 1 && zx::try_divide(rem, cand, q)) {
          result.push_back(cand);
          rem = q;
          for (std::size_t i = 0; i < card; ++i) alive[idx[comb[i]]] = 0;
          nalive -= card;
          idx.clear();
          for (std::size_t i = 0; i < lifted.size(); ++i)
            if (alive[i]) idx.push_back(i);
          if (card > idx.size()) break;
          for (std::size_t i = 0; i < card; ++i) comb[i] = i;
          continue;
        }
        // next combination
        advanced = false;
        for (std::size_t i = card; i-- > 0;) {
          if (comb[i] + (card - i) < idx.size()) {
            ++comb[i];
            for (std::size_t j = i + 1; j < card; ++j) comb[j] = comb[j - 1] + 1;
            advanced = true;
            break;
          }
        }
      }
    }
    if (zx::deg(rem) >= 1) result.push_back(zx::primitive(rem));
    return result;
  }
  throw std::runtime_error("univariate factorization: no usable prime found");
}

}  // namespace lieinv
