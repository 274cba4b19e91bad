#pragma once

#include <algorithm>
#include <random>
#include <utility>
#include <vector>

#include "lieinv/gcd.hpp"
#include "lieinv/multipoly.hpp"
#include "lieinv/unifactor.hpp"

namespace lieinv {

namespace qx {

// dense Q[x], low to high
using QPoly = std::vector<Rat>;

inline void trim(QPoly& f) {
  while (!f.empty() && is_zero(f.back())) f.pop_back();
}

inline int deg(const QPoly& f) { return static_cast<int>(f.size()) - 1; }

inline QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

inline void divrem(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
  r = a;
  trim(r);
  q.assign(std::max<std::size_t>(a.size(), 1), Rat(0));
  while (deg(r) >= deg(b)) {
    Rat c = r.back() / b.back();
    int shift = deg(r) - deg(b);
    q[static_cast<std::size_t>(shift)] = c;
    for (std::size_t i = 0; i < b.size(); ++i) r[i + shift] -= c * b[i];
    trim(r);
  }
  trim(q);
}

inline QPoly mod(const QPoly& a, const QPoly& b) {
  QPoly q, r;
  divrem(a, b, q, r);
  return r;
}

// s with s*a == 1 (mod m), a and m coprime
inline QPoly invmod(const QPoly& a, const QPoly& m) {
  QPoly r0 = m, r1 = mod(a, m);
  QPoly s0{}, s1{Rat(1)};
  while (!r1.empty()) {
    QPoly q, r2;
    divrem(r0, r1, q, r2);
    QPoly qs = mul(q, s1);
    QPoly s2 = s0;
    if (s2.size() < qs.size()) s2.resize(qs.size(), Rat(0));
    for (std::size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
    trim(s2);
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (deg(r0) != 0) throw std::logic_error("invmod: arguments not coprime");
  Rat inv = Rat(1) / r0[0];
  for (auto& c : s0) c *= inv;
  return mod(s0, m);
}

}  // namespace qx

// ---------------------------------------------------------------------------
// Multivariate factorization over Q.
//
// Squarefree input, primitive in a main variable x: evaluate the other
// variables at a point, factor the univariate image (Zassenhaus), then
// recover the multivariate factors by ideal-adic Hensel lifting.  The
// translated evaluation point sits at the origin, the lift walks up by total
// degree in the non-main variables, and each layer's diophantine systems are
// solved with precomputed partial fractions over Q[x].  Leading-coefficient
// problem handled by imposing lc_x(S) on every factor and lifting
// lc_x(S)^(r-1) * S.
// ---------------------------------------------------------------------------

namespace detail_factor {

inline MultiPoly from_qpoly(const qx::QPoly& f, const VarCtxPtr& ctx, std::size_t var) {
  MultiPoly p(ctx);
  Mono m(ctx->size(), 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (is_zero(f[i])) continue;
    m[var] = static_cast<int>(i);
    p.add_term(m, f[i]);
  }
  return p;
}

// lifting-degree of a monomial: total degree outside the main variable
inline int lift_degree(const Mono& m, std::size_t var) {
  return mono_degree(m) - m[var];
}

// Attempt the Hensel lift of S (primitive and squarefree in x = var) from
// the univariate split `images` (lifting variables already translated to the
// origin).  Returns false when the lift fails to converge, which signals an
// unlucky point or a split finer than the true factorization.
inline bool try_lift(const MultiPoly& s_shifted, std::size_t var,
                     const std::vector<qx::QPoly>& images, std::vector<MultiPoly>& out) {
  const VarCtxPtr& ctx = s_shifted.context();
  const std::size_t r = images.size();
  const MultiPoly gamma = detail::lead_coeff_in(s_shifted, var, s_shifted.degree_in(var));

  // F = gamma^(r-1) * S; every factor carries lc_x = gamma
  MultiPoly f = s_shifted;
  for (std::size_t i = 0; i + 1 < r; ++i) f *= gamma;
  const int fdeg_x = f.degree_in(var);
  int maxlift = 0;
  for (const auto& [m, c] : f.terms()) maxlift = std::max(maxlift, lift_degree(m, var));

  // partial fractions: sum_i bez[i] * prod_{l != i} images[l] = 1
  std::vector<qx::QPoly> bez(r);
  for (std::size_t i = 0; i < r; ++i) {
    qx::QPoly prod{Rat(1)};
    for (std::size_t l = 0; l < r; ++l)
      if (l != i) prod = qx::mul(prod, images[l]);
    bez[i] = qx::invmod(prod, images[i]);
  }

  // initial factors with the full leading coefficient imposed
  std::vector<MultiPoly> w(r);
  for (std::size_t i = 0; i < r; ++i) {
    w[i] = from_qpoly(images[i], ctx, var);
    int di = qx::deg(images[i]);
    Mono lead(ctx->size(), 0);
    lead[var] = di;
    w[i].add_term(lead, -images[i].back());  // drop numeric lead
    w[i] += gamma * MultiPoly::monomial(ctx, lead, Rat(1));
  }

  for (int k = 1; k <= maxlift; ++k) {
    MultiPoly prod = w[0];
    for (std::size_t i = 1; i < r; ++i) prod *= w[i];
    MultiPoly err = f - prod;
    if (err.is_zero_poly()) break;
    // error terms of lifting-degree exactly k, grouped by lifting monomial
    std::map<Mono, qx::QPoly> groups;
    bool low_residue = false;
    for (const auto& [m, c] : err.terms()) {
      int d = lift_degree(m, var);
      if (d < k) {
        low_residue = true;
        break;
      }
      if (d != k) continue;
      Mono key = m;
      int xdeg = key[var];
      key[var] = 0;
      auto [it, fresh] = groups.emplace(key, qx::QPoly());
      auto& qp = it->second;
      if (qp.size() <= static_cast<std::size_t>(xdeg)) qp.resize(xdeg + 1, Rat(0));
      qp[static_cast<std::size_t>(xdeg)] += c;
    }
    if (low_residue) return false;  // previous layers failed to clear
    for (auto& [key, e] : groups) {
      qx::trim(e);
      if (e.empty()) continue;
      if (qx::deg(e) >= fdeg_x) return false;  // lc mismatch: cannot solve
      for (std::size_t i = 0; i < r; ++i) {
        qx::QPoly sigma = qx::mod(qx::mul(e, bez[i]), images[i]);
        if (sigma.empty()) continue;
        MultiPoly corr = from_qpoly(sigma, ctx, var);
        w[i] += corr * MultiPoly::monomial(ctx, key, Rat(1));
      }
    }
  }
  MultiPoly prod = w[0];
  for (std::size_t i = 1; i < r; ++i) prod *= w[i];
  if (prod != f) return false;
  out = std::move(w);
  return true;
}

inline std::vector<MultiPoly> factor_squarefree(const MultiPoly& s);

// s squarefree, primitive in var, deg_var >= 1
inline std::vector<MultiPoly> factor_primitive_in_var(const MultiPoly& s, std::size_t var) {
  const VarCtxPtr& ctx = s.context();
  auto support = s.support_vars();
  // linear in the main variable and primitive there: irreducible
  if (s.degree_in(var) == 1) return {canonicalize(s)};
  if (support.size() == 1) {
    // univariate
    MultiPoly sc = canonicalize(s);
    ZPoly zf(static_cast<std::size_t>(sc.degree_in(var)) + 1, Int(0));
    for (const auto& [m, c] : sc.terms()) zf[static_cast<std::size_t>(m[var])] = c.get_num();
    auto zfacs = factor_univariate_squarefree(zf);
    std::vector<MultiPoly> out;
    for (const auto& zf2 : zfacs) {
      qx::QPoly qp(zf2.size());
      for (std::size_t i = 0; i < zf2.size(); ++i) qp[i] = Rat(zf2[i]);
      out.push_back(canonicalize(from_qpoly(qp, ctx, var)));
    }
    return out;
  }

  std::vector<std::size_t> lift_vars;
  for (auto v : support)
    if (v != var) lift_vars.push_back(v);

  const MultiPoly gamma = detail::lead_coeff_in(s, var, s.degree_in(var));
  std::mt19937_64 rng(0xfac70f5eedULL);
  std::vector<std::vector<int>> tried_partitions;

  for (int attempt = 0; attempt < 12; ++attempt) {
    const long box = 2 + attempt;
    std::vector<Rat> point(ctx->size(), Rat(0));
    for (auto v : lift_vars) {
      long val = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * box + 1)) - box;
      point[v] = Rat(val);
    }
    if (is_zero(gamma.evaluate(point))) continue;

    // univariate image, squarefree check
    MultiPoly img = s;
    for (auto v : lift_vars) img = img.substitute(v, point[v]);
    MultiPoly imgc = canonicalize(img);
    if (imgc.degree_in(var) != s.degree_in(var)) continue;
    ZPoly zf(static_cast<std::size_t>(imgc.degree_in(var)) + 1, Int(0));
    for (const auto& [m, c] : imgc.terms()) zf[static_cast<std::size_t>(m[var])] = c.get_num();
    {
      // squarefree image required for pairwise coprime lift images
      ZPoly dz;
      for (std::size_t i = 1; i < zf.size(); ++i) dz.push_back(zf[i] * static_cast<long>(i));
      zx::trim(dz);
      qx::QPoly a(zf.size()), b(dz.size());
      for (std::size_t i = 0; i < zf.size(); ++i) a[i] = Rat(zf[i]);
      for (std::size_t i = 0; i < dz.size(); ++i) b[i] = Rat(dz[i]);
      qx::QPoly g = a;
      qx::QPoly h = b;
      while (!h.empty()) {
        qx::QPoly rem2 = qx::mod(g, h);
        g = std::move(h);
        h = std::move(rem2);
      }
      if (qx::deg(g) != 0) continue;
    }

    auto zfacs = factor_univariate_squarefree(zf);
    if (zfacs.size() == 1) return {canonicalize(s)};

    // shift lifting variables so the point sits at the origin
    MultiPoly shifted = s;
    for (auto v : lift_vars) shifted = shifted.shift(v, point[v]);

    const Rat gval = gamma.evaluate(point);
    auto scaled_images = [&](const std::vector<ZPoly>& parts) {
      std::vector<qx::QPoly> images;
      for (const auto& zp : parts) {
        qx::QPoly qp(zp.size());
        for (std::size_t i = 0; i < zp.size(); ++i) qp[i] = Rat(zp[i]);
        Rat scale = gval / qp.back();
        for (auto& c : qp) c *= scale;
        images.push_back(std::move(qp));
      }
      return images;
    };

    // finest split first, then coarsenings on repeated failure
    std::vector<std::vector<ZPoly>> splits;
    splits.push_back(zfacs);
    if (attempt >= 2 && zfacs.size() > 2) {
      for (std::size_t i = 0; i < zfacs.size(); ++i)
        for (std::size_t j = i + 1; j < zfacs.size(); ++j) {
          std::vector<ZPoly> merged;
          merged.push_back(zx::mul(zfacs[i], zfacs[j]));
          for (std::size_t l = 0; l < zfacs.size(); ++l)
            if (l != i && l != j) merged.push_back(zfacs[l]);
          splits.push_back(std::move(merged));
        }
    }

    for (const auto& split : splits) {
      std::vector<MultiPoly> lifted;
      if (!try_lift(shifted, var, scaled_images(split), lifted)) continue;
      // un-shift and strip imposed leading coefficients
      std::vector<MultiPoly> result;
      MultiPoly check = MultiPoly::constant(ctx, Rat(1));
      bool ok = true;
      for (auto& wi : lifted) {
        for (auto v : lift_vars) wi = wi.shift(v, -point[v]);
        MultiPoly cont;
        MultiPoly ppart = detail::primitive_part_in(wi, var, cont);
        // recurse: lifted parts can still factor further when the split was
        // coarsened
        auto sub = factor_squarefree(ppart);
        for (auto& f2 : sub) {
          check *= f2;
          result.push_back(std::move(f2));
        }
      }
      MultiPoly q;
      MultiPoly sc = canonicalize(s);
      if (!try_divide_exact(sc, check, q) || !q.is_constant()) ok = false;
      if (ok) return result;
    }
  }
  throw std::runtime_error("multivariate factorization failed to converge");
}

// s squarefree (not necessarily primitive anywhere), non-constant
inline std::vector<MultiPoly> factor_squarefree(const MultiPoly& s) {
  MultiPoly sc = canonicalize(s);
  if (sc.is_constant()) return {};
  if (sc.total_degree() == 1) return {sc};
  // main variable: highest degree, ties to the lowest index
  std::size_t var = 0;
  int best = -1;
  for (std::size_t v = 0; v < sc.nvars(); ++v) {
    int d = sc.degree_in(v);
    if (d > best) {
      best = d;
      var = v;
    }
  }
  MultiPoly cont;
  MultiPoly pp = detail::primitive_part_in(sc, var, cont);
  std::vector<MultiPoly> out;
  if (!cont.is_constant()) out = factor_squarefree(cont);
  if (!pp.is_constant()) {
    auto rest = factor_primitive_in_var(pp, var);
    out.insert(out.end(), rest.begin(), rest.end());
  }
  return out;
}

}  // namespace detail_factor

// Complete factorization over Q: p = unit * prod factors_i ^ mult_i with
// every factor irreducible over Q and canonicalized.  Irreducibility is
// certified over Q only, not over the algebraic closure.
struct Factorization {
  Rat unit;
  std::vector<std::pair<MultiPoly, int>> factors;
};

inline Factorization factor_over_rationals(const MultiPoly& p) {
  if (p.is_zero_poly()) throw std::invalid_argument("factorization of zero");
  Factorization out;
  auto sqf = squarefree_decomposition(p);
  for (const auto& [part, mult] : sqf) {
    auto irr = detail_factor::factor_squarefree(part);
    for (auto& f : irr) out.factors.emplace_back(canonicalize(f), mult);
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const std::pair<MultiPoly, int>& a, const std::pair<MultiPoly, int>& b) {
              if (a.first.total_degree() != b.first.total_degree())
                return a.first.total_degree() < b.first.total_degree();
              if (a.second != b.second) return a.second < b.second;
              if (a.first == b.first) return false;
              return mono_cmp(a.first.leading_mono(), b.first.leading_mono()) < 0;
            });
  MultiPoly prod = MultiPoly::constant(p.context(), Rat(1));
  for (const auto& [f, m] : out.factors) prod *= f.pow(static_cast<unsigned>(m));
  MultiPoly q;
  if (!try_divide_exact(p, prod, q) || !q.is_constant())
    throw std::logic_error("factorization product check failed");
  out.unit = q.constant_value();
  return out;
}

// Element of the fraction field R(g): coprime numerator/denominator with
// canonicalized denominator.
class RationalFunction {
 public:
  RationalFunction(MultiPoly num, MultiPoly den) { assign(std::move(num), std::move(den)); }

  explicit RationalFunction(MultiPoly num)
      : RationalFunction(num, MultiPoly::constant(num.context(), Rat(1))) {}

  const MultiPoly& numerator() const { return num_; }
  const MultiPoly& denominator() const { return den_; }

  RationalFunction operator*(const RationalFunction& o) const {
    return RationalFunction(num_ * o.num_, den_ * o.den_);
  }
  RationalFunction operator+(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  RationalFunction operator-(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  }
  bool operator==(const RationalFunction& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool is_zero_fn() const { return num_.is_zero_poly(); }

 private:
  void assign(MultiPoly num, MultiPoly den) {
    if (den.is_zero_poly()) throw std::invalid_argument("zero denominator");
    if (num.is_zero_poly()) {
      num_ = std::move(num);
      den_ = MultiPoly::constant(num_.context(), Rat(1));
      return;
    }
    MultiPoly g = multivariate_gcd(num, den);
    num = divide_exact(num, g);
    den = divide_exact(den, g);
    MultiPoly dc = canonicalize(den);
    // scale numerator by the same unit that canonicalizes the denominator
    Rat unit = den.leading_coef() / dc.leading_coef();
    num_ = num * (Rat(1) / unit);
    den_ = std::move(dc);
  }

  MultiPoly num_, den_;
};

}  // namespace lieinv
