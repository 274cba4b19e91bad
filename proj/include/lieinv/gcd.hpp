#pragma once

#include <map>
#include <utility>
#include <vector>

#include "lieinv/multipoly.hpp"

namespace lieinv {

namespace detail {

// p viewed as a univariate polynomial in `var`: degree -> coefficient
inline std::map<int, MultiPoly> univ_view(const MultiPoly& p, std::size_t var) {
  std::map<int, MultiPoly> view;
  for (const auto& [m, c] : p.terms()) {
    auto it = view.find(m[var]);
    if (it == view.end())
      it = view.emplace(m[var], MultiPoly::zero(p.context())).first;
    Mono mm = m;
    mm[var] = 0;
    it->second.add_term(mm, c);
  }
  return view;
}

inline MultiPoly lead_coeff_in(const MultiPoly& p, std::size_t var, int deg) {
  MultiPoly lc(p.context());
  for (const auto& [m, c] : p.terms()) {
    if (m[var] != deg) continue;
    Mono mm = m;
    mm[var] = 0;
    lc.add_term(mm, c);
  }
  return lc;
}

inline MultiPoly times_var_pow(const MultiPoly& p, std::size_t var, int e) {
  MultiPoly r(p.context());
  for (const auto& [m, c] : p.terms()) {
    Mono mm = m;
    mm[var] += e;
    r.add_term(mm, c);
  }
  return r;
}

// pseudo-remainder of f by g w.r.t. var (up to a nonzero multiple of a
// power of lc(g); callers take primitive parts anyway)
inline MultiPoly pseudo_rem(MultiPoly f, const MultiPoly& g, std::size_t var) {
  const int dg = g.degree_in(var);
  const MultiPoly gl = lead_coeff_in(g, var, dg);
  int df = 0;
  while (!f.is_zero_poly() && (df = f.degree_in(var)) >= dg) {
    MultiPoly fl = lead_coeff_in(f, var, df);
    f = f * gl - times_var_pow(fl * g, var, df - dg);
    // the degree-df coefficient cancels exactly, so deg_var drops each round
  }
  return f;
}

}  // namespace detail

MultiPoly multivariate_gcd(const MultiPoly& p, const MultiPoly& q);

namespace detail {

// content of p w.r.t. var: gcd of the univariate-view coefficients
inline MultiPoly content_in(const MultiPoly& p, std::size_t var) {
  auto view = univ_view(p, var);
  MultiPoly g = MultiPoly::zero(p.context());
  for (const auto& [d, c] : view) {
    g = multivariate_gcd(g, c);
    if (g.is_constant() && !g.is_zero_poly()) break;
  }
  return g;
}

inline MultiPoly primitive_part_in(const MultiPoly& p, std::size_t var, MultiPoly& content) {
  content = content_in(p, var);
  return canonicalize(divide_exact(p, content));
}

// primitive PRS on primitive inputs
inline MultiPoly primitive_prs_gcd(MultiPoly a, MultiPoly b, std::size_t var) {
  if (a.degree_in(var) < b.degree_in(var)) std::swap(a, b);
  while (true) {
    if (b.is_zero_poly()) return canonicalize(a);
    if (b.degree_in(var) == 0) return MultiPoly::constant(a.context(), Rat(1));
    MultiPoly r = pseudo_rem(a, b, var);
    a = std::move(b);
    if (r.is_zero_poly()) {
      b = r;
    } else {
      MultiPoly c;
      b = primitive_part_in(r, var, c);
    }
  }
}

}  // namespace detail

// Canonicalized GCD over Q[x1..xn]; gcd(0, q) = canonicalize(q).
// Primitive-PRS recursion on the variable occurring most often in both
// arguments.
inline MultiPoly multivariate_gcd(const MultiPoly& p, const MultiPoly& q) {
  if (p.is_zero_poly()) return canonicalize(q);
  if (q.is_zero_poly()) return canonicalize(p);
  MultiPoly a = canonicalize(p), b = canonicalize(q);
  if (a.is_constant() || b.is_constant())
    return MultiPoly::constant(p.context(), Rat(1));

  // occurrence counts per variable
  const std::size_t n = p.nvars();
  std::vector<long> count_a(n, 0), count_b(n, 0);
  for (const auto& [m, c] : a.terms())
    for (std::size_t i = 0; i < n; ++i)
      if (m[i] > 0) ++count_a[i];
  for (const auto& [m, c] : b.terms())
    for (std::size_t i = 0; i < n; ++i)
      if (m[i] > 0) ++count_b[i];

  std::size_t var = n;
  long best = -1;
  for (std::size_t i = 0; i < n; ++i) {
    if (count_a[i] > 0 && count_b[i] > 0 && count_a[i] + count_b[i] > best) {
      best = count_a[i] + count_b[i];
      var = i;
    }
  }
  if (var == n) {
    // no shared variable: common divisors are free of any variable in only
    // one operand, so reduce via the content w.r.t. such a variable
    for (std::size_t i = 0; i < n; ++i) {
      if (count_a[i] > 0) return multivariate_gcd(detail::content_in(a, i), b);
      if (count_b[i] > 0) return multivariate_gcd(a, detail::content_in(b, i));
    }
    return MultiPoly::constant(p.context(), Rat(1));  // unreachable: both constant
  }

  MultiPoly ca, cb;
  MultiPoly pa = detail::primitive_part_in(a, var, ca);
  MultiPoly pb = detail::primitive_part_in(b, var, cb);
  MultiPoly cg = multivariate_gcd(ca, cb);
  MultiPoly g = detail::primitive_prs_gcd(pa, pb, var);
  return canonicalize(cg * g);
}

inline MultiPoly multivariate_gcd(const std::vector<MultiPoly>& ps) {
  if (ps.empty()) throw std::invalid_argument("gcd of empty list");
  MultiPoly g = ps.front();
  for (std::size_t i = 1; i < ps.size(); ++i) {
    g = multivariate_gcd(g, ps[i]);
    if (g.is_constant() && !g.is_zero_poly()) break;
  }
  return canonicalize(g);
}

// p = unit * prod q_i^{m_i} with the q_i squarefree, pairwise coprime,
// canonicalized, multiplicities strictly increasing.
inline std::vector<std::pair<MultiPoly, int>> squarefree_decomposition(const MultiPoly& p) {
  if (p.is_zero_poly()) throw std::invalid_argument("squarefree decomposition of zero");
  std::vector<MultiPoly> kernels;  // T_k = squarefree part of P_k
  MultiPoly pk = canonicalize(p);
  while (!pk.is_constant()) {
    MultiPoly g = pk;
    for (std::size_t i = 0; i < pk.nvars() && !(g.is_constant()); ++i) {
      if (!pk.depends_on(i)) continue;
      g = multivariate_gcd(g, pk.derivative(i));
    }
    // g = prod q_i^{m_i - 1}; kernel = P_k / g
    kernels.push_back(canonicalize(divide_exact(pk, g)));
    pk = g;
  }
  kernels.push_back(MultiPoly::constant(p.context(), Rat(1)));
  std::vector<std::pair<MultiPoly, int>> out;
  for (std::size_t k = 0; k + 1 < kernels.size(); ++k) {
    MultiPoly f = canonicalize(divide_exact(kernels[k], kernels[k + 1]));
    if (!f.is_constant()) out.emplace_back(std::move(f), static_cast<int>(k + 1));
  }
  return out;
}

}  // namespace lieinv
