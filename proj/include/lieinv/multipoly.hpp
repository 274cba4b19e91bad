#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lieinv/rational.hpp"

namespace lieinv {

// Ordered list of variable names.  The declaration order is fixed at
// creation and induces the graded lexicographic term order used for all
// canonical-form decisions (earlier variables are more significant).
class VarContext {
 public:
  explicit VarContext(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i)
      for (std::size_t j = i + 1; j < names_.size(); ++j)
        if (names_[i] == names_[j])
          throw std::invalid_argument("duplicate variable name: " + names_[i]);
  }

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }

  // -1 when absent
  int index_of(const std::string& n) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == n) return static_cast<int>(i);
    return -1;
  }

 private:
  std::vector<std::string> names_;
};

using VarCtxPtr = std::shared_ptr<const VarContext>;

inline VarCtxPtr make_context(std::vector<std::string> names) {
  return std::make_shared<const VarContext>(std::move(names));
}

using Mono = std::vector<int>;

inline int mono_degree(const Mono& m) { return std::accumulate(m.begin(), m.end(), 0); }

// graded lex, earlier variables more significant; returns <0, 0, >0
inline int mono_cmp(const Mono& a, const Mono& b) {
  int da = mono_degree(a), db = mono_degree(b);
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

struct MonoLess {
  bool operator()(const Mono& a, const Mono& b) const { return mono_cmp(a, b) < 0; }
};

// Sparse multivariate polynomial over Q.  Terms map monomial exponent
// vectors to nonzero coefficients; the zero polynomial has no terms.
class MultiPoly {
 public:
  using TermMap = std::map<Mono, Rat, MonoLess>;

  MultiPoly() = default;
  explicit MultiPoly(VarCtxPtr ctx) : ctx_(std::move(ctx)) {}

  static MultiPoly zero(VarCtxPtr ctx) { return MultiPoly(std::move(ctx)); }

  static MultiPoly constant(VarCtxPtr ctx, const Rat& c) {
    MultiPoly p(std::move(ctx));
    if (!is_zero(c)) p.terms_[Mono(p.nvars(), 0)] = c;
    return p;
  }

  static MultiPoly variable(VarCtxPtr ctx, std::size_t i, const Rat& coef = Rat(1)) {
    MultiPoly p(ctx);
    if (i >= ctx->size()) throw std::out_of_range("variable index");
    if (!is_zero(coef)) {
      Mono m(ctx->size(), 0);
      m[i] = 1;
      p.terms_[std::move(m)] = coef;
    }
    return p;
  }

  static MultiPoly monomial(VarCtxPtr ctx, Mono m, const Rat& coef) {
    MultiPoly p(std::move(ctx));
    if (m.size() != p.nvars()) throw std::invalid_argument("monomial arity mismatch");
    if (!is_zero(coef)) p.terms_[std::move(m)] = coef;
    return p;
  }

  const VarCtxPtr& context() const { return ctx_; }
  std::size_t nvars() const { return ctx_ ? ctx_->size() : 0; }
  const TermMap& terms() const { return terms_; }
  bool is_zero_poly() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && mono_degree(terms_.begin()->first) == 0);
  }

  Rat constant_value() const {
    if (terms_.empty()) return Rat(0);
    auto it = terms_.find(Mono(nvars(), 0));
    return it == terms_.end() ? Rat(0) : it->second;
  }

  int total_degree() const {  // -1 for the zero polynomial
    if (terms_.empty()) return -1;
    return mono_degree(terms_.rbegin()->first);
  }

  int degree_in(std::size_t var) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = mono_degree(terms_.begin()->first);
    for (const auto& [m, c] : terms_)
      if (mono_degree(m) != d) return false;
    return true;
  }

  bool depends_on(std::size_t var) const {
    for (const auto& [m, c] : terms_)
      if (m[var] > 0) return true;
    return false;
  }

  const Mono& leading_mono() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return terms_.rbegin()->first;
  }

  const Rat& leading_coef() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return terms_.rbegin()->second;
  }

  Rat coef(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
  }

  void add_term(const Mono& m, const Rat& c) {
    if (is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (is_zero(it->second)) terms_.erase(it);
    }
  }

  MultiPoly operator-() const {
    MultiPoly r(ctx_);
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    check_ctx(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }

  MultiPoly& operator-=(const MultiPoly& o) {
    check_ctx(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_ctx(b);
    MultiPoly r(a.ctx_);
    Mono m(a.nvars(), 0);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
        r.add_term(m, ca * cb);
      }
    }
    return r;
  }

  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  MultiPoly& operator*=(const Rat& c) {
    if (is_zero(c)) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
  }

  friend MultiPoly operator*(MultiPoly a, const Rat& c) { return a *= c; }
  friend MultiPoly operator*(const Rat& c, MultiPoly a) { return a *= c; }

  bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  MultiPoly pow(unsigned e) const {
    MultiPoly r = constant(ctx_, Rat(1));
    MultiPoly b = *this;
    while (e) {
      if (e & 1u) r *= b;
      b = (e >>= 1) ? b * b : b;
    }
    return r;
  }

  MultiPoly derivative(std::size_t var) const {
    if (var >= nvars()) throw std::out_of_range("derivative variable index");
    MultiPoly r(ctx_);
    for (const auto& [m, c] : terms_) {
      if (m[var] == 0) continue;
      Mono d = m;
      d[var] -= 1;
      r.add_term(d, c * Rat(m[var]));
    }
    return r;
  }

  Rat evaluate(const std::vector<Rat>& point) const {
    if (point.size() != nvars()) throw std::invalid_argument("evaluation point arity");
    Rat sum(0);
    for (const auto& [m, c] : terms_) {
      Rat t = c;
      for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i] > 0) t *= rat_pow(point[i], static_cast<unsigned long>(m[i]));
      sum += t;
    }
    return sum;
  }

  // substitute var := value (result no longer depends on var)
  MultiPoly substitute(std::size_t var, const Rat& value) const {
    MultiPoly r(ctx_);
    for (const auto& [m, c] : terms_) {
      Mono mm = m;
      int e = mm[var];
      mm[var] = 0;
      r.add_term(mm, e ? c * rat_pow(value, static_cast<unsigned long>(e)) : c);
    }
    return r;
  }

  // substitute var := var + value  (Taylor shift)
  MultiPoly shift(std::size_t var, const Rat& value) const {
    if (is_zero(value)) return *this;
    MultiPoly r(ctx_);
    for (const auto& [m, c] : terms_) {
      int e = m[var];
      // (x+v)^e expanded with binomial coefficients
      Int binom(1);
      Rat vpow(1);
      for (int k = e; k >= 0; --k) {
        // term: C(e, k) * v^(e-k) * x^k, iterating k from e down
        Mono mm = m;
        mm[var] = k;
        r.add_term(mm, c * Rat(binom) * vpow);
        if (k > 0) {
          binom = binom * k / (e - k + 1);
          vpow *= value;
        }
      }
    }
    return r;
  }

  // coefficient of var^k, as a polynomial in the same context
  MultiPoly coeff_of(std::size_t var, int k) const {
    MultiPoly r(ctx_);
    for (const auto& [m, c] : terms_) {
      if (m[var] != k) continue;
      Mono mm = m;
      mm[var] = 0;
      r.add_term(mm, c);
    }
    return r;
  }

  // content over Z after clearing denominators: the positive rational c such
  // that p / c has coprime integer coefficients
  Rat rational_content() const {
    if (terms_.empty()) return Rat(0);
    Int g(0), l(1);
    for (const auto& [m, c] : terms_) {
      Int num = c.get_num(), den = c.get_den();
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
    }
    return make_rat(g, l);
  }

  std::vector<std::size_t> support_vars() const {
    std::vector<std::size_t> vs;
    for (std::size_t i = 0; i < nvars(); ++i)
      if (depends_on(i)) vs.push_back(i);
    return vs;
  }

 private:
  void check_ctx(const MultiPoly& o) const {
    if (ctx_ != o.ctx_ && (!ctx_ || !o.ctx_ || ctx_->names() != o.ctx_->names()))
      throw std::invalid_argument("polynomial context mismatch");
  }

  VarCtxPtr ctx_;
  TermMap terms_;
};

// Unique scalar multiple with coprime integer coefficients and positive
// leading coefficient in graded lex; canonicalize(0) = 0.
inline MultiPoly canonicalize(const MultiPoly& p) {
  if (p.is_zero_poly()) return p;
  Rat scale = p.rational_content();
  if (sgn(p.leading_coef()) < 0) scale = -scale;
  MultiPoly r = p;
  r *= Rat(1) / scale;
  return r;
}

inline MultiPoly partial_derivative(const MultiPoly& p, std::size_t var) {
  return p.derivative(var);
}

// Exact division: q with p = q * d, or false when d does not divide p.
inline bool try_divide_exact(const MultiPoly& p, const MultiPoly& d, MultiPoly& q) {
  if (d.is_zero_poly()) throw std::invalid_argument("division by zero polynomial");
  q = MultiPoly::zero(p.context());
  MultiPoly rem = p;
  const Mono& dl = d.leading_mono();
  const Rat& dc = d.leading_coef();
  while (!rem.is_zero_poly()) {
    const Mono& rl = rem.leading_mono();
    Mono diff(rl.size());
    for (std::size_t i = 0; i < rl.size(); ++i) {
      diff[i] = rl[i] - dl[i];
      if (diff[i] < 0) return false;
    }
    Rat c = rem.leading_coef() / dc;
    MultiPoly t = MultiPoly::monomial(p.context(), diff, c);
    q += t;
    rem -= t * d;
    if (!rem.is_zero_poly() && mono_cmp(rem.leading_mono(), rl) >= 0)
      return false;  // no progress: not divisible
  }
  return true;
}

inline MultiPoly divide_exact(const MultiPoly& p, const MultiPoly& d) {
  MultiPoly q;
  if (!try_divide_exact(p, d, q)) throw std::domain_error("inexact polynomial division");
  return q;
}

inline bool divides(const MultiPoly& d, const MultiPoly& p) {
  if (p.is_zero_poly()) return true;
  if (d.is_zero_poly()) return false;
  MultiPoly q;
  return try_divide_exact(p, d, q);
}

// ---------------------------------------------------------------------------
// Text form.  Terms joined by +/-, each `coef*name1^e1*...` with rational
// coefficient p/q; unit coefficient and ^1 omitted.  Printing emits terms in
// decreasing graded-lex order; parse(print(p)) == p exactly.
// ---------------------------------------------------------------------------

inline std::string to_string(const MultiPoly& p) {
  if (p.is_zero_poly()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const Mono& m = it->first;
    Rat c = it->second;
    bool neg = sgn(c) < 0;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    if (neg) c = -c;
    std::string vars;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += p.context()->name(i);
      if (m[i] > 1) vars += "^" + std::to_string(m[i]);
    }
    if (vars.empty()) {
      os << rat_to_string(c);
    } else {
      if (c != 1) os << rat_to_string(c) << "*";
      os << vars;
    }
  }
  return os.str();
}

namespace detail {

struct PolyLexer {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument("polynomial parse error at position " +
                                std::to_string(pos) + ": " + msg + " in '" + s + "'");
  }
  Int integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected integer");
    return Int(s.substr(start, pos - start));
  }
  std::string identifier() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    if (pos == start) fail("expected identifier");
    return s.substr(start, pos - start);
  }
};

}  // namespace detail

// Parses the polynomial text syntax over `ctx`.  `params`, when given, maps
// extra identifiers to rational values substituted during parsing.
inline MultiPoly parse_poly(const std::string& text, const VarCtxPtr& ctx,
                            const std::map<std::string, Rat>* params = nullptr) {
  detail::PolyLexer lx{text};
  MultiPoly result(ctx);
  bool first = true;
  while (!lx.eof()) {
    int sign = 1;
    if (lx.accept('+')) {
      // explicit plus
    } else if (lx.accept('-')) {
      sign = -1;
    } else if (!first) {
      lx.fail("expected + or -");
    }
    first = false;

    Rat coef(sign);
    Mono mono(ctx->size(), 0);
    bool want_factor = true;
    bool saw_any = false;
    while (want_factor) {
      lx.skip_ws();
      char c = lx.peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        Int num = lx.integer();
        if (lx.accept('/')) {
          Int den = lx.integer();
          coef *= make_rat(num, den);
        } else {
          coef *= Rat(num);
        }
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::string id = lx.identifier();
        int e = 1;
        if (lx.accept('^')) e = static_cast<int>(lx.integer().get_si());
        int vi = ctx->index_of(id);
        if (vi >= 0) {
          mono[static_cast<std::size_t>(vi)] += e;
        } else if (params) {
          auto it = params->find(id);
          if (it == params->end()) lx.fail("unknown identifier '" + id + "'");
          coef *= rat_pow(it->second, static_cast<unsigned long>(e));
        } else {
          lx.fail("unknown variable '" + id + "'");
        }
      } else {
        lx.fail("expected coefficient or variable");
      }
      saw_any = true;
      want_factor = lx.accept('*');
    }
    if (!saw_any) lx.fail("empty term");
    result.add_term(mono, coef);
  }
  return result;
}

}  // namespace lieinv
