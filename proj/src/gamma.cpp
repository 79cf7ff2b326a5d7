#include "divpow/gamma.hpp"

#include <stdexcept>
#include <utility>

namespace divpow {

namespace detail {

SparseTensor::SparseTensor(FieldSpec spec, int dim, int degree)
    : spec_(spec), dim_(dim), degree_(degree) {
  if (dim < 1) throw std::invalid_argument("SparseTensor: dim >= 1 required");
  if (degree < 0) throw std::invalid_argument("SparseTensor: degree >= 0 required");
}

Scalar SparseTensor::coeff(const Composition& c) const {
  auto it = terms_.find(c);
  return it == terms_.end() ? Scalar::zero(spec_) : it->second;
}

void SparseTensor::add_term(const Composition& c, const Scalar& t) {
  if (c.size() != dim_ || c.degree() != degree_)
    throw std::invalid_argument("add_term: composition has wrong shape");
  if (!(t.spec() == spec_)) throw std::invalid_argument("add_term: mixed field specs");
  if (t.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(c, t);
  if (!inserted) {
    it->second += t;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void SparseTensor::add_scaled(const SparseTensor& o, const Scalar& s) {
  if (o.dim_ != dim_ || o.degree_ != degree_ || !(o.spec_ == spec_))
    throw std::invalid_argument("add_scaled: shape or field mismatch");
  if (s.is_zero()) return;
  for (const auto& [c, t] : o.terms_) add_term(c, t * s);
}

bool SparseTensor::operator==(const SparseTensor& o) const {
  return spec_ == o.spec_ && dim_ == o.dim_ && degree_ == o.degree_ && terms_ == o.terms_;
}

}  // namespace detail

GammaElement GammaElement::basis(FieldSpec spec, const Composition& c) {
  GammaElement g(spec, c.size(), c.degree());
  g.add_term(c, Scalar::one(spec));
  return g;
}

GammaElement GammaElement::operator+(const GammaElement& o) const {
  GammaElement r = *this;
  r.add_scaled(o, Scalar::one(spec_));
  return r;
}

GammaElement GammaElement::operator-(const GammaElement& o) const {
  GammaElement r = *this;
  r.add_scaled(o, -Scalar::one(spec_));
  return r;
}

GammaElement GammaElement::scaled(const Scalar& s) const {
  GammaElement r(spec_, dim_, degree_);
  r.add_scaled(*this, s);
  return r;
}

SymElement SymElement::monomial(FieldSpec spec, const Composition& c) {
  SymElement s(spec, c.size(), c.degree());
  s.add_term(c, Scalar::one(spec));
  return s;
}

SymElement SymElement::operator+(const SymElement& o) const {
  SymElement r = *this;
  r.add_scaled(o, Scalar::one(spec_));
  return r;
}

SymElement SymElement::operator-(const SymElement& o) const {
  SymElement r = *this;
  r.add_scaled(o, -Scalar::one(spec_));
  return r;
}

SymElement SymElement::scaled(const Scalar& s) const {
  SymElement r(spec_, dim_, degree_);
  r.add_scaled(*this, s);
  return r;
}

GammaElement pure_symbol(const std::vector<Scalar>& v, int n) {
  if (v.empty()) throw std::invalid_argument("pure_symbol: empty vector");
  FieldSpec spec = v.front().spec();
  for (const Scalar& c : v)
    if (!(c.spec() == spec)) throw std::invalid_argument("pure_symbol: mixed field specs");
  const int d = static_cast<int>(v.size());
  GammaElement out(spec, d, n);
  for (const Composition& a : compositions(n, d)) {
    Scalar coeff = Scalar::one(spec);
    bool zero = false;
    for (int i = 0; i < d && !zero; ++i) {
      if (a[i] == 0) continue;
      if (v[static_cast<std::size_t>(i)].is_zero())
        zero = true;
      else
        coeff *= v[static_cast<std::size_t>(i)].pow(a[i]);
    }
    if (!zero) out.add_term(a, coeff);
  }
  return out;
}

namespace {

constexpr std::int64_t kDenseLimit = 1 << 16;

// product over slots of C(a_i + b_i, a_i), exactly
BigInt binomial_product_big(const Composition& a, const Composition& b) {
  BigInt r = 1;
  for (int i = 0; i < a.size(); ++i) r *= binomial_big(a[i] + b[i], a[i]);
  return r;
}

GammaElement gamma_mul_generic(const GammaElement& x, const GammaElement& y) {
  FieldSpec spec = x.spec();
  const int d = x.dim();
  GammaElement out(spec, d, x.degree() + y.degree());
  const bool prime = spec.is_prime_field();
  const std::int64_t p = spec.characteristic;
  std::vector<int> sum(static_cast<std::size_t>(d));
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms()) {
      Scalar coeff = Scalar::zero(spec);
      if (prime) {
        std::int64_t m = 1;
        for (int i = 0; i < d && m != 0; ++i) m = m * binomial_mod_p(a[i] + b[i], a[i], p) % p;
        if (m == 0) continue;
        coeff = Scalar::of(spec, m);
      } else {
        coeff = Scalar::of(spec, binomial_product_big(a, b));
      }
      for (int i = 0; i < d; ++i) sum[static_cast<std::size_t>(i)] = a[i] + b[i];
      out.add_term(Composition(sum), ca * cb * coeff);
    }
  return out;
}

// prime-field path with a dense accumulator indexed by composition rank
GammaElement gamma_mul_dense(const GammaElement& x, const GammaElement& y) {
  FieldSpec spec = x.spec();
  const std::int64_t p = spec.characteristic;
  const int d = x.dim();
  const int n = x.degree() + y.degree();
  const CompositionIndexer& indexer = shared_indexer(n, d);
  std::vector<std::int64_t> acc(static_cast<std::size_t>(indexer.size()), 0);

  // flatten operands once
  struct Term {
    const Composition* comp;
    std::int64_t c;
  };
  std::vector<Term> xs, ys;
  xs.reserve(x.terms().size());
  ys.reserve(y.terms().size());
  for (const auto& [a, ca] : x.terms()) xs.push_back({&a, ca.residue()});
  for (const auto& [b, cb] : y.terms()) ys.push_back({&b, cb.residue()});

  std::vector<int> sum(static_cast<std::size_t>(d));
  for (const Term& tx : xs)
    for (const Term& ty : ys) {
      const Composition& a = *tx.comp;
      const Composition& b = *ty.comp;
      std::int64_t m;
      if (p == 2) {
        m = 1;
        for (int i = 0; i < d; ++i)
          if ((a[i] & b[i]) != 0) {
            m = 0;
            break;
          }
      } else {
        m = 1;
        for (int i = 0; i < d && m != 0; ++i) m = m * binomial_mod_p(a[i] + b[i], a[i], p) % p;
      }
      if (m == 0) continue;
      for (int i = 0; i < d; ++i) sum[static_cast<std::size_t>(i)] = a[i] + b[i];
      std::int64_t idx = indexer.rank(Composition(sum));
      acc[static_cast<std::size_t>(idx)] =
          (acc[static_cast<std::size_t>(idx)] + tx.c * ty.c % p * m) % p;
    }

  GammaElement out(spec, d, n);
  for (std::int64_t i = 0; i < indexer.size(); ++i)
    if (acc[static_cast<std::size_t>(i)] != 0)
      out.add_term(indexer.at(i), Scalar::of(spec, acc[static_cast<std::size_t>(i)]));
  return out;
}

}  // namespace

GammaElement gamma_mul(const GammaElement& x, const GammaElement& y) {
  if (x.dim() != y.dim()) throw std::invalid_argument("gamma_mul: dimension mismatch");
  if (!(x.spec() == y.spec())) throw std::invalid_argument("gamma_mul: mixed field specs");
  if (x.is_zero() || y.is_zero())
    return GammaElement::zero(x.spec(), x.dim(), x.degree() + y.degree());
  if (x.spec().is_prime_field() &&
      composition_count(x.degree() + y.degree(), x.dim()) <= kDenseLimit)
    return gamma_mul_dense(x, y);
  return gamma_mul_generic(x, y);
}

SymElement sym_mul(const SymElement& x, const SymElement& y) {
  if (x.dim() != y.dim()) throw std::invalid_argument("sym_mul: dimension mismatch");
  if (!(x.spec() == y.spec())) throw std::invalid_argument("sym_mul: mixed field specs");
  SymElement out(x.spec(), x.dim(), x.degree() + y.degree());
  std::vector<int> sum(static_cast<std::size_t>(x.dim()));
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms()) {
      for (int i = 0; i < x.dim(); ++i) sum[static_cast<std::size_t>(i)] = a[i] + b[i];
      out.add_term(Composition(sum), ca * cb);
    }
  return out;
}

SymElement sym_linear(const std::vector<Scalar>& v) {
  if (v.empty()) throw std::invalid_argument("sym_linear: empty vector");
  const int d = static_cast<int>(v.size());
  SymElement out(v.front().spec(), d, 1);
  for (int i = 0; i < d; ++i) {
    std::vector<int> unit(static_cast<std::size_t>(d), 0);
    unit[static_cast<std::size_t>(i)] = 1;
    out.add_term(Composition(unit), v[static_cast<std::size_t>(i)]);
  }
  return out;
}

Scalar pairing(const GammaElement& phi, const SymElement& x) {
  if (phi.dim() != x.dim() || phi.degree() != x.degree())
    throw std::invalid_argument("pairing: dimension or degree mismatch");
  if (!(phi.spec() == x.spec())) throw std::invalid_argument("pairing: mixed field specs");
  Scalar r = Scalar::zero(phi.spec());
  const auto& small = phi.terms().size() <= x.terms().size() ? phi.terms() : x.terms();
  const detail::SparseTensor& other =
      phi.terms().size() <= x.terms().size() ? static_cast<const detail::SparseTensor&>(x)
                                             : static_cast<const detail::SparseTensor&>(phi);
  for (const auto& [c, t] : small) r += t * other.coeff(c);
  return r;
}

GammaElement sym_to_gamma(const SymElement& x) {
  FieldSpec spec = x.spec();
  GammaElement out(spec, x.dim(), x.degree());
  for (const auto& [a, c] : x.terms()) {
    // prod_i a_i!
    Scalar f = Scalar::one(spec);
    if (spec.is_prime_field()) {
      const std::int64_t p = spec.characteristic;
      std::int64_t m = 1;
      for (int i = 0; i < a.size() && m != 0; ++i)
        for (int k = 2; k <= a[i] && m != 0; ++k) m = m * (k % p) % p;
      f = Scalar::of(spec, m);
    } else {
      BigInt m = 1;
      for (int i = 0; i < a.size(); ++i) m *= factorial_big(a[i]);
      f = Scalar::of(spec, m);
    }
    out.add_term(a, c * f);
  }
  return out;
}

SymElement gamma_to_sym(const GammaElement& y) {
  FieldSpec spec = y.spec();
  SymElement out(spec, y.dim(), y.degree());
  for (const auto& [a, c] : y.terms()) {
    std::vector<std::int64_t> parts(a.parts().begin(), a.parts().end());
    Scalar m = spec.is_prime_field() ? multinomial_mod_p(parts, spec.characteristic)
                                     : Scalar::of(spec, multinomial(parts));
    out.add_term(a, c * m);
  }
  return out;
}

GammaElement apply_induced_action(const FieldMatrix& g, const GammaElement& x) {
  const int d = x.dim();
  if (g.rows() != static_cast<std::size_t>(d) || g.cols() != static_cast<std::size_t>(d))
    throw std::invalid_argument("apply_induced_action: matrix must be dim x dim");
  if (!(g.spec() == x.spec()))
    throw std::invalid_argument("apply_induced_action: mixed field specs");
  FieldSpec spec = x.spec();

  // pure symbols of the columns of g, cached per (column, exponent)
  std::map<std::pair<int, int>, GammaElement> cache;
  auto column_power = [&](int i, int e) -> const GammaElement& {
    auto key = std::make_pair(i, e);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<Scalar> col;
    col.reserve(static_cast<std::size_t>(d));
    for (int r = 0; r < d; ++r) col.push_back(g.at(static_cast<std::size_t>(r), static_cast<std::size_t>(i)));
    return cache.emplace(key, pure_symbol(col, e)).first->second;
  };

  GammaElement out(spec, d, x.degree());
  for (const auto& [a, c] : x.terms()) {
    GammaElement prod(spec, d, 0);
    prod.add_term(Composition(std::vector<int>(static_cast<std::size_t>(d), 0)),
                  Scalar::one(spec));
    for (int i = 0; i < d; ++i)
      if (a[i] > 0) prod = gamma_mul(prod, column_power(i, a[i]));
    out.add_scaled(prod, c);
  }
  return out;
}

FieldMatrix induced_gl_action(const FieldMatrix& g, int degree) {
  const int d = static_cast<int>(g.rows());
  if (g.cols() != g.rows()) throw std::invalid_argument("induced_gl_action: matrix not square");
  CompositionIndexer indexer(degree, d);
  FieldMatrix m(g.spec(), static_cast<std::size_t>(indexer.size()),
                static_cast<std::size_t>(indexer.size()));
  for (std::int64_t col = 0; col < indexer.size(); ++col) {
    GammaElement img = apply_induced_action(g, GammaElement::basis(g.spec(), indexer.at(col)));
    for (const auto& [c, t] : img.terms())
      m.at(static_cast<std::size_t>(indexer.rank(c)), static_cast<std::size_t>(col)) = t;
  }
  return m;
}

GammaElement apply_derivation_action(const FieldMatrix& u, const GammaElement& x) {
  const int d = x.dim();
  if (u.rows() != static_cast<std::size_t>(d) || u.cols() != static_cast<std::size_t>(d))
    throw std::invalid_argument("apply_derivation_action: matrix must be dim x dim");
  if (!(u.spec() == x.spec()))
    throw std::invalid_argument("apply_derivation_action: mixed field specs");
  FieldSpec spec = x.spec();
  GammaElement out(spec, d, x.degree());
  std::vector<int> moved(static_cast<std::size_t>(d));
  for (const auto& [a, c] : x.terms()) {
    for (int i = 0; i < d; ++i) {
      if (a[i] == 0) continue;
      for (int j = 0; j < d; ++j) {
        const Scalar& uji = u.at(static_cast<std::size_t>(j), static_cast<std::size_t>(i));
        if (uji.is_zero()) continue;
        // replace one factor [e_i]_1 by [u e_i]_1, slot j
        int mult = a[j] - (i == j ? 1 : 0) + 1;
        for (int k = 0; k < d; ++k) moved[static_cast<std::size_t>(k)] = a[k];
        moved[static_cast<std::size_t>(i)] -= 1;
        moved[static_cast<std::size_t>(j)] += 1;
        out.add_term(Composition(moved), c * uji * Scalar::of(spec, mult));
      }
    }
  }
  return out;
}

FieldMatrix derivation_action(const FieldMatrix& u, int degree) {
  const int d = static_cast<int>(u.rows());
  if (u.cols() != u.rows()) throw std::invalid_argument("derivation_action: matrix not square");
  CompositionIndexer indexer(degree, d);
  FieldMatrix m(u.spec(), static_cast<std::size_t>(indexer.size()),
                static_cast<std::size_t>(indexer.size()));
  for (std::int64_t col = 0; col < indexer.size(); ++col) {
    GammaElement img = apply_derivation_action(u, GammaElement::basis(u.spec(), indexer.at(col)));
    for (const auto& [c, t] : img.terms())
      m.at(static_cast<std::size_t>(indexer.rank(c)), static_cast<std::size_t>(col)) = t;
  }
  return m;
}

GammaElement veronese(const std::vector<Scalar>& v, int n) {
  bool all_zero = true;
  for (const Scalar& c : v)
    if (!c.is_zero()) {
      all_zero = false;
      break;
    }
  if (all_zero) throw std::invalid_argument("veronese: zero vector");
  GammaElement out = pure_symbol(v, n);
  if (out.is_zero()) throw std::logic_error("veronese: image of a nonzero vector vanished");
  return out;
}

bool proportional(const GammaElement& x, const GammaElement& y) {
  if (x.dim() != y.dim() || x.degree() != y.degree() || !(x.spec() == y.spec())) return false;
  if (x.is_zero() || y.is_zero()) return false;
  const auto& [c0, t0] = *x.terms().begin();
  Scalar y0 = y.coeff(c0);
  if (y0.is_zero()) return false;
  return y == x.scaled(y0 / t0);
}

std::vector<Scalar> dense_coords(const GammaElement& x, const CompositionIndexer& indexer) {
  std::vector<Scalar> out(static_cast<std::size_t>(indexer.size()), Scalar::zero(x.spec()));
  for (const auto& [c, t] : x.terms()) out[static_cast<std::size_t>(indexer.rank(c))] = t;
  return out;
}

FieldMatrix sym_to_gamma_matrix(FieldSpec spec, int dim, int degree) {
  CompositionIndexer indexer(degree, dim);
  FieldMatrix m(spec, static_cast<std::size_t>(indexer.size()),
                static_cast<std::size_t>(indexer.size()));
  for (std::int64_t col = 0; col < indexer.size(); ++col) {
    GammaElement img = sym_to_gamma(SymElement::monomial(spec, indexer.at(col)));
    for (const auto& [c, t] : img.terms())
      m.at(static_cast<std::size_t>(indexer.rank(c)), static_cast<std::size_t>(col)) = t;
  }
  return m;
}

FieldMatrix gamma_to_sym_matrix(FieldSpec spec, int dim, int degree) {
  CompositionIndexer indexer(degree, dim);
  FieldMatrix m(spec, static_cast<std::size_t>(indexer.size()),
                static_cast<std::size_t>(indexer.size()));
  for (std::int64_t col = 0; col < indexer.size(); ++col) {
    SymElement img = gamma_to_sym(GammaElement::basis(spec, indexer.at(col)));
    for (const auto& [c, t] : img.terms())
      m.at(static_cast<std::size_t>(indexer.rank(c)), static_cast<std::size_t>(col)) = t;
  }
  return m;
}

}  // namespace divpow
