// Sparse arithmetic in divided powers Gamma^n(V) and symmetric powers
// Sym^n(V) over an exact field: pure symbols, the divided-power product, the
// duality pairing, the canonical maps between the two (composites n!*Id),
// and the actions induced on Gamma^n by endomorphisms of V.
//
// Elements are stored on the monomial symbol basis indexed by compositions;
// pure symbols do not span over small finite fields, so the structural basis
// representation is the primitive notion here.
#ifndef DIVPOW_GAMMA_HPP
#define DIVPOW_GAMMA_HPP

#include <map>

#include "divpow/field.hpp"
#include "divpow/matrix.hpp"
#include "divpow/multiindex.hpp"

namespace divpow {

namespace detail {

/// Shared sparse-coefficient core of GammaElement and SymElement.
class SparseTensor {
 public:
  SparseTensor(FieldSpec spec, int dim, int degree);

  FieldSpec spec() const { return spec_; }
  int dim() const { return dim_; }
  int degree() const { return degree_; }
  const std::map<Composition, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coeff(const Composition& c) const;

  /// Adds t * [c]; drops the entry if the total cancels. The key must have
  /// the right length and degree.
  void add_term(const Composition& c, const Scalar& t);

  void add_scaled(const SparseTensor& o, const Scalar& s);

  bool operator==(const SparseTensor& o) const;

 protected:
  FieldSpec spec_;
  int dim_;
  int degree_;
  std::map<Composition, Scalar> terms_;
};

}  // namespace detail

/// An element of Gamma^n(F^d) on the basis of monomial symbols.
class GammaElement : public detail::SparseTensor {
 public:
  GammaElement(FieldSpec spec, int dim, int degree) : SparseTensor(spec, dim, degree) {}
  static GammaElement zero(FieldSpec spec, int dim, int degree) {
    return GammaElement(spec, dim, degree);
  }
  /// The basis symbol of one composition, coefficient 1.
  static GammaElement basis(FieldSpec spec, const Composition& c);

  GammaElement operator+(const GammaElement& o) const;
  GammaElement operator-(const GammaElement& o) const;
  GammaElement scaled(const Scalar& s) const;
  bool operator==(const GammaElement& o) const { return SparseTensor::operator==(o); }
  bool operator!=(const GammaElement& o) const { return !(*this == o); }
};

/// An element of Sym^n(F^d) on the usual monomial basis.
class SymElement : public detail::SparseTensor {
 public:
  SymElement(FieldSpec spec, int dim, int degree) : SparseTensor(spec, dim, degree) {}
  static SymElement zero(FieldSpec spec, int dim, int degree) {
    return SymElement(spec, dim, degree);
  }
  static SymElement monomial(FieldSpec spec, const Composition& c);

  SymElement operator+(const SymElement& o) const;
  SymElement operator-(const SymElement& o) const;
  SymElement scaled(const Scalar& s) const;
  bool operator==(const SymElement& o) const { return SparseTensor::operator==(o); }
  bool operator!=(const SymElement& o) const { return !(*this == o); }
};

/// The pure symbol [v]_n, expanded on the monomial basis: the coefficient of
/// the symbol at composition a is prod_i v_i^{a_i} (no multinomial factors).
GammaElement pure_symbol(const std::vector<Scalar>& v, int n);

/// Divided-power product: bilinear extension of
///   [e]_a * [e]_b = prod_i C(a_i + b_i, a_i) * [e]_{a+b}.
GammaElement gamma_mul(const GammaElement& x, const GammaElement& y);

/// Polynomial product in the symmetric algebra (exponents add, no binomial
/// factors).
SymElement sym_mul(const SymElement& x, const SymElement& y);

/// The linear form with the given coordinates, as an element of Sym^1.
SymElement sym_linear(const std::vector<Scalar>& v);

/// The perfect pairing Gamma^n(V*) x Sym^n(V) -> F in which the two monomial
/// bases are dual to each other (Gram matrix the identity). On pure symbols
/// it satisfies <[phi]_n, x_1...x_n> = phi(x_1)...phi(x_n).
Scalar pairing(const GammaElement& phi, const SymElement& x);

/// v_1...v_n -> [v_1]_1...[v_n]_1; on the basis e^a -> (prod_i a_i!) [e]_a.
GammaElement sym_to_gamma(const SymElement& x);
/// [v]_n -> v^n; on the basis [e]_a -> multinomial(a) e^a.
SymElement gamma_to_sym(const GammaElement& y);

/// Image of x under the degree-n functor applied to g (any square matrix,
/// not necessarily invertible): basis symbols map to products of pure
/// symbols of the columns of g.
GammaElement apply_induced_action(const FieldMatrix& g, const GammaElement& x);

/// The matrix of apply_induced_action(g, -) on Gamma^n, columns in
/// composition order. Functorial in g.
FieldMatrix induced_gl_action(const FieldMatrix& g, int degree);

/// The derivation attached to u in End(V): the coefficient of e in the
/// action induced by Id + e*u over the dual numbers. On the basis:
///   [e]_a -> sum_{i: a_i>0} sum_j u_{ji} (a_j - [i==j] + 1) [e]_{a-d_i+d_j}.
/// Linear in u.
GammaElement apply_derivation_action(const FieldMatrix& u, const GammaElement& x);

/// The matrix of apply_derivation_action(u, -) on Gamma^n.
FieldMatrix derivation_action(const FieldMatrix& u, int degree);

/// The Veronese image [v]_n of a nonzero vector; never zero.
GammaElement veronese(const std::vector<Scalar>& v, int n);

/// True iff x and y are both nonzero and y = s*x for some nonzero scalar.
bool proportional(const GammaElement& x, const GammaElement& y);

/// Dense coordinate column of x in the composition order of its degree.
std::vector<Scalar> dense_coords(const GammaElement& x, const CompositionIndexer& indexer);

FieldMatrix sym_to_gamma_matrix(FieldSpec spec, int dim, int degree);
FieldMatrix gamma_to_sym_matrix(FieldSpec spec, int dim, int degree);

}  // namespace divpow

#endif
