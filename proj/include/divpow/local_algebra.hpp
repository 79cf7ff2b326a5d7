// Finite local algebras over a base field (dual numbers, truncated
// polynomial rings), their residue maps, and the lifting checks for maps of
// free modules over them: a surjective/injective residue matrix certifies
// the same property of the lift, verified here by brute-force enumeration.
#ifndef DIVPOW_LOCAL_ALGEBRA_HPP
#define DIVPOW_LOCAL_ALGEBRA_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "divpow/field.hpp"
#include "divpow/matrix.hpp"

namespace divpow {

/// A finite local algebra A over the base field, given by structure
/// constants. Construction validates that the table is commutative,
/// associative and unital, that the listed maximal-ideal basis elements are
/// nilpotent, and that the residue map is an algebra map whose kernel is
/// spanned by them.
class LocalAlgebra {
 public:
  using Ptr = std::shared_ptr<const LocalAlgebra>;

  static Ptr create(FieldSpec base, std::vector<std::string> labels,
                    std::vector<Scalar> table, std::vector<int> maximal_ideal,
                    std::vector<Scalar> residue_coords);

  FieldSpec base() const { return base_; }
  int dim() const { return dim_; }
  const std::string& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& maximal_ideal() const { return maximal_ideal_; }

  /// Coefficient of basis element k in the product e_i * e_j.
  const Scalar& structure(int i, int j, int k) const {
    return table_[(static_cast<std::size_t>(i) * static_cast<std::size_t>(dim_) +
                   static_cast<std::size_t>(j)) *
                      static_cast<std::size_t>(dim_) +
                  static_cast<std::size_t>(k)];
  }
  const Scalar& residue_coord(int i) const { return residue_coords_[static_cast<std::size_t>(i)]; }

 private:
  LocalAlgebra() = default;
  void validate() const;

  FieldSpec base_;
  int dim_ = 0;
  std::vector<std::string> labels_;
  std::vector<Scalar> table_;  // dim^3, index ((i*dim)+j)*dim+k
  std::vector<int> maximal_ideal_;
  std::vector<Scalar> residue_coords_;
};

/// The two-dimensional algebra with basis (1, e), e^2 = 0, residue a+be -> a.
LocalAlgebra::Ptr make_dual_numbers(FieldSpec spec);

/// F[t]/t^k with basis (1, t, ..., t^{k-1}); k = 1 is the field itself,
/// k = 2 the dual numbers.
LocalAlgebra::Ptr truncated_poly_algebra(FieldSpec spec, int k);

class LocalElem {
 public:
  LocalElem(LocalAlgebra::Ptr alg, std::vector<Scalar> coords);
  static LocalElem zero(LocalAlgebra::Ptr alg);
  static LocalElem one(LocalAlgebra::Ptr alg);
  static LocalElem basis(LocalAlgebra::Ptr alg, int i);
  /// The image of a base-field scalar under F -> A.
  static LocalElem embed(LocalAlgebra::Ptr alg, const Scalar& s);

  const LocalAlgebra::Ptr& algebra() const { return alg_; }
  const std::vector<Scalar>& coords() const { return coords_; }
  bool is_zero() const;

  LocalElem operator+(const LocalElem& o) const;
  LocalElem operator-(const LocalElem& o) const;
  bool operator==(const LocalElem& o) const;
  bool operator!=(const LocalElem& o) const { return !(*this == o); }

  std::string str() const;

 private:
  LocalAlgebra::Ptr alg_;
  std::vector<Scalar> coords_;
};

/// Bilinear product through the structure table. Both operands must live in
/// the same algebra.
LocalElem local_mul(const LocalElem& x, const LocalElem& y);

/// The residue map rho: A -> F.
Scalar residue(const LocalElem& x);

/// A rows x cols matrix of algebra elements, i.e. an A-linear map
/// A^cols -> A^rows.
class LocalMatrix {
 public:
  LocalMatrix(LocalAlgebra::Ptr alg, std::size_t rows, std::size_t cols);

  const LocalAlgebra::Ptr& algebra() const { return alg_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  LocalElem& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const LocalElem& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  std::vector<LocalElem> apply(const std::vector<LocalElem>& v) const;
  /// Entry-wise residue, an F-linear map F^cols -> F^rows.
  FieldMatrix residue_matrix() const;

 private:
  LocalAlgebra::Ptr alg_;
  std::size_t rows_, cols_;
  std::vector<LocalElem> a_;
};

enum class NakayamaMode { surjective, injective };

struct NakayamaReport {
  NakayamaMode mode;
  bool supported = true;           // false over an infinite base field
  bool precondition_holds = false; // residue matrix surjective / injective
  bool pass = false;
  std::int64_t states_scanned = 0;
  std::string reason;
  nlohmann::json witness;  // unsolvable target or nonzero kernel vector

  nlohmann::json to_json() const;
};

/// Checks the lifting statement for Phi: A^n -> A^m over a finite local
/// algebra with finite base field. If the residue matrix is surjective
/// (resp. injective), certifies by enumeration of the finite module that Phi
/// itself is surjective (resp. has trivial kernel); any failure would come
/// with an explicit witness.
NakayamaReport nakayama_verify(const LocalMatrix& phi, NakayamaMode mode,
                               std::int64_t state_guard = 1 << 22);

}  // namespace divpow

#endif
