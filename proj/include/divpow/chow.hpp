// Degree <= 2 intersection model for the blow-up of P^N along two disjoint
// smooth centers with cyclic Picard groups, the obstruction search for
// candidate images of the exceptional divisors under a ring automorphism,
// and exact point counts of projective bundles over projective spaces.
#ifndef DIVPOW_CHOW_HPP
#define DIVPOW_CHOW_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "divpow/field.hpp"

namespace divpow::chow {

/// Blow-up of P^N along centers Y_1, Y_2 of dimensions dim_i, with the
/// hyperplane class restricting to deg_i times the Picard generator of Y_i.
/// Degree-2 classes split off a Picard block per exceptional divisor only
/// when both codimensions are >= 3, which the constructor enforces.
struct BlowupModel {
  std::int64_t ambient_dim;   // N
  std::int64_t center_dim[2];
  std::int64_t center_deg[2];

  BlowupModel(std::int64_t n, std::int64_t dim1, std::int64_t dim2, std::int64_t deg1,
              std::int64_t deg2);

  std::int64_t codim(int i) const { return ambient_dim - center_dim[i]; }
};

/// h*(pullback of H) + e1*E_1 + e2*E_2 in degree 1.
struct DivisorClass {
  std::int64_t h = 0;
  std::int64_t e1 = 0;
  std::int64_t e2 = 0;

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

/// Degree-2 class in coordinates (H^2; per center: the Picard pullback
/// coefficient y_i and the twisting-class coefficient z_i).
struct CodimTwoClass {
  std::int64_t h2 = 0;
  std::int64_t y1 = 0, z1 = 0;
  std::int64_t y2 = 0, z2 = 0;

  bool is_zero() const { return h2 == 0 && y1 == 0 && z1 == 0 && y2 == 0 && z2 == 0; }
  friend bool operator==(const CodimTwoClass&, const CodimTwoClass&) = default;
};

/// Bilinear extension of the product table
///   H.H = H^2,  H.E_i = (y_i = deg_i, z_i = 0),
///   E_i.E_i = (y_i = 0, z_i = -1),  E_1.E_2 = 0.
CodimTwoClass multiply(const BlowupModel& model, const DivisorClass& x, const DivisorClass& y);

/// One candidate pair of images (f(E_1), f(E_2)) and how it was ruled out.
struct CandidateRecord {
  DivisorClass image1, image2;
  std::string branch;  // "permutation", "mixed-pair", "mixed-with-exceptional"
  bool obstructed = false;
  bool trivial = false;

  nlohmann::json to_json() const;
};

struct ExceptionalImageReport {
  std::int64_t total_candidates = 0;
  std::int64_t permutation_candidates = 0;
  std::int64_t mixed_pair_obstructed = 0;       // both images off the exceptional locus
  std::int64_t mixed_exceptional_obstructed = 0;  // one exact exceptional, one mixed
  std::int64_t unobstructed_nontrivial = 0;     // must stay 0
  bool all_nontrivial_obstructed = false;
  std::vector<CandidateRecord> candidates;  // filled only when requested

  nlohmann::json to_json() const;
};

/// Enumerates candidate images f(E_i) = a_i H - b_i E_1 - c_i E_2 with
/// 1 <= a_i <= bound, 0 <= b_i, c_i <= bound, together with the exact
/// assignments f(E_i) = E_j, and checks each pair against the product
/// table: a mixed pair multiplies to H^2-coefficient a_1 a_2 != 0 although
/// E_1.E_2 = 0, and a mixed image against an exact E_j produces the nonzero
/// Picard coefficient a * deg_j. Exact permutations are the allowed trivial
/// candidates.
ExceptionalImageReport exceptional_image_search(const BlowupModel& model, int bound,
                                                bool list_candidates = false);

/// Number of F_q-points of a projective bundle of rank m over P^{a-1}:
/// (q^a - 1)(q^m - 1) / (q - 1)^2. q may be any prime power >= 2.
BigInt projective_bundle_count(std::int64_t a, std::int64_t m, const BigInt& q);

struct BundleCountVerdict {
  bool polynomials_equal = false;
  bool parameters_swapped = false;  // m1 == a2 and m2 == a1
};

/// Compares the counting polynomials (X^{a1}-1)(X^{m1}-1) and
/// (X^{a2}-1)(X^{m2}-1) exactly. Requires a1 != a2 and all entries >= 2;
/// when the polynomials agree the exponent multisets {a1,m1} and {a2,m2}
/// agree, forcing m1 = a2 and m2 = a1.
BundleCountVerdict compare_bundle_counts(std::int64_t a1, std::int64_t m1, std::int64_t a2,
                                         std::int64_t m2);

/// Side condition ensuring the two exceptional divisors of a blow-up along
/// P^{w-1} and P^{l-1} inside P^{V-1} are distinguishable by point counts:
/// w != l and w != V - l.
bool centers_distinguishable(std::int64_t w, std::int64_t l, std::int64_t ambient_space_dim);

}  // namespace divpow::chow

#endif
