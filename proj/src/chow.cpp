#include "divpow/chow.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace divpow::chow {

BlowupModel::BlowupModel(std::int64_t n, std::int64_t dim1, std::int64_t dim2, std::int64_t deg1,
                         std::int64_t deg2)
    : ambient_dim(n), center_dim{dim1, dim2}, center_deg{deg1, deg2} {
  for (int i = 0; i < 2; ++i) {
    if (center_dim[i] < 1) throw std::invalid_argument("BlowupModel: center dimension >= 1");
    if (center_deg[i] < 1) throw std::invalid_argument("BlowupModel: center degree >= 1");
    if (codim(i) < 3)
      throw std::invalid_argument("BlowupModel: codimension >= 3 required for the degree-2 split");
  }
}

CodimTwoClass multiply(const BlowupModel& model, const DivisorClass& x, const DivisorClass& y) {
  CodimTwoClass out;
  out.h2 = x.h * y.h;
  out.y1 = (x.h * y.e1 + y.h * x.e1) * model.center_deg[0];
  out.z1 = -x.e1 * y.e1;
  out.y2 = (x.h * y.e2 + y.h * x.e2) * model.center_deg[1];
  out.z2 = -x.e2 * y.e2;
  return out;
}

namespace {

nlohmann::json divisor_json(const DivisorClass& c) {
  return nlohmann::json{{"h", c.h}, {"e1", c.e1}, {"e2", c.e2}};
}

}  // namespace

nlohmann::json CandidateRecord::to_json() const {
  return nlohmann::json{{"image1", divisor_json(image1)},
                        {"image2", divisor_json(image2)},
                        {"branch", branch},
                        {"obstructed", obstructed},
                        {"trivial", trivial}};
}

ExceptionalImageReport exceptional_image_search(const BlowupModel& model, int bound,
                                                bool list_candidates) {
  if (bound < 1) throw std::invalid_argument("exceptional_image_search: bound >= 1");

  // candidate images: the two exceptional classes themselves, then the
  // mixed grid a H - b E1 - c E2
  std::vector<DivisorClass> images;
  std::vector<bool> exact;  // image is literally E_1 or E_2
  images.push_back(DivisorClass{0, 1, 0});
  exact.push_back(true);
  images.push_back(DivisorClass{0, 0, 1});
  exact.push_back(true);
  for (std::int64_t a = 1; a <= bound; ++a)
    for (std::int64_t b = 0; b <= bound; ++b)
      for (std::int64_t c = 0; c <= bound; ++c) {
        images.push_back(DivisorClass{a, -b, -c});
        exact.push_back(false);
      }

  ExceptionalImageReport rep;
  for (std::size_t i = 0; i < images.size(); ++i)
    for (std::size_t j = 0; j < images.size(); ++j) {
      ++rep.total_candidates;
      CandidateRecord rec;
      rec.image1 = images[i];
      rec.image2 = images[j];
      CodimTwoClass prod = multiply(model, images[i], images[j]);
      if (exact[i] && exact[j]) {
        rec.branch = "permutation";
        rec.trivial = true;
        rec.obstructed = false;
        ++rep.permutation_candidates;
      } else if (!exact[i] && !exact[j]) {
        // f(E_1).f(E_2) would need to vanish like E_1.E_2 does
        rec.branch = "mixed-pair";
        rec.obstructed = (prod.h2 != 0);
        if (rec.obstructed) ++rep.mixed_pair_obstructed;
      } else {
        // one image stays an exceptional divisor, the other is mixed; the
        // product lands in that divisor's Picard block with a nonzero
        // ample part
        rec.branch = "mixed-with-exceptional";
        std::int64_t ample = exact[i] ? (images[i].e1 != 0 ? prod.y1 : prod.y2)
                                      : (images[j].e1 != 0 ? prod.y1 : prod.y2);
        rec.obstructed = (ample != 0);
        if (rec.obstructed) ++rep.mixed_exceptional_obstructed;
      }
      if (!rec.trivial && !rec.obstructed) ++rep.unobstructed_nontrivial;
      if (list_candidates) rep.candidates.push_back(std::move(rec));
    }
  rep.all_nontrivial_obstructed = (rep.unobstructed_nontrivial == 0);
  return rep;
}

nlohmann::json ExceptionalImageReport::to_json() const {
  nlohmann::json j;
  j["total_candidates"] = total_candidates;
  j["permutation_candidates"] = permutation_candidates;
  j["mixed_pair_obstructed"] = mixed_pair_obstructed;
  j["mixed_exceptional_obstructed"] = mixed_exceptional_obstructed;
  j["unobstructed_nontrivial"] = unobstructed_nontrivial;
  j["all_nontrivial_obstructed"] = all_nontrivial_obstructed;
  if (!candidates.empty()) {
    nlohmann::json list = nlohmann::json::array();
    for (const CandidateRecord& c : candidates) list.push_back(c.to_json());
    j["candidates"] = list;
  }
  return j;
}

BigInt projective_bundle_count(std::int64_t a, std::int64_t m, const BigInt& q) {
  if (a < 2 || m < 2) throw std::invalid_argument("projective_bundle_count: a, m >= 2");
  if (q < 2) throw std::invalid_argument("projective_bundle_count: q >= 2");
  BigInt qa = pow(q, static_cast<unsigned>(a));
  BigInt qm = pow(q, static_cast<unsigned>(m));
  BigInt num = (qa - 1) * (qm - 1);
  BigInt den = (q - 1) * (q - 1);
  // both factors are divisible by q - 1
  return num / den;
}

namespace {
// coefficients of (X^a - 1)(X^m - 1)
std::vector<std::int64_t> count_poly(std::int64_t a, std::int64_t m) {
  std::vector<std::int64_t> c(static_cast<std::size_t>(a + m) + 1, 0);
  c[static_cast<std::size_t>(a + m)] += 1;
  c[static_cast<std::size_t>(a)] -= 1;
  c[static_cast<std::size_t>(m)] -= 1;
  c[0] += 1;
  return c;
}
}  // namespace

BundleCountVerdict compare_bundle_counts(std::int64_t a1, std::int64_t m1, std::int64_t a2,
                                         std::int64_t m2) {
  if (a1 < 2 || m1 < 2 || a2 < 2 || m2 < 2)
    throw std::invalid_argument("compare_bundle_counts: all parameters >= 2");
  if (a1 == a2) throw std::invalid_argument("compare_bundle_counts: requires a1 != a2");
  BundleCountVerdict v;
  v.polynomials_equal = (count_poly(a1, m1) == count_poly(a2, m2));
  if (v.polynomials_equal) {
    bool multiset_match = (std::min(a1, m1) == std::min(a2, m2)) &&
                          (std::max(a1, m1) == std::max(a2, m2));
    if (!multiset_match)
      throw std::logic_error("compare_bundle_counts: equal polynomials with distinct exponents");
    v.parameters_swapped = (m1 == a2 && m2 == a1);
    if (!v.parameters_swapped)
      throw std::logic_error("compare_bundle_counts: multiset equality without swap");
  }
  return v;
}

bool centers_distinguishable(std::int64_t w, std::int64_t l, std::int64_t ambient_space_dim) {
  if (w == l) return false;
  if (w == ambient_space_dim - l) return false;
  // double-checked through the counting polynomials of the two exceptional
  // bundles: P^{c-1}-bundle over P^{w-1} vs over P^{l-1}
  BundleCountVerdict v =
      compare_bundle_counts(w, ambient_space_dim - w, l, ambient_space_dim - l);
  return !v.polynomials_equal;
}

}  // namespace divpow::chow
