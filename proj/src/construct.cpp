#include "divpow/construct.hpp"

#include <stdexcept>

#include "divpow/multiindex.hpp"
#include "divpow/serialize.hpp"

namespace divpow {

namespace {

std::vector<Scalar> basis_vector(FieldSpec spec, int d, int i) {
  std::vector<Scalar> v(static_cast<std::size_t>(d), Scalar::zero(spec));
  v[static_cast<std::size_t>(i)] = Scalar::one(spec);
  return v;
}

}  // namespace

FreeTensor build_free_tensor(int d, FieldSpec spec, std::optional<std::vector<std::int64_t>> a) {
  if (d < 3) throw std::invalid_argument("build_free_tensor: d >= 3 required");
  std::vector<std::int64_t> exps =
      a ? *a : make_disjoint_sequence(d + 1, spec.characteristic, false);
  if (static_cast<int>(exps.size()) != d + 1)
    throw std::invalid_argument("build_free_tensor: need d+1 exponents");
  std::vector<std::int64_t> with_one;
  with_one.push_back(1);
  with_one.insert(with_one.end(), exps.begin(), exps.end());
  if (!is_disjoint_sequence(with_one, spec.characteristic))
    throw std::invalid_argument("build_free_tensor: (1, a_1, ..., a_{d+1}) is not disjoint");

  std::int64_t r = 0;
  for (std::int64_t e : exps) r += e;

  GammaElement x(spec, d, 0);
  x.add_term(Composition(std::vector<int>(static_cast<std::size_t>(d), 0)), Scalar::one(spec));
  for (int i = 0; i < d; ++i)
    x = gamma_mul(x, pure_symbol(basis_vector(spec, d, i), static_cast<int>(exps[static_cast<std::size_t>(i)])));
  std::vector<Scalar> diag(static_cast<std::size_t>(d), Scalar::one(spec));
  x = gamma_mul(x, pure_symbol(diag, static_cast<int>(exps.back())));

  if (x.is_zero()) throw std::logic_error("build_free_tensor: tensor vanished");
  return FreeTensor{d, spec, std::move(exps), r, std::move(x)};
}

MultiplicationMap mult_map_matrix(const std::vector<Scalar>& y, std::int64_t a, std::int64_t b) {
  if (y.empty()) throw std::invalid_argument("mult_map_matrix: empty vector");
  bool y_zero = true;
  for (const Scalar& s : y)
    if (!s.is_zero()) {
      y_zero = false;
      break;
    }
  if (y_zero) throw std::invalid_argument("mult_map_matrix: y must be nonzero");
  if (a < 0 || b < 1) throw std::invalid_argument("mult_map_matrix: need a >= 0, b >= 1");

  FieldSpec spec = y.front().spec();
  const int d = static_cast<int>(y.size());
  GammaElement yb = pure_symbol(y, static_cast<int>(b));

  CompositionIndexer source(static_cast<int>(a), d);
  CompositionIndexer target(static_cast<int>(a + b), d);
  FieldMatrix m(spec, static_cast<std::size_t>(target.size()),
                static_cast<std::size_t>(source.size()));
  for (std::int64_t col = 0; col < source.size(); ++col) {
    GammaElement img = gamma_mul(GammaElement::basis(spec, source.at(col)), yb);
    for (const auto& [c, t] : img.terms())
      m.at(static_cast<std::size_t>(target.rank(c)), static_cast<std::size_t>(col)) = t;
  }

  MultiplicationMap out{std::move(m), is_disjoint_sequence({a, b}, spec.characteristic), 0,
                        false};
  out.column_rank = static_cast<std::int64_t>(rank(out.matrix));
  out.full_rank = (out.column_rank == source.size());
  if (out.exponents_disjoint && !out.full_rank)
    throw std::logic_error("mult_map_matrix: disjoint exponents but rank-deficient map");
  return out;
}

GammaElement pure_symbol_product(const std::vector<std::vector<Scalar>>& points,
                                 const std::vector<std::int64_t>& exponents) {
  if (points.empty() || points.size() != exponents.size())
    throw std::invalid_argument("pure_symbol_product: need one exponent per point");
  if (!is_disjoint_sequence(exponents, points.front().front().spec().characteristic))
    throw std::invalid_argument("pure_symbol_product: exponents not disjoint");
  FieldSpec spec = points.front().front().spec();
  const int d = static_cast<int>(points.front().size());
  for (const auto& pt : points) {
    if (static_cast<int>(pt.size()) != d)
      throw std::invalid_argument("pure_symbol_product: inconsistent point dimensions");
    bool zero = true;
    for (const Scalar& s : pt)
      if (!s.is_zero()) {
        zero = false;
        break;
      }
    if (zero) throw std::invalid_argument("pure_symbol_product: zero point");
  }

  GammaElement out(spec, d, 0);
  out.add_term(Composition(std::vector<int>(static_cast<std::size_t>(d), 0)), Scalar::one(spec));
  for (std::size_t i = 0; i < points.size(); ++i)
    out = gamma_mul(out, pure_symbol(points[i], static_cast<int>(exponents[i])));
  if (out.is_zero()) throw std::logic_error("pure_symbol_product: product vanished");
  return out;
}

std::int64_t shift_power(std::int64_t m, std::int64_t characteristic) {
  if (m < 1) throw std::invalid_argument("shift_power: m >= 1 required");
  if (characteristic == 0) return m + 1;
  std::int64_t q = characteristic;
  while (q <= m) q *= characteristic;
  return q;
}

TannakaData build_L(const std::vector<GammaElement>& L_Z, const std::vector<Scalar>& w0) {
  if (L_Z.empty()) throw std::invalid_argument("build_L: empty subspace basis");
  bool w0_zero = true;
  for (const Scalar& s : w0)
    if (!s.is_zero()) {
      w0_zero = false;
      break;
    }
  if (w0_zero) throw std::invalid_argument("build_L: w0 must be nonzero");

  const FieldSpec spec = L_Z.front().spec();
  const int d = L_Z.front().dim();
  const std::int64_t m = L_Z.front().degree();
  if (static_cast<int>(w0.size()) != d) throw std::invalid_argument("build_L: w0 has wrong length");
  for (const GammaElement& l : L_Z)
    if (l.dim() != d || l.degree() != m || !(l.spec() == spec))
      throw std::invalid_argument("build_L: inconsistent basis elements");

  const std::int64_t q = shift_power(m, spec.characteristic);
  const std::int64_t n = m + q;
  if (!(n < 2 * q)) throw std::logic_error("build_L: shift too small");

  auto independent = [&](const std::vector<GammaElement>& basis, std::int64_t degree) {
    CompositionIndexer indexer(static_cast<int>(degree), d);
    FieldMatrix span(spec, basis.size(), static_cast<std::size_t>(indexer.size()));
    for (std::size_t t = 0; t < basis.size(); ++t) {
      std::vector<Scalar> row = dense_coords(basis[t], indexer);
      for (std::size_t c = 0; c < row.size(); ++c) span.at(t, c) = row[c];
    }
    return rank(span) == basis.size();
  };
  if (!independent(L_Z, m)) throw std::invalid_argument("build_L: basis is linearly dependent");

  GammaElement w0q = pure_symbol(w0, static_cast<int>(q));
  std::vector<GammaElement> shifted;
  shifted.reserve(L_Z.size());
  for (const GammaElement& l : L_Z) shifted.push_back(gamma_mul(l, w0q));
  if (!independent(shifted, n))
    throw std::logic_error("build_L: multiplication by the shift symbol dropped rank");

  TannakaData data;
  data.w_dim = d;
  data.m = m;
  data.q = q;
  data.n = n;
  data.w0 = w0;
  data.basis_low = L_Z;
  data.basis_shifted = std::move(shifted);
  data.m_plus_one_nonzero =
      spec.characteristic == 0 || ((m + 1) % spec.characteristic) != 0;
  return data;
}

ShapeSeparationReport shape_separation_check(std::int64_t m, std::int64_t characteristic,
                                             int dim) {
  if (dim < 2) throw std::invalid_argument("shape_separation_check: dim >= 2 required");
  ShapeSeparationReport rep;
  rep.m = m;
  rep.q = shift_power(m, characteristic);
  rep.n = m + rep.q;
  rep.dim = dim;
  rep.certified = true;
  for (const Composition& c : compositions(static_cast<int>(rep.n), dim)) {
    ++rep.total;
    int slots_ge_q = 0;
    for (int i = 0; i < dim; ++i)
      if (c[i] >= rep.q) ++slots_ge_q;
    if (c[0] >= rep.q) ++rep.count_first_ge_q;
    if (c[1] >= rep.q) ++rep.count_second_ge_q;
    if (slots_ge_q >= 2) {
      ++rep.count_two_slots_ge_q;
      rep.certified = false;
    }
  }
  // arithmetic form of the same certificate
  if (!(rep.n < 2 * rep.q)) rep.certified = false;
  return rep;
}

FixedSymbol diagonal_fixed_symbol(int n_block, std::int64_t a1, std::int64_t r, FieldSpec spec) {
  if (n_block < 1) throw std::invalid_argument("diagonal_fixed_symbol: n_block >= 1");
  if (a1 < 1 || a1 >= r) throw std::invalid_argument("diagonal_fixed_symbol: need 1 <= a1 < r");
  const int d = 2 * n_block;
  std::vector<int> parts(static_cast<std::size_t>(d), 0);
  parts[static_cast<std::size_t>(n_block - 1)] = static_cast<int>(a1);
  parts[static_cast<std::size_t>(2 * n_block - 1)] = static_cast<int>(r - a1);
  FixedSymbol out{n_block - 1, 2 * n_block - 1,
                  GammaElement::basis(spec, Composition(parts))};
  return out;
}

int diagonal_block_size(std::int64_t group_dim) {
  int n = 1;
  while (2 * static_cast<std::int64_t>(n) - 1 <= group_dim) ++n;
  return n;
}

nlohmann::json FreeTensor::to_json() const {
  nlohmann::json j;
  j["exponents"] = exponents;
  j["total_degree"] = total_degree;
  j["support_size"] = x.terms().size();
  j["element"] = divpow::to_json(x);
  return j;
}

nlohmann::json TannakaData::to_json() const {
  nlohmann::json j;
  j["w_dim"] = w_dim;
  j["m"] = m;
  j["q"] = q;
  j["n"] = n;
  j["m_plus_one_nonzero"] = m_plus_one_nonzero;
  nlohmann::json w0j = nlohmann::json::array();
  for (const Scalar& s : w0) w0j.push_back(s.str());
  j["w0"] = w0j;
  j["dim_subspace"] = basis_low.size();
  nlohmann::json low = nlohmann::json::array(), high = nlohmann::json::array();
  for (const GammaElement& l : basis_low) low.push_back(divpow::to_json(l));
  for (const GammaElement& l : basis_shifted) high.push_back(divpow::to_json(l));
  j["basis_low"] = low;
  j["basis_shifted"] = high;
  return j;
}

nlohmann::json ShapeSeparationReport::to_json() const {
  nlohmann::json j;
  j["m"] = m;
  j["q"] = q;
  j["n"] = n;
  j["dim"] = dim;
  j["total"] = total;
  j["count_first_ge_q"] = count_first_ge_q;
  j["count_second_ge_q"] = count_second_ge_q;
  j["count_two_slots_ge_q"] = count_two_slots_ge_q;
  j["certified"] = certified;
  return j;
}

}  // namespace divpow
