#include "divpow/stab.hpp"

#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "divpow/rng.hpp"

namespace divpow {

FieldMatrix Rng::invertible_matrix(FieldSpec spec, int n) {
  for (;;) {
    FieldMatrix m = matrix(spec, n, n);
    if (rank(m) == static_cast<std::size_t>(n)) return m;
  }
}

namespace {

nlohmann::json matrix_json(const FieldMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
    rows.push_back(row);
  }
  return rows;
}

// Rows of the linear system live on the union of the supports of all the
// columns; collect the union once and give each composition a row index.
class RowIndex {
 public:
  std::size_t index_of(const Composition& c) {
    auto [it, inserted] = idx_.try_emplace(c, idx_.size());
    (void)inserted;
    return it->second;
  }
  std::size_t size() const { return idx_.size(); }
  const std::map<Composition, std::size_t>& all() const { return idx_; }

 private:
  std::map<Composition, std::size_t> idx_;
};

FieldMatrix basis_matrix(FieldSpec spec, int d, int j, int k) {
  FieldMatrix e(spec, static_cast<std::size_t>(d), static_cast<std::size_t>(d));
  e.at(static_cast<std::size_t>(j), static_cast<std::size_t>(k)) = Scalar::one(spec);
  return e;
}

}  // namespace

LieStabReport lie_stab_line(const GammaElement& x) {
  if (x.is_zero()) throw std::invalid_argument("lie_stab_line: zero tensor");
  const FieldSpec spec = x.spec();
  const int d = x.dim();
  const std::size_t unknowns = static_cast<std::size_t>(d) * static_cast<std::size_t>(d) + 1;

  // columns of the system: derivation along each matrix unit, then -x
  std::vector<GammaElement> cols;
  cols.reserve(unknowns);
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k)
      cols.push_back(apply_derivation_action(basis_matrix(spec, d, j, k), x));
  cols.push_back(x.scaled(-Scalar::one(spec)));

  RowIndex rows;
  for (const GammaElement& g : cols)
    for (const auto& [c, t] : g.terms()) {
      (void)t;
      rows.index_of(c);
    }

  FieldMatrix system(spec, rows.size(), unknowns);
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& [c, t] : cols[j].terms()) system.at(rows.index_of(c), j) = t;

  LieStabReport rep;
  for (const std::vector<Scalar>& v : kernel_basis(system)) {
    FieldMatrix u(spec, static_cast<std::size_t>(d), static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        u.at(static_cast<std::size_t>(j), static_cast<std::size_t>(k)) =
            v[static_cast<std::size_t>(j * d + k)];
    Scalar c = v.back();
    if (apply_derivation_action(u, x) != x.scaled(c))
      throw std::logic_error("lie_stab_line: solution failed re-verification");
    rep.basis.push_back(LieStabSolution{std::move(u), c});
  }
  rep.solution_dim = static_cast<int>(rep.basis.size());
  rep.pgl_trivial = (rep.solution_dim == 1);
  return rep;
}

SubspaceStabReport lie_stab_subspace(const std::vector<GammaElement>& L) {
  if (L.empty()) throw std::invalid_argument("lie_stab_subspace: empty list");
  const FieldSpec spec = L.front().spec();
  const int d = L.front().dim();
  const int n = L.front().degree();
  for (const GammaElement& l : L)
    if (l.dim() != d || l.degree() != n || !(l.spec() == spec))
      throw std::invalid_argument("lie_stab_subspace: inconsistent elements");

  CompositionIndexer indexer(n, d);
  const std::size_t D = static_cast<std::size_t>(indexer.size());

  FieldMatrix span(spec, L.size(), D);
  for (std::size_t t = 0; t < L.size(); ++t) {
    std::vector<Scalar> row = dense_coords(L[t], indexer);
    for (std::size_t c = 0; c < D; ++c) span.at(t, c) = row[c];
  }
  RrefResult rr = row_reduce(span);
  if (rr.pivot_cols.size() != L.size())
    throw std::invalid_argument("lie_stab_subspace: input list is linearly dependent");

  // membership in span(L) == vanishing after reduction by the echelon basis
  auto reduce = [&](std::vector<Scalar> v) {
    for (std::size_t i = 0; i < rr.pivot_cols.size(); ++i) {
      Scalar f = v[rr.pivot_cols[i]];
      if (f.is_zero()) continue;
      for (std::size_t c = 0; c < D; ++c) v[c] -= f * rr.reduced.at(i, c);
    }
    return v;
  };

  const std::size_t unknowns = static_cast<std::size_t>(d) * static_cast<std::size_t>(d);
  FieldMatrix system(spec, L.size() * D, unknowns);
  for (std::size_t col = 0; col < unknowns; ++col) {
    FieldMatrix e = basis_matrix(spec, d, static_cast<int>(col) / d, static_cast<int>(col) % d);
    for (std::size_t t = 0; t < L.size(); ++t) {
      std::vector<Scalar> w = reduce(dense_coords(apply_derivation_action(e, L[t]), indexer));
      for (std::size_t r = 0; r < D; ++r) system.at(t * D + r, col) = w[r];
    }
  }

  SubspaceStabReport rep;
  for (const std::vector<Scalar>& v : kernel_basis(system)) {
    FieldMatrix u(spec, static_cast<std::size_t>(d), static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        u.at(static_cast<std::size_t>(j), static_cast<std::size_t>(k)) =
            v[static_cast<std::size_t>(j * d + k)];
    for (const GammaElement& l : L) {
      std::vector<Scalar> w = reduce(dense_coords(apply_derivation_action(u, l), indexer));
      for (const Scalar& s : w)
        if (!s.is_zero())
          throw std::logic_error("lie_stab_subspace: solution failed re-verification");
    }
    rep.basis.push_back(std::move(u));
  }
  rep.solution_dim = static_cast<int>(rep.basis.size());
  rep.pgl_dim = rep.solution_dim - 1;
  return rep;
}

std::int64_t default_enum_guard() {
  if (const char* env = std::getenv("DIVPOW_ENUM_GUARD")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end != env && v > 0) return static_cast<std::int64_t>(v);
  }
  return 10'000'000;
}

PointStabReport brute_point_stab_line(const GammaElement& x, std::int64_t q,
                                      std::int64_t guard) {
  if (x.is_zero()) throw std::invalid_argument("brute_point_stab_line: zero tensor");
  if (!x.spec().is_prime_field() || x.spec().characteristic != q)
    throw std::invalid_argument("brute_point_stab_line: tensor is not over F_q");
  const FieldSpec spec = x.spec();
  const int d = x.dim();

  // |GL_d(F_q)| = prod_i (q^d - q^i)
  double group_order = 1.0;
  {
    double qd = 1.0;
    for (int i = 0; i < d; ++i) qd *= static_cast<double>(q);
    double qi = 1.0;
    for (int i = 0; i < d; ++i) {
      group_order *= (qd - qi);
      qi *= static_cast<double>(q);
    }
  }
  if (group_order > static_cast<double>(guard))
    throw std::invalid_argument("brute_point_stab_line: enumeration guard exceeded");

  PointStabReport rep;
  std::set<std::vector<std::int64_t>> seen;

  const int cells = d * d;
  std::vector<std::int64_t> digits(static_cast<std::size_t>(cells), 0);
  bool done = false;
  while (!done) {
    FieldMatrix g(spec, static_cast<std::size_t>(d), static_cast<std::size_t>(d));
    for (int i = 0; i < cells; ++i)
      g.at(static_cast<std::size_t>(i / d), static_cast<std::size_t>(i % d)) =
          Scalar::of(spec, digits[static_cast<std::size_t>(i)]);
    if (rank(g) == static_cast<std::size_t>(d)) {
      ++rep.group_order_scanned;
      if (proportional(x, apply_induced_action(g, x))) {
        // canonical representative mod scalars: first nonzero entry scaled to 1
        Scalar lead = Scalar::zero(spec);
        for (int i = 0; i < cells && lead.is_zero(); ++i)
          lead = g.at(static_cast<std::size_t>(i / d), static_cast<std::size_t>(i % d));
        FieldMatrix rep_mat = g.scaled(lead.inverse());
        std::vector<std::int64_t> key;
        key.reserve(static_cast<std::size_t>(cells));
        for (int i = 0; i < cells; ++i)
          key.push_back(
              rep_mat.at(static_cast<std::size_t>(i / d), static_cast<std::size_t>(i % d))
                  .residue());
        if (seen.insert(std::move(key)).second)
          rep.stabilizers_mod_scalars.push_back(std::move(rep_mat));
      }
    }
    // row-major odometer, last cell fastest
    done = true;
    for (int i = cells; i-- > 0;) {
      if (++digits[static_cast<std::size_t>(i)] < q) {
        done = false;
        break;
      }
      digits[static_cast<std::size_t>(i)] = 0;
    }
  }

  rep.trivial = rep.stabilizers_mod_scalars.size() == 1 &&
                rep.stabilizers_mod_scalars.front() ==
                    FieldMatrix::identity(spec, static_cast<std::size_t>(d));
  return rep;
}

TangencyReport veronese_tangency_check(FieldSpec spec, int d, int n, int samples,
                                       std::uint64_t seed) {
  if (n < 1 || d < 1) throw std::invalid_argument("veronese_tangency_check: bad dimensions");
  TangencyReport rep;
  rep.dim = d;
  rep.degree = n;
  rep.samples = samples;
  rep.seed = seed;
  Rng rng(seed);

  CompositionIndexer indexer(n, d);
  const std::size_t D = static_cast<std::size_t>(indexer.size());

  auto in_tangent_span = [&](const std::vector<Scalar>& v, const GammaElement& y) {
    GammaElement vn1 = pure_symbol(v, n - 1);
    std::vector<std::vector<Scalar>> rows;
    for (int j = 0; j < d; ++j) {
      std::vector<int> unit(static_cast<std::size_t>(d), 0);
      unit[static_cast<std::size_t>(j)] = 1;
      GammaElement ej1 = GammaElement::basis(spec, Composition(unit));
      rows.push_back(dense_coords(gamma_mul(ej1, vn1), indexer));
    }
    rows.push_back(dense_coords(pure_symbol(v, n), indexer));
    FieldMatrix span = FieldMatrix::from_rows(spec, rows);
    std::size_t base_rank = rank(span);
    rows.push_back(dense_coords(y, indexer));
    return rank(FieldMatrix::from_rows(spec, rows)) == base_rank;
  };

  for (int s = 0; s < samples; ++s) {
    std::vector<Scalar> v = rng.nonzero_vector(spec, d);
    GammaElement point = pure_symbol(v, n);

    FieldMatrix u = rng.matrix(spec, d, d);
    if (!in_tangent_span(v, apply_derivation_action(u, point))) ++rep.induced_failures;

    // an arbitrary endomorphism of Gamma^n applied to the same point
    FieldMatrix big = rng.matrix(spec, static_cast<int>(D), static_cast<int>(D));
    std::vector<Scalar> yv = big.apply(dense_coords(point, indexer));
    GammaElement y(spec, d, n);
    for (std::size_t i = 0; i < D; ++i) y.add_term(indexer.at(static_cast<std::int64_t>(i)), yv[i]);
    if (!in_tangent_span(v, y)) ++rep.random_map_failures;
  }
  rep.random_failure_fraction =
      samples > 0 ? static_cast<double>(rep.random_map_failures) / samples : 0.0;
  return rep;
}

nlohmann::json LieStabReport::to_json() const {
  nlohmann::json j;
  j["solution_dim"] = solution_dim;
  j["pgl_trivial"] = pgl_trivial;
  nlohmann::json basis_j = nlohmann::json::array();
  for (const LieStabSolution& s : basis)
    basis_j.push_back(nlohmann::json{{"u", matrix_json(s.u)}, {"c", s.c.str()}});
  j["basis"] = basis_j;
  return j;
}

nlohmann::json SubspaceStabReport::to_json() const {
  nlohmann::json j;
  j["solution_dim"] = solution_dim;
  j["pgl_dim"] = pgl_dim;
  nlohmann::json basis_j = nlohmann::json::array();
  for (const FieldMatrix& u : basis) basis_j.push_back(matrix_json(u));
  j["basis"] = basis_j;
  return j;
}

nlohmann::json PointStabReport::to_json() const {
  nlohmann::json j;
  j["group_order_scanned"] = group_order_scanned;
  j["trivial"] = trivial;
  nlohmann::json list = nlohmann::json::array();
  for (const FieldMatrix& g : stabilizers_mod_scalars) list.push_back(matrix_json(g));
  j["stabilizers_mod_scalars"] = list;
  return j;
}

nlohmann::json TangencyReport::to_json() const {
  nlohmann::json j;
  j["dim"] = dim;
  j["degree"] = degree;
  j["samples"] = samples;
  j["induced_failures"] = induced_failures;
  j["random_map_failures"] = random_map_failures;
  j["random_failure_fraction"] = random_failure_fraction;
  j["seed"] = seed;
  return j;
}

}  // namespace divpow
