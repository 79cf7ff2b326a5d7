#include "divpow/local_algebra.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace divpow {

LocalAlgebra::Ptr LocalAlgebra::create(FieldSpec base, std::vector<std::string> labels,
                                       std::vector<Scalar> table, std::vector<int> maximal_ideal,
                                       std::vector<Scalar> residue_coords) {
  auto alg = std::shared_ptr<LocalAlgebra>(new LocalAlgebra());
  alg->base_ = base;
  alg->dim_ = static_cast<int>(labels.size());
  alg->labels_ = std::move(labels);
  alg->table_ = std::move(table);
  alg->maximal_ideal_ = std::move(maximal_ideal);
  alg->residue_coords_ = std::move(residue_coords);
  alg->validate();
  return alg;
}

void LocalAlgebra::validate() const {
  const int d = dim_;
  if (d < 1) throw std::invalid_argument("LocalAlgebra: dimension must be positive");
  if (table_.size() != static_cast<std::size_t>(d) * static_cast<std::size_t>(d) *
                           static_cast<std::size_t>(d) ||
      residue_coords_.size() != static_cast<std::size_t>(d))
    throw std::invalid_argument("LocalAlgebra: table size mismatch");

  auto mul_basis = [&](int i, int j) {
    std::vector<Scalar> out(static_cast<std::size_t>(d), Scalar::zero(base_));
    for (int k = 0; k < d; ++k) out[static_cast<std::size_t>(k)] = structure(i, j, k);
    return out;
  };
  auto mul_vecs = [&](const std::vector<Scalar>& x, const std::vector<Scalar>& y) {
    std::vector<Scalar> out(static_cast<std::size_t>(d), Scalar::zero(base_));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        Scalar c = x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
        if (c.is_zero()) continue;
        for (int k = 0; k < d; ++k)
          out[static_cast<std::size_t>(k)] += c * structure(i, j, k);
      }
    return out;
  };

  // unit at index 0
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) {
      Scalar expect = (j == k) ? Scalar::one(base_) : Scalar::zero(base_);
      if (structure(0, j, k) != expect)
        throw std::invalid_argument("LocalAlgebra: basis element 0 is not a unit");
    }
  // commutativity
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      if (mul_basis(i, j) != mul_basis(j, i))
        throw std::invalid_argument("LocalAlgebra: table not commutative");
  // associativity
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        std::vector<Scalar> ek(static_cast<std::size_t>(d), Scalar::zero(base_));
        ek[static_cast<std::size_t>(k)] = Scalar::one(base_);
        std::vector<Scalar> ei(static_cast<std::size_t>(d), Scalar::zero(base_));
        ei[static_cast<std::size_t>(i)] = Scalar::one(base_);
        if (mul_vecs(mul_basis(i, j), ek) != mul_vecs(ei, mul_basis(j, k)))
          throw std::invalid_argument("LocalAlgebra: table not associative");
      }
  // maximal ideal generators are nilpotent
  for (int idx : maximal_ideal_) {
    std::vector<Scalar> x(static_cast<std::size_t>(d), Scalar::zero(base_));
    x[static_cast<std::size_t>(idx)] = Scalar::one(base_);
    std::vector<Scalar> acc = x;
    for (int e = 1; e < d; ++e) acc = mul_vecs(acc, x);
    for (const Scalar& c : acc)
      if (!c.is_zero()) throw std::invalid_argument("LocalAlgebra: ideal generator not nilpotent");
  }
  // residue is an algebra map killing exactly the maximal ideal coordinates
  auto rho = [&](const std::vector<Scalar>& x) {
    Scalar r = Scalar::zero(base_);
    for (int i = 0; i < d; ++i) r += residue_coords_[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(i)];
    return r;
  };
  std::vector<bool> in_ideal(static_cast<std::size_t>(d), false);
  for (int idx : maximal_ideal_) in_ideal[static_cast<std::size_t>(idx)] = true;
  for (int i = 0; i < d; ++i) {
    std::vector<Scalar> ei(static_cast<std::size_t>(d), Scalar::zero(base_));
    ei[static_cast<std::size_t>(i)] = Scalar::one(base_);
    Scalar ri = rho(ei);
    if (in_ideal[static_cast<std::size_t>(i)] ? !ri.is_zero() : ri.is_zero())
      throw std::invalid_argument("LocalAlgebra: residue kernel is not the maximal ideal");
    for (int j = 0; j < d; ++j) {
      std::vector<Scalar> ej(static_cast<std::size_t>(d), Scalar::zero(base_));
      ej[static_cast<std::size_t>(j)] = Scalar::one(base_);
      if (rho(mul_basis(i, j)) != ri * rho(ej))
        throw std::invalid_argument("LocalAlgebra: residue is not an algebra map");
    }
  }
  if (static_cast<int>(maximal_ideal_.size()) != d - 1)
    throw std::invalid_argument("LocalAlgebra: maximal ideal must have codimension 1");
}

LocalAlgebra::Ptr make_dual_numbers(FieldSpec spec) {
  auto alg = truncated_poly_algebra(spec, 2);
  return alg;
}

LocalAlgebra::Ptr truncated_poly_algebra(FieldSpec spec, int k) {
  if (k < 1) throw std::invalid_argument("truncated_poly_algebra: k >= 1 required");
  std::vector<std::string> labels;
  for (int i = 0; i < k; ++i) {
    if (i == 0)
      labels.push_back("1");
    else if (k == 2)
      labels.push_back("e");  // dual-number generator
    else
      labels.push_back(i == 1 ? "t" : "t^" + std::to_string(i));
  }
  std::vector<Scalar> table(static_cast<std::size_t>(k) * static_cast<std::size_t>(k) *
                                static_cast<std::size_t>(k),
                            Scalar::zero(spec));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i + j < k)
        table[(static_cast<std::size_t>(i) * static_cast<std::size_t>(k) +
               static_cast<std::size_t>(j)) *
                  static_cast<std::size_t>(k) +
              static_cast<std::size_t>(i + j)] = Scalar::one(spec);
  std::vector<int> ideal;
  for (int i = 1; i < k; ++i) ideal.push_back(i);
  std::vector<Scalar> rho(static_cast<std::size_t>(k), Scalar::zero(spec));
  rho[0] = Scalar::one(spec);
  return LocalAlgebra::create(spec, std::move(labels), std::move(table), std::move(ideal),
                              std::move(rho));
}

LocalElem::LocalElem(LocalAlgebra::Ptr alg, std::vector<Scalar> coords)
    : alg_(std::move(alg)), coords_(std::move(coords)) {
  if (static_cast<int>(coords_.size()) != alg_->dim())
    throw std::invalid_argument("LocalElem: coordinate length must equal algebra dimension");
}

LocalElem LocalElem::zero(LocalAlgebra::Ptr alg) {
  std::vector<Scalar> c(static_cast<std::size_t>(alg->dim()), Scalar::zero(alg->base()));
  return LocalElem(std::move(alg), std::move(c));
}

LocalElem LocalElem::one(LocalAlgebra::Ptr alg) { return basis(std::move(alg), 0); }

LocalElem LocalElem::basis(LocalAlgebra::Ptr alg, int i) {
  std::vector<Scalar> c(static_cast<std::size_t>(alg->dim()), Scalar::zero(alg->base()));
  c.at(static_cast<std::size_t>(i)) = Scalar::one(alg->base());
  return LocalElem(std::move(alg), std::move(c));
}

LocalElem LocalElem::embed(LocalAlgebra::Ptr alg, const Scalar& s) {
  std::vector<Scalar> c(static_cast<std::size_t>(alg->dim()), Scalar::zero(alg->base()));
  c[0] = s;
  return LocalElem(std::move(alg), std::move(c));
}

bool LocalElem::is_zero() const {
  for (const Scalar& c : coords_)
    if (!c.is_zero()) return false;
  return true;
}

LocalElem LocalElem::operator+(const LocalElem& o) const {
  if (alg_ != o.alg_) throw std::invalid_argument("LocalElem: mismatched algebras");
  std::vector<Scalar> c(coords_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.coords_[i];
  return LocalElem(alg_, std::move(c));
}

LocalElem LocalElem::operator-(const LocalElem& o) const {
  if (alg_ != o.alg_) throw std::invalid_argument("LocalElem: mismatched algebras");
  std::vector<Scalar> c(coords_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.coords_[i];
  return LocalElem(alg_, std::move(c));
}

bool LocalElem::operator==(const LocalElem& o) const {
  return alg_ == o.alg_ && coords_ == o.coords_;
}

std::string LocalElem::str() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < alg_->dim(); ++i) {
    const Scalar& c = coords_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    os << c.str();
    if (i > 0) os << "*" << alg_->label(i);
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

LocalElem local_mul(const LocalElem& x, const LocalElem& y) {
  if (x.algebra() != y.algebra()) throw std::invalid_argument("local_mul: mismatched algebras");
  const LocalAlgebra& a = *x.algebra();
  const int d = a.dim();
  std::vector<Scalar> out(static_cast<std::size_t>(d), Scalar::zero(a.base()));
  for (int i = 0; i < d; ++i) {
    const Scalar& xi = x.coords()[static_cast<std::size_t>(i)];
    if (xi.is_zero()) continue;
    for (int j = 0; j < d; ++j) {
      const Scalar& yj = y.coords()[static_cast<std::size_t>(j)];
      if (yj.is_zero()) continue;
      Scalar c = xi * yj;
      for (int k = 0; k < d; ++k) {
        const Scalar& t = a.structure(i, j, k);
        if (!t.is_zero()) out[static_cast<std::size_t>(k)] += c * t;
      }
    }
  }
  return LocalElem(x.algebra(), std::move(out));
}

Scalar residue(const LocalElem& x) {
  const LocalAlgebra& a = *x.algebra();
  Scalar r = Scalar::zero(a.base());
  for (int i = 0; i < a.dim(); ++i)
    r += a.residue_coord(i) * x.coords()[static_cast<std::size_t>(i)];
  return r;
}

LocalMatrix::LocalMatrix(LocalAlgebra::Ptr alg, std::size_t rows, std::size_t cols)
    : alg_(alg), rows_(rows), cols_(cols), a_(rows * cols, LocalElem::zero(alg)) {}

std::vector<LocalElem> LocalMatrix::apply(const std::vector<LocalElem>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("LocalMatrix::apply: size mismatch");
  std::vector<LocalElem> out(rows_, LocalElem::zero(alg_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r] = out[r] + local_mul(at(r, c), v[c]);
  return out;
}

FieldMatrix LocalMatrix::residue_matrix() const {
  FieldMatrix m(alg_->base(), rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m.at(r, c) = residue(at(r, c));
  return m;
}

namespace {

nlohmann::json vector_json(const std::vector<LocalElem>& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const LocalElem& e : v) out.push_back(e.str());
  return out;
}

// Odometer over A^cols: every coordinate of every LocalElem runs over F_p.
class ModuleEnumerator {
 public:
  ModuleEnumerator(LocalAlgebra::Ptr alg, std::size_t n)
      : alg_(std::move(alg)),
        p_(alg_->base().characteristic),
        digits_(n * static_cast<std::size_t>(alg_->dim()), 0),
        done_(false) {}

  bool done() const { return done_; }

  std::vector<LocalElem> current() const {
    std::vector<LocalElem> v;
    const std::size_t d = static_cast<std::size_t>(alg_->dim());
    for (std::size_t i = 0; i < digits_.size(); i += d) {
      std::vector<Scalar> coords;
      for (std::size_t k = 0; k < d; ++k)
        coords.push_back(Scalar::of(alg_->base(), digits_[i + k]));
      v.emplace_back(alg_, std::move(coords));
    }
    return v;
  }

  void advance() {
    for (std::size_t i = digits_.size(); i-- > 0;) {
      if (++digits_[i] < p_) return;
      digits_[i] = 0;
    }
    done_ = true;
  }

 private:
  LocalAlgebra::Ptr alg_;
  std::int64_t p_;
  std::vector<std::int64_t> digits_;
  bool done_;
};

}  // namespace

NakayamaReport nakayama_verify(const LocalMatrix& phi, NakayamaMode mode,
                               std::int64_t state_guard) {
  NakayamaReport rep;
  rep.mode = mode;
  const LocalAlgebra::Ptr& alg = phi.algebra();

  if (!alg->base().is_prime_field()) {
    rep.supported = false;
    rep.reason = "enumeration requires a finite base field";
    return rep;
  }
  // |A^cols| = p^(dim * cols)
  double states_log = static_cast<double>(alg->dim()) * static_cast<double>(phi.cols());
  if (states_log * std::log2(static_cast<double>(alg->base().characteristic)) >
      std::log2(static_cast<double>(state_guard))) {
    rep.supported = false;
    rep.reason = "module too large to enumerate";
    return rep;
  }

  FieldMatrix res = phi.residue_matrix();
  std::size_t r = rank(res);
  if (mode == NakayamaMode::surjective) {
    rep.precondition_holds = (r == phi.rows());
    if (!rep.precondition_holds) {
      rep.reason = "residue not surjective";
      return rep;
    }
    // solve Phi x = b for every b in the standard A-basis of the target
    for (std::size_t t = 0; t < phi.rows(); ++t) {
      std::vector<LocalElem> target(phi.rows(), LocalElem::zero(alg));
      target[t] = LocalElem::one(alg);
      bool found = false;
      for (ModuleEnumerator en(alg, phi.cols()); !en.done(); en.advance()) {
        ++rep.states_scanned;
        if (phi.apply(en.current()) == target) {
          found = true;
          break;
        }
      }
      if (!found) {
        rep.pass = false;
        rep.reason = "unit vector not in the image";
        rep.witness = nlohmann::json{{"target", vector_json(target)}};
        return rep;
      }
    }
    rep.pass = true;
    return rep;
  }

  rep.precondition_holds = (r == phi.cols());
  if (!rep.precondition_holds) {
    rep.reason = "residue not injective";
    return rep;
  }
  for (ModuleEnumerator en(alg, phi.cols()); !en.done(); en.advance()) {
    ++rep.states_scanned;
    std::vector<LocalElem> x = en.current();
    bool x_zero = true;
    for (const LocalElem& e : x)
      if (!e.is_zero()) {
        x_zero = false;
        break;
      }
    if (x_zero) continue;
    std::vector<LocalElem> img = phi.apply(x);
    bool img_zero = true;
    for (const LocalElem& e : img)
      if (!e.is_zero()) {
        img_zero = false;
        break;
      }
    if (img_zero) {
      rep.pass = false;
      rep.reason = "nonzero kernel vector";
      rep.witness = nlohmann::json{{"kernel_vector", vector_json(x)}};
      return rep;
    }
  }
  rep.pass = true;
  return rep;
}

nlohmann::json NakayamaReport::to_json() const {
  nlohmann::json j;
  j["mode"] = (mode == NakayamaMode::surjective) ? "surjective" : "injective";
  j["supported"] = supported;
  j["precondition_holds"] = precondition_holds;
  j["pass"] = pass;
  j["states_scanned"] = states_scanned;
  if (!reason.empty()) j["reason"] = reason;
  if (!witness.is_null()) j["witness"] = witness;
  return j;
}

}  // namespace divpow
