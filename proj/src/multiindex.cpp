#include "divpow/multiindex.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace divpow {

namespace {

constexpr std::int64_t kCountCap = std::numeric_limits<std::int64_t>::max() / 4;

// Pascal triangle with saturating entries; rows up to kPascalMax.
constexpr int kPascalMax = 160;

const std::vector<std::vector<std::int64_t>>& pascal_table() {
  static const std::vector<std::vector<std::int64_t>> table = [] {
    std::vector<std::vector<std::int64_t>> t(kPascalMax);
    for (int n = 0; n < kPascalMax; ++n) {
      t[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(n) + 1, 1);
      for (int k = 1; k < n; ++k) {
        std::int64_t a = t[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k - 1)];
        std::int64_t b = t[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k)];
        t[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] =
            (a > kCountCap - b) ? kCountCap : a + b;
      }
    }
    return t;
  }();
  return table;
}

std::int64_t binom_capped(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (n >= kPascalMax) return kCountCap;
  return pascal_table()[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

}  // namespace

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("Composition: empty part list");
  degree_ = 0;
  for (int p : parts_) {
    if (p < 0) throw std::invalid_argument("Composition: negative part");
    degree_ += p;
  }
}

std::vector<Composition> compositions(int n, int d) {
  if (n < 0 || d < 1) throw std::invalid_argument("compositions: need n >= 0, d >= 1");
  std::vector<Composition> out;
  std::vector<int> cur(static_cast<std::size_t>(d), 0);
  // first slot descending, recursing on the remainder
  auto rec = [&](auto&& self, int slot, int rem) -> void {
    if (slot == d - 1) {
      cur[static_cast<std::size_t>(slot)] = rem;
      out.emplace_back(cur);
      return;
    }
    for (int v = rem; v >= 0; --v) {
      cur[static_cast<std::size_t>(slot)] = v;
      self(self, slot + 1, rem - v);
    }
  };
  rec(rec, 0, n);
  return out;
}

std::int64_t composition_count(int n, int d) { return binom_capped(n + d - 1, d - 1); }

CompositionIndexer::CompositionIndexer(int n, int d) : n_(n), d_(d), list_(compositions(n, d)) {}

std::int64_t CompositionIndexer::rank(const Composition& c) const {
  if (c.size() != d_ || c.degree() != n_)
    throw std::invalid_argument("CompositionIndexer: wrong shape");
  std::int64_t r = 0;
  int rem = n_;
  for (int j = 0; j + 1 < d_; ++j) {
    // compositions whose slot j exceeds c[j] come first
    int w = rem - c[j] - 1;
    if (w >= 0) r += binom_capped(w + (d_ - 1 - j), d_ - 1 - j);
    rem -= c[j];
  }
  return r;
}

const CompositionIndexer& shared_indexer(int n, int d) {
  thread_local std::map<std::pair<int, int>, CompositionIndexer> cache;
  auto key = std::make_pair(n, d);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, CompositionIndexer(n, d)).first;
  return it->second;
}

BigInt factorial_big(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("factorial of negative");
  BigInt r = 1;
  for (std::int64_t i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial_big(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;
  }
  return r;
}

BigInt multinomial(const std::vector<std::int64_t>& parts) {
  BigInt r = 1;
  std::int64_t sum = 0;
  for (std::int64_t p : parts) {
    if (p < 0) throw std::invalid_argument("multinomial: negative part");
    sum += p;
    r *= binomial_big(sum, p);
  }
  return r;
}

int padic_valuation(BigInt value, std::int64_t p) {
  if (value == 0) throw std::domain_error("padic_valuation of zero");
  if (value < 0) value = -value;
  int v = 0;
  while (value % p == 0) {
    value /= p;
    ++v;
  }
  return v;
}

namespace {
// carries produced when adding x + y in base p
int add_carries(std::int64_t x, std::int64_t y, std::int64_t p) {
  int carries = 0;
  std::int64_t carry = 0;
  while (x > 0 || y > 0 || carry > 0) {
    std::int64_t s = x % p + y % p + carry;
    carry = s >= p ? 1 : 0;
    carries += static_cast<int>(carry);
    x /= p;
    y /= p;
  }
  return carries;
}
}  // namespace

int carry_count(const std::vector<std::int64_t>& parts, std::int64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("carry_count: p must be prime");
  int total = 0;
  std::int64_t acc = 0;
  for (std::int64_t a : parts) {
    if (a < 0) throw std::invalid_argument("carry_count: negative part");
    total += add_carries(acc, a, p);
    acc += a;
  }
  return total;
}

std::int64_t binomial_mod_p(std::int64_t n, std::int64_t k, std::int64_t p) {
  if (k < 0 || k > n) return 0;
  if (p == 2) return ((k & (n - k)) == 0) ? 1 : 0;
  std::int64_t r = 1;
  while (n > 0 || k > 0) {
    std::int64_t nd = n % p, kd = k % p;
    if (kd > nd) return 0;
    // C(nd, kd) for digits < p, by the factorial formula mod p
    std::int64_t num = 1, den = 1;
    for (std::int64_t i = 0; i < kd; ++i) {
      num = num * ((nd - i) % p) % p;
      den = den * ((i + 1) % p) % p;
    }
    r = r * num % p * mod_inverse(den, p) % p;
    n /= p;
    k /= p;
  }
  return r;
}

Scalar multinomial_mod_p(const std::vector<std::int64_t>& parts, std::int64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("multinomial_mod_p: p must be prime");
  FieldSpec spec = FieldSpec::prime(p);
  std::int64_t r = 1;
  std::int64_t sum = 0;
  for (std::int64_t a : parts) {
    if (a < 0) throw std::invalid_argument("multinomial_mod_p: negative part");
    sum += a;
    r = r * binomial_mod_p(sum, a, p) % p;
    if (r == 0) break;
  }
  return Scalar::of(spec, r);
}

bool is_disjoint_sequence(const std::vector<std::int64_t>& seq, std::int64_t characteristic) {
  for (std::int64_t a : seq)
    if (a <= 0) return false;
  std::int64_t prefix = 0;
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    prefix += seq[i];
    if (prefix >= seq[i + 1]) return false;
    if (characteristic != 0) {
      std::int64_t block = 1;
      std::int64_t next = seq[i + 1];
      while (next % characteristic == 0) {
        block *= characteristic;
        next /= characteristic;
      }
      if (prefix >= block) return false;
    }
  }
  return true;
}

std::vector<std::int64_t> make_disjoint_sequence(int count, std::int64_t characteristic,
                                                 bool leading_one) {
  if (count < 1) throw std::invalid_argument("make_disjoint_sequence: count >= 1 required");
  std::int64_t base = characteristic == 0 ? 2 : characteristic;
  std::vector<std::int64_t> out;
  if (leading_one) out.push_back(1);
  std::int64_t v = base;
  for (int i = 0; i < count; ++i) {
    out.push_back(v);
    v *= base;
  }
  return out;
}

}  // namespace divpow
