// Copyright 2026 The normtrace Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "normtrace/top_field.hpp"

#include <cmath>
#include <string>
#include <unordered_map>
#include <utility>

#include "normtrace/error.hpp"
#include "normtrace/numtheory.hpp"

namespace normtrace {

namespace {

std::uint64_t MulMod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

}  // namespace

TopField::TopField(std::shared_ptr<const SmallField> base, poly::Poly modulus,
                   std::uint64_t table_cap)
    : base_(std::move(base)), modulus_(std::move(modulus)) {
  poly::Trim(modulus_);
  const int degree = poly::Degree(modulus_);
  Require(degree >= 1 && modulus_.back() == 1, ErrorCode::kInvalidArgument,
          "top modulus must be monic of degree >= 1");
  n_ = static_cast<unsigned>(degree);
  q_ = base_->order();
  const auto order = nt::CheckedPow(q_, n_);
  Require(order && *order <= kMaxTopOrder, ErrorCode::kScaleExceeded,
          "q^n exceeds the supported top-field size 2^48");
  order_ = *order;
  if ((q_ & (q_ - 1)) == 0) {
    while ((std::uint64_t{1} << digit_bits_) < q_) ++digit_bits_;
  }

  basis_trace_.resize(n_);
  for (unsigned j = 0; j < n_; ++j) {
    std::vector<Elem> d(n_, 0);
    d[j] = 1;
    basis_trace_[j] = TraceSlow(from_digits(d));
  }

  const std::uint64_t group = order_ - 1;
  const auto primes = group > 1 ? nt::DistinctPrimeFactors(group) : std::vector<std::uint64_t>{};
  generator_ = 0;
  for (TopIndex g = 1; g < order_; ++g) {
    bool full = true;
    for (auto prime : primes) {
      if (PowPoly(g, group / prime) == 1) {
        full = false;
        break;
      }
    }
    if (full) {
      generator_ = g;
      break;
    }
  }
  Require(generator_ != 0, ErrorCode::kInternal, "no primitive element in top field");
  const TopIndex norm_g = PowPoly(generator_, group / (q_ - 1));
  Require(norm_g < q_, ErrorCode::kInternal, "norm left the base field");
  generator_norm_ = static_cast<Elem>(norm_g);
  generator_norm_log_ = base_->log(generator_norm_);

  if (order_ <= table_cap) BuildTables();
}

std::vector<Elem> TopField::digits(TopIndex z) const {
  std::vector<Elem> out(n_);
  if (digit_bits_ != 0) {
    const TopIndex mask = q_ - 1;
    for (unsigned j = 0; j < n_; ++j) {
      out[j] = static_cast<Elem>(z & mask);
      z >>= digit_bits_;
    }
  } else {
    for (unsigned j = 0; j < n_; ++j) {
      out[j] = static_cast<Elem>(z % q_);
      z /= q_;
    }
  }
  return out;
}

TopIndex TopField::from_digits(std::span<const Elem> digits) const {
  TopIndex out = 0;
  for (std::size_t j = digits.size(); j-- > 0;) out = out * q_ + digits[j];
  return out;
}

TopIndex TopField::add(TopIndex a, TopIndex b) const {
  if (base_->characteristic() == 2) return a ^ b;
  auto da = digits(a);
  const auto db = digits(b);
  for (unsigned j = 0; j < n_; ++j) da[j] = base_->add(da[j], db[j]);
  return from_digits(da);
}

TopIndex TopField::neg(TopIndex a) const {
  if (base_->characteristic() == 2) return a;
  auto da = digits(a);
  for (auto& c : da) c = base_->neg(c);
  return from_digits(da);
}

TopIndex TopField::scale(Elem c, TopIndex z) const {
  auto dz = digits(z);
  for (auto& d : dz) d = base_->mul(c, d);
  return from_digits(dz);
}

TopIndex TopField::MulPoly(TopIndex a, TopIndex b) const {
  const auto da = digits(a);
  const auto db = digits(b);
  const SmallField& F = *base_;
  std::vector<Elem> prod(2 * n_ - 1, 0);
  for (unsigned i = 0; i < n_; ++i) {
    if (da[i] == 0) continue;
    for (unsigned j = 0; j < n_; ++j) {
      if (db[j] == 0) continue;
      prod[i + j] = F.add(prod[i + j], F.mul(da[i], db[j]));
    }
  }
  for (std::size_t k = prod.size(); k-- > n_;) {
    const Elem c = prod[k];
    if (c == 0) continue;
    for (unsigned i = 0; i <= n_; ++i) {
      const std::size_t pos = k - n_ + i;
      prod[pos] = F.sub(prod[pos], F.mul(c, modulus_[i]));
    }
  }
  return from_digits(std::span<const Elem>(prod.data(), n_));
}

TopIndex TopField::PowPoly(TopIndex a, std::uint64_t exponent) const {
  TopIndex result = 1;
  while (exponent > 0) {
    if (exponent & 1) result = MulPoly(result, a);
    exponent >>= 1;
    if (exponent > 0) a = MulPoly(a, a);
  }
  return result;
}

TopIndex TopField::mul(TopIndex a, TopIndex b) const {
  if (a == 0 || b == 0) return 0;
  if (!has_tables()) return MulPoly(a, b);
  std::uint64_t k = std::uint64_t{log_[a]} + log_[b];
  if (k >= order_ - 1) k -= order_ - 1;
  return exp_[k];
}

TopIndex TopField::inv(TopIndex a) const {
  Require(a != 0, ErrorCode::kDivisionByZero, "inverse of zero");
  if (!has_tables()) return PowPoly(a, order_ - 2);
  const std::uint64_t k = log_[a];
  return exp_[k == 0 ? 0 : order_ - 1 - k];
}

TopIndex TopField::pow(TopIndex a, std::uint64_t exponent) const {
  if (exponent == 0) return 1;
  if (a == 0) return 0;
  if (!has_tables()) return PowPoly(a, exponent);
  const std::uint64_t group = order_ - 1;
  return exp_[MulMod64(log_[a], exponent % group, group)];
}

Elem TopField::TraceSlow(TopIndex z) const {
  TopIndex sum = 0;
  TopIndex frob = z;
  for (unsigned i = 0; i < n_; ++i) {
    sum = add(sum, frob);
    frob = PowPoly(frob, q_);
  }
  Require(sum < q_, ErrorCode::kInternal, "trace left the base field");
  return static_cast<Elem>(sum);
}

Elem TopField::trace(TopIndex z) const {
  if (has_tables()) return trace_[z];
  const auto dz = digits(z);
  Elem sum = 0;
  for (unsigned j = 0; j < n_; ++j) sum = base_->add(sum, base_->mul(dz[j], basis_trace_[j]));
  return sum;
}

Elem TopField::norm(TopIndex z) const {
  if (z == 0) return 0;
  if (has_tables()) {
    const std::uint64_t k = MulMod64(log_[z], generator_norm_log_, q_ - 1);
    return base_->exp(k);
  }
  const TopIndex value = PowPoly(z, (order_ - 1) / (q_ - 1));
  Require(value < q_, ErrorCode::kInternal, "norm left the base field");
  return static_cast<Elem>(value);
}

std::uint64_t TopField::log(TopIndex z) const {
  Require(z != 0 && z < order_, ErrorCode::kZeroArgument, "discrete log of zero");
  if (has_tables()) return log_[z];
  return LogBabyGiant(z);
}

TopIndex TopField::exp(std::uint64_t k) const {
  k %= order_ - 1;
  if (has_tables()) return exp_[k];
  return PowPoly(generator_, k);
}

std::uint64_t TopField::LogBabyGiant(TopIndex z) const {
  const std::uint64_t group = order_ - 1;
  const auto m = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(group))));
  std::unordered_map<TopIndex, std::uint64_t> baby;
  baby.reserve(m);
  TopIndex power = 1;
  for (std::uint64_t j = 0; j < m; ++j) {
    baby.emplace(power, j);
    power = MulPoly(power, generator_);
  }
  const TopIndex giant = PowPoly(PowPoly(generator_, group - 1), m);  // g^(-m)
  TopIndex gamma = z;
  for (std::uint64_t i = 0; i <= m; ++i) {
    if (auto it = baby.find(gamma); it != baby.end()) return (i * m + it->second) % group;
    gamma = MulPoly(gamma, giant);
  }
  Fail(ErrorCode::kInternal, "baby-step giant-step found no logarithm");
}

void TopField::BuildTables() {
  const SmallField& F = *base_;
  const std::uint64_t group = order_ - 1;
  exp_.resize(group);
  log_.assign(order_, 0);

  // Walk the powers of the generator with an allocation-free multiply.
  const auto g = digits(generator_);
  std::vector<std::pair<unsigned, Elem>> g_terms;
  for (unsigned i = 0; i < n_; ++i) {
    if (g[i] != 0) g_terms.emplace_back(i, g[i]);
  }
  std::vector<Elem> cur(n_, 0);
  std::vector<Elem> prod(2 * n_, 0);
  cur[0] = 1;
  for (std::uint64_t k = 0; k < group; ++k) {
    const TopIndex index = from_digits(cur);
    exp_[k] = static_cast<std::uint32_t>(index);
    log_[index] = static_cast<std::uint32_t>(k);
    std::fill(prod.begin(), prod.end(), 0);
    for (unsigned i = 0; i < n_; ++i) {
      if (cur[i] == 0) continue;
      for (const auto& [j, c] : g_terms) prod[i + j] = F.add(prod[i + j], F.mul(cur[i], c));
    }
    for (std::size_t t = 2 * n_ - 1; t-- > n_;) {
      const Elem c = prod[t];
      if (c == 0) continue;
      for (unsigned i = 0; i <= n_; ++i) {
        const std::size_t pos = t - n_ + i;
        prod[pos] = F.sub(prod[pos], F.mul(c, modulus_[i]));
      }
    }
    std::copy(prod.begin(), prod.begin() + n_, cur.begin());
  }
  Require(from_digits(cur) == 1, ErrorCode::kInternal, "generator order mismatch");

  // trace[d * q^j + r] = d * Tr(x^j) + trace[r] for r < q^j.
  trace_.assign(order_, 0);
  std::uint64_t block = 1;
  for (unsigned j = 0; j < n_; ++j) {
    for (Elem d = 1; d < q_; ++d) {
      const Elem contribution = F.mul(d, basis_trace_[j]);
      const std::uint64_t offset = d * block;
      for (std::uint64_t r = 0; r < block; ++r) trace_[offset + r] = F.add(contribution, trace_[r]);
    }
    block *= q_;
  }
}

}  // namespace normtrace
