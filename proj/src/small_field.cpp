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

#include "normtrace/small_field.hpp"

#include <string>
#include <utility>

#include "normtrace/error.hpp"
#include "normtrace/numtheory.hpp"

namespace normtrace {

namespace {

constexpr std::uint32_t kMaxAddTableOrder = 512;

}  // namespace

SmallField SmallField::Prime(std::uint32_t p) { return SmallField(p, {0, 1}); }

SmallField SmallField::Extension(std::uint32_t p, std::vector<Elem> modulus) {
  return SmallField(p, std::move(modulus));
}

SmallField::SmallField(std::uint32_t p, std::vector<Elem> modulus)
    : p_(p), modulus_(std::move(modulus)) {
  Require(nt::IsPrime(p), ErrorCode::kNotPrime, std::to_string(p) + " is not prime");
  Require(modulus_.size() >= 2 && modulus_.back() == 1, ErrorCode::kInvalidArgument,
          "modulus must be monic of degree >= 1");
  for (Elem c : modulus_) {
    Require(c < p, ErrorCode::kInvalidArgument, "modulus coefficient not reduced mod p");
  }
  e_ = static_cast<unsigned>(modulus_.size() - 1);
  const auto order = nt::CheckedPow(p, e_);
  Require(order && *order <= kMaxSmallFieldOrder, ErrorCode::kScaleExceeded,
          "field order p^e too large for table arithmetic");
  q_ = static_cast<std::uint32_t>(*order);

  neg_table_.resize(q_);
  for (Elem a = 0; a < q_; ++a) {
    auto d = digits(a);
    for (auto& c : d) c = (p_ - c) % p_;
    neg_table_[a] = from_digits(d);
  }
  if (p_ != 2 && q_ <= kMaxAddTableOrder) {
    add_table_.resize(static_cast<std::size_t>(q_) * q_);
    for (Elem a = 0; a < q_; ++a) {
      for (Elem b = 0; b < q_; ++b) add_table_[static_cast<std::size_t>(a) * q_ + b] = AddDigits(a, b);
    }
  }

  // Smallest element of full multiplicative order.
  const std::uint64_t group = q_ - 1;
  const auto primes = group > 1 ? nt::DistinctPrimeFactors(group) : std::vector<std::uint64_t>{};
  auto slow_pow = [this](Elem a, std::uint64_t k) {
    Elem result = 1;
    while (k > 0) {
      if (k & 1) result = MulSlow(result, a);
      a = MulSlow(a, a);
      k >>= 1;
    }
    return result;
  };
  generator_ = 0;
  for (Elem g = 1; g < q_; ++g) {
    bool full = true;
    for (auto prime : primes) {
      if (slow_pow(g, group / prime) == 1) {
        full = false;
        break;
      }
    }
    if (full) {
      generator_ = g;
      break;
    }
  }
  Require(generator_ != 0, ErrorCode::kInternal, "no primitive element found");

  exp_.resize(q_ - 1);
  log_.assign(q_, 0);
  Elem power = 1;
  for (std::uint32_t k = 0; k < q_ - 1; ++k) {
    exp_[k] = power;
    log_[power] = k;
    power = MulSlow(power, generator_);
  }

  abs_trace_.resize(q_);
  for (Elem a = 0; a < q_; ++a) {
    Elem sum = 0;
    Elem frob = a;
    for (unsigned i = 0; i < e_; ++i) {
      sum = add(sum, frob);
      frob = pow(frob, p_);
    }
    Require(sum < p_, ErrorCode::kInternal, "absolute trace left F_p");
    abs_trace_[a] = sum;
  }
}

Elem SmallField::AddDigits(Elem a, Elem b) const {
  Elem out = 0;
  Elem scale = 1;
  for (unsigned i = 0; i < e_; ++i) {
    out += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

Elem SmallField::MulSlow(Elem a, Elem b) const {
  const auto da = digits(a);
  const auto db = digits(b);
  std::vector<std::uint64_t> prod(2 * e_ - 1, 0);
  for (unsigned i = 0; i < e_; ++i) {
    for (unsigned j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{da[i]} * db[j]) % p_;
  }
  for (std::size_t k = prod.size(); k-- > e_;) {
    const std::uint64_t c = prod[k];
    if (c == 0) continue;
    for (unsigned i = 0; i <= e_; ++i) {
      const std::size_t pos = k - e_ + i;
      prod[pos] = (prod[pos] + (p_ - c) * modulus_[i]) % p_;
    }
  }
  std::vector<std::uint32_t> reduced(e_);
  for (unsigned i = 0; i < e_; ++i) reduced[i] = static_cast<std::uint32_t>(prod[i]);
  return from_digits(reduced);
}

Elem SmallField::inv(Elem a) const {
  Require(a != 0, ErrorCode::kDivisionByZero, "inverse of zero");
  const std::uint32_t k = log_[a];
  return exp_[k == 0 ? 0 : q_ - 1 - k];
}

Elem SmallField::pow(Elem a, std::uint64_t exponent) const {
  if (exponent == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t k = (static_cast<std::uint64_t>(log_[a]) * (exponent % (q_ - 1))) % (q_ - 1);
  return exp_[k];
}

std::uint32_t SmallField::log(Elem a) const {
  Require(a != 0 && a < q_, ErrorCode::kZeroArgument, "discrete log of zero");
  return log_[a];
}

std::uint64_t SmallField::element_order(Elem a) const {
  const std::uint64_t group = q_ - 1;
  return group / nt::Gcd(group, log(a) == 0 ? group : log(a));
}

Elem SmallField::from_integer(long long value) const {
  const long long p = p_;
  return static_cast<Elem>(((value % p) + p) % p);
}

std::vector<std::uint32_t> SmallField::digits(Elem a) const {
  std::vector<std::uint32_t> out(e_);
  for (unsigned i = 0; i < e_; ++i) {
    out[i] = a % p_;
    a /= p_;
  }
  return out;
}

Elem SmallField::from_digits(std::span<const std::uint32_t> digits) const {
  Elem out = 0;
  for (std::size_t i = digits.size(); i-- > 0;) out = out * p_ + digits[i];
  return out;
}

}  // namespace normtrace
