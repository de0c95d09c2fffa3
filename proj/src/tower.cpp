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

#include "normtrace/tower.hpp"

#include <algorithm>
#include <string>

#include "normtrace/error.hpp"
#include "normtrace/numtheory.hpp"

namespace normtrace {

namespace {

poly::Poly FindIrreducible(const SmallField& F, unsigned degree, std::uint64_t seed) {
  if (degree == 1) return {0, 1};
  const auto count = nt::CheckedPow(F.order(), degree);
  Require(count.has_value(), ErrorCode::kScaleExceeded, "modulus search space too large");
  const std::uint64_t start = seed % *count;
  for (std::uint64_t i = 0; i < *count; ++i) {
    const std::uint64_t index = (start + i) % *count;
    poly::Poly f = poly::MonicFromIndex(F, degree, index);
    if (poly::IsIrreducible(F, f)) return f;
  }
  Fail(ErrorCode::kInternal, "no irreducible polynomial of degree " + std::to_string(degree));
}

}  // namespace

std::string_view LevelName(Level level) {
  switch (level) {
    case Level::kPrime: return "prime";
    case Level::kMid: return "mid";
    case Level::kTop: return "top";
  }
  return "unknown";
}

std::shared_ptr<const FieldTower> FieldTower::Build(std::uint32_t p, unsigned e, unsigned n,
                                                    std::uint64_t seed,
                                                    std::uint64_t table_cap) {
  Require(nt::IsPrime(p), ErrorCode::kNotPrime, std::to_string(p) + " is not prime");
  Require(e >= 1 && n >= 1, ErrorCode::kInvalidArgument, "extension degrees must be >= 1");
  const auto q = nt::CheckedPow(p, e);
  Require(q && *q <= kMaxSmallFieldOrder, ErrorCode::kScaleExceeded, "q = p^e too large");
  const auto total = nt::CheckedPow(*q, n);
  Require(total && *total <= kMaxTopOrder, ErrorCode::kScaleExceeded,
          "q^n exceeds the supported top-field size 2^48");

  std::shared_ptr<FieldTower> tower(new FieldTower());
  tower->seed_ = seed;
  tower->prime_ = std::make_shared<const SmallField>(SmallField::Prime(p));
  poly::Poly base = FindIrreducible(*tower->prime_, e, seed);
  tower->mid_ = std::make_shared<const SmallField>(SmallField::Extension(p, base));
  poly::Poly top = FindIrreducible(*tower->mid_, n, seed);
  tower->top_ = std::make_shared<const TopField>(tower->mid_, std::move(top), table_cap);

  const std::uint64_t group = tower->mid_->order() - 1;
  const std::uint64_t log_norm = tower->mid_->log(tower->top_->generator_norm());
  const auto inverse = nt::ModInverse(log_norm, group);
  Require(inverse.has_value(), ErrorCode::kInternal, "Norm(g_qn) is not primitive");
  tower->norm_log_inverse_ = *inverse;
  return tower;
}

std::uint64_t FieldTower::LevelOrder(Level level) const {
  switch (level) {
    case Level::kPrime: return p();
    case Level::kMid: return q();
    case Level::kTop: return order();
  }
  return 0;
}

FieldElement FieldTower::Element(Level level, std::uint64_t index) const {
  Require(index < LevelOrder(level), ErrorCode::kInvalidArgument,
          "index " + std::to_string(index) + " out of range for the " +
              std::string(LevelName(level)) + " level");
  FieldElement x{level, {}};
  switch (level) {
    case Level::kPrime: x.coeffs = {static_cast<std::uint32_t>(index)}; break;
    case Level::kMid: x.coeffs = mid_->digits(static_cast<Elem>(index)); break;
    case Level::kTop: x.coeffs = top_->digits(index); break;
  }
  return x;
}

void FieldTower::CheckLevel(const FieldElement& x, Level level) const {
  Require(x.level == level, ErrorCode::kLevelMismatch,
          "expected a " + std::string(LevelName(level)) + " element, got " +
              std::string(LevelName(x.level)));
}

std::uint64_t FieldTower::Index(const FieldElement& x) const {
  std::size_t width = 1;
  std::uint64_t radix = p();
  if (x.level == Level::kMid) width = e();
  if (x.level == Level::kTop) {
    width = n();
    radix = q();
  }
  Require(x.coeffs.size() == width, ErrorCode::kInvalidArgument,
          "coefficient count does not match the level");
  std::uint64_t index = 0;
  for (std::size_t j = width; j-- > 0;) {
    Require(x.coeffs[j] < radix, ErrorCode::kInvalidArgument, "coefficient not reduced");
    index = index * radix + x.coeffs[j];
  }
  return index;
}

FieldElement FieldTower::Arith(ArithOp op, const FieldElement& x, const FieldElement& y) const {
  Require(x.level == y.level, ErrorCode::kLevelMismatch, "operands live on different levels");
  Require(op == ArithOp::kAdd || op == ArithOp::kSub || op == ArithOp::kMul,
          ErrorCode::kInvalidArgument, "binary arith supports add, sub and mul");
  const std::uint64_t a = Index(x);
  const std::uint64_t b = Index(y);
  std::uint64_t out = 0;
  if (x.level == Level::kTop) {
    const TopField& F = *top_;
    out = op == ArithOp::kAdd ? F.add(a, b) : op == ArithOp::kSub ? F.sub(a, b) : F.mul(a, b);
  } else {
    const SmallField& F = x.level == Level::kMid ? *mid_ : *prime_;
    const auto ea = static_cast<Elem>(a);
    const auto eb = static_cast<Elem>(b);
    out = op == ArithOp::kAdd ? F.add(ea, eb) : op == ArithOp::kSub ? F.sub(ea, eb) : F.mul(ea, eb);
  }
  return Element(x.level, out);
}

FieldElement FieldTower::Arith(ArithOp op, const FieldElement& x) const {
  Require(op == ArithOp::kInv, ErrorCode::kInvalidArgument, "unary arith supports inv only");
  const std::uint64_t a = Index(x);
  if (x.level == Level::kTop) return Element(x.level, top_->inv(a));
  const SmallField& F = x.level == Level::kMid ? *mid_ : *prime_;
  return Element(x.level, F.inv(static_cast<Elem>(a)));
}

FieldElement FieldTower::Pow(const FieldElement& x, const BigCount& exponent) const {
  Require(exponent >= 0, ErrorCode::kInvalidArgument, "negative exponent");
  const std::uint64_t a = Index(x);
  if (exponent == 0) return Element(x.level, 1);
  if (a == 0) return Element(x.level, 0);
  const BigInt group = FromUint64(LevelOrder(x.level) - 1);
  BigInt reduced = exponent % group;
  const std::uint64_t k = ToUint64(reduced);
  if (x.level == Level::kTop) return Element(x.level, top_->pow(a, k));
  const SmallField& F = x.level == Level::kMid ? *mid_ : *prime_;
  return Element(x.level, F.pow(static_cast<Elem>(a), k));
}

FieldElement FieldTower::Trace(const FieldElement& z) const {
  CheckLevel(z, Level::kTop);
  return Element(Level::kMid, top_->trace(Index(z)));
}

FieldElement FieldTower::Norm(const FieldElement& z) const {
  CheckLevel(z, Level::kTop);
  return Element(Level::kMid, top_->norm(Index(z)));
}

BigCount FieldTower::DiscreteLog(const FieldElement& x) const {
  Require(x.level != Level::kPrime, ErrorCode::kLevelMismatch,
          "discrete logs are defined on the mid and top levels");
  const std::uint64_t a = Index(x);
  Require(a != 0, ErrorCode::kZeroArgument, "discrete log of zero");
  if (x.level == Level::kTop) return FromUint64(top_->log(a));
  return FromUint64(mid_->log(static_cast<Elem>(a)));
}

TopIndex FieldTower::NormPreimageIndex(Elem a) const {
  Require(a != 0, ErrorCode::kZeroArgument, "zero has no nonzero norm preimage");
  Require(a < q(), ErrorCode::kInvalidArgument, "norm target out of range");
  const std::uint64_t group = q() - 1;
  const std::uint64_t j =
      static_cast<std::uint64_t>((static_cast<unsigned __int128>(mid_->log(a)) * norm_log_inverse_) % group);
  return top_->exp(j);
}

TopIndex FieldTower::TracePreimageIndex(Elem b) const {
  Require(b < q(), ErrorCode::kInvalidArgument, "trace target out of range");
  if (b == 0) return 0;
  TopIndex basis = 1;
  for (unsigned j = 0; j < n(); ++j, basis *= q()) {
    const Elem s = top_->trace(basis);
    if (s != 0) return top_->scale(mid_->div(b, s), basis);
  }
  Fail(ErrorCode::kInternal, "trace vanishes on the power basis");
}

std::vector<TopIndex> FieldTower::NormPreimages(Elem a, std::size_t count) const {
  const TopIndex alpha = NormPreimageIndex(a);
  const std::uint64_t kernel = (order() - 1) / (q() - 1);
  std::vector<TopIndex> out;
  for (std::uint64_t k = 0; k < std::min<std::uint64_t>(count, kernel); ++k) {
    out.push_back(top_->mul(alpha, top_->exp(k * (q() - 1))));
  }
  return out;
}

std::vector<TopIndex> FieldTower::TracePreimages(Elem b, std::size_t count) const {
  const TopIndex beta = TracePreimageIndex(b);
  std::vector<TopIndex> out{beta};
  for (TopIndex y = 1; y < order() && out.size() < count; ++y) {
    const TopIndex candidate = top_->add(beta, top_->sub(top_->pow(y, q()), y));
    if (std::find(out.begin(), out.end(), candidate) == out.end()) out.push_back(candidate);
  }
  return out;
}

FieldElement FieldTower::NormPreimage(const FieldElement& a) const {
  CheckLevel(a, Level::kMid);
  return Element(Level::kTop, NormPreimageIndex(static_cast<Elem>(Index(a))));
}

FieldElement FieldTower::TracePreimage(const FieldElement& b) const {
  CheckLevel(b, Level::kMid);
  return Element(Level::kTop, TracePreimageIndex(static_cast<Elem>(Index(b))));
}

bool IsIrreducible(const FieldTower& tower, Level level, const poly::Poly& f) {
  Require(level != Level::kTop, ErrorCode::kUnsupported,
          "irreducibility over the top level is not provided");
  return poly::IsIrreducible(level == Level::kMid ? tower.mid() : tower.prime_field(), f);
}

}  // namespace normtrace
