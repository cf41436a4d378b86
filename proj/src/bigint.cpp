// Copyright 2026 The hypgrp Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hypgrp/bigint.hpp"

#include <cmath>
#include <stdexcept>

namespace hypgrp {

double log10_big(const BigInt& x) {
  if (x <= 0) throw std::domain_error("log10 of a nonpositive integer");
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, x.backend().data());
  return std::log10(mant) + static_cast<double>(exp) * std::log10(2.0);
}

BigMatrix BigMatrix::identity(std::size_t n) {
  BigMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

BigMatrix operator*(const BigMatrix& a, const BigMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("matrix size mismatch");
  const std::size_t n = a.n_;
  BigMatrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const BigInt& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

std::vector<BigInt> BigMatrix::apply(const std::vector<BigInt>& v) const {
  if (v.size() != n_) throw std::invalid_argument("vector size mismatch");
  std::vector<BigInt> out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) out[i] += (*this)(i, j) * v[j];
  }
  return out;
}

BigMatrix BigMatrix::power(unsigned long long k) const {
  BigMatrix result = identity(n_);
  BigMatrix base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

// ---------------------------------------------------------------------------

LogScaled LogScaled::from_big(const BigInt& x) {
  LogScaled s;
  if (x <= 0) return s;
  long exp = 0;
  // x = mant * 2^exp with mant in [0.5, 1).
  const double mant = mpz_get_d_2exp(&exp, x.backend().data());
  s.log10_ = std::log10(mant) + static_cast<double>(exp) * std::log10(2.0);
  return s;
}

LogScaled LogScaled::from_double(double x) {
  LogScaled s;
  if (x > 0.0) s.log10_ = std::log10(x);
  return s;
}

LogScaled operator+(const LogScaled& a, const LogScaled& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const double hi = std::max(a.log10_, b.log10_);
  const double lo = std::min(a.log10_, b.log10_);
  LogScaled s;
  s.log10_ = hi + std::log10(1.0 + std::pow(10.0, lo - hi));
  return s;
}

LogScaled operator*(const LogScaled& a, const LogScaled& b) {
  LogScaled s;
  if (a.is_zero() || b.is_zero()) return s;
  s.log10_ = a.log10_ + b.log10_;
  return s;
}

BigLength BigLength::from_exact(BigInt v) {
  BigLength b;
  b.log10 = v > 0 ? log10_big(v) : -std::numeric_limits<double>::infinity();
  b.exact = std::move(v);
  return b;
}

BigLength BigLength::from_log10(double l) {
  BigLength b;
  b.log10 = l;
  return b;
}

std::string BigLength::decimal() const { return exact ? to_decimal(*exact) : std::string(); }

bool operator<(const BigLength& a, const BigLength& b) {
  if (a.exact && b.exact) return *a.exact < *b.exact;
  return a.log10 < b.log10;
}

LogMatrix LogMatrix::from_big(const BigMatrix& m) {
  LogMatrix out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) out(i, j) = LogScaled::from_big(m(i, j));
  }
  return out;
}

LogMatrix LogMatrix::identity(std::size_t n) {
  LogMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = LogScaled::from_double(1.0);
  return m;
}

LogMatrix operator*(const LogMatrix& a, const LogMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("matrix size mismatch");
  LogMatrix c(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i) {
    for (std::size_t j = 0; j < a.n_; ++j) {
      LogScaled acc;
      for (std::size_t k = 0; k < a.n_; ++k) acc = acc + a(i, k) * b(k, j);
      c(i, j) = acc;
    }
  }
  return c;
}

LogMatrix LogMatrix::power(unsigned long long k) const {
  LogMatrix result = identity(n_);
  LogMatrix base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

}  // namespace hypgrp
