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

#ifndef HYPGRP_BIGINT_HPP
#define HYPGRP_BIGINT_HPP

#include <boost/multiprecision/gmp.hpp>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace hypgrp {

using BigInt = boost::multiprecision::mpz_int;

// log10 of a positive integer, accurate to double precision for any size.
double log10_big(const BigInt& x);

inline std::string to_decimal(const BigInt& x) { return x.str(); }

// Dense square matrix of nonnegative or signed big integers.
class BigMatrix {
 public:
  BigMatrix() = default;
  explicit BigMatrix(std::size_t n) : n_(n), entries_(n * n) {}
  static BigMatrix identity(std::size_t n);

  std::size_t size() const { return n_; }
  BigInt& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

  friend BigMatrix operator*(const BigMatrix& a, const BigMatrix& b);
  std::vector<BigInt> apply(const std::vector<BigInt>& v) const;
  BigMatrix power(unsigned long long k) const;

  friend bool operator==(const BigMatrix&, const BigMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<BigInt> entries_;
};

// Nonnegative real number kept as its base-10 logarithm so that products of
// astronomically large counts stay representable. Used only where exact
// decimal expansion is infeasible; precision is that of a double log.
class LogScaled {
 public:
  LogScaled() = default;
  static LogScaled from_big(const BigInt& x);
  static LogScaled from_double(double x);

  double log10() const { return log10_; }
  bool is_zero() const { return std::isinf(log10_) && log10_ < 0; }

  friend LogScaled operator+(const LogScaled& a, const LogScaled& b);
  friend LogScaled operator*(const LogScaled& a, const LogScaled& b);

 private:
  double log10_ = -std::numeric_limits<double>::infinity();
};

// A length known exactly, or only through its base-10 logarithm when the
// exact value is too large to keep.
struct BigLength {
  std::optional<BigInt> exact;
  double log10 = 0.0;

  static BigLength from_exact(BigInt v);
  static BigLength from_log10(double l);
  // Decimal string, or empty when only the logarithm is known.
  std::string decimal() const;
};

// Strict comparison; exact when both sides are exact, else by logarithm.
bool operator<(const BigLength& a, const BigLength& b);

// Square matrix of LogScaled entries.
class LogMatrix {
 public:
  LogMatrix() = default;
  explicit LogMatrix(std::size_t n) : n_(n), entries_(n * n) {}
  static LogMatrix from_big(const BigMatrix& m);
  static LogMatrix identity(std::size_t n);

  std::size_t size() const { return n_; }
  LogScaled& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  const LogScaled& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

  friend LogMatrix operator*(const LogMatrix& a, const LogMatrix& b);
  LogMatrix power(unsigned long long k) const;

 private:
  std::size_t n_ = 0;
  std::vector<LogScaled> entries_;
};

}  // namespace hypgrp

#endif  // HYPGRP_BIGINT_HPP
