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

#ifndef HYPGRP_ERROR_HPP
#define HYPGRP_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hypgrp {

// Base class for every domain error raised by the library. The CLI maps
// these to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class AlphabetMismatch : public Error {
 public:
  AlphabetMismatch() : Error("words are over different alphabets") {}
  explicit AlphabetMismatch(const std::string& what) : Error(what) {}
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// Raised when an operation's precondition on its inputs fails (for example
// Dehn reduction over a presentation that is not C'(1/6)).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace hypgrp

#endif  // HYPGRP_ERROR_HPP
