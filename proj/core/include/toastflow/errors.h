// Copyright 2026 The Toastflow Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef TOASTFLOW_ERRORS_H_
#define TOASTFLOW_ERRORS_H_

#include <stdexcept>
#include <string>

namespace toastflow {

// Root of the library's exception hierarchy.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument lies outside the operation's domain (unknown vertex, graph
// mismatch, violated precondition).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Structurally malformed input: dangling references, bad file contents.
class FormatError : public Error {
 public:
  using Error::Error;
};

// A combinatorial input that admits no solution (odd |P|, odd degrees).
class InfeasibleInput : public Error {
 public:
  using Error::Error;
};

// Generator or tiling parameters that cannot be realized.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// The operation is only defined for a narrower class of graphs.
class UnsupportedInstance : public Error {
 public:
  using Error::Error;
};

// A brute-force routine refused an instance above its size guard.
class RefusalError : public Error {
 public:
  using Error::Error;
};

}  // namespace toastflow

#endif  // TOASTFLOW_ERRORS_H_
