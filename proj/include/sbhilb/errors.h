// Copyright 2026 The sbhilb Authors
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

#ifndef SBHILB_ERRORS_H_
#define SBHILB_ERRORS_H_

#include <stdexcept>

namespace sbhilb {

// Input outside the domain an operation is defined on (negative leading
// coefficient, r < 1 in the genus bound, d < 3, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed text: polynomials, fractions, configuration files.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Well-formed data that violates a structural invariant (n does not divide d,
// a generator that does not preserve the edge set, proportional vertex
// vectors, ...).
class InvariantError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The hypotheses under which a classification is valid do not hold.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace sbhilb

#endif  // SBHILB_ERRORS_H_
