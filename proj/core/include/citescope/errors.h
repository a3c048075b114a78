// Copyright 2026 The CiteScope Authors.
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

#ifndef CITESCOPE_ERRORS_H_
#define CITESCOPE_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace citescope {

// Base class for every error raised by the library. Callers that only need
// to distinguish data problems from runtime failures can use `IsDataError`.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The corpus violates the documented schema. `pointer` is a JSON pointer to
// the offending value (e.g. "/citations/3/char_end").
class MalformedCorpus : public Error {
 public:
  MalformedCorpus(std::string pointer, const std::string& what)
      : Error("malformed corpus at " + (pointer.empty() ? "/" : pointer) +
              ": " + what),
        pointer_(std::move(pointer)) {}

  const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// A citation query has no terms left after filtering.
class EmptyQuery : public Error {
 public:
  using Error::Error;
};

// A graph operation requires positive total edge weight.
class EmptyGraph : public Error {
 public:
  using Error::Error;
};

// Classifier training data covers fewer than two facets.
class DegenerateData : public Error {
 public:
  using Error::Error;
};

class NoConvergence : public Error {
 public:
  NoConvergence(std::size_t iterations, double residual)
      : Error("power iteration did not converge after " +
              std::to_string(iterations) + " iterations (residual " +
              std::to_string(residual) + ")"),
        iterations_(iterations),
        residual_(residual) {}

  std::size_t iterations() const { return iterations_; }
  double residual() const { return residual_; }

 private:
  std::size_t iterations_;
  double residual_;
};

// Sentence selection was handed no non-empty group.
class EmptyGroups : public Error {
 public:
  using Error::Error;
};

class EmptyInput : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Errors caused by bad input data rather than by a failed computation.
inline bool IsDataError(const Error& e) {
  return dynamic_cast<const MalformedCorpus*>(&e) != nullptr ||
         dynamic_cast<const IoError*>(&e) != nullptr ||
         dynamic_cast<const EmptyQuery*>(&e) != nullptr ||
         dynamic_cast<const DegenerateData*>(&e) != nullptr ||
         dynamic_cast<const EmptyInput*>(&e) != nullptr ||
         dynamic_cast<const InvalidArgument*>(&e) != nullptr;
}

}  // namespace citescope

#endif  // CITESCOPE_ERRORS_H_
