// Copyright 2026 The invforge Authors
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

#ifndef INVFORGE_ERRORS_HPP_
#define INVFORGE_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace invforge {

// Raised when an operation is called outside its mathematical domain:
// negative factorials, out-of-range indices, mismatched registries, etc.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Polynomial / rational text that does not conform to the grammar.
class ParseError : public DomainError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : DomainError("parse error at position " + std::to_string(position) +
                    ": " + what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace invforge

#endif  // INVFORGE_ERRORS_HPP_
