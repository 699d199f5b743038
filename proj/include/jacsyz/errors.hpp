/*
   Copyright 2026 The jacsyz Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef JACSYZ_ERRORS_HPP
#define JACSYZ_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jacsyz {

/// Malformed input: polynomial syntax, jobfile structure, bad arguments.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what, std::size_t position = npos)
      : std::runtime_error(position == npos ? what : what + " at position " + std::to_string(position)),
        position_(position) {}

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A mathematical precondition of an operation does not hold for the input
/// (point not on V, uncertified singular locus, violated hypothesis, ...).
class PreconditionError : public std::runtime_error {
 public:
  PreconditionError(std::string check, const std::string& what)
      : std::runtime_error(check + ": " + what), check_(std::move(check)) {}

  const std::string& check() const noexcept { return check_; }

 private:
  std::string check_;
};

/// An internal invariant failed. Always a bug or a wrong theorem instance.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace jacsyz

#endif  // JACSYZ_ERRORS_HPP
