/** Copyright 2026 The gossipnet Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * 	http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef GOSSIPNET_CORE_ERROR_HPP
#define GOSSIPNET_CORE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace gossip {

enum class ErrorCode {
  kParse,          // malformed JSON or schema violation
  kInvalid,        // well-formed input violating a precondition
  kOverflow,       // checked integer arithmetic overflowed
  kOracleBound,    // exhaustive search refused: input above configured bound
  kNonConforming,  // algorithm requires symmetric {-inf, 1} utilities
  kNotImproving,   // scripted move does not strictly improve a participant
  kNotOptimal,     // caller-supplied optimum was beaten during repair
  kInternal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gossip

#endif  // GOSSIPNET_CORE_ERROR_HPP
