/*
 * Copyright 2026 The rcsim Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef RCSIM_ERRORS_H_
#define RCSIM_ERRORS_H_

#include <stdexcept>
#include <string>

namespace rcsim {

// Malformed or inconsistent configuration. The CLI maps this to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Numerical breakdown (non-finite values, failed matrix functions). Exit 3.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Feedforward synthesis that cannot be realised causally. Exit 4.
class InfeasibleError : public std::runtime_error {
 public:
  InfeasibleError(const std::string& what, int degree_excess)
      : std::runtime_error(what), degree_excess_(degree_excess) {}
  int degree_excess() const { return degree_excess_; }

 private:
  int degree_excess_;
};

}  // namespace rcsim

#endif  // RCSIM_ERRORS_H_
