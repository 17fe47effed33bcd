// Copyright 2026 The spinab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace spinab {

enum class ErrorKind {
  kDomain,
  kRange,
  kAccuracy,
  kSingularity,
  kShape,
  kUsage,
  kDegenerate,
  kRejectedBranch,
  kNode,
  kPath,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Thrown for E < 0 spin states. Carries the growth factor |R(r_far)|/|R(r_near)|
// measured on both hypergeometric branches so callers can see why the branch
// was rejected.
class RejectedBranchError : public Error {
 public:
  RejectedBranchError(const std::string& what, double growth_w1,
                      double growth_w2)
      : Error(ErrorKind::kRejectedBranch, what),
        growth_w1_(growth_w1),
        growth_w2_(growth_w2) {}
  double growth_w1() const { return growth_w1_; }
  double growth_w2() const { return growth_w2_; }

 private:
  double growth_w1_;
  double growth_w2_;
};

}  // namespace spinab
