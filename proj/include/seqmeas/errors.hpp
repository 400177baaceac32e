// Copyright 2026 The seqmeas Authors
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

namespace seqmeas {

/// Bad argument: out-of-domain parameter, violated state/operator invariant.
class InvalidInput : public std::invalid_argument {
 public:
    using std::invalid_argument::invalid_argument;
};

/// A normalization or denominator vanished, e.g. the input state has no
/// overlap with the requested eigenbranch.
class DegenerateBranch : public std::domain_error {
 public:
    using std::domain_error::domain_error;
};

/// The probability of an outcome is below the floor, so its conditional
/// average is not resolvable.
class UnresolvableOutcome : public std::domain_error {
 public:
    UnresolvableOutcome(std::string outcome, double probability)
        : std::domain_error("outcome '" + outcome + "' is unresolvable (P = " +
                            std::to_string(probability) + ")"),
          outcome_(std::move(outcome)),
          probability_(probability) {}

    const std::string& outcome() const noexcept { return outcome_; }
    double probability() const noexcept { return probability_; }

 private:
    std::string outcome_;
    double probability_;
};

}  // namespace seqmeas
