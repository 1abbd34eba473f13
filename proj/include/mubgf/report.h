// Copyright 2026 The mubgf Authors
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

#ifndef MUBGF_REPORT_H
#define MUBGF_REPORT_H

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace mubgf {

/// Outcome of an exhaustive verification sweep.
struct Report {
    std::string name;
    uint64_t checks = 0;
    uint64_t failures = 0;
    /// First few failures, human readable.
    std::vector<std::string> counterexamples;
    /// Observations that are not failures (skipped sections, recorded maps).
    std::vector<std::string> notes;

    static constexpr size_t kMaxCounterexamples = 16;

    explicit Report(std::string name = {}) : name(std::move(name)) {
    }

    bool passed() const {
        return failures == 0;
    }

    /// Counts one check. `describe` is only invoked on failure.
    template <typename Describe>
    bool expect(bool ok, Describe &&describe) {
        checks++;
        if (!ok) {
            failures++;
            if (counterexamples.size() < kMaxCounterexamples) {
                counterexamples.push_back(describe());
            }
        }
        return ok;
    }

    void merge(const Report &other);
    std::string summary() const;
};

}  // namespace mubgf

#endif
