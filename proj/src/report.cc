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

#include "mubgf/report.h"

#include <sstream>

namespace mubgf {

void Report::merge(const Report &other) {
    checks += other.checks;
    failures += other.failures;
    for (const std::string &c : other.counterexamples) {
        if (counterexamples.size() < kMaxCounterexamples) {
            counterexamples.push_back(other.name + ": " + c);
        }
    }
    for (const std::string &n : other.notes) {
        notes.push_back(other.name + ": " + n);
    }
}

std::string Report::summary() const {
    std::ostringstream out;
    out << name << ": " << (passed() ? "pass" : "FAIL") << " (" << checks << " checks, " << failures
        << " failures)";
    return out.str();
}

}  // namespace mubgf
