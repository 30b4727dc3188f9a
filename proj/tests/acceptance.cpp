/*
   Copyright 2026 The msolab Authors

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

// Runs the ten acceptance criteria and prints one line per criterion.
// Exit status is 0 only when every criterion passes.

#include <cstdio>
#include <cstdlib>
#include <exception>

#include "msolab/suites.hpp"

int main(int argc, char** argv) {
    const std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : msolab::kDefaultSeed;
    int failed = 0;
    for (int id = 1; id <= msolab::kAcceptanceCriteria; ++id) {
        try {
            const msolab::CriterionResult r = msolab::run_acceptance_criterion(id, seed);
            std::printf("criterion %2d: %s  [%6.2fs]  %s: %s\n", id, r.pass ? "PASS" : "FAIL", r.seconds,
                        r.title.c_str(), r.summary.c_str());
            if (!r.pass) {
                ++failed;
                std::printf("    details: %s\n", r.details.dump().c_str());
            }
        } catch (const std::exception& e) {
            ++failed;
            std::printf("criterion %2d: FAIL  exception: %s\n", id, e.what());
        }
        std::fflush(stdout);
    }
    std::printf("%d/%d criteria passed\n", msolab::kAcceptanceCriteria - failed, msolab::kAcceptanceCriteria);
    return failed == 0 ? 0 : 1;
}
