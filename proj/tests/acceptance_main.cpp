/* Copyright 2026 The magnitude authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  The same checks back the CLI `verify` subcommand.

#include <cstdio>

#include "magnitude/verify.hpp"

int main() {
  bool all_ok = true;
  for (const auto& r : magnitude::verify::run_all()) {
    std::printf("%s %2d  %-48s %s\n", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(),
                r.detail.c_str());
    all_ok = all_ok && r.passed;
  }
  std::printf("%s\n", all_ok ? "all criteria passed" : "some criteria FAILED");
  return all_ok ? 0 : 1;
}
