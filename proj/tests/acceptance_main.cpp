// Acceptance runner: executes every verification criterion and prints one
// PASS/FAIL line per criterion.  Exit status is 0 iff all pass.

#include "translie/verify.hpp"

#include <cstdio>

int main() {
    const auto results = translie::run_suite("all");
    bool all_passed = true;
    for (const auto& r : results) {
        if (r.passed) {
            std::printf("PASS %s\n", r.name.c_str());
        } else {
            all_passed = false;
            std::printf("FAIL %s\n", r.name.c_str());
            std::printf("     %s\n", r.detail.c_str());
        }
    }
    return all_passed ? 0 : 1;
}
