// Acceptance harness: one pass/fail line per criterion, nonzero exit on any
// failure. Thread count comes from LATIN_THREADS (default: available cores).

#include <cstdlib>
#include <iostream>
#include <thread>

#include "latin/verify.hpp"

int main() {
    int threads = static_cast<int>(std::thread::hardware_concurrency());
    if (const char* env = std::getenv("LATIN_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) threads = v;
    }
    if (threads < 1) threads = 1;

    bool all = true;
    int idx = 0;
    for (const auto& c : latin::verify::run_all(threads)) {
        ++idx;
        std::cout << (c.pass ? "PASS" : "FAIL") << " criterion " << idx << " [" << c.name
                  << "]: " << c.detail << std::endl;
        all = all && c.pass;
    }
    std::cout << (all ? "ALL CRITERIA PASSED" : "FAILURES PRESENT") << std::endl;
    return all ? 0 : 1;
}
