#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace braid4 {

// splitmix64: the documented PRNG behind every randomized check
struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    uint64_t below(uint64_t k) { return next() % k; }
};

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
};
using Suite = std::vector<CheckResult>;

std::vector<std::string> suite_names();
// runs a named suite; n bounds the strand counts exercised, seed drives the
// randomized properties
Suite run_suite(const std::string& suite, int n, uint64_t seed);

bool all_passed(const Suite& s);

}  // namespace braid4
