#pragma once

#include <string>
#include <vector>

#include "braid4/numbers.hpp"

namespace braid4 {

// closed forms for the level-4 braid and hyperelliptic mapping class groups
struct GenusReport {
    long long g;
    Int dim_h1_smod;        // dim H_1(SMod_g[4];Q) = dim H_1(B_{2g+1}[4]) - 1
    Int chi_smod;           // -2^{C(2g+1,2)-1} (2g-1)!
    long long cd_smod;      // 2g - 1
    Int dim_v2lambda2;      // g(g-1)(4g^2+4g-3)/3
    Int torelli_bound;      // dim_h1_smod + dim_v2lambda2 (the proven bound)
    Rat quartic_with_minus6;   // (20g^4+12g^3-5g^2+9g-6)/6
    Rat quartic_plain;         // (20g^4+12g^3-5g^2+9g)/6
    bool quartic_mismatch;     // the two stated forms disagree
};
GenusReport closed_forms_genus(long long g);

struct StrandReport {
    long long n;
    Int dim_h1;
    long long cd;           // n - 1
    Int chi;                // 0
};
StrandReport closed_forms_strands(long long n);

// Betti tables derived through the paper's Euler-characteristic chain
struct BettiReport {
    std::vector<Int> b3;        // B_3[4]: 1, 6, 5
    std::vector<Int> b4;        // B_4[4]: 1, 21, 103, 83
    Int pmod05_chi;             // 64
    Int pmod05_b1;              // 20
    Int pmod05_b2;              // 83
    Int mod24_chi;              // -3072
    Int mod24_b1;               // 54
    Int mod24_b2_lower;         // 49
    Int mod24_b3_lower;         // 3068
    bool euler_identities_ok;
};
BettiReport betti_tables();

struct AlbaneseReport {
    long long g;
    bool in_asserted_range;      // g >= 7
    Rat lhs;                    // (2^{C(2g+1,2)-1}(2g-1)! - b1) / (g-1)
    Int rhs;                    // C(b1, 2g-1)
    bool holds;                 // lhs > rhs
    long long lhs_digits;       // decimal digits of floor(lhs)
    long long rhs_digits;
};
AlbaneseReport albanese_inequality(long long g);

}  // namespace braid4
