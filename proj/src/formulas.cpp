#include "braid4/formulas.hpp"

#include <stdexcept>

namespace braid4 {

static Int dim_h1_closed(long long n) {
    return 3 * binom(n, 4) + 3 * binom(n, 3) + binom(n, 2);
}

GenusReport closed_forms_genus(long long g) {
    if (g < 1) throw std::invalid_argument("genus must be >= 1");
    GenusReport r;
    r.g = g;
    long long n = 2 * g + 1;
    r.dim_h1_smod = dim_h1_closed(n) - 1;
    Int pairs = binom(n, 2);
    r.chi_smod = -(Int(1) << static_cast<unsigned>((pairs - 1).convert_to<long long>())) *
                 factorial(2 * g - 1);
    r.cd_smod = 2 * g - 1;
    r.dim_v2lambda2 = Int(g) * (g - 1) * (4 * g * g + 4 * g - 3) / 3;
    r.torelli_bound = r.dim_h1_smod + r.dim_v2lambda2;
    Int p = 20 * Int(g) * g * g * g + 12 * Int(g) * g * g - 5 * Int(g) * g + 9 * g;
    r.quartic_plain = Rat(p, 6);
    r.quartic_with_minus6 = Rat(p - 6, 6);
    r.quartic_mismatch = r.quartic_plain != r.quartic_with_minus6;
    return r;
}

StrandReport closed_forms_strands(long long n) {
    if (n < 1) throw std::invalid_argument("strand count must be >= 1");
    return {n, dim_h1_closed(n), n - 1, Int(0)};
}

BettiReport betti_tables() {
    BettiReport r;
    // B_3[4]: b0 = 1, b1 from the closed dimension formula, chi = 0 and cd = 2
    Int b1_3 = dim_h1_closed(3);
    Int b2_3 = b1_3 - 1;  // 0 = b0 - b1 + b2
    r.b3 = {1, b1_3, b2_3};

    // PMod_{0,5}^2: chi = 2^{C(4,2)-1} * (5-3)! = 64, cd = 2,
    // b1 = b1(B_4[4]) - 1 via the Kunneth splitting B_4[4] = PMod_{0,5}^2 x Z
    r.pmod05_chi = (Int(1) << 5) * 2;
    Int b1_4 = dim_h1_closed(4);
    r.pmod05_b1 = b1_4 - 1;
    r.pmod05_b2 = r.pmod05_chi - 1 + r.pmod05_b1;  // chi = 1 - b1 + b2
    Int b2_4 = r.pmod05_b2 + r.pmod05_b1;          // Kunneth: b_j = p_j + p_{j-1}
    Int b3_4 = 1 - b1_4 + b2_4;                    // chi(B_4[4]) = 0
    r.b4 = {1, b1_4, b2_4, b3_4};

    // Mod_2[4] = SMod_2[4]: chi = -2^{C(5,2)-1} 3! = -3072, cd = 3, b1 = 54
    r.mod24_chi = -(Int(1) << 9) * 6;
    r.mod24_b1 = dim_h1_closed(5) - 1;
    // b2 + b1 = dim H_2(B_5[4]) >= dim H_2(B_4[4]) = 103
    r.mod24_b2_lower = b2_4 - r.mod24_b1;
    // 1 - b1 + b2 - b3 = chi  =>  b3 = 1 - b1 + b2 - chi
    r.mod24_b3_lower = 1 - r.mod24_b1 + r.mod24_b2_lower - r.mod24_chi;

    r.euler_identities_ok = (Int(1) - r.b3[1] + r.b3[2] == 0) &&
                            (Int(1) - r.b4[1] + r.b4[2] - r.b4[3] == 0) &&
                            (Int(1) - r.pmod05_b1 + r.pmod05_b2 == r.pmod05_chi);
    return r;
}

AlbaneseReport albanese_inequality(long long g) {
    if (g < 2) throw std::invalid_argument("albanese inequality needs g >= 2");
    AlbaneseReport r;
    r.g = g;
    r.in_asserted_range = g >= 7;
    long long n = 2 * g + 1;
    Int b1 = dim_h1_closed(n) - 1;
    Int pairs = binom(n, 2);
    Int euler_mag = (Int(1) << static_cast<unsigned>((pairs - 1).convert_to<long long>())) *
                    factorial(2 * g - 1);
    r.lhs = Rat(euler_mag - b1, Int(g - 1));
    r.rhs = binom(b1.convert_to<long long>(), 2 * g - 1);
    r.holds = r.lhs > Rat(r.rhs);
    r.lhs_digits = digit_count(numerator(r.lhs) / denominator(r.lhs));
    r.rhs_digits = digit_count(r.rhs);
    return r;
}

}  // namespace braid4
