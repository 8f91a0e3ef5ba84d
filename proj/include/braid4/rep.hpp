#pragma once

#include <map>
#include <string>
#include <vector>

#include "braid4/h1.hpp"
#include "braid4/linalg.hpp"
#include "braid4/zn.hpp"

namespace braid4 {

struct non_involutive : braid_error {
    using braid_error::braid_error;
};
struct not_on_central_component : braid_error {
    using braid_error::braid_error;
};

enum class RhoTag { Trivial, Rho3, Rho4 };
std::string rho_tag_str(RhoTag t);

// V_n(rho, lambda) = Ind_{Z_n^I}^{Z_n} (V_m(rho) x V_{n-m}(lambda)); lambda is
// a padded partition of n-m: (0) names the trivial representation
struct IrrepLabel {
    int m = 0;
    PairSubset I;          // full subset of pairs of [m]; empty for m = 0
    RhoTag rho = RhoTag::Trivial;
    std::vector<int> lambda = {0};

    void validate(int n) const;
    std::string str() const;
};

// the five constituents of the stable decomposition valid at this n
std::vector<IrrepLabel> h1_constituents(int n);

// rho_I on PZ_n: (-1)^{|I n support(g)|}
int rho_character(const PairSubset& I, const PZnElement& g);

// symmetric group character chi_lambda(mu) by Murnaghan-Nakayama
Int sn_character(const std::vector<int>& lambda, const std::vector<int>& mu);
Int partition_dim(const std::vector<int>& lambda);
// padded expansion (n - |lambda|, lambda...); empty result = invalid
std::vector<int> padded_partition(const std::vector<int>& lambda, int n);

Int constituent_dimension(const IrrepLabel& label, int n);

struct CharacterVector {
    std::string domain;                    // "Z_n", "Z_n^I", "S_n"
    std::vector<std::vector<int>> classes; // element indices per class
    std::vector<Int> values;               // one per class
};

CharacterVector induced_character(const IrrepLabel& label, const ZnTable& t);

// simultaneous +-1 eigenspace splitting of commuting involutions; key is the
// pair-index bitmask of the pairs acting by -1
struct IsotypicReport {
    int n;
    std::map<uint32_t, RowSpan> blocks;

    size_t block_dim(uint32_t mask) const;
    Int total_dim() const;
};
IsotypicReport isotypic_decomposition(int n, const std::vector<QMat>& twist_matrices);
const IsotypicReport& h1_isotypic(int n);  // cached, from generator_matrix_twist

// multiplicity of V_n(rho,lambda) in H1(B_n[4];C):
//   two-stage: restrict to the I-isotypic block, character inner product over Z_n^I
//   full-group: plain character inner product over Z_n (n <= 4 cross-check)
Int multiplicity_two_stage(const ZnTable& t, const IrrepLabel& label);
Int multiplicity_full_group(const ZnTable& t, const IrrepLabel& label);

// span of the Z_n-orbit of a vector
struct OrbitSpan {
    size_t dim;
    std::vector<QVec> basis;
};
OrbitSpan orbit_submodule(const H1Vector& seed);

H1Vector alpha_generator(int n, int i, int j);  // prod (1+T_rs) tau_ij
H1Vector x3_generator(int n);                   // (1-T13) prod (1+T1j)(1+T2j) tau12
H1Vector x4_generator(int n);                   // (1-T14)(1-T23) tau12

// restriction of V_n(rho,lambda) to PZ_n: orbit of I with multiplicities
std::vector<std::pair<PairSubset, Int>> branching(const IrrepLabel& label, const ZnTable& t);

// all I != empty with I-isotypic multiplicity >= d in H1, scanned over all
// 2^C(n,2) subsets (n <= 5)
std::vector<PairSubset> torsion_points(int n, int d);

// Cohen-Suciu central component containing rho_I, with its equations checked
// at the order-2 point
std::string cohen_suciu_membership(const PairSubset& I);

}  // namespace braid4
