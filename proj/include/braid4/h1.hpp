#pragma once

#include <map>
#include <string>
#include <vector>

#include "braid4/braid.hpp"
#include "braid4/linalg.hpp"
#include "braid4/zn.hpp"

namespace braid4 {

// Basis symbol of H_1(B_n[4];Q): a target pair {i,j} with 0, 1 or 2 extra
// indices.  With two extras the target contains the minimum of all four
// indices.  Symbols print with the defining twist prefixes, e.g.
// "T(1,3)*t(1,2)" or "T(1,4)T(2,3)*t(1,2)".
struct BasisSymbol {
    IndexPair target;
    std::vector<int> extras;  // sorted, size 0..2

    BasisSymbol(IndexPair t, std::vector<int> ex);
    static BasisSymbol s1(int i, int j) { return BasisSymbol({i, j}, {}); }

    int kind() const { return 1 + static_cast<int>(extras.size()); }
    std::vector<int> support() const;
    // the defining twist prefix (leftmost factor first), paper's convention
    std::vector<IndexPair> defining_twists() const;
    PureBraidWord defining_word(int n) const;  // prefix . T_target^2 . prefix^-1

    std::string str() const;
    static BasisSymbol parse(const std::string& s);

    bool operator==(const BasisSymbol&) const = default;
    bool operator<(const BasisSymbol& o) const;  // canonical basis order
};

Int dim_h1(int n);
std::vector<BasisSymbol> enumerate_basis(int n);

struct H1Vector {
    int n = 1;
    std::map<BasisSymbol, Rat> coeffs;  // canonical order, no zeros

    H1Vector() = default;
    explicit H1Vector(int strands) : n(strands) {}

    H1Vector& add(const BasisSymbol& s, const Rat& c);
    H1Vector& add(const H1Vector& o, const Rat& scale = Rat(1));
    H1Vector operator*(const Rat& c) const;
    bool is_zero() const { return coeffs.empty(); }
    bool operator==(const H1Vector&) const = default;

    QVec coords() const;  // in enumerate_basis(n) order
    static H1Vector from_coords(int n, const QVec& v);
    std::string str() const;
};

// Formal expression: rational combination of (factor prefix, target) terms.
// Factors are T(a,b), (1-T(a,b)) or (1+T(a,b)); rightmost factor acts first.
struct ExprFactor {
    enum Kind { Twist, OneMinus, OnePlus } kind;
    IndexPair ab;
};
struct ExprTerm {
    Rat coeff = 1;
    std::vector<ExprFactor> prefix;
    IndexPair target;
};
struct ModuleExpression {
    int n = 1;
    std::vector<ExprTerm> terms;

    std::string str() const;
    static ModuleExpression parse(int n, const std::string& s);
};

// the rewriting engine: lantern normalization, involution collapse, pair-swap
// canonicalization; every expression reduces to coordinates in the basis
H1Vector reduce(const ModuleExpression& e);

// Z_n-action on H1
H1Vector act_twist(IndexPair ab, const H1Vector& v);
H1Vector act_sigma(int k, int sign, const H1Vector& v);
H1Vector act_word(const BraidWord& w, const H1Vector& v);
H1Vector act_pure(const PureBraidWord& w, const H1Vector& v);

// cached rational matrices of generator actions (columns = images of basis)
const QMat& generator_matrix_sigma(int n, int k);
const QMat& generator_matrix_twist(int n, IndexPair ab);

H1Vector tau_boundary(int n);
H1Vector commutator_class(int n, int i, int j, int k);

// forgetful map to the strands in A (sorted), relabeled order-preserving
H1Vector forgetful(const H1Vector& v, const std::vector<int>& A);

// stabilization H1(B_n[4]) -> H1(B_{n+1}[4]): symbols map to themselves
H1Vector stabilization_map(const H1Vector& v);
// rank of the Z_{n+1}-span of the image of the full basis of H1(B_n[4])
size_t stabilization_orbit_rank(int n);

}  // namespace braid4
