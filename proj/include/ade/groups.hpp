#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ade/cyclotomic.hpp"

namespace ade {

enum class GroupKind { A, D, E6, E7, E8 };

struct GroupSpec {
    GroupKind kind;
    int n = 0;  // A_n (cyclic of order n+1), D_n (binary dihedral of order 4n-8)

    std::string name() const;
    long order() const;
    static GroupSpec parse(const std::string& s);  // "A3", "D5", "E6", ...
    bool operator<(const GroupSpec& o) const {
        return std::tie(kind, n) < std::tie(o.kind, o.n);
    }
};

// 2x2 matrix over a cyclotomic field; all group elements have det 1.
struct Mat2 {
    std::array<Cyclo, 4> e;  // row major: e[0] e[1] / e[2] e[3]

    static Mat2 identity();
    Mat2 operator*(const Mat2& o) const;
    Mat2 inverse_det1() const;  // adjugate; valid when det = 1
    Cyclo det() const;
    Cyclo trace() const { return e[0] + e[3]; }
    bool operator==(const Mat2& o) const { return e == o.e; }
    std::string key() const;  // canonical interning key
};

struct ConjClass {
    std::string label;      // the paper's name: "1", "-1", "a^3", "ab", ...
    int representative;     // element index
    int size;
    long centralizer_order; // |G| / size
    Rat age;                // k/m for eigenvalues zeta_m^{+-k}; 0 for identity
    int inverse_class;      // index of the class of g^{-1}

    // The two eigenvalue fractions {age, 1-age} ({0,0} for the identity);
    // these are the Bernoulli arguments of quantum Riemann-Roch.
    std::pair<Rat, Rat> age_pair() const {
        if (age == 0) return {Rat(0), Rat(0)};
        return {age, Rat(1) - age};
    }
};

struct Irrep {
    std::string name;
    int dim;
};

// Rows = irreps, columns = conjugacy classes, entries in Q(zeta_field).
struct CharacterTable {
    int field = 1;
    std::vector<Irrep> irreps;
    std::vector<std::vector<Cyclo>> values;

    const Cyclo& at(int irrep, int cls) const { return values[irrep][cls]; }
    int trivial_index() const;  // row that is identically 1
};

// A finite ADE subgroup of SL(2,C) with explicit elements, multiplication
// table, conjugacy classes and exact character table.  Immutable once built.
class ADEGroup {
public:
    // A and D types are generated from formulas; E types load their stored
    // data from "<data_dir>/e6.group" etc. and re-validate all invariants.
    static const ADEGroup& get(const GroupSpec& spec, const std::string& data_dir = "");

    const GroupSpec& spec() const { return spec_; }
    long order() const { return static_cast<long>(elements_.size()); }
    long exponent() const { return exponent_; }
    int matrix_field() const { return matrix_field_; }

    const std::vector<Mat2>& elements() const { return elements_; }
    int identity_index() const { return identity_; }
    int mul(int i, int j) const { return mul_[i][j]; }
    int inv(int i) const { return inv_[i]; }
    int element_order(int i) const { return element_order_[i]; }

    const std::vector<ConjClass>& classes() const { return classes_; }
    int class_of(int element) const { return class_of_[element]; }
    int class_index(const std::string& label) const;  // UnknownClass on miss
    const ConjClass& cls(const std::string& label) const { return classes_[class_index(label)]; }

    const CharacterTable& character_table() const { return chartable_; }
    // chi_{rho_1} as a class function (matrix traces); for D/E it equals one
    // irrep row, for A it is the sum of the two faithful characters.
    const std::vector<Cyclo>& rho1_character() const { return rho1_char_; }
    std::optional<int> rho1_irrep_index() const { return rho1_irrep_; }

    // Verified generator relations, as "word = word" strings (reporting).
    const std::vector<std::string>& verified_relations() const { return relations_; }

    struct BuildInput;  // see group_data.hpp
    static ADEGroup build_from(const BuildInput& input);

private:
    ADEGroup() = default;
    void finish_build(const BuildInput& input);

    GroupSpec spec_;
    int matrix_field_ = 1;
    long exponent_ = 1;
    int identity_ = 0;
    std::vector<Mat2> elements_;
    std::vector<std::vector<int>> mul_;
    std::vector<int> inv_;
    std::vector<int> element_order_;
    std::vector<int> class_of_;
    std::vector<ConjClass> classes_;
    CharacterTable chartable_;
    std::vector<Cyclo> rho1_char_;
    std::optional<int> rho1_irrep_;
    std::vector<std::string> relations_;
};

// Spec operations ---------------------------------------------------------

inline const ADEGroup& build_group(const GroupSpec& spec, const std::string& data_dir = "") {
    return ADEGroup::get(spec, data_dir);
}
inline const std::vector<ConjClass>& conjugacy_classes(const ADEGroup& g) { return g.classes(); }
inline const CharacterTable& character_table(const ADEGroup& g) { return g.character_table(); }

// McKay adjacency A_ij = multiplicity of irrep j in irrep i (x) rho_1,
// computed by exact character sums; NonIntegerMultiplicity on bad data.
std::vector<std::vector<long>> mckay_graph(const ADEGroup& g);

// Number of trivial summands of C G (x) V_{rho_1} counting each irreducible
// once (the Dynkin-diagram count of Prop.-15 style): the McKay row sum at the
// trivial node.  2 for type A, 1 for types D and E.
long regular_rep_trivial_count(const ADEGroup& g);

// Rank of R^1 pi_* f^* V_{rho_1} on the indicated component of
// Mbar_{g,n}(BG) with m trivial markings.
enum class Sector { trivial, nontrivial };
long hodge_bundle_rank(const ADEGroup& g, int genus, int n, int m, Sector sector);
long hodge_bundle_rank_r0(const ADEGroup& g, int genus, Sector sector);

// Genus-zero three-point correlator <e_1 e_2 e_3> of BG.
Rat bg_three_point(const ADEGroup& g, const std::string& c1, const std::string& c2,
                   const std::string& c3);
// Same value by exhaustive counting #{(g1,g2,g3): g1 g2 g3 = 1}/|G|.
Rat bg_three_point_counting(const ADEGroup& g, const std::string& c1, const std::string& c2,
                            const std::string& c3);
// Full counting table, cached per group: table[c1][c2][c3].
const std::vector<std::vector<std::vector<Rat>>>& three_point_table(const ADEGroup& g);

// Affine ADE diagram classification of a McKay adjacency matrix (throws
// ValidationError if the graph is not an affine ADE diagram).  Returns the
// GroupSpec whose affine diagram it is.
GroupSpec classify_affine_diagram(const std::vector<std::vector<long>>& adj);

}  // namespace ade
