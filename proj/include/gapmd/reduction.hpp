#ifndef GAPMD_REDUCTION_HPP
#define GAPMD_REDUCTION_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gapmd/code.hpp"
#include "gapmd/csp.hpp"
#include "gapmd/evalset.hpp"

namespace gapmd {

struct Block {
    std::string name;
    std::vector<int> shape;
    int offset = 0;
    int size = 0;
};

// Named variable blocks over one flat coordinate range; every constraint row
// and every projection entry is expressed in these coordinates.
struct VariableLayout {
    std::vector<Block> blocks;
    int total = 0;

    int add(std::string name, std::vector<int> shape);
    const Block& block(const std::string& name) const;
    int offset_of(const std::string& name) const { return block(name).offset; }
};

// Homogeneous linear system H v = 0 whose solution space, projected onto
// output coordinates, is the constructed code.  Tags say which equation
// produced each row.
struct ConstraintSystem {
    VariableLayout layout;
    Mat H;
    std::vector<std::string> tags;
};

struct ReductionBounds {
    uint64_t completeness_weight = 0;  // N^2 + rm (m for the NCP build)
    Frac case1_floor;                  // weight floor on the Y_0 != 0 side
    Frac zcase_floor;                  // weight floor on the Y_0 = 0 side
    Frac soundness_floor;              // min of the two
    Frac delta;                        // 1 - Opt used when forming the floors
    Frac epsilon;                      // evaluation-set slack (0 for exhaustive R)
    std::optional<Frac> opt;
};

struct ReductionArtifact {
    std::string kind;  // "ncp2" | "md2" | "mdq"
    int q = 2;
    int nvars = 0;  // variables of the instance
    int m = 0;      // constraints of the instance
    int N = 0;      // inner code length (0 for ncp2)
    int r = 1;      // S-block repetition (1 for ncp2)
    MaxNandInstance instance;

    ConstraintSystem system;
    std::vector<Vec> nullbasis;      // basis of {v : H v = 0}
    std::optional<Vec> particular;   // full-width particular solution (ncp2)

    // output projection: (source coordinate, repetition count), expanded in
    // order with repeats consecutive
    std::vector<std::pair<int, int>> projection;
    LinearCode code;                 // the output code
    std::optional<Vec> offset;       // projected offset (ncp2)
    bool injective = false;

    ReductionBounds bounds;

    // inputs the intended-codeword construction needs again
    std::optional<EvaluationSet> evalset;   // mdq
    std::optional<LinearCode> inner_code;   // md2

    int output_length() const { return code.n; }
};

Vec project_output(const ReductionArtifact& art, const Vec& full);

// Affine subspace of F_2^{4m} whose minimum weight encodes Opt: solutions of
// the four indicator equations per constraint, projected to the S blocks.
ReductionArtifact build_ncp2(const MaxNandInstance& psi, Frac delta = Frac(1),
                             std::optional<Frac> opt = std::nullopt);

// Binary minimum-distance construction around an inner code C of dimension
// exactly n: S/Z indicator blocks tied to x_0, x, y = C(x) and Y = y y^T.
ReductionArtifact build_mindist2(const MaxNandInstance& psi, const LinearCode& C,
                                 int r, Frac delta = Frac(1),
                                 std::optional<Frac> opt = std::nullopt);

// General-field construction (q >= 3) over evaluation set R: power vectors
// Y^e in P_e, outer products Y^{ef}, Z/S indicator blocks, projected to the
// Z and repeated S coordinates.  Rejects q = 2 (use build_mindist2).
ReductionArtifact build_mindistq(const MaxNandInstance& psi, const Field& Fq,
                                 const EvaluationSet& R, int r, Frac delta = Frac(1),
                                 std::optional<Frac> opt = std::nullopt);

// r ~ N^2/((1+delta) q m) for the general build, N^2/(2(1+2delta) m) for the
// binary one; at least 1, rounded half away from zero.
int choose_r(const std::string& kind, int N, int m, int q, Frac delta);

// The designed low-weight codeword for a satisfying assignment: indicator
// S and Z blocks, power vectors for the Y blocks.  Checks membership against
// the full constraint system (MembershipFailure on any violation -- that is
// a construction bug) and that the weight is exactly N^2 + rm (m for ncp2).
// Returns the projected output vector.
Vec intended_codeword(const Field& F, const ReductionArtifact& art, const Assignment& beta);

// t-fold tensor square; distance squares with each step.
LinearCode tensor_boost(const Field& F, const LinearCode& C, int t);

// The 4x4 map (S entries in order (0,0),(0,1),(1,0),(1,1)) to
// (Y_0, alpha_i, alpha_j, alpha_k); invertible over every F_q.
Mat s_block_forward_map(const Field& F);

// The q^2 x q^2 map from a Z block (entries (x,y), x major) to the values
// (sum x^e y^f Z(x,y)) over (e,f), e major; invertible since the monomials
// x^e y^f are a function basis.
Mat z_block_forward_map(const Field& F);

}  // namespace gapmd

#endif
