#ifndef GAPMD_IO_HPP
#define GAPMD_IO_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "gapmd/code.hpp"
#include "gapmd/csp.hpp"
#include "gapmd/evalset.hpp"
#include "gapmd/reduction.hpp"

namespace gapmd {

// Text fixtures with versioned headers; field elements are decimal indices.
//   maxnand 1 <n> <m>      then m lines "k i j" (1-indexed variables)
//   gfcode 1 <q> <n> <k>   then k generator rows of n indices
//   gfaffine 1 <q> <n> <k> then k generator rows and one offset row
//   evalset 1 <q> <n> <N>  then N point rows
//   gfvec 1 <q> <n>        then one row

void write_instance(const std::string& path, const MaxNandInstance& psi);
MaxNandInstance read_instance(const std::string& path);

void write_code(const std::string& path, const LinearCode& C);
LinearCode read_code(const std::string& path);

void write_affine(const std::string& path, const AffineSubspace& A);
AffineSubspace read_affine(const std::string& path);

void write_evalset(const std::string& path, const EvaluationSet& R);
EvaluationSet read_evalset(const std::string& path);

void write_vec(const std::string& path, int q, const Vec& v);
std::pair<int, Vec> read_vec(const std::string& path);

// Artifact directory: code.gfc (or space.gfa for ncp2), manifest.json and,
// when provided, intended.gfv.
void write_artifact(const std::string& dir, const ReductionArtifact& art,
                    const std::optional<Vec>& intended);

struct StoredArtifact {
    nlohmann::json manifest;
    std::string kind;
    int q = 0;
    std::optional<LinearCode> code;
    std::optional<AffineSubspace> affine;
    std::optional<Vec> intended;
};
StoredArtifact read_artifact(const std::string& dir);

nlohmann::json artifact_manifest(const ReductionArtifact& art);

}  // namespace gapmd

#endif
