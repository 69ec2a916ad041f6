#pragma once

#include <string>

#include "ggv/class_function.hpp"

namespace ggv {

// Exact ordinary character table.  Computed by the Dixon-Schneider method:
// simultaneous eigenvectors of the class matrices over a prime field F_l
// with l ≡ 1 (mod exponent), lifted to Q(zeta_N) through eigenvalue
// multiplicities of the power maps.  The output is gated by exact
// orthogonality checks, so the algorithm choice is not trusted, only
// verified.  Tables are cached as JSON when a cache directory is given.
CharacterTable character_table(const InstanceData& D, const std::string& cache_dir = "");

// re-runs the exact invariant gates on a table (used after cache loads)
void verify_table_invariants(const InstanceData& D, const CharacterTable& table);

// cache maintenance used by the CLI: returns paths of cache files
std::vector<std::string> cache_files(const std::string& cache_dir);
std::string cache_file_name(const InstanceData& D);
bool validate_cache_file(const std::string& path);  // false = corrupt

}  // namespace ggv
