#ifndef IDKIT_TEST_ORACLES_HPP
#define IDKIT_TEST_ORACLES_HPP

// Independent reference implementations used to pin expected values.
// Nothing here may call the library paths it is checking.

#include <cstdint>
#include <vector>

#include "idkit/coloring.hpp"
#include "idkit/types.hpp"

namespace idkit::testing {

/// Realization by trying every injection of {0..size-1} into f's field.
bool brute_force_realizes(const Coloring& f, std::uint32_t size, const Code& classPerPair);

/// Order-preserving variant: every increasing injection.
bool brute_force_v_realizes(const Coloring& f, std::uint32_t size, const Code& classPerPair);

/// Number of partitions of the pair set of {0..n-1} up to vertex
/// permutation, by direct orbit counting over all raw partitions.
std::size_t orbit_count(std::uint32_t n);

/// All raw partitions (restricted-growth codes) of the pair set.
std::vector<Code> all_partitions(std::uint32_t n);

/// Special-sequence count by filtering every tuple of branches.
std::size_t brute_force_special_count(std::uint32_t m);

}  // namespace idkit::testing

#endif
