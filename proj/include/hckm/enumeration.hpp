#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "hckm/core.hpp"

namespace hckm {

// Nonnegative integer vectors of a given length summing to k, each entry
// bounded by per_slot_cap, enumerated in increasing lexicographic order.
using Composition = std::vector<int>;

std::uint64_t count_compositions(int size, int k, int per_slot_cap);

// Streams every composition once; the visitor returns false to stop early.
void enumerate_compositions(int size, int k, int per_slot_cap,
                            const std::function<bool(const Composition&)>& visit);

// Composition at a given rank in the enumeration order (0-based).
Composition unrank_composition(int size, int k, int per_slot_cap, std::uint64_t rank);

// Streams ranks [begin, end); unranks the first element and steps with the
// lexicographic successor, so chunks can run concurrently.
void enumerate_composition_range(int size, int k, int per_slot_cap, std::uint64_t begin,
                                 std::uint64_t end,
                                 const std::function<bool(const Composition&)>& visit);

}  // namespace hckm
