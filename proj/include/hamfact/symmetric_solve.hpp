#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "hamfact/matrix.hpp"

namespace hamfact {

// Basis of {S symmetric d x d : constraint(S) == 0} for a linear constraint
// map. Basis members are normalized: integer entries with content 1, first
// nonzero entry positive.
std::vector<RatMatrix> symmetric_kernel(std::size_t d,
                                        const std::function<RatMatrix(const RatMatrix&)>& constraint);

// Deterministic search for an invertible member of span(basis): the basis
// members themselves, their sum, then seeded pseudo-random small-integer
// combinations up to `tries` attempts.
std::optional<RatMatrix> find_invertible_member(const std::vector<RatMatrix>& basis, std::uint64_t seed,
                                                int tries);

}  // namespace hamfact
