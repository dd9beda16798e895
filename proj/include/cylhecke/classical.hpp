#pragma once

#include <vector>

#include "cylhecke/partition.hpp"

namespace cylhecke {

// Classical symmetric-group character chi^lambda(alpha) by the (unbroken)
// Murnaghan-Nakayama recursion. Independent oracle for the t = 1
// specialization of the Hecke characters.
long long classical_character(const Partition& lambda, const std::vector<int>& alpha);

// Number of standard Young tableaux of shape lambda.
long long hook_length_dimension(const Partition& lambda);

// Littlewood-Richardson coefficient c^lambda_{mu nu}, counted as LR skew
// tableaux of shape lambda/mu and content nu (lattice word condition).
long long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

}  // namespace cylhecke
