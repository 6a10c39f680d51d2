#pragma once

#include <vector>

namespace pgd {

// Exact cone membership: is target = sum c_j columns[j] for some c >= 0?
// Phase-1 simplex with Bland's rule over checked int64 fractions, rerun with GMP rationals on overflow.
bool in_cone(const std::vector<std::vector<long long>>& columns, const std::vector<long long>& target);

// Same query forced onto GMP rationals.
bool in_cone_gmp(const std::vector<std::vector<long long>>& columns, const std::vector<long long>& target);

}  // namespace pgd
