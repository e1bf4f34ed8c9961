#pragma once

#include <vector>

#include "jucys/rational.hpp"

namespace jucys {

// Elementary, complete homogeneous and power-sum symmetric polynomials
// evaluated on a finite integer multiset.  sigma_0 = h_0 = 1; p_0 = #xs.

Int sigma_eval(const std::vector<int>& xs, int b);
Int h_eval(const std::vector<int>& xs, int b);
Int p_eval(const std::vector<int>& xs, int b);

// All of sigma_0..sigma_b (resp. h_0..h_b) at once.
std::vector<Int> sigma_table(const std::vector<int>& xs, int b);
std::vector<Int> h_table(const std::vector<int>& xs, int b);

}  // namespace jucys
