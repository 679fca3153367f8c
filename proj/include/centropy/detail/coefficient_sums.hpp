#pragma once

#include <cstddef>

// Coefficient series shared by the bound constants and the certified series
// tails. Every "sum" is an explicit partial sum plus a closed-form integral
// bracket of the remainder; the cached constants are the bracket's upper
// edge so downstream inequalities stay genuine upper bounds. Never computed
// by sequence extrapolation.
namespace centropy::detail {

// sum_{n>m} 1/((n+1) sqrt(2n+1)); hdg_coefficient_sum() is the m = 0 case.
double hdg_coefficient_sum();
double hdg_coefficient_tail(std::size_t m);

// sum_{n>m} sqrt(2(n+1)) / (n(n+1)) = sqrt(2) sum 1/(n sqrt(n+1)).
double range_coefficient_sum();
double range_coefficient_tail(std::size_t m);

// sum (1/n) sqrt(1/(2n+1) - B(n+1, n+1)): partial sums and the full constant.
double symmetric_coefficient_partial(std::size_t m);
double symmetric_coefficient_sum();

// sum_{n>=1} c(n+1)/n with c as in bounds.hpp. Equal to
// sqrt(2) * symmetric_coefficient_sum() through the central beta identity;
// computed independently so the identity can be asserted, not assumed.
double dn_coefficient_sum();

double complete_beta_impl(std::size_t n);
double c_of_n_impl(std::size_t n);

}  // namespace centropy::detail
