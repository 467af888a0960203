#ifndef TAUT_INTEGRATE_HPP
#define TAUT_INTEGRATE_HPP

#include <vector>

#include "taut/exactmath.hpp"

namespace taut {

// <tau_{d_1} ... tau_{d_n}>_g. Returns 0 when the degree does not match the dimension.
Rational wk_integral(int g, const std::vector<int>& psi_exps);

// Integral over M_{g,n} of prod psi_i^{a_i} times prod_j kappa_{b_j}; n = psi_exps.size().
Rational psi_kappa_integral(int g, const std::vector<int>& psi_exps, const std::vector<int>& kappa_list);

// kappa_exps[i] is the exponent of kappa_{i+1}. With lambda set, the integrand also carries
// lambda_g (supported for g <= 2).
Rational vertex_integral(int g, const std::vector<int>& psi_exps, const std::vector<int>& kappa_exps, bool lambda);

std::vector<int> kappa_list_from_exponents(const std::vector<int>& kappa_exps);

void clear_integral_cache();
std::size_t integral_cache_size();

}  // namespace taut

#endif
