#ifndef TAUT_DRCYCLE_HPP
#define TAUT_DRCYCLE_HPP

#include <map>
#include <vector>

#include "taut/strata.hpp"

namespace taut {

// Compact-type DR cycle on M_{g, markings}; mults[i] belongs to markings[i] and the mults sum to 0.
PolyTautClass hain_dr(int g, const std::vector<int>& markings, const std::vector<MultiPoly>& mults);
// Markings 1..n.
PolyTautClass hain_dr(int g, const std::vector<MultiPoly>& mults);

// Pushforward of hain_dr forgetting the given marking.
PolyTautClass dr_forget_tilde(int g, const std::vector<MultiPoly>& mults, int marking);

// xi_{Gamma*} of the product of vertex DR cycles; leg_values maps marking -> multiplicity.
PolyTautClass dr_on_tree(const StableGraph& tree, const std::map<int, MultiPoly>& leg_values);

// a_s psi_s DR_g(mults) from the one-edge part of the psi-times-DR formula.
PolyTautClass dr_times_psi_ct(int g, const std::vector<MultiPoly>& mults, int s);

// delta_h^I . DR_g(mults) as a glued two-vertex class; zero when a side is unstable.
PolyTautClass dr_times_boundary(int g, const std::vector<MultiPoly>& mults, int h, const std::vector<int>& I);

// The divisor delta_h^I (genus h side carries the markings in I) as a class.
TautClass boundary_divisor(int g, int n, int h, const std::vector<int>& I);

// Replaces every coefficient p by p(images).
PolyTautClass substitute(const PolyTautClass& x, const std::vector<MultiPoly>& images);
// Coefficient of a monomial in every term.
TautClass coefficient_class(const PolyTautClass& x, const Exponents& exps);
// Promotes a Rational class to polynomial coefficients in the given variables.
PolyTautClass to_poly(const TautClass& x, int nvars, int offset);

void clear_dr_cache();

}  // namespace taut

#endif
