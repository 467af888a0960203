#ifndef TAUT_ABCLASSES_HPP
#define TAUT_ABCLASSES_HPP

#include <vector>

#include "taut/pairing.hpp"
#include "taut/trees.hpp"

namespace taut {

struct AClassSpec {
    int g = 0;
    std::vector<int> d;
    int n() const { return static_cast<int>(d.size()); }
    int total() const;
    int m() const { return total() - 2 * g + 2; }
    void validate() const;
};

struct BClassSpec {
    int g = 0;
    std::vector<int> d;
    int n() const { return static_cast<int>(d.size()); }
    void validate() const;
};

// Sum over rooted stable trees with legs 0..n of a(Gamma) lambda_g pi_* DR_Gamma, forgetting leg 0.
// Coefficients live in a_1..a_n (offset 1).
PolyTautClass a_tilde(int g, int m, int n, bool parallel = true);

struct ATildeQuotient {
    PolyTautClass quotient;
    PolyTautClass remainder;
    bool remainder_pairs_to_zero = true;
};

// a_tilde divided by a_1+...+a_n term by term.
ATildeQuotient divide_a_tilde(int g, int m, int n, bool parallel = true);

// Quotient of a_tilde by a_1+...+a_n, with the a^d coefficient extracted.
TautClass a_class(const AClassSpec& spec, bool parallel = true);

// B-class as a sum over admissible complete trees of e_*[T,q], evaluated on st(T).
TautClass b_class(const BClassSpec& spec);

// One-point B-class as the signed sum over genus chains.
TautClass b_chain(int g, int d);

// st(T) with the psi decorations of one [T,q] after forgetting the extra legs.
TautClass stabilized_tree_class(const CompleteTree& t);

enum class Side { A, B };

TautClass build_class(Side side, int g, const std::vector<int>& d);

// Compares X_{d,0} with its pullback decomposition; X is the A- or B-class.
PairingReport check_string(Side side, int g, const std::vector<int>& d, const PairingOptions& opt = {});
// Compares pi_* X_{d,1} with (2g-2+n) X_d, or with 0 when sum d = 2g-2.
PairingReport check_dilaton(Side side, int g, const std::vector<int>& d, const PairingOptions& opt = {});

}  // namespace taut

#endif
