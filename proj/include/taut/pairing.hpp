#ifndef TAUT_PAIRING_HPP
#define TAUT_PAIRING_HPP

#include <string>
#include <vector>

#include "taut/strata.hpp"

namespace taut {

// integrate(x * y), memoized per pair of canonical strata.
Rational pair(const TautClass& x, const TautClass& y);
// Polynomial-valued pairing of a class with polynomial coefficients.
MultiPoly pair(const PolyTautClass& x, const TautClass& y);
Rational pair_canonical(const std::string& kx, const Stratum& x, const std::string& ky, const Stratum& y);

// Strata representative of lambda_g on M_{g,n}, pulled back from M_{1,1} or M_2.
TautClass lambda_class(int g, int n);
// lambda_g as a single flagged stratum on the trivial graph.
TautClass lambda_top(int g, int n);
// Multiplies by lambda_g: flags every positive-genus vertex of tree terms, drops the rest.
template <class C>
Combination<C> times_lambda_top(const Combination<C>& x) {
    Combination<C> out(x.ambient, x.ct);
    for (const auto& [k, e] : x.terms) {
        if (!e.stratum.graph.is_tree()) continue;
        Stratum s = e.stratum;
        bool zero = false;
        for (int v = 0; v < s.graph.num_vertices(); ++v) {
            if (s.graph.genus[v] == 0) continue;
            if (s.lambda[v]) zero = true;
            s.lambda[v] = 1;
        }
        if (!zero) out.add(s, e.coeff);
    }
    return out;
}

// Every canonical kappa/psi-decorated stratum of the given degree.
std::vector<Stratum> decorated_strata(const Ambient& a, int degree);
// One representative per orbit of the marking permutations.
std::vector<Stratum> orbit_representatives(const std::vector<Stratum>& strata);
// True if x is unchanged by every transposition of markings.
bool is_symmetric(const TautClass& x);

struct PairingEntry {
    std::string key;
    std::string description;
    Rational x;
    Rational y;
};

struct PairingReport {
    bool equal = true;
    bool syntactic = false;
    std::vector<PairingEntry> entries;
    std::vector<std::string> assumptions;
    std::string verdict() const;
};

enum class SpanningSet { all, orbits };

struct PairingOptions {
    SpanningSet spanning = SpanningSet::all;
    bool parallel = true;
    std::size_t limit = 0;  // 0 = whole spanning set
};

PairingReport equal_by_pairing(const TautClass& x, const TautClass& y, const PairingOptions& opt = {});
// Pairings of x against the given classes.
std::vector<Rational> pair_all(const TautClass& x, const std::vector<TautClass>& tests, bool parallel = true);

void clear_pairing_cache();

}  // namespace taut

#endif
