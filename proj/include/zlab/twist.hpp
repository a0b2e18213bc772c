#ifndef ZLAB_TWIST_HPP
#define ZLAB_TWIST_HPP

#include <string>
#include <vector>

#include "zlab/bigint.hpp"
#include "zlab/dynkin.hpp"
#include "zlab/laurent.hpp"
#include "zlab/quiver.hpp"

namespace zlab {

// Reflection game on an undirected graph: s_i negates h(i) and adds the
// neighbor sum; the marked version additionally adds the basis vector at the
// distinguished vertex b when i == b.
std::vector<Rational> reflect(const Graph& g, int i, const std::vector<Rational>& h);
std::vector<Rational> reflect_marked(const Graph& g, int b, int i, const std::vector<Rational>& h);

// Doubled quiver: vertices i' (= i) and i'' (= n+i); every arrow i->j of q
// yields i'->j', i''->j'', j''->i', j'->i''.
Quiver twist_quiver(const Quiver& q);

// Symbolic tau-mutation dynamics on the doubled quiver; 2n variables, x_i' at
// slot i and x_i'' at slot n+i.
struct TauState {
    std::vector<LaurentPoly> prime, dprime;  // T(i'), T(i'')
};
TauState tau_evolve_symbolic(const Quiver& q, const std::vector<int>& seq, TermBudget& budget);

// Exponent matrix A(seq): column j is the marked-reflection orbit of 0 with
// b = j along the sequence; all entries nonnegative.
std::vector<std::vector<long long>> exponent_matrix(const Graph& g, const std::vector<int>& seq);

// The twist factors X_i of the initial seed.
LaurentPoly twist_factor(const Quiver& q, int i);

// T_seq(i') == x_i' * prod_j X_j^{a_ij} and likewise for i'' (exact).
bool factorization_check(const Quiver& q, const std::vector<int>& seq, TermBudget& budget);

struct CoxeterData {
    enum class Kind { FinitePeriodic, AffineUnipotent, IndefiniteExpanding };
    Kind kind;
    int n = 0;
    std::vector<long long> matrix;  // C = omega_2 omega_1, row-major, internal order
    long long period_or_m = 0;      // Coxeter number h, or affine Coxeter number m
    std::vector<long long> growth;  // max-norm of h_{m(n+1)}, m = 0,1,2,...
};

// Classifies the Coxeter transformation of a connected bipartite graph
// (white-then-black vertex ordering applied internally) and samples the
// marked-reflection growth sequence; exact integer arithmetic throughout.
CoxeterData coxeter_analysis(const Graph& g, const std::vector<int>& color, int growth_samples = 24);

// Affine Coxeter numbers h_a and the Coxeter-McKay ratio g = 4 h_a / h^(2).
long long affine_coxeter_number(const DynkinType& t);
long long coxeter_mckay_ratio(const DynkinType& t);

// Devron property of the twist Q x Q with t_0 = 2: for every vertex v of
// color 1, X_v appears in T_v(3) with exponent exactly 1.
bool devron_check(const Quiver& q);

struct ConservedReport {
    long long m = 0;       // affine Coxeter number
    long long ratio = 0;   // g(Lambda)
    int sign = 0;          // +1 or -1, the empirical sign of the exponent relation
    double worst_b = 0;    // worst relative residual of B(t+m) = B(t)
    double worst_a = 0;    // worst residual of the A_i relation
    bool ok = false;
    int trials = 0;
};

// Numeric verification of the time-dependent conserved quantities on the
// twist of an affine diagram, over `trials` random positive seeds.
ConservedReport conserved_check(const DynkinType& t, int trials, unsigned seed = 12345,
                                double rel_tol = 1e-8, int periods = 3);

}  // namespace zlab

#endif
