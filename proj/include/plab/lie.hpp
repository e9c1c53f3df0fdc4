#pragma once

#include <optional>
#include <string>

#include "plab/poisson.hpp"

namespace plab {

/// Dimension over the scalar field of span(fs), computed exactly by clearing
/// to a common denominator and row-reducing the numerator coefficients.
std::size_t span_rank(std::span<const RationalFunction> fs);

struct ClosureStep {
    std::size_t left, right; // bracketed basis indices
    std::size_t produced;    // index of the adjoined element
};

/// Outcome of a bracket-closure search. The basis always starts with the
/// constant function 1, so affine brackets {b_i,b_j} = sum c^k b_k + d fold
/// into plain structure constants against b_0 = 1. When closed,
/// {b_i, b_j} = sum_k c(i,j,k) b_k holds exactly.
struct LieClosureReport {
    bool closed = false;
    std::vector<RationalFunction> basis;
    std::size_t dimension = 0;
    bool abelian = false;
    std::vector<Rational> constants; // dim^3 entries, only when closed
    std::vector<ClosureStep> trace;

    const Rational& c(std::size_t i, std::size_t j, std::size_t k) const;
};

/// Breadth-first bracket closure starting from {1} + generators
/// (independence-reduced). Stops closed, or with closed = false once the
/// dimension would exceed max_dim (an inconclusive state, not a proof of
/// infinite-dimensionality).
LieClosureReport lie_closure(const PoissonStructure& s,
                             std::span<const RationalFunction> generators,
                             std::size_t max_dim = 16);

/// The matrix of ad_{b_e} on a closed basis with its characteristic
/// polynomial. "All eigenvalues zero" is certified by char poly = lambda^d,
/// which is equivalent to nilpotency; both are computed and cross-checked.
/// Rational eigenvalues are read off the characteristic polynomial's rational
/// roots.
struct AdjointAnalysis {
    std::size_t element = 0;
    std::size_t dimension = 0;
    std::vector<Rational> matrix;    // row-major; column j = coords of {b_e, b_j}
    std::vector<Rational> char_poly; // char_poly[i] = coefficient of lambda^i
    bool is_nilpotent = false;
    bool is_zero = false;
    bool has_nonzero_eigenvalue = false;
    std::vector<Rational> rational_eigenvalues; // distinct, ascending

    const Rational& mat(std::size_t r, std::size_t c) const { return matrix[r * dimension + c]; }
};

AdjointAnalysis ad_analysis(const LieClosureReport& report, std::size_t element);

enum class LieVerdict {
    Abelian,
    Nonabelian,
    /// A nonabelian closed report under a log-canonical structure would
    /// refute the nonexistence theorem; flagged so the test suite fails hard.
    Contradiction,
};

struct Witness {
    enum class Kind { NonzeroEigenvalue, NonzeroNilpotent };
    Kind kind;
    std::size_t element;
    Rational eigenvalue; // meaningful for NonzeroEigenvalue
    RationalFunction f, g;
};

struct AbelianVerdict {
    LieVerdict verdict;
    std::optional<Witness> witness;
    std::string note;
};

/// Classifies a closed report. Nonabelian reports under general structures
/// come with a witness pair where one is certifiable over the rationals:
/// an ad with a nonzero rational eigenvalue gives (f/lambda, g) with
/// {f/lambda, g} = g; a nonzero nilpotent ad gives (f, g) with {f,g} != 0
/// and {f,{f,g}} = 0.
AbelianVerdict abelian_verdict(const PoissonStructure& s, const LieClosureReport& report);

/// {x,y} = x^a y^b on two variables, a,b >= 0.
PoissonStructure ab_family_structure(std::int64_t a, std::int64_t b);

struct CanonicalPair {
    RationalFunction u, v;
    Rational constant;
};

/// Canonical coordinates for the bracket {x,y} = x^a y^b: a pair of
/// algebraically independent rational functions with a nonzero constant
/// bracket. Returns nullopt exactly for (a,b) = (1,1), the log-canonical
/// case, where no such pair exists. Every returned pair is re-verified by
/// direct bracket computation and a Jacobian rank check.
std::optional<CanonicalPair> canonical_pair(std::int64_t a, std::int64_t b);

enum class WitnessCase {
    BracketOne,            // {f,g} = 1        -> (fg, g) with {fg, g} = g
    BracketEqualsElement,  // {f,g} = ±g or ±f -> pair with bracket 1
    NilpotentStep,         // {f,g} != 0, {f,{f,g}} = 0 -> (f, g/{f,g}) with bracket 1
};

struct WitnessTransform {
    bool applicable = false;
    WitnessCase hypothesis = WitnessCase::BracketOne;
    std::optional<RationalFunction> first, second;
    std::optional<RationalFunction> bracket; // recomputed {first, second}
    std::string detail;
};

/// Moves between the equivalent ways a Poisson field can fail to be
/// "nonconstant": dispatches on which hypothesis the pair (f, g) satisfies
/// and returns the transformed pair, with the target identity recomputed and
/// asserted. Not-applicable results name the failed tests.
WitnessTransform witness_transform(const PoissonStructure& s, const RationalFunction& f,
                                   const RationalFunction& g);

} // namespace plab
