#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "plab/rational_function.hpp"

namespace plab {

/// Skew-symmetric matrix of scalars (omega_ij = -omega_ji, zero diagonal),
/// validated at construction time.
class SkewMatrix {
public:
    explicit SkewMatrix(std::size_t n) : n_(n), w_(n * n, Rational(0)) {}

    static SkewMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

    std::size_t size() const { return n_; }
    const Rational& at(std::size_t i, std::size_t j) const { return w_[i * n_ + j]; }

    /// Sets omega_ij = v and omega_ji = -v. i == j requires v = 0.
    void set(std::size_t i, std::size_t j, const Rational& v);

    friend bool operator==(const SkewMatrix& a, const SkewMatrix& b) {
        return a.n_ == b.n_ && a.w_ == b.w_;
    }
    friend bool operator!=(const SkewMatrix& a, const SkewMatrix& b) { return !(a == b); }

private:
    std::size_t n_;
    std::vector<Rational> w_;
};

/// The bilinear form M^I_J = sum_{k<l} omega_kl (i_k j_l - i_l j_k) = I Omega J^T.
Rational m_form(const SkewMatrix& omega, const ExponentVector& I, const ExponentVector& J);

/// {x^I, x^J} = M^I_J x^(I+J) under the log-canonical bracket of omega.
LaurentPolynomial bracket_monomial(const SkewMatrix& omega, const ExponentVector& I,
                                   const ExponentVector& J);

/// Bracket of two Laurent polynomials by the double sum over supports:
/// {f, g} = sum alpha_I beta_J M^I_J x^(I+J).
LaurentPolynomial bracket_laurent(const SkewMatrix& omega, const LaurentPolynomial& f,
                                  const LaurentPolynomial& g);

struct ValidationReport;

/// A Poisson structure on K(x_1,...,x_n): ordered variable names, the
/// upper-triangular table of structure functions pi_ij = {x_i, x_j}, a mask
/// of Poisson-central parameter symbols (whole row of brackets zero), and an
/// optional log-canonical matrix when pi_ij = omega_ij x_i x_j identically.
class PoissonStructure {
public:
    static PoissonStructure log_canonical(std::vector<std::string> names, SkewMatrix omega,
                                          std::vector<bool> central = {});

    static PoissonStructure general(std::vector<std::string> names, std::vector<bool> central,
                                    std::map<std::pair<std::size_t, std::size_t>, RationalFunction> upper);

    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    std::size_t index_of(const std::string& name) const;
    bool is_central(std::size_t i) const { return central_[i]; }
    bool is_log_canonical() const { return omega_.has_value(); }
    const SkewMatrix& omega() const;

    /// pi_ij for arbitrary i, j (sign handled; the diagonal is zero).
    RationalFunction pi(std::size_t i, std::size_t j) const;

    RationalFunction coordinate(std::size_t i) const {
        return RationalFunction::variable(size(), i);
    }

    bool jacobi_validated() const { return jacobi_validated_; }

private:
    PoissonStructure() = default;

    std::size_t upper_index(std::size_t i, std::size_t j) const; // i < j

    std::vector<std::string> names_;
    std::vector<bool> central_;
    std::vector<RationalFunction> upper_; // pi_ij for i < j, row-major
    std::optional<SkewMatrix> omega_;
    bool jacobi_validated_ = false;

    friend ValidationReport structure_validate(PoissonStructure& s);
};

/// Reference bracket straight from the coordinate formula
/// {f, g} = sum_{i,j} df/dx_i dg/dx_j pi_ij, with quotient-rule derivatives.
RationalFunction bracket_via_derivatives(const PoissonStructure& s, const RationalFunction& f,
                                         const RationalFunction& g);

/// Bracket with fast-path dispatch: log-canonical structures on Laurent
/// polynomial inputs use the monomial kernel, everything else the derivative
/// formula. The two paths agree exactly (tested); this is the entry point the
/// rest of the library uses.
RationalFunction poisson_bracket(const PoissonStructure& s, const RationalFunction& f,
                                 const RationalFunction& g);

/// {f,{g,h}} + {g,{h,f}} + {h,{f,g}}; identically zero iff Jacobi holds on
/// the triple.
RationalFunction jacobiator(const PoissonStructure& s, const RationalFunction& f,
                            const RationalFunction& g, const RationalFunction& h);

struct JacobiFailure {
    std::size_t i, j, k;
    RationalFunction value;
};

struct ValidationReport {
    bool skew_ok = true;
    bool jacobi_ok = true;
    std::vector<JacobiFailure> failures;
    bool valid() const { return skew_ok && jacobi_ok; }
};

/// Runs the jacobiator over all coordinate triples i<j<k; on success marks
/// the structure as Jacobi-validated.
ValidationReport structure_validate(PoissonStructure& s);

/// Result of testing whether {g_i, g_j} / (g_i g_j) is a scalar for every
/// pair: the candidate coordinates are log-canonical iff all ratios are.
struct LogCanonicalCheck {
    bool ok = false;
    SkewMatrix omega;               // filled when ok
    std::size_t bad_i = 0, bad_j = 0;
    RationalFunction ratio;         // the offending non-constant ratio
};

LogCanonicalCheck check_log_canonical(const PoissonStructure& s,
                                      std::span<const RationalFunction> gs);

/// Dimension-3 monomial bracket family {x,y} = A x^a1 y^a2 z^a3,
/// {x,z} = B x^b1 y^b2 z^b3, {y,z} = C x^c1 y^c2 z^c3, together with the
/// closed-form jacobiator of (x,y,z) and whether the sufficient closure
/// condition a1=b1, a2=c2, b3=c3 holds. The closed form is recomputed from
/// the derivative formula and must match; a mismatch is an internal error.
struct Monomial3Family {
    PoissonStructure structure;
    RationalFunction jacobi_closed_form;
    bool sufficient_condition_met = false;
};

Monomial3Family monomial3_family(const std::array<std::int64_t, 3>& a,
                                 const std::array<std::int64_t, 3>& b,
                                 const std::array<std::int64_t, 3>& c, const Rational& A,
                                 const Rational& B, const Rational& C);

/// The same function with relabeled coordinates: new variable k is old
/// variable perm[k]. The result is renormalized to canonical form.
RationalFunction permuted_variables(const RationalFunction& f,
                                    const std::vector<std::size_t>& perm);

/// The same Poisson structure with variables relabeled by perm (new position
/// k holds the old variable perm[k]).
PoissonStructure permuted_structure(const PoissonStructure& s,
                                    const std::vector<std::size_t>& perm);

} // namespace plab
