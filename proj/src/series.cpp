#include "plab/series.hpp"

#include <algorithm>

namespace plab {

namespace {

// One level of the iterated expansion: writes a nonzero rational function as
//   f = sum_{t >= 0} s_t * x_k^(v + t)
// where v is the x_k-valuation (read off the canonical monomial factor) and
// each s_t is a rational function in the remaining variables. The s_t come
// from the geometric-series inversion recurrence against the denominator's
// x_k-slices; canonical form guarantees the constant slice q_0 is nonzero.
class SeriesSlicer {
public:
    SeriesSlicer(const RationalFunction& f, std::size_t k) : valuation_(f.monomial_factor()[k]) {
        const LaurentPolynomial& p = f.numerator();
        const LaurentPolynomial& q = f.denominator();
        rest_mono_ = f.monomial_factor().erased(k);
        auto slices = [&](const LaurentPolynomial& poly, std::vector<RationalFunction>& out) {
            std::int64_t top = poly.depends_on(k) ? poly.max_exp(k) : 0;
            for (std::int64_t d = 0; d <= top; ++d)
                out.push_back(RationalFunction::from_laurent(poly.coeff_of_power(k, d).dropped_var(k)));
        };
        slices(p, num_slices_);
        slices(q, den_slices_);
    }

    std::int64_t valuation() const { return valuation_; }

    const RationalFunction& coeff(std::size_t t) {
        while (shifted_.size() <= t) {
            std::size_t d = shifted_.size();
            RationalFunction acc = d < num_slices_.size()
                                       ? num_slices_[d]
                                       : RationalFunction::zero(rest_mono_.size());
            for (std::size_t u = 1; u < den_slices_.size() && u <= d; ++u)
                acc = acc - den_slices_[u] * raw_[d - u];
            raw_.push_back(acc / den_slices_[0]);
            shifted_.push_back(raw_.back().shifted_by(rest_mono_));
        }
        return shifted_[t];
    }

private:
    std::int64_t valuation_;
    ExponentVector rest_mono_;
    std::vector<RationalFunction> num_slices_, den_slices_;
    std::vector<RationalFunction> raw_;     // coefficients of p/q
    std::vector<RationalFunction> shifted_; // raw * x^rest_mono
};

void check_order(const std::vector<std::size_t>& order, std::size_t n) {
    if (order.size() != n) throw DimensionError("variable order has wrong length");
    std::vector<bool> seen(n, false);
    for (std::size_t k : order) {
        if (k >= n || seen[k]) throw Error("variable order is not a permutation");
        seen[k] = true;
    }
}

template <typename T>
std::vector<T> erased_at(const std::vector<T>& v, std::size_t k) {
    std::vector<T> r;
    r.reserve(v.size() - 1);
    for (std::size_t j = 0; j < v.size(); ++j)
        if (j != k) r.push_back(v[j]);
    return r;
}

std::vector<std::size_t> reduced_order(const std::vector<std::size_t>& order) {
    std::size_t k = order.back();
    std::vector<std::size_t> r(order.begin(), order.end() - 1);
    for (auto& o : r)
        if (o > k) --o;
    return r;
}

Rational coefficient_rec(const RationalFunction& f, const std::vector<std::int64_t>& idx,
                         const std::vector<std::size_t>& order) {
    if (f.is_zero()) return Rational(0);
    if (order.empty()) return *f.as_scalar();
    const std::size_t k = order.back();
    SeriesSlicer slicer(f, k);
    if (idx[k] < slicer.valuation()) return Rational(0);
    const RationalFunction& sub = slicer.coeff(static_cast<std::size_t>(idx[k] - slicer.valuation()));
    return coefficient_rec(sub, erased_at(idx, k), reduced_order(order));
}

LaurentPolynomial expand_rec(const RationalFunction& f, const std::vector<std::int64_t>& lo,
                             const std::vector<std::int64_t>& hi,
                             const std::vector<std::size_t>& order) {
    LaurentPolynomial out(lo.size());
    if (order.empty()) {
        out.add_term(ExponentVector(0), *f.as_scalar());
        return out;
    }
    if (f.is_zero()) return out;
    const std::size_t k = order.back();
    SeriesSlicer slicer(f, k);
    const auto lo2 = erased_at(lo, k), hi2 = erased_at(hi, k);
    const auto order2 = reduced_order(order);
    for (std::int64_t d = std::max(slicer.valuation(), lo[k]); d <= hi[k]; ++d) {
        const RationalFunction& sub = slicer.coeff(static_cast<std::size_t>(d - slicer.valuation()));
        LaurentPolynomial part = expand_rec(sub, lo2, hi2, order2);
        for (const auto& [e, c] : part.terms()) out.add_term(e.inserted(k, d), c);
    }
    return out;
}

} // namespace

std::vector<std::size_t> default_order(std::size_t n) {
    std::vector<std::size_t> r(n);
    for (std::size_t k = 0; k < n; ++k) r[k] = k;
    return r;
}

Rational coefficient(const RationalFunction& f, const ExponentVector& I) {
    return coefficient(f, I, default_order(f.nvars()));
}

Rational coefficient(const RationalFunction& f, const ExponentVector& I,
                     const std::vector<std::size_t>& order) {
    if (I.size() != f.nvars()) throw DimensionError("coefficient: index has wrong length");
    check_order(order, f.nvars());
    std::vector<std::int64_t> idx(f.nvars());
    for (std::size_t k = 0; k < f.nvars(); ++k) idx[k] = I[k];
    return coefficient_rec(f, idx, order);
}

Rational constant_term(const RationalFunction& f) {
    return coefficient(f, ExponentVector(f.nvars()));
}

Rational constant_term(const RationalFunction& f, const std::vector<std::size_t>& order) {
    return coefficient(f, ExponentVector(f.nvars()), order);
}

TruncatedSeries expand_iterated(const RationalFunction& f, const SeriesWindow& window) {
    return expand_iterated(f, window, default_order(f.nvars()));
}

TruncatedSeries expand_iterated(const RationalFunction& f, const SeriesWindow& window,
                                const std::vector<std::size_t>& order) {
    if (window.size() != f.nvars()) throw DimensionError("expand: window has wrong length");
    check_order(order, f.nvars());
    std::vector<std::int64_t> lo(f.nvars()), hi(f.nvars());
    for (std::size_t k = 0; k < f.nvars(); ++k) {
        lo[k] = window.lo(k);
        hi[k] = window.hi(k);
    }
    return TruncatedSeries{window, order, expand_rec(f, lo, hi, order)};
}

} // namespace plab
