#pragma once

#include <vector>

#include "plab/rational_function.hpp"

namespace plab {

/// Per-variable exponent bounds for a truncated expansion.
class SeriesWindow {
public:
    SeriesWindow(std::vector<std::int64_t> lo, std::vector<std::int64_t> hi)
        : lo_(std::move(lo)), hi_(std::move(hi)) {
        if (lo_.size() != hi_.size()) throw DimensionError("window bound lengths differ");
        for (std::size_t k = 0; k < lo_.size(); ++k)
            if (lo_[k] > hi_[k]) throw Error("window bounds inverted");
    }

    std::size_t size() const { return lo_.size(); }
    std::int64_t lo(std::size_t k) const { return lo_[k]; }
    std::int64_t hi(std::size_t k) const { return hi_[k]; }

    bool contains(const ExponentVector& e) const {
        if (e.size() != size()) return false;
        for (std::size_t k = 0; k < size(); ++k)
            if (e[k] < lo_[k] || e[k] > hi_[k]) return false;
        return true;
    }

private:
    std::vector<std::int64_t> lo_, hi_;
};

/// Finite view of an iterated Laurent expansion: all coefficients of the
/// source inside `window`, under the adjunction order `order` (positions into
/// the variable list, innermost first; the last entry is the outermost
/// series variable). Zero coefficients are not stored.
struct TruncatedSeries {
    SeriesWindow window;
    std::vector<std::size_t> order;
    LaurentPolynomial terms;
};

/// The identity order (x_1, ..., x_n): x_n outermost.
std::vector<std::size_t> default_order(std::size_t n);

/// Exact coefficient of x^I in the iterated Laurent expansion of f. The
/// order variants expand with the given variable adjunction order instead of
/// the declaration order.
Rational coefficient(const RationalFunction& f, const ExponentVector& I);
Rational coefficient(const RationalFunction& f, const ExponentVector& I,
                     const std::vector<std::size_t>& order);

/// Constant term [1]f of the iterated Laurent expansion.
Rational constant_term(const RationalFunction& f);
Rational constant_term(const RationalFunction& f, const std::vector<std::size_t>& order);

TruncatedSeries expand_iterated(const RationalFunction& f, const SeriesWindow& window);
TruncatedSeries expand_iterated(const RationalFunction& f, const SeriesWindow& window,
                                const std::vector<std::size_t>& order);

} // namespace plab
