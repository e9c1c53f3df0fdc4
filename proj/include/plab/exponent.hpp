#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "plab/errors.hpp"

namespace plab {

/// Integer exponent tuple indexing a Laurent monomial x^I. Entries are
/// fixed-width integers with checked arithmetic: overflow raises instead of
/// wrapping.
class ExponentVector {
public:
    ExponentVector() = default;
    explicit ExponentVector(std::size_t n) : e_(n, 0) {}
    explicit ExponentVector(std::vector<std::int64_t> e) : e_(std::move(e)) {}
    ExponentVector(std::initializer_list<std::int64_t> e) : e_(e) {}

    static ExponentVector unit(std::size_t n, std::size_t k) {
        ExponentVector r(n);
        r.check_index(k);
        r.e_[k] = 1;
        return r;
    }

    std::size_t size() const { return e_.size(); }
    std::int64_t operator[](std::size_t k) const { return e_[k]; }
    std::int64_t at(std::size_t k) const { check_index(k); return e_[k]; }
    void set(std::size_t k, std::int64_t v) { check_index(k); e_[k] = v; }

    bool is_zero() const {
        for (auto v : e_) if (v != 0) return false;
        return true;
    }

    std::int64_t total_degree() const {
        std::int64_t s = 0;
        for (auto v : e_) s = checked_add(s, v);
        return s;
    }

    ExponentVector operator+(const ExponentVector& o) const {
        check_same(o);
        ExponentVector r(size());
        for (std::size_t k = 0; k < size(); ++k) r.e_[k] = checked_add(e_[k], o.e_[k]);
        return r;
    }

    ExponentVector operator-(const ExponentVector& o) const {
        check_same(o);
        ExponentVector r(size());
        for (std::size_t k = 0; k < size(); ++k) r.e_[k] = checked_sub(e_[k], o.e_[k]);
        return r;
    }

    ExponentVector operator-() const {
        ExponentVector r(size());
        for (std::size_t k = 0; k < size(); ++k) r.e_[k] = checked_sub(0, e_[k]);
        return r;
    }

    friend bool operator==(const ExponentVector& a, const ExponentVector& b) { return a.e_ == b.e_; }
    friend bool operator!=(const ExponentVector& a, const ExponentVector& b) { return a.e_ != b.e_; }

    /// Copy with coordinate k removed (length n-1).
    ExponentVector erased(std::size_t k) const {
        check_index(k);
        std::vector<std::int64_t> r;
        r.reserve(size() - 1);
        for (std::size_t j = 0; j < size(); ++j)
            if (j != k) r.push_back(e_[j]);
        return ExponentVector(std::move(r));
    }

    /// Copy with value v inserted so it becomes coordinate k (length n+1).
    ExponentVector inserted(std::size_t k, std::int64_t v) const {
        if (k > size()) throw DimensionError("exponent insert position out of range");
        std::vector<std::int64_t> r;
        r.reserve(size() + 1);
        for (std::size_t j = 0; j < k; ++j) r.push_back(e_[j]);
        r.push_back(v);
        for (std::size_t j = k; j < size(); ++j) r.push_back(e_[j]);
        return ExponentVector(std::move(r));
    }

    std::string str() const;

    static std::int64_t checked_add(std::int64_t a, std::int64_t b) {
        std::int64_t r;
        if (__builtin_add_overflow(a, b, &r)) throw OverflowError("exponent overflow");
        return r;
    }
    static std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
        std::int64_t r;
        if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("exponent overflow");
        return r;
    }
    static std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
        std::int64_t r;
        if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("exponent overflow");
        return r;
    }

private:
    void check_index(std::size_t k) const {
        if (k >= size()) throw DimensionError("variable index out of range");
    }
    void check_same(const ExponentVector& o) const {
        if (size() != o.size()) throw DimensionError("exponent vectors of different lengths");
    }

    std::vector<std::int64_t> e_;
};

inline std::string ExponentVector::str() const {
    std::string s = "(";
    for (std::size_t k = 0; k < size(); ++k) {
        if (k) s += ",";
        s += std::to_string(e_[k]);
    }
    return s + ")";
}

/// Graded-lexicographic total order with x_1 < ... < x_n: lower total degree
/// first; ties broken on the highest-indexed differing variable.
struct GrlexLess {
    bool operator()(const ExponentVector& a, const ExponentVector& b) const {
        std::int64_t da = a.total_degree(), db = b.total_degree();
        if (da != db) return da < db;
        for (std::size_t k = a.size(); k-- > 0;)
            if (a[k] != b[k]) return a[k] < b[k];
        return false;
    }
};

} // namespace plab
