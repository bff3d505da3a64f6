#pragma once

#include <array>
#include <optional>
#include <ostream>
#include <string>

#include "udcount/bigint.hpp"
#include "udcount/validity.hpp"

namespace udcount {

/// Number of valid labelings of an oss-graph per class, in canonical class
/// order. The sum of the entries is the number of valid labelings.
class class_vector {
public:
    class_vector() = default;
    class_vector(big_int pp, big_int pn, big_int mn, big_int np, big_int nm, big_int nn)
        : counts_{std::move(pp), std::move(pn), std::move(mn), std::move(np), std::move(nm), std::move(nn)} {}

    const big_int& operator[](ss_class c) const noexcept { return counts_[index_of(c)]; }
    big_int& operator[](ss_class c) noexcept { return counts_[index_of(c)]; }

    big_int total() const {
        big_int t = 0;
        for (const auto& c : counts_) t += c;
        return t;
    }

    const std::array<big_int, 6>& counts() const noexcept { return counts_; }

    friend bool operator==(const class_vector&, const class_vector&) = default;

    friend std::ostream& operator<<(std::ostream& os, const class_vector& v) {
        os << '(';
        for (std::size_t i = 0; i < 6; ++i) os << (i ? "," : "") << v.counts_[i];
        return os << ')';
    }

private:
    std::array<big_int, 6> counts_{};
};

using composition_table = std::array<std::array<std::optional<ss_class>, 6>, 6>;

namespace detail {
inline constexpr auto PP = ss_class::plus_plus;
inline constexpr auto PN = ss_class::plus_none;
inline constexpr auto MN = ss_class::minus_none;
inline constexpr auto NP = ss_class::none_plus;
inline constexpr auto NM = ss_class::none_minus;
inline constexpr auto NN = ss_class::none_none;
inline constexpr std::nullopt_t XX = std::nullopt;
}  // namespace detail

/// Series composition (G, a, b) . (G', a', b') with b = a'. Row = class of
/// the labeling of G, column = class of the labeling of G', cell = class of
/// the union relative to (a, b'). Every cell is populated.
inline constexpr composition_table series_table = [] {
    using namespace detail;
    return composition_table{{
        {PP, PN, MN, NP, NM, NN},
        {PN, PN, MN, NN, NN, NN},
        {MN, MN, MN, NN, NN, NN},
        {NP, NN, NN, NP, NM, NN},
        {NM, NN, NN, NM, NM, NN},
        {NN, NN, NN, NN, NN, NN},
    }};
}();

/// Parallel composition identifying a = a' and b = b'. Empty cells are
/// unions containing a forbidden cycle.
inline constexpr composition_table parallel_table = [] {
    using namespace detail;
    return composition_table{{
        {PP, PP, XX, PP, XX, PP},
        {PP, PN, MN, PP, XX, PN},
        {XX, MN, MN, XX, XX, MN},
        {PP, PP, XX, NP, NM, NP},
        {XX, XX, XX, NM, NM, NM},
        {PP, PN, MN, NP, NM, NN},
    }};
}();

inline class_vector compose(const composition_table& table, const class_vector& v, const class_vector& w) {
    class_vector r;
    for (auto row : all_ss_classes) {
        if (v[row] == 0) continue;
        for (auto col : all_ss_classes) {
            const auto& cell = table[index_of(row)][index_of(col)];
            if (cell && w[col] != 0) r[*cell] += v[row] * w[col];
        }
    }
    return r;
}

inline class_vector compose_series(const class_vector& v, const class_vector& w) { return compose(series_table, v, w); }

inline class_vector compose_parallel(const class_vector& v, const class_vector& w) {
    return compose(parallel_table, v, w);
}

/// One-point join with a digraph having `w_total` valid labelings; the
/// endpoints stay those of `v`.
inline class_vector compose_free(const class_vector& v, const big_int& w_total) {
    class_vector r = v;
    for (auto c : all_ss_classes) r[c] *= w_total;
    return r;
}

/// Re-expresses a vector computed for (a, b) relative to (b, a).
inline class_vector swap_endpoints(const class_vector& v) {
    using enum ss_class;
    return class_vector(v[plus_plus], v[none_plus], v[none_minus], v[plus_none], v[minus_none], v[none_none]);
}

enum class orientation : std::uint8_t { forward, backward };

/// A single arc relative to its endpoint pair: forward means tail = first.
inline class_vector leaf_vector(orientation o) {
    class_vector v(0, 1, 0, 0, 1, 0);
    return o == orientation::forward ? v : swap_endpoints(v);
}

}  // namespace udcount
