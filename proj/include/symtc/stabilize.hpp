#pragma once

// Values of an invariant for r = 0..max_r and their running minimum.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "symtc/complexity.hpp"

namespace symtc {

struct StabilizeRow {
    int r = 0;
    std::optional<ComplexityResult> result; // empty when the budget ran out
    std::string note;
};

struct StabilizeTable {
    Invariant invariant = Invariant::ScSigma;
    int n = 2;
    std::vector<StabilizeRow> rows;
    /// Smallest cover size seen up to each row; nullopt while every row is
    /// infinite or unknown.
    std::vector<std::optional<std::size_t>> running_min;
};

using Instance = std::variant<OrderedComplex, FinitePoset>;

namespace detail {

inline std::optional<std::size_t> exact_value(const ComplexityResult& r) {
    if (!r.exact() || r.infinite) return std::nullopt;
    return r.upper;
}

} // namespace detail

/// Runs the invariant at every r <= max_r. Rows that hit the budget are kept
/// with a note. Throws MonotonicityViolation when an exact value at a larger
/// r exceeds an exact value (or an infinite marker follows a finite exact
/// value) at a smaller r.
inline StabilizeTable stabilize_over_r(Invariant inv, const Instance& instance, int n, int max_r,
                                       ComplexityOptions opt = {}) {
    if (is_simplicial(inv) != std::holds_alternative<OrderedComplex>(instance))
        throw Error(Errc::BadArity, std::string(to_string(inv)) + " does not apply to this kind of input");
    StabilizeTable table;
    table.invariant = inv;
    table.n = n;
    opt.n = n;
    std::optional<std::size_t> best;
    std::optional<std::size_t> best_exact;
    for (int r = 0; r <= max_r; ++r) {
        opt.r = r;
        StabilizeRow row;
        row.r = r;
        try {
            if (auto k = std::get_if<OrderedComplex>(&instance))
                row.result = inv == Invariant::ScSigma ? sc_sigma(*k, opt) : sc_plain(*k, opt);
            else {
                const auto& p = std::get<FinitePoset>(instance);
                row.result = inv == Invariant::CcSigma ? cc_sigma(p, opt) : cc_plain(p, opt);
            }
        } catch (const Error& e) {
            if (e.code() != Errc::BudgetExceeded) throw;
            row.note = e.what();
        }
        if (row.result) {
            const auto& res = *row.result;
            if (res.exact() && best_exact) {
                if (res.infinite || *res.upper > *best_exact)
                    throw Error(Errc::MonotonicityViolation,
                                std::string(to_string(inv)) + " increased at r = " + std::to_string(r));
            }
            if (auto v = detail::exact_value(res)) best_exact = best_exact ? std::min(*best_exact, *v) : *v;
            if (!res.infinite && res.upper) best = best ? std::min(*best, *res.upper) : *res.upper;
        }
        table.rows.push_back(std::move(row));
        table.running_min.push_back(best);
    }
    return table;
}

} // namespace symtc
