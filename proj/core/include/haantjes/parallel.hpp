/** \file    parallel.hpp
    \brief   Sample-parallel loops with results merged by index
*/
#pragma once
#include "haantjes/error.hpp"
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace haantjes {

/// worker count from HAANTJES_LAB_THREADS (0 or unset: hardware concurrency)
std::size_t thread_count();

/// runs body(i) for i in [0,n) on up to thread_count() threads; body must not throw
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

/// per-sample outcome of a sweep; failed samples keep the error text
template<class R>
struct SweepResult {
    std::vector<std::optional<R>> values;
    std::vector<std::string> errors;   ///< indexed like values; empty for successful samples
    std::size_t failures = 0;

    /// errors are tolerated only if they hit fewer than 1% of samples
    bool within_budget() const { return failures * 100 < values.size(); }
    std::string first_error() const
    {
        for(const auto& e : errors)
            if(!e.empty()) return e;
        return {};
    }
};

/// evaluates f for every index, converting library errors into per-sample failures
template<class R, class F>
SweepResult<R> sweep(std::size_t n, F&& f)
{
    SweepResult<R> r;
    r.values.resize(n);
    r.errors.resize(n);
    parallel_for(n, [&](std::size_t i) {
        try {
            r.values[i] = f(i);
        } catch(const Error& e) {
            r.errors[i] = e.what();
        }
    });
    for(std::size_t i = 0; i < n; i++)
        if(!r.values[i]) r.failures++;
    return r;
}

}  // namespace haantjes
