#pragma once

// Data-parallel inner loops. Each kernel has a serial reference version that
// the tests compare against and a parallel version that splits the
// independent output indices across OpenMP threads.

#include <cstddef>
#include <exception>
#include <optional>
#include <utility>
#include <vector>

#ifdef RATDYN_HAVE_OPENMP
#include <omp.h>
#endif

namespace ratdyn::kernels {

// Below this many coefficient products the thread fork costs more than it saves.
inline constexpr std::size_t parallel_threshold = 4096;

inline int max_threads() noexcept
{
#ifdef RATDYN_HAVE_OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

namespace serial {

// Cauchy product of two nonempty coefficient sequences.
template <class F>
std::vector<F> convolve(const std::vector<F>& a, const std::vector<F>& b)
{
    const std::size_t na = a.size(), nb = b.size();
    std::vector<F> out;
    out.reserve(na + nb - 1);
    for (std::size_t k = 0; k + 1 < na + nb; ++k) {
        std::size_t lo = k + 1 > nb ? k + 1 - nb : 0;
        std::size_t hi = k < na - 1 ? k : na - 1;
        F acc = a[lo] * b[k - lo];
        for (std::size_t i = lo + 1; i <= hi; ++i) acc += a[i] * b[k - i];
        out.push_back(std::move(acc));
    }
    return out;
}

// Applies fn to every index in [0, n) in order, collecting results.
template <class Fn>
auto map_indices(std::size_t n, Fn&& fn) -> std::vector<decltype(fn(std::size_t{}))>
{
    std::vector<decltype(fn(std::size_t{}))> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(fn(i));
    return out;
}

} // namespace serial

namespace parallel {

template <class F>
std::vector<F> convolve(const std::vector<F>& a, const std::vector<F>& b)
{
    const std::size_t na = a.size(), nb = b.size();
    const std::size_t n = na + nb - 1;
    std::vector<F> out(n, a[0]);
    const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic, 8)
    for (long ks = 0; ks < count; ++ks) {
        const std::size_t k = static_cast<std::size_t>(ks);
        std::size_t lo = k + 1 > nb ? k + 1 - nb : 0;
        std::size_t hi = k < na - 1 ? k : na - 1;
        F acc = a[lo] * b[k - lo];
        for (std::size_t i = lo + 1; i <= hi; ++i) acc += a[i] * b[k - i];
        out[k] = std::move(acc);
    }
    return out;
}

// Same contract as serial::map_indices; results are merged by index so the
// output order never depends on scheduling. fn must be safe to call
// concurrently on distinct indices. Exceptions are rethrown after the loop
// (the lowest failing index wins).
template <class Fn>
auto map_indices(std::size_t n, Fn&& fn) -> std::vector<decltype(fn(std::size_t{}))>
{
    using T = decltype(fn(std::size_t{}));
    std::vector<std::optional<T>> slots(n);
    std::vector<std::exception_ptr> errors(n);
    const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic, 1)
    for (long is = 0; is < count; ++is) {
        const auto i = static_cast<std::size_t>(is);
        try {
            slots[i].emplace(fn(i));
        } catch (...) {
            errors[i] = std::current_exception();
        }
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    std::vector<T> out;
    out.reserve(n);
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

} // namespace parallel

enum class Execution { Serial, Parallel };

inline Execution default_execution() noexcept { return max_threads() > 1 ? Execution::Parallel : Execution::Serial; }

template <class Fn>
auto map_indices(Execution exec, std::size_t n, Fn&& fn) -> std::vector<decltype(fn(std::size_t{}))>
{
    if (exec == Execution::Parallel) return parallel::map_indices(n, std::forward<Fn>(fn));
    return serial::map_indices(n, std::forward<Fn>(fn));
}

template <class F>
std::vector<F> convolve(const std::vector<F>& a, const std::vector<F>& b)
{
    if (max_threads() > 1 && a.size() * b.size() >= parallel_threshold)
        return parallel::convolve(a, b);
    return serial::convolve(a, b);
}

} // namespace ratdyn::kernels
