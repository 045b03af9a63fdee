#pragma once

#include <cstddef>
#include <exception>
#include <type_traits>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sf {

// Effective worker count; jobs <= 0 means "let OpenMP decide".
inline int resolve_jobs(int jobs)
{
#ifdef _OPENMP
    return jobs > 0 ? jobs : omp_get_max_threads();
#else
    (void)jobs;
    return 1;
#endif
}

// out[i] = fn(i) for i in [0, n), computed on `jobs` threads. Results land in
// index order, so the caller's merge is independent of the thread count.
template <class Fn>
auto parallel_map(std::size_t n, int jobs, Fn fn) -> std::vector<std::invoke_result_t<Fn, std::size_t>>
{
    std::vector<std::invoke_result_t<Fn, std::size_t>> out(n);
    std::exception_ptr err;
    const long long count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 1) num_threads(resolve_jobs(jobs))
    for (long long i = 0; i < count; ++i) {
        try {
            out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical(sf_parallel_map_error)
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
    return out;
}

} // namespace sf
