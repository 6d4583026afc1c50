// Deterministic parallel map: results are ordered by input position, never
// by completion order. The exception of the lowest failing index is rethrown.

#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <optional>
#include <span>
#include <thread>
#include <type_traits>
#include <vector>

namespace adiabatic {

/// jobs == 0 means one worker per hardware thread.
template <class In, class F>
auto parallel_map(std::span<const In> inputs, F&& fn, unsigned jobs = 1)
    -> std::vector<std::invoke_result_t<F&, const In&>> {
    using Out = std::invoke_result_t<F&, const In&>;
    const std::size_t n = inputs.size();
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    const auto workers = static_cast<unsigned>(std::min<std::size_t>(jobs, n));

    std::vector<std::optional<Out>> slots(n);
    std::vector<std::exception_ptr> errors(n);
    std::atomic<std::size_t> next{0};

    auto work = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                slots[i].emplace(fn(inputs[i]));
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };

    if (workers <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    }

    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    std::vector<Out> out;
    out.reserve(n);
    for (auto& slot : slots) out.push_back(std::move(*slot));
    return out;
}

template <class In, class F>
auto parallel_map(const std::vector<In>& inputs, F&& fn, unsigned jobs = 1) {
    return parallel_map(std::span<const In>(inputs), std::forward<F>(fn), jobs);
}

}  // namespace adiabatic
