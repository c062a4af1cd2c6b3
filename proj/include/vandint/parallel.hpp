#ifndef VANDINT_PARALLEL_HPP
#define VANDINT_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <optional>
#include <thread>
#include <vector>

namespace vandint {

/// Evaluates fn(0..count-1) on up to `workers` threads (0 = hardware
/// concurrency) and returns the results in index order.
template <typename Fn>
auto parallel_map(std::size_t count, unsigned workers, Fn&& fn) -> std::vector<decltype(fn(std::size_t{}))> {
    using Result = decltype(fn(std::size_t{}));
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    if (workers > count) workers = static_cast<unsigned>(count);

    std::vector<Result> out;
    out.reserve(count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) out.push_back(fn(i));
        return out;
    }

    std::vector<std::optional<Result>> slots(count);
    std::vector<std::exception_ptr> errors(workers);
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = next++; i < count && !failed; i = next++) slots[i].emplace(fn(i));
            } catch (...) {
                errors[w] = std::current_exception();
                failed = true;
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

}  // namespace vandint

#endif
