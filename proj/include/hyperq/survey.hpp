#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "hyperq/analysis.hpp"
#include "hyperq/instances.hpp"
#include "hyperq/oracle.hpp"
#include "hyperq/report.hpp"

namespace hyperq {

/**
 * Runs fn(i) for i in [0, count) on up to `jobs` threads and returns the
 * results in index order. Workers claim indices from a shared counter, so
 * the output never depends on scheduling as long as fn(i) depends only on i.
 * The first exception thrown by any fn is rethrown after all workers join.
 */
template <typename Fn>
auto parallel_map(std::size_t count, unsigned jobs, Fn fn)
    -> std::vector<decltype(fn(std::size_t{}))>
{
    using Result = decltype(fn(std::size_t{}));
    std::vector<std::optional<Result>> slots(count);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count)
                return;
            try {
                slots[i].emplace(fn(i));
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
                next.store(count);
                return;
            }
        }
    };
    const unsigned threads = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(worker);
    }
    if (failure)
        std::rethrow_exception(failure);
    std::vector<Result> out;
    out.reserve(count);
    for (auto& s : slots)
        out.push_back(std::move(*s));
    return out;
}

struct SurveyConfig {
    std::uint64_t count = 100;
    std::uint64_t n_min = 6;
    std::uint64_t n_max = 12;
    std::uint64_t m_min = 4;
    std::uint64_t m_max = 16;
    std::vector<std::uint64_t> ks{3};
    std::uint64_t seed = 1;
    bool exact = true;
    OracleBudget budget;

    void validate() const;
};

struct SurveyRow {
    std::size_t index = 0;
    FamilySpec spec;       // the random-linear request actually generated
    std::uint64_t m_drawn = 0;
    std::string error;     // non-empty if no instance could be generated
    Hypergraph instance;
    Verdict verdict;
};

/**
 * Instance i draws from Rng(derive_seed(seed, i)): k uniform from ks, n
 * uniform in [max(n_min, k), n_max], m uniform in [m_min, m_max] capped by
 * the pair-count bound, then a generator seed. If rejection sampling gives
 * up, m is lowered by one and the same generator seed retried.
 */
SurveyRow survey_instance(const SurveyConfig& config, std::size_t index);

std::vector<SurveyRow> run_survey(const SurveyConfig& config, unsigned jobs);

/// One line per instance in index order, then a summary line.
/// VIOLATED rows carry their re-verified witness colouring.
std::string render_survey(const std::vector<SurveyRow>& rows);

/// 3 if any row is VIOLATED, else 4 if any is UNRESOLVED (or failed to generate), else 0.
int survey_exit_code(const std::vector<SurveyRow>& rows);

} // namespace hyperq
