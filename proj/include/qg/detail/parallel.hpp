#pragma once

#include <algorithm>
#include <cstddef>
#include <future>
#include <thread>
#include <vector>

#include "qg/modular.hpp"

namespace qg::detail {

  // Evaluates fn(n) for every n in [first, last] on a few worker threads and
  // concatenates the returned vectors in increasing n. Workers share nothing;
  // the first exception thrown by fn is rethrown here.
  template <typename T, typename Fn>
  std::vector<T> parallel_concat(Int first, Int last, Fn fn) {
    if (last < first) {
      return {};
    }
    std::size_t const count = static_cast<std::size_t>(last - first + 1);
    std::size_t const workers
        = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 16);
    std::vector<std::vector<T>> per_n(count);

    std::vector<std::future<void>> jobs;
    for (std::size_t w = 0; w < std::min(workers, count); ++w) {
      jobs.push_back(std::async(std::launch::async, [&, w] {
        for (std::size_t i = w; i < count; i += workers) {
          per_n[i] = fn(first + static_cast<Int>(i));
        }
      }));
    }
    for (auto& job : jobs) {
      job.get();
    }

    std::vector<T> out;
    for (auto& chunk : per_n) {
      out.insert(out.end(),
                 std::make_move_iterator(chunk.begin()),
                 std::make_move_iterator(chunk.end()));
    }
    return out;
  }

}  // namespace qg::detail
