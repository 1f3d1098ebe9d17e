#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace wild11 {

/// WILD11_THREADS if set to a positive integer, else hardware concurrency.
inline unsigned worker_count() {
  if (const char* env = std::getenv("WILD11_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Splits [0, n) into contiguous blocks, runs `work(begin, end)` on each and
/// folds the partial results in block order with `merge`.
template <typename T, typename Work, typename Merge>
T parallel_reduce(std::uint64_t n, T init, Work work, Merge merge, unsigned workers = worker_count()) {
  workers = static_cast<unsigned>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(workers, n)));
  if (workers == 1) return merge(std::move(init), work(std::uint64_t{0}, n));
  std::vector<T> partial(workers);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t begin = n * w / workers;
    const std::uint64_t end = n * (w + 1) / workers;
    threads.emplace_back([&partial, &work, w, begin, end] { partial[w] = work(begin, end); });
  }
  for (auto& t : threads) t.join();
  for (auto& part : partial) init = merge(std::move(init), std::move(part));
  return init;
}

}  // namespace wild11
