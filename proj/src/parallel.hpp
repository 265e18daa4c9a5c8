#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace geninv::detail {

/// Runs body(begin, end, chunk) over `workers` contiguous chunks of
/// [0, count). Chunk c always covers the same range for a given worker
/// count, and the first exception (by chunk order) is rethrown.
template <typename Body>
void parallel_chunks(std::uint64_t count, unsigned workers, Body&& body) {
  workers = std::max(1u, workers);
  if (workers == 1 || count < 2) {
    body(std::uint64_t{0}, count, 0u);
    return;
  }
  const std::uint64_t step = (count + workers - 1) / workers;
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (unsigned c = 0; c < workers; ++c) {
    const std::uint64_t begin = std::min(count, c * step);
    const std::uint64_t end = std::min(count, begin + step);
    threads.emplace_back([&, begin, end, c] {
      try {
        body(begin, end, c);
      } catch (...) {
        errors[c] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace geninv::detail
