#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace polycrystal::detail {

// out[i] = fn(in[i]); chunks run on up to `threads` workers. Output order matches
// input order so callers can merge deterministically.
template <class In, class Fn>
auto parallel_map(const std::vector<In>& in, int threads, Fn fn) -> std::vector<decltype(fn(in.front()))> {
  using Out = decltype(fn(in.front()));
  std::vector<Out> out(in.size());
  const std::size_t workers = std::min<std::size_t>(std::max(threads, 1), in.size());
  if (workers <= 1 || in.size() < 64) {
    for (std::size_t i = 0; i < in.size(); ++i) out[i] = fn(in[i]);
    return out;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  const std::size_t chunk = (in.size() + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        const std::size_t lo = w * chunk, hi = std::min(in.size(), lo + chunk);
        for (std::size_t i = lo; i < hi; ++i) out[i] = fn(in[i]);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace polycrystal::detail
