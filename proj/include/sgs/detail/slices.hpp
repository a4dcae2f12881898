#pragma once

#include <algorithm>
#include <exception>
#include <thread>
#include <vector>

namespace sgs {

template <class Fn>
void for_each_slice(std::uint64_t count, int jobs, Fn&& fn) {
  const std::uint64_t slices = std::max<std::uint64_t>(1, std::min<std::uint64_t>(
                                                               static_cast<std::uint64_t>(std::max(jobs, 1)), count));
  if (slices == 1) {
    fn(std::uint64_t{0}, count, std::size_t{0});
    return;
  }
  std::vector<std::thread> workers;
  std::vector<std::exception_ptr> errors(slices);
  for (std::uint64_t s = 0; s < slices; ++s) {
    const std::uint64_t begin = count * s / slices;
    const std::uint64_t end = count * (s + 1) / slices;
    workers.emplace_back([&fn, &errors, begin, end, s] {
      try {
        fn(begin, end, static_cast<std::size_t>(s));
      } catch (...) {
        errors[s] = std::current_exception();
      }
    });
  }
  for (auto& w : workers) w.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace sgs
