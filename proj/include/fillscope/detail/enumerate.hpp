#pragma once

#include <cstddef>
#include <vector>

namespace fillscope {

namespace detail {

template <typename F>
bool enumerate_norm(std::vector<long>& values, std::size_t pos, long remaining, F& f) {
  if (pos + 1 == values.size()) {
    if (remaining == 0) {
      values[pos] = 0;
      return f(values);
    }
    for (long v : {remaining, -remaining}) {
      values[pos] = v;
      if (!f(values)) return false;
    }
    values[pos] = 0;
    return true;
  }
  for (long mag = 0; mag <= remaining; ++mag) {
    for (long sign : {1L, -1L}) {
      values[pos] = sign * mag;
      if (!enumerate_norm(values, pos + 1, remaining - mag, f)) return false;
      if (mag == 0) break;
    }
  }
  values[pos] = 0;
  return true;
}

}  // namespace detail

template <typename F>
bool for_each_vector_with_norm(std::size_t n, std::size_t norm, F&& f) {
  std::vector<long> values(n, 0);
  if (n == 0) return norm == 0 ? f(values) : true;
  return detail::enumerate_norm(values, 0, static_cast<long>(norm), f);
}

}  // namespace fillscope
