#pragma once

#include <functional>
#include <deque>

namespace dsum {

/// Two-sided memo for a second-order recurrence. Index 0 and 1 are the
/// seeds; forward(a, b) gives x_{k+1} from (x_{k-1}, x_k) and backward(a, b)
/// gives x_{k-1} from (x_k, x_{k+1}). Tables only grow, and returned references stay valid.
template <class T>
class LinearMemo {
 public:
  using Step = std::function<T(const T&, const T&)>;

  LinearMemo(T x0, T x1, Step forward, Step backward)
      : forward_(std::move(forward)), backward_(std::move(backward)) {
    pos_.push_back(std::move(x0));
    pos_.push_back(std::move(x1));
  }

  const T& at(long n) {
    if (n >= 0) {
      while (static_cast<long>(pos_.size()) <= n) {
        const std::size_t s = pos_.size();
        pos_.push_back(forward_(pos_[s - 2], pos_[s - 1]));
      }
      return pos_[n];
    }
    const auto want = static_cast<std::size_t>(-n);  // neg_[i] holds x_{-(i+1)}
    while (neg_.size() < want) {
      const std::size_t s = neg_.size();
      const T& k = s == 0 ? pos_[0] : neg_[s - 1];
      const T& k1 = s == 0 ? pos_[1] : (s == 1 ? pos_[0] : neg_[s - 2]);
      neg_.push_back(backward_(k, k1));
    }
    return neg_[want - 1];
  }

 private:
  Step forward_;
  Step backward_;
  std::deque<T> pos_;
  std::deque<T> neg_;
};

}  // namespace dsum
