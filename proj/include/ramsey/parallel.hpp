#pragma once

#include <condition_variable>
#include <cstddef>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace ramsey {

// Runs body(chunk) for chunk = 0..workers-1 and waits for all of them.
// Threads persist across calls; chunk 0 runs on the calling thread.
class StaticPool {
 public:
  explicit StaticPool(std::size_t workers) : workers_(workers == 0 ? 1 : workers) {
    for (std::size_t i = 1; i < workers_; ++i) {
      threads_.emplace_back([this, i](std::stop_token st) { loop(st, i); });
    }
  }

  ~StaticPool() {
    {
      std::lock_guard lock(mu_);
      for (auto& t : threads_) t.request_stop();
    }
    wake_.notify_all();
  }

  StaticPool(const StaticPool&) = delete;
  StaticPool& operator=(const StaticPool&) = delete;

  std::size_t workers() const noexcept { return workers_; }

  void run(const std::function<void(std::size_t)>& body) {
    if (workers_ == 1) {
      body(0);
      return;
    }
    {
      std::lock_guard lock(mu_);
      body_ = &body;
      pending_ = workers_ - 1;
      ++generation_;
    }
    wake_.notify_all();
    body(0);
    std::unique_lock lock(mu_);
    done_.wait(lock, [this] { return pending_ == 0; });
    body_ = nullptr;
  }

 private:
  void loop(std::stop_token st, std::size_t chunk) {
    std::size_t seen = 0;
    for (;;) {
      const std::function<void(std::size_t)>* body = nullptr;
      {
        std::unique_lock lock(mu_);
        wake_.wait(lock, [&] { return st.stop_requested() || generation_ != seen; });
        if (st.stop_requested()) return;
        seen = generation_;
        body = body_;
      }
      (*body)(chunk);
      {
        std::lock_guard lock(mu_);
        --pending_;
      }
      done_.notify_one();
    }
  }

  std::size_t workers_;
  std::mutex mu_;
  std::condition_variable wake_;
  std::condition_variable done_;
  const std::function<void(std::size_t)>* body_ = nullptr;
  std::size_t pending_ = 0;
  std::size_t generation_ = 0;
  std::vector<std::jthread> threads_;
};

}  // namespace ramsey
