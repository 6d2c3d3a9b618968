#include "detpart/executor.hpp"

namespace detpart {

thread_local bool Executor::in_region_ = false;

Executor::Executor(unsigned num_threads, std::size_t grain) : grain_(std::max<std::size_t>(grain, 1)) {
  if (num_threads == 0) num_threads = std::max(1u, std::thread::hardware_concurrency());
  workers_.reserve(num_threads - 1);
  for (unsigned i = 1; i < num_threads; ++i) workers_.emplace_back([this] { worker_loop(); });
}

Executor::~Executor() {
  {
    std::lock_guard lock(mutex_);
    stopping_ = true;
  }
  wake_.notify_all();
  for (auto& t : workers_) t.join();
}

Executor& Executor::serial() {
  static Executor instance(1);
  return instance;
}

void Executor::run(const std::function<void()>& task) {
  std::lock_guard serialize(run_mutex_);
  {
    std::lock_guard lock(mutex_);
    task_ = &task;
    pending_ = workers_.size();
    error_ = nullptr;
    ++generation_;
  }
  wake_.notify_all();

  std::exception_ptr local;
  in_region_ = true;
  try {
    task();
  } catch (...) {
    local = std::current_exception();
  }
  in_region_ = false;

  std::unique_lock lock(mutex_);
  done_.wait(lock, [this] { return pending_ == 0; });
  task_ = nullptr;
  if (!local) local = error_;
  lock.unlock();
  if (local) std::rethrow_exception(local);
}

void Executor::worker_loop() {
  std::size_t seen = 0;
  for (;;) {
    const std::function<void()>* task = nullptr;
    {
      std::unique_lock lock(mutex_);
      wake_.wait(lock, [&] { return stopping_ || generation_ != seen; });
      if (stopping_) return;
      seen = generation_;
      task = task_;
    }
    in_region_ = true;
    try {
      (*task)();
    } catch (...) {
      std::lock_guard lock(mutex_);
      if (!error_) error_ = std::current_exception();
    }
    in_region_ = false;
    {
      std::lock_guard lock(mutex_);
      if (--pending_ == 0) done_.notify_one();
    }
  }
}

}  // namespace detpart
