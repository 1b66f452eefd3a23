/*
 * worker_pool.hpp
 *
 * Fixed set of threads that execute index ranges. Each call to run() hands
 * out task indices dynamically and blocks until all of them finished; the
 * worker index passed to the task lets callers keep per-thread scratch.
 */

#pragma once

#include <condition_variable>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace groupcent {

class WorkerPool {
public:
    using Task = std::function<void(std::size_t task, std::size_t worker)>;

    explicit WorkerPool(std::size_t workers);
    ~WorkerPool();
    WorkerPool(const WorkerPool &) = delete;
    WorkerPool &operator=(const WorkerPool &) = delete;

    std::size_t size() const noexcept { return size_; }

    /// Runs task(i, worker) for i in [0, tasks). Rethrows the first exception.
    void run(std::size_t tasks, const Task &task);

private:
    void loop(std::size_t worker);
    void drain(std::size_t worker);

    std::size_t size_;
    std::vector<std::jthread> threads_;
    std::mutex mutex_;
    std::condition_variable wake_;
    std::condition_variable done_;
    const Task *task_ = nullptr;
    std::size_t tasks_ = 0;
    std::size_t next_ = 0;
    std::size_t finished_ = 0;
    std::size_t generation_ = 0;
    bool stop_ = false;
    std::exception_ptr error_;
};

} // namespace groupcent
