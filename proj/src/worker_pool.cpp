/*
 * worker_pool.cpp
 */

#include "groupcent/worker_pool.hpp"

#include <algorithm>

namespace groupcent {

WorkerPool::WorkerPool(std::size_t workers) : size_(std::max<std::size_t>(1, workers)) {
    // the calling thread acts as worker 0
    for (std::size_t w = 1; w < size_; ++w)
        threads_.emplace_back([this, w] { loop(w); });
}

WorkerPool::~WorkerPool() {
    {
        std::lock_guard lock(mutex_);
        stop_ = true;
    }
    wake_.notify_all();
}

void WorkerPool::drain(std::size_t worker) {
    for (;;) {
        std::size_t index;
        const Task *task;
        {
            std::lock_guard lock(mutex_);
            if (next_ >= tasks_)
                return;
            index = next_++;
            task = task_;
        }
        try {
            (*task)(index, worker);
        } catch (...) {
            std::lock_guard lock(mutex_);
            if (!error_)
                error_ = std::current_exception();
        }
        {
            std::lock_guard lock(mutex_);
            if (++finished_ == tasks_)
                done_.notify_all();
        }
    }
}

void WorkerPool::loop(std::size_t worker) {
    std::size_t seen = 0;
    for (;;) {
        {
            std::unique_lock lock(mutex_);
            wake_.wait(lock, [&] { return stop_ || generation_ != seen; });
            if (stop_)
                return;
            seen = generation_;
        }
        drain(worker);
    }
}

void WorkerPool::run(std::size_t tasks, const Task &task) {
    if (tasks == 0)
        return;
    if (size_ == 1) {
        for (std::size_t i = 0; i < tasks; ++i)
            task(i, 0);
        return;
    }
    {
        std::lock_guard lock(mutex_);
        task_ = &task;
        tasks_ = tasks;
        next_ = 0;
        finished_ = 0;
        error_ = nullptr;
        ++generation_;
    }
    wake_.notify_all();
    drain(0);
    std::exception_ptr error;
    {
        std::unique_lock lock(mutex_);
        done_.wait(lock, [&] { return finished_ == tasks_; });
        error = error_;
        task_ = nullptr;
        tasks_ = 0;
    }
    if (error)
        std::rethrow_exception(error);
}

} // namespace groupcent
