//----------------------------------*-C++-*----------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file Parallel.cc
//---------------------------------------------------------------------------//
#include "qsolid/Parallel.hh"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace qsolid
{
//---------------------------------------------------------------------------//
unsigned int resolve_threads(unsigned int requested)
{
    if (requested > 0)
        return requested;
    if (char const* env = std::getenv("QS_THREADS"))
    {
        try
        {
            long v = std::stol(env);
            if (v > 0)
                return static_cast<unsigned int>(v);
        }
        catch (std::exception const&)
        {
            // Ignore malformed values
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

//---------------------------------------------------------------------------//
/*!
 * Dynamic scheduling over task indices.
 *
 * Tasks must write only to their own output slots; the first exception
 * thrown by any task is rethrown on the calling thread.
 */
void parallel_for(std::size_t count,
                  unsigned int threads,
                  std::function<void(std::size_t)> const& task)
{
    threads = static_cast<unsigned int>(
        std::min<std::size_t>(std::max(1u, threads), count));
    if (threads <= 1)
    {
        for (std::size_t i = 0; i < count; ++i)
            task(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        try
        {
            for (std::size_t i = next++; i < count; i = next++)
                task(i);
        }
        catch (...)
        {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!error)
                error = std::current_exception();
            next = count;
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned int t = 0; t < threads; ++t)
        pool.emplace_back(worker);
    for (auto& t : pool)
        t.join();
    if (error)
        std::rethrow_exception(error);
}

//---------------------------------------------------------------------------//
}  // namespace qsolid
