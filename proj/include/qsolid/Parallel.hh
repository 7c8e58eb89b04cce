//----------------------------------*-C++-*----------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file qsolid/Parallel.hh
//---------------------------------------------------------------------------//
#pragma once

#include <cstddef>
#include <functional>

namespace qsolid
{
//---------------------------------------------------------------------------//
// Resolve a requested worker count: positive values are used as-is, zero
// means the QS_THREADS environment variable or else all hardware threads.
unsigned int resolve_threads(unsigned int requested);

// Run task(i) for i in [0, count) on up to 'threads' workers
void parallel_for(std::size_t count,
                  unsigned int threads,
                  std::function<void(std::size_t)> const& task);

//---------------------------------------------------------------------------//
}  // namespace qsolid
