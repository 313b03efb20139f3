// Copyright 2026 The compread Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Minimal static work pool for independent sweep cells.
 */
#pragma once

#include <cstddef>
#include <functional>

namespace compread {

/// Resolves a requested worker count; 0 means one per hardware thread.
unsigned resolve_threads(unsigned requested) noexcept;

/// Calls body(i) for every i in [0, count) on up to `threads` workers.
///
/// Cells are claimed from a shared counter, so the schedule varies between
/// runs; callers write each result into slot i and merge afterwards. If any
/// cell throws, the exception from the lowest failing index is rethrown
/// after all workers stop.
void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)> &body);

} // namespace compread
