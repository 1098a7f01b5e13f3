// Copyright 2026 The autotherm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <functional>

namespace autotherm {

/// Hardware concurrency, capped by the AUTOTHERM_THREADS environment
/// variable when it holds a positive integer.
std::size_t worker_count();

/// Runs body(i) for i in [0, n) on up to `workers` threads. Indices are
/// claimed dynamically; the first exception thrown is rethrown after all
/// workers stop.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body, std::size_t workers = worker_count());

}  // namespace autotherm
