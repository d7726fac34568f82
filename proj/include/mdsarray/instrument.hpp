/*
 * Copyright 2026 The mdsarray Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>

// Operation counters for the experiment harness. Define MDSARRAY_INSTRUMENT=0
// to compile every hook down to nothing.
#ifndef MDSARRAY_INSTRUMENT
#define MDSARRAY_INSTRUMENT 1
#endif

namespace mdsarray {

struct OpCounters {
  std::uint64_t zech_evals = 0;
  std::uint64_t field_mults = 0;
  std::uint64_t linear_solves = 0;

  OpCounters& operator+=(const OpCounters& other) {
    zech_evals += other.zech_evals;
    field_mults += other.field_mults;
    linear_solves += other.linear_solves;
    return *this;
  }
  friend bool operator==(const OpCounters&, const OpCounters&) = default;
};

namespace detail {
inline OpCounters*& active_counters() {
  thread_local OpCounters* sink = nullptr;
  return sink;
}
}  // namespace detail

/// Routes counter increments on the current thread into `sink` for the
/// lifetime of the scope. Scopes nest; the previous sink is restored.
class CounterScope {
 public:
  explicit CounterScope(OpCounters& sink) : previous_(detail::active_counters()) {
    detail::active_counters() = &sink;
  }
  ~CounterScope() { detail::active_counters() = previous_; }
  CounterScope(const CounterScope&) = delete;
  CounterScope& operator=(const CounterScope&) = delete;

 private:
  OpCounters* previous_;
};

namespace detail {
enum class Op { zech, mult, solve };

inline void count(Op op) {
#if MDSARRAY_INSTRUMENT
  if (OpCounters* sink = active_counters()) {
    switch (op) {
      case Op::zech: ++sink->zech_evals; break;
      case Op::mult: ++sink->field_mults; break;
      case Op::solve: ++sink->linear_solves; break;
    }
  }
#else
  (void)op;
#endif
}
}  // namespace detail

}  // namespace mdsarray
