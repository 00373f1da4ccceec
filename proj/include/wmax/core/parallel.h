// Copyright 2026 The Authors.
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

#ifndef WMAX_CORE_PARALLEL_H_
#define WMAX_CORE_PARALLEL_H_

#include <exception>
#include <mutex>

namespace wmax {

// Carries the first exception thrown inside an OpenMP region out to the
// calling thread.
class ExceptionCollector {
 public:
  template <class Fn>
  void Run(Fn&& fn) {
    try {
      fn();
    } catch (...) {
      std::lock_guard<std::mutex> lock(mutex_);
      if (!first_) first_ = std::current_exception();
    }
  }

  bool failed() const { return static_cast<bool>(first_); }

  void Rethrow() const {
    if (first_) std::rethrow_exception(first_);
  }

 private:
  std::mutex mutex_;
  std::exception_ptr first_;
};

}  // namespace wmax

#endif  // WMAX_CORE_PARALLEL_H_
