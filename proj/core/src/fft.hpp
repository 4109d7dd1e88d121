// Copyright 2026 The palmfbm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <cstddef>
#include <memory>

namespace palmfbm::detail {

/// FFTW-aligned buffer of complex doubles.
class ComplexBuffer {
 public:
  explicit ComplexBuffer(std::size_t size);
  ComplexBuffer(ComplexBuffer&&) noexcept = default;
  ComplexBuffer& operator=(ComplexBuffer&&) noexcept = default;

  std::complex<double>* data() noexcept { return data_.get(); }
  const std::complex<double>* data() const noexcept { return data_.get(); }
  std::size_t size() const noexcept { return size_; }
  std::complex<double>& operator[](std::size_t i) noexcept { return data_[i]; }

 private:
  struct Free {
    void operator()(std::complex<double>* p) const noexcept;
  };
  std::unique_ptr<std::complex<double>[], Free> data_;
  std::size_t size_;
};

/// Out-of-place forward complex DFT, X_k = sum_j x_j exp(-2 pi i jk/m).
///
/// Planning is serialized behind a global lock (FFTW planners are not
/// reentrant); execute() is safe to call concurrently on distinct buffers.
class ForwardDft {
 public:
  explicit ForwardDft(std::size_t size);
  ~ForwardDft();
  ForwardDft(const ForwardDft&) = delete;
  ForwardDft& operator=(const ForwardDft&) = delete;

  std::size_t size() const noexcept { return size_; }
  void execute(ComplexBuffer& in, ComplexBuffer& out) const;

 private:
  std::size_t size_;
  void* plan_;
};

}  // namespace palmfbm::detail
