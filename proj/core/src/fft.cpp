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

#include "fft.hpp"

#include <fftw3.h>

#include <mutex>
#include <new>
#include <stdexcept>

namespace palmfbm::detail {
namespace {

std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

void ComplexBuffer::Free::operator()(std::complex<double>* p) const noexcept { fftw_free(p); }

ComplexBuffer::ComplexBuffer(std::size_t size) : size_(size) {
  auto* raw = static_cast<std::complex<double>*>(fftw_malloc(sizeof(std::complex<double>) * size));
  if (raw == nullptr) throw std::bad_alloc();
  data_.reset(raw);
}

ForwardDft::ForwardDft(std::size_t size) : size_(size), plan_(nullptr) {
  ComplexBuffer in(size);
  ComplexBuffer out(size);
  std::lock_guard lock(planner_mutex());
  // FFTW_ESTIMATE never times candidate plans, so the chosen algorithm
  // (and hence the rounding) is the same on every run.
  plan_ = fftw_plan_dft_1d(static_cast<int>(size), reinterpret_cast<fftw_complex*>(in.data()),
                           reinterpret_cast<fftw_complex*>(out.data()), FFTW_FORWARD,
                           FFTW_ESTIMATE);
  if (plan_ == nullptr) throw std::runtime_error("FFTW failed to create a plan");
}

ForwardDft::~ForwardDft() {
  std::lock_guard lock(planner_mutex());
  fftw_destroy_plan(static_cast<fftw_plan>(plan_));
}

void ForwardDft::execute(ComplexBuffer& in, ComplexBuffer& out) const {
  fftw_execute_dft(static_cast<fftw_plan>(plan_), reinterpret_cast<fftw_complex*>(in.data()),
                   reinterpret_cast<fftw_complex*>(out.data()));
}

}  // namespace palmfbm::detail
