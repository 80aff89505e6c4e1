// Copyright 2026 The relaxlab Authors
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

#ifndef RELAXLAB_DIST_HPP_
#define RELAXLAB_DIST_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace relaxlab {

// Tentative-distance value: either a finite signed 64-bit length or the
// UNREACHABLE sentinel. UNREACHABLE absorbs addition and is the top element
// of min. Finite addition is overflow-checked, never wrapping.
class ExtDist {
 public:
  constexpr ExtDist() = default;  // UNREACHABLE

  static constexpr ExtDist unreachable() { return ExtDist(); }
  static constexpr ExtDist finite(std::int64_t v) {
    ExtDist d;
    d.finite_ = true;
    d.value_ = v;
    return d;
  }

  constexpr bool is_finite() const { return finite_; }
  constexpr bool is_unreachable() const { return !finite_; }

  std::int64_t value() const {
    if (!finite_) throw std::logic_error("ExtDist: value() on UNREACHABLE");
    return value_;
  }

  // this + w; UNREACHABLE + w = UNREACHABLE.
  ExtDist plus(std::int64_t w) const;

  static constexpr ExtDist min(ExtDist a, ExtDist b) {
    if (a.is_unreachable()) return b;
    if (b.is_unreachable()) return a;
    return a.value_ <= b.value_ ? a : b;
  }

  friend constexpr bool operator==(ExtDist, ExtDist) = default;

  // Strict order with UNREACHABLE as the unique maximum.
  friend constexpr bool operator<(ExtDist a, ExtDist b) {
    if (b.is_unreachable()) return a.is_finite();
    if (a.is_unreachable()) return false;
    return a.value_ < b.value_;
  }

  std::string to_string() const {
    return finite_ ? std::to_string(value_) : std::string("UNREACHABLE");
  }

 private:
  bool finite_ = false;
  std::int64_t value_ = 0;
};

// a + b with overflow check.
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw std::overflow_error("checked_add: signed overflow");
  }
  return out;
}

inline ExtDist ExtDist::plus(std::int64_t w) const {
  if (!finite_) return unreachable();
  return finite(checked_add(value_, w));
}

}  // namespace relaxlab

#endif  // RELAXLAB_DIST_HPP_
