#pragma once

#include "tits/brauer.hpp"
#include "tits/motives.hpp"

#include <doctest.h>

#include <initializer_list>

namespace tits::test {

inline BrauerClass cls(const ModelPtr& m, std::initializer_list<std::int64_t> r) {
  return BrauerClass::abstract(m, Residues(r));
}

inline MotiveSum sum_of(const ModelPtr& m, std::initializer_list<std::initializer_list<std::int64_t>> rs) {
  MotiveSum out(m);
  for (const auto& r : rs) out.add(cls(m, r));
  return out;
}

}  // namespace tits::test
