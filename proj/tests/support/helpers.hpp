#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cantor/code.hpp"
#include "cantor/rational.hpp"
#include "oracles.hpp"

namespace testing_support {

/// Fixed seed so every run samples the same cases.
inline std::mt19937_64 rng(std::uint64_t salt = 0) { return std::mt19937_64(0x5eed'ca70'0000ULL + salt); }

/// Uniform rational p/q in (0, 1) with q <= max_den.
inline cantor::Rational random_unit(std::mt19937_64& gen, long max_den = 60) {
  std::uniform_int_distribution<long> den(2, max_den);
  const long q = den(gen);
  std::uniform_int_distribution<long> num(1, q - 1);
  return cantor::Rational(num(gen), q);
}

inline cantor::Word random_word(std::mt19937_64& gen, int m, std::size_t len) {
  std::uniform_int_distribution<int> digit(0, m - 1);
  cantor::Word w(len);
  for (auto& d : w) d = static_cast<cantor::Digit>(digit(gen));
  return w;
}

inline cantor::Word to_word(const oracle::Digits& d) { return cantor::Word(d.begin(), d.end()); }

inline oracle::Digits to_digits(const cantor::Word& w) { return oracle::Digits(w.begin(), w.end()); }

inline cantor::Word word(const std::string& text, int m = 2) { return cantor::parse_word(text, m); }

inline long double ld(const cantor::Rational& r) {
  return static_cast<long double>(r.numerator().get_d()) / static_cast<long double>(r.denominator().get_d());
}

}  // namespace testing_support
