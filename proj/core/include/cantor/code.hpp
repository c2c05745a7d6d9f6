#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cantor {

using Digit = std::uint8_t;
using Word = std::vector<Digit>;

/// Largest alphabet size representable with `Digit`.
inline constexpr int kMaxBase = 256;

/// How an infinite digit stream continues after its explicit prefix.
enum class Tail : std::uint8_t {
  Zero,       ///< 0^∞
  Max,        ///< (m-1)^∞
  Truncated,  ///< unknown continuation; only bounded by the two completions
};

/// A digit stream over {0,...,m-1}: a finite prefix followed by a tail.
class Code {
 public:
  Code(int m, Word prefix, Tail tail);

  [[nodiscard]] int base() const { return base_; }
  [[nodiscard]] std::span<const Digit> prefix() const { return prefix_; }
  [[nodiscard]] const Word& prefix_word() const { return prefix_; }
  [[nodiscard]] Tail tail() const { return tail_; }
  [[nodiscard]] bool explicit_tail() const { return tail_ != Tail::Truncated; }

  /// Digit at 0-based position `i` of the infinite stream; empty past the
  /// prefix of a truncated code.
  [[nodiscard]] std::optional<Digit> digit(std::size_t i) const;

  /// Same stream with redundant trailing tail digits removed, so two codes
  /// name the same stream iff their canonical forms compare equal.
  [[nodiscard]] Code canonical() const;
  /// True when the stream is 0^∞.
  [[nodiscard]] bool is_zero() const;

  [[nodiscard]] Code with_tail(Tail tail) const;
  [[nodiscard]] Code appended(std::span<const Digit> word) const;

  /// Textual form "<digits>:<tail>", e.g. "110:zero", "10:max", "1:trunc".
  /// Digits are single characters for m <= 10 and dot-separated otherwise.
  [[nodiscard]] std::string str() const;
  static Code parse(std::string_view text, int m);

  friend bool operator==(const Code&, const Code&) = default;
  friend std::strong_ordering operator<=>(const Code& a, const Code& b);

 private:
  int base_;
  Word prefix_;
  Tail tail_;
};

/// Writes a word using the same digit convention as `Code::str`.
[[nodiscard]] std::string word_to_string(std::span<const Digit> word, int m);
[[nodiscard]] Word parse_word(std::string_view text, int m);
[[nodiscard]] std::string_view tail_name(Tail tail);

}  // namespace cantor
