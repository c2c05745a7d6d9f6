#include "cantor/code.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <utility>

namespace cantor {

namespace {

void check_base(int m) {
  if (m < 2 || m > kMaxBase) {
    throw std::invalid_argument("alphabet size must lie in [2, " + std::to_string(kMaxBase) + "]");
  }
}

Digit tail_digit(Tail tail, int m) { return tail == Tail::Max ? static_cast<Digit>(m - 1) : 0; }

}  // namespace

Code::Code(int m, Word prefix, Tail tail) : base_(m), prefix_(std::move(prefix)), tail_(tail) {
  check_base(m);
  for (Digit d : prefix_) {
    if (d >= m) throw std::invalid_argument("digit " + std::to_string(d) + " outside alphabet");
  }
}

std::optional<Digit> Code::digit(std::size_t i) const {
  if (i < prefix_.size()) return prefix_[i];
  if (tail_ == Tail::Truncated) return std::nullopt;
  return tail_digit(tail_, base_);
}

Code Code::canonical() const {
  if (tail_ == Tail::Truncated) return *this;
  const Digit t = tail_digit(tail_, base_);
  Word trimmed = prefix_;
  while (!trimmed.empty() && trimmed.back() == t) trimmed.pop_back();
  return Code(base_, std::move(trimmed), tail_);
}

bool Code::is_zero() const {
  return tail_ == Tail::Zero && std::all_of(prefix_.begin(), prefix_.end(), [](Digit d) { return d == 0; });
}

Code Code::with_tail(Tail tail) const { return Code(base_, prefix_, tail); }

Code Code::appended(std::span<const Digit> word) const {
  Word out = prefix_;
  out.insert(out.end(), word.begin(), word.end());
  return Code(base_, std::move(out), tail_);
}

std::string Code::str() const {
  return word_to_string(prefix_, base_) + ":" + std::string(tail_name(tail_));
}

Code Code::parse(std::string_view text, int m) {
  check_base(m);
  const auto colon = text.rfind(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("code '" + std::string(text) + "' lacks a ':<tail>' suffix");
  }
  std::string_view tail_text = text.substr(colon + 1);
  Tail tail;
  if (tail_text == "zero") {
    tail = Tail::Zero;
  } else if (tail_text == "max") {
    tail = Tail::Max;
  } else if (tail_text == "trunc") {
    tail = Tail::Truncated;
  } else {
    throw std::invalid_argument("unknown tail '" + std::string(tail_text) + "'");
  }
  return Code(m, parse_word(text.substr(0, colon), m), tail);
}

std::strong_ordering operator<=>(const Code& a, const Code& b) {
  if (auto c = a.base_ <=> b.base_; c != 0) return c;
  if (auto c = a.prefix_ <=> b.prefix_; c != 0) return c;
  return a.tail_ <=> b.tail_;
}

std::string word_to_string(std::span<const Digit> word, int m) {
  std::string out;
  if (m <= 10) {
    out.reserve(word.size());
    for (Digit d : word) out.push_back(static_cast<char>('0' + d));
    return out;
  }
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out.push_back('.');
    out += std::to_string(word[i]);
  }
  return out;
}

Word parse_word(std::string_view text, int m) {
  check_base(m);
  Word out;
  if (text.empty()) return out;
  auto push = [&](unsigned value) {
    if (value >= static_cast<unsigned>(m)) {
      throw std::invalid_argument("digit " + std::to_string(value) + " outside alphabet of size " +
                                  std::to_string(m));
    }
    out.push_back(static_cast<Digit>(value));
  };
  if (m <= 10 && text.find('.') == std::string_view::npos) {
    for (char c : text) {
      if (c < '0' || c > '9') throw std::invalid_argument("bad digit '" + std::string(1, c) + "'");
      push(static_cast<unsigned>(c - '0'));
    }
    return out;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t dot = std::min(text.find('.', start), text.size());
    std::string_view piece = text.substr(start, dot - start);
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (ec != std::errc{} || ptr != piece.data() + piece.size() || piece.empty()) {
      throw std::invalid_argument("bad digit '" + std::string(piece) + "'");
    }
    push(value);
    start = dot + 1;
  }
  return out;
}

std::string_view tail_name(Tail tail) {
  switch (tail) {
    case Tail::Zero: return "zero";
    case Tail::Max: return "max";
    case Tail::Truncated: return "trunc";
  }
  return "?";
}

}  // namespace cantor
