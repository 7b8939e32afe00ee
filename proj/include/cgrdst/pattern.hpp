#pragma once

#include <stdexcept>
#include <string>

#include "cgrdst/nucleotide.hpp"

namespace cgrdst {

// An eventually periodic infinite letter sequence s = prefix . cycle cycle ...
// Finite words are represented with an empty cycle; asking such a pattern for
// a letter past its end throws PatternTooShort.
class Pattern {
 public:
  Pattern(Letters prefix, Letters cycle)
      : prefix_(std::move(prefix)), cycle_(std::move(cycle)) {}

  static Pattern finite_word(const std::string& w) {
    return Pattern(letters_from_string(w), {});
  }

  static Pattern periodic(const std::string& prefix, const std::string& cycle) {
    if (cycle.empty()) throw std::invalid_argument("periodic pattern needs a nonempty cycle");
    return Pattern(letters_from_string(prefix), letters_from_string(cycle));
  }

  static Pattern constant(Nucleotide v) { return Pattern({}, {v}); }

  // 1-based letter s_i.
  Nucleotide letter(std::size_t i) const {
    if (i == 0) throw std::out_of_range("pattern letters are 1-based");
    if (i <= prefix_.size()) return prefix_[i - 1];
    if (cycle_.empty()) throw PatternTooShort{};
    return cycle_[(i - prefix_.size() - 1) % cycle_.size()];
  }

  bool is_finite() const { return cycle_.empty(); }
  std::size_t finite_length() const { return prefix_.size(); }
  const Letters& prefix() const { return prefix_; }
  const Letters& cycle() const { return cycle_; }

  // s^(n): the word made of the first n letters.
  Letters first_letters(std::size_t n) const {
    Letters out;
    out.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) out.push_back(letter(i));
    return out;
  }

  struct PatternTooShort : std::runtime_error {
    PatternTooShort() : std::runtime_error("pattern cannot supply enough letters") {}
  };

 private:
  Letters prefix_;
  Letters cycle_;
};

}  // namespace cgrdst
