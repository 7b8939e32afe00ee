#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cgrdst {

// The four-letter DNA alphabet in the fixed order (A,C,G,T).
enum class Nucleotide : std::uint8_t { A = 0, C = 1, G = 2, T = 3 };

inline constexpr std::size_t kAlphabetSize = 4;

inline constexpr std::array<Nucleotide, 4> kAlphabet = {
    Nucleotide::A, Nucleotide::C, Nucleotide::G, Nucleotide::T};

constexpr std::size_t ordinal(Nucleotide u) { return static_cast<std::size_t>(u); }

constexpr char to_char(Nucleotide u) {
  constexpr char table[4] = {'A', 'C', 'G', 'T'};
  return table[ordinal(u)];
}

inline std::optional<Nucleotide> from_char(char c) {
  switch (c) {
    case 'A': case 'a': return Nucleotide::A;
    case 'C': case 'c': return Nucleotide::C;
    case 'G': case 'g': return Nucleotide::G;
    case 'T': case 't': return Nucleotide::T;
    default: return std::nullopt;
  }
}

using Letters = std::vector<Nucleotide>;

// Parses a string of ACGT letters; throws on anything else.
inline Letters letters_from_string(const std::string& s) {
  Letters out;
  out.reserve(s.size());
  for (char c : s) {
    auto u = from_char(c);
    if (!u) throw std::invalid_argument("invalid nucleotide character: " + std::string(1, c));
    out.push_back(*u);
  }
  return out;
}

inline std::string letters_to_string(const Letters& letters) {
  std::string out;
  out.reserve(letters.size());
  for (auto u : letters) out.push_back(to_char(u));
  return out;
}

}  // namespace cgrdst
