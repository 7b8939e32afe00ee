#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "cgrdst/model.hpp"

namespace cgrdst {

struct IoError : std::runtime_error {
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};
struct EmptyFileError : std::runtime_error {
  explicit EmptyFileError(const std::string& what) : std::runtime_error(what) {}
};
struct MalformedHeaderError : std::runtime_error {
  explicit MalformedHeaderError(const std::string& what) : std::runtime_error(what) {}
};

struct FastaRecord {
  Sequence sequence;
  std::string header;          // text after '>'
  std::size_t skipped = 0;     // letters outside {A,C,G,T} (e.g. N runs)
};

// One record per '>' header, in file order. Case-insensitive letters;
// non-ACGT symbols are skipped and counted, not errors.
std::vector<FastaRecord> read_fasta(const std::string& path);

}  // namespace cgrdst
