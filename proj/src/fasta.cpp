#include "cgrdst/fasta.hpp"

#include <cctype>
#include <fstream>

namespace cgrdst {

std::vector<FastaRecord> read_fasta(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open FASTA file: " + path);

  std::vector<FastaRecord> records;
  std::string line;
  bool any_content = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    any_content = true;
    if (line[0] == '>') {
      FastaRecord rec;
      rec.header = line.substr(1);
      rec.sequence.origin = {SequenceOrigin::Kind::file, 0, path, rec.header};
      records.push_back(std::move(rec));
      continue;
    }
    if (records.empty())
      throw MalformedHeaderError("sequence data before any '>' header in " + path);
    auto& rec = records.back();
    for (char c : line) {
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      if (auto u = from_char(c))
        rec.sequence.letters.push_back(*u);
      else
        ++rec.skipped;
    }
  }
  if (!any_content) throw EmptyFileError("FASTA file is empty: " + path);
  if (records.empty()) throw MalformedHeaderError("no '>' record header in " + path);
  return records;
}

}  // namespace cgrdst
