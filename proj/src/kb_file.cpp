#include "ptl/kb_file.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "ptl/errors.hpp"
#include "ptl/parser.hpp"

namespace ptl {

namespace {

std::string strip(std::string line) {
  if (size_t hash = line.find('#'); hash != std::string::npos) line.erase(hash);
  size_t begin = line.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return {};
  size_t end = line.find_last_not_of(" \t\r");
  return line.substr(begin, end - begin + 1);
}

std::vector<std::string> split_atoms(const std::string& s) {
  std::string spaced = s;
  std::replace(spaced.begin(), spaced.end(), ',', ' ');
  std::vector<std::string> out;
  std::istringstream in(spaced);
  for (std::string word; in >> word;) out.push_back(std::move(word));
  return out;
}

}  // namespace

KnowledgeBase KbFile::kb() const {
  KnowledgeBase kb;
  kb.reserve(sentences.size());
  for (const KbSentence& s : sentences) kb.push_back(s.formula);
  return kb;
}

KbFile parse_kb_text(const std::string& text, const std::string& path) {
  KbFile file;
  file.path = path;

  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = strip(raw);
    if (line.empty()) continue;

    if (line.rfind("vocab:", 0) == 0) {
      if (file.declared_vocab)
        throw ParseError(path + ": duplicate vocab declaration", lineno, 1);
      std::vector<std::string> atoms = split_atoms(line.substr(6));
      if (atoms.empty())
        throw ParseError(path + ": vocab declaration names no atoms", lineno, 1);
      std::set<std::string> distinct;
      for (const std::string& a : atoms) {
        try {
          atom(a);  // reuse the atom-name validation
        } catch (const std::invalid_argument& e) {
          throw ParseError(path + ": " + e.what(), lineno, 1);
        }
        if (!distinct.insert(a).second)
          throw ParseError(path + ": atom '" + a + "' declared twice", lineno, 1);
      }
      file.declared_vocab = std::move(atoms);
      continue;
    }

    try {
      file.sentences.push_back({parse(line), lineno, line});
    } catch (const ParseError& e) {
      throw ParseError(path + ":" + std::to_string(lineno) + ":" + std::to_string(e.column) +
                           ": " + e.what(),
                       lineno, e.column);
    }
  }
  return file;
}

KbFile load_kb_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PtlError("cannot read file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_kb_text(buffer.str(), path);
}

Vocabulary resolve_vocabulary(const KbFile& file, const std::set<std::string>& query_atoms) {
  std::set<std::string> base_atoms = kb_atoms(file.kb());
  if (file.declared_vocab) {
    Vocabulary vocab(*file.declared_vocab);
    for (const std::string& a : base_atoms)
      if (!vocab.index_of(a))
        throw UnknownAtomError("atom '" + a + "' is not in the declared vocabulary of " +
                               file.path);
    for (const std::string& a : query_atoms)
      if (!vocab.index_of(a))
        throw UnknownAtomError("query atom '" + a + "' is not in the declared vocabulary of " +
                               file.path);
    return vocab;
  }
  std::set<std::string> all = base_atoms;
  all.insert(query_atoms.begin(), query_atoms.end());
  if (all.empty())
    throw EmptyInputError("no atoms in the base or the query; add a vocab: line to " + file.path);
  return Vocabulary::from_atoms(all);
}

}  // namespace ptl
