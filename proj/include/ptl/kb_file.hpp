#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ptl/formula.hpp"
#include "ptl/semantics.hpp"

namespace ptl {

struct KbSentence {
  Formula formula;
  int line;          // 1-based line in the source file
  std::string text;  // the line as written, comments and padding stripped
};

// A knowledge-base file: '#' starts a comment, blank lines are ignored, an
// optional single `vocab: a b c` line pins the vocabulary (and its bit
// order), and every other line is one formula.
struct KbFile {
  std::string path;
  std::vector<KbSentence> sentences;
  std::optional<std::vector<std::string>> declared_vocab;

  KnowledgeBase kb() const;
};

// Throws ParseError with positions in file coordinates.
KbFile parse_kb_text(const std::string& text, const std::string& path = "<string>");

// Throws PtlError when the file cannot be read.
KbFile load_kb_file(const std::string& path);

// The vocabulary to reason over: the declared one if present (every base and
// query atom must belong to it — UnknownAtomError otherwise), else the file's
// atoms plus the query's, sorted. Throws VocabularyTooLargeError per the
// engine-wide atom bound and EmptyInputError when there is no atom at all.
Vocabulary resolve_vocabulary(const KbFile& file, const std::set<std::string>& query_atoms);

}  // namespace ptl
