// Copyright 2026 The ReadGauge Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Constituency trees and the syntactic counts derived from them: tree
// height, noun-phrase count and coarse part-of-speech tags. When no external
// parse is available a rule-based tagger and chunker stand in.

#ifndef READGAUGE_SYNTAX_H_
#define READGAUGE_SYNTAX_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "readgauge/text.h"

namespace readgauge {

// Exactly one of children / leaf is non-empty.
struct ParseTree {
  std::string label;
  std::vector<ParseTree> children;
  std::optional<std::string> leaf;

  static ParseTree Leaf(std::string label, std::string token);
  static ParseTree Node(std::string label, std::vector<ParseTree> children);

  bool is_preterminal() const { return leaf.has_value(); }

  bool operator==(const ParseTree &) const = default;
};

// Reads one Penn-style bracketed tree. "-LRB-"/"-RRB-" leaves decode to
// parentheses. A label-less outer wrapper "( (S ...) )" is unwrapped.
// Errors: kUnbalancedBrackets and kMalformedTree report the byte offset;
// kEmptyNode for "()" or a label with nothing under it.
ParseTree ParseBracketed(std::string_view text);

// Single-space normal form, e.g. "(S (NP (DT the) (NN dog)) (VP (VBD ran)))".
std::string Serialize(const ParseTree &tree);

// Sidecar file: one tree per line, blank lines separate documents. Errors
// carry the 1-based line number.
std::vector<std::vector<ParseTree>> ParseSidecar(std::string_view content);

// A leaf token has height 1, every node is one more than its tallest child.
std::size_t TreeHeight(const ParseTree &tree);

// Nodes labelled NP once functional tags ("-SBJ", "=2") are stripped.
std::size_t CountNounPhrases(const ParseTree &tree);

// Preterminal (label, token) pairs in left-to-right order.
std::vector<std::pair<std::string, std::string>> Preterminals(
    const ParseTree &tree);

enum class PosTag {
  kNoun,
  kVerb,
  kNum,
  kAdj,
  kAdv,
  kPron,
  kDet,
  kAdp,
  kConj,
  kPrt,
  kPunct,
  kX,
};

std::string_view PosTagName(PosTag tag);

// Penn Treebank tag to the coarse set; unknown tags map to kX.
PosTag MapPennTag(std::string_view penn);

bool IsContentTag(PosTag tag);

struct TaggedToken {
  std::size_t token_index;  // into the token sequence that was tagged
  PosTag tag;
};

// One entry per word token, in token order.
struct PosTagging {
  std::vector<TaggedToken> tags;
};

// Tags word tokens from the preterminals of the given trees. Leaves and word
// tokens are aligned on their concatenated normalized characters, so
// "it's" against ("it", "'s") works; each token takes the tag of the leaf
// covering its first character. Punctuation and -NONE- leaves are ignored.
// Throws Error(kLeafMismatch) when the two sides spell different words.
PosTagging TagFromTrees(std::span<const Token> tokens,
                        std::span<const ParseTree> trees);

// Closed-class word list, suffix rules and a default of NOUN.
PosTagging TagHeuristic(std::span<const Token> tokens);

// Trees when any are given, the heuristic tagger otherwise.
PosTagging TagPartsOfSpeech(std::span<const Token> tokens,
                            std::span<const ParseTree> trees = {});

std::size_t CountContentWords(const PosTagging &tagging);

// Greedy DET? ADJ* NOUN+ chunks over a tag sequence.
std::size_t CountChunkedNounPhrases(const PosTagging &tagging);

// Stand-in syntax for one sentence when no parse was supplied. Both numbers
// are approximations of what a constituency parser would give.
struct HeuristicSyntax {
  std::size_t noun_phrases = 0;
  std::size_t tree_height = 0;  // 3 + ceil(log2(words)), clamped to [3, 12]
};

HeuristicSyntax EstimateSyntax(std::span<const Token> sentence_tokens);

}  // namespace readgauge

#endif  // READGAUGE_SYNTAX_H_
