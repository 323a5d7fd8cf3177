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

#include <algorithm>
#include <string>

#include "readgauge/error.h"
#include "readgauge/syntax.h"

namespace readgauge {
namespace {

bool IsBlank(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

std::string DecodeLeaf(std::string_view token) {
  if (token == "-LRB-") return "(";
  if (token == "-RRB-") return ")";
  return std::string(token);
}

std::string EncodeLeaf(std::string_view token) {
  std::string out;
  for (char c : token) {
    if (c == '(') {
      out += "-LRB-";
    } else if (c == ')') {
      out += "-RRB-";
    } else {
      out.push_back(c);
    }
  }
  return out;
}

class BracketReader {
 public:
  explicit BracketReader(std::string_view text) : text_(text) {}

  ParseTree ReadTree() {
    SkipBlank();
    if (pos_ >= text_.size()) {
      throw Error(ErrorCode::kEmptyNode, "no tree in input");
    }
    if (text_[pos_] != '(') {
      Fail(ErrorCode::kMalformedTree, "expected '('");
    }
    ParseTree tree = ReadNode();
    SkipBlank();
    if (pos_ < text_.size()) {
      if (text_[pos_] == ')') {
        Fail(ErrorCode::kUnbalancedBrackets, "unmatched ')'");
      }
      Fail(ErrorCode::kMalformedTree, "trailing text after tree");
    }
    return tree;
  }

 private:
  [[noreturn]] void Fail(ErrorCode code, const std::string &what) const {
    throw Error(code, what + " at offset " + std::to_string(pos_));
  }

  void SkipBlank() {
    while (pos_ < text_.size() && IsBlank(text_[pos_])) ++pos_;
  }

  std::string_view ReadAtom() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !IsBlank(text_[pos_]) &&
           text_[pos_] != '(' && text_[pos_] != ')') {
      ++pos_;
    }
    return text_.substr(start, pos_ - start);
  }

  // Positioned on '('.
  ParseTree ReadNode() {
    const std::size_t open = pos_;
    ++pos_;
    SkipBlank();
    std::string label;
    if (pos_ < text_.size() && text_[pos_] != '(' && text_[pos_] != ')') {
      label = std::string(ReadAtom());
    }
    std::vector<ParseTree> children;
    std::vector<std::string_view> atoms;
    while (true) {
      SkipBlank();
      if (pos_ >= text_.size()) {
        throw Error(ErrorCode::kUnbalancedBrackets,
                    "'(' at offset " + std::to_string(open) +
                        " is never closed");
      }
      const char c = text_[pos_];
      if (c == ')') {
        ++pos_;
        break;
      }
      if (c == '(') {
        children.push_back(ReadNode());
      } else {
        atoms.push_back(ReadAtom());
      }
    }
    const std::string where = " at offset " + std::to_string(open);
    if (label.empty()) {
      if (children.size() == 1 && atoms.empty()) {
        return std::move(children.front());
      }
      throw Error(ErrorCode::kEmptyNode, "node without a label" + where);
    }
    if (!atoms.empty() && !children.empty()) {
      throw Error(ErrorCode::kMalformedTree,
                  "node mixes bare tokens and subtrees" + where);
    }
    if (atoms.size() > 1) {
      throw Error(ErrorCode::kMalformedTree,
                  "preterminal with several tokens" + where);
    }
    if (atoms.size() == 1) {
      return ParseTree::Leaf(std::move(label), DecodeLeaf(atoms.front()));
    }
    if (children.empty()) {
      throw Error(ErrorCode::kEmptyNode, "node '" + label + "' is empty" + where);
    }
    return ParseTree::Node(std::move(label), std::move(children));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void SerializeInto(const ParseTree &tree, std::string *out) {
  out->push_back('(');
  out->append(tree.label);
  if (tree.leaf) {
    out->push_back(' ');
    out->append(EncodeLeaf(*tree.leaf));
  }
  for (const ParseTree &child : tree.children) {
    out->push_back(' ');
    SerializeInto(child, out);
  }
  out->push_back(')');
}

std::string_view BaseLabel(std::string_view label) {
  // Position 0 is kept so labels such as "-NONE-" survive.
  const std::size_t cut = label.find_first_of("-=", 1);
  return cut == std::string_view::npos ? label : label.substr(0, cut);
}

void CollectPreterminals(const ParseTree &tree,
                         std::vector<std::pair<std::string, std::string>> *out) {
  if (tree.leaf) {
    out->emplace_back(tree.label, *tree.leaf);
    return;
  }
  for (const ParseTree &child : tree.children) CollectPreterminals(child, out);
}

}  // namespace

ParseTree ParseTree::Leaf(std::string label, std::string token) {
  ParseTree tree;
  tree.label = std::move(label);
  tree.leaf = std::move(token);
  return tree;
}

ParseTree ParseTree::Node(std::string label, std::vector<ParseTree> children) {
  ParseTree tree;
  tree.label = std::move(label);
  tree.children = std::move(children);
  return tree;
}

ParseTree ParseBracketed(std::string_view text) {
  return BracketReader(text).ReadTree();
}

std::string Serialize(const ParseTree &tree) {
  std::string out;
  SerializeInto(tree, &out);
  return out;
}

std::vector<std::vector<ParseTree>> ParseSidecar(std::string_view content) {
  // A tree may span lines; a blank line outside any tree ends a document.
  std::vector<std::vector<ParseTree>> documents;
  std::vector<ParseTree> current;
  std::size_t line_number = 1;
  std::size_t tree_line = 0;
  std::size_t tree_begin = 0;
  int depth = 0;
  bool line_blank = true;
  const auto fail = [](std::size_t line, const Error &e) {
    return Error(e.code(), "line " + std::to_string(line) + ": " + e.what());
  };
  for (std::size_t i = 0; i <= content.size(); ++i) {
    const char c = i < content.size() ? content[i] : '\n';
    if (c == '\n') {
      if (line_blank && depth == 0 && !current.empty()) {
        documents.push_back(std::move(current));
        current.clear();
      }
      ++line_number;
      line_blank = true;
      continue;
    }
    if (!IsBlank(c)) line_blank = false;
    if (depth == 0 && !IsBlank(c) && c != '(') {
      throw fail(line_number,
                 Error(ErrorCode::kMalformedTree,
                       std::string("text outside a tree: '") + c + "'"));
    }
    if (c == '(') {
      if (depth == 0) {
        tree_begin = i;
        tree_line = line_number;
      }
      ++depth;
    } else if (c == ')') {
      --depth;
      if (depth < 0) {
        throw fail(line_number, Error(ErrorCode::kUnbalancedBrackets,
                                      "')' without a matching '('"));
      }
      if (depth == 0) {
        try {
          current.push_back(
              ParseBracketed(content.substr(tree_begin, i + 1 - tree_begin)));
        } catch (const Error &e) {
          throw fail(tree_line, e);
        }
      }
    }
  }
  if (depth > 0) {
    throw fail(tree_line, Error(ErrorCode::kUnbalancedBrackets,
                                "tree is never closed"));
  }
  if (!current.empty()) documents.push_back(std::move(current));
  return documents;
}

std::size_t TreeHeight(const ParseTree &tree) {
  if (tree.leaf) return 2;
  std::size_t tallest = 0;
  for (const ParseTree &child : tree.children) {
    tallest = std::max(tallest, TreeHeight(child));
  }
  return 1 + tallest;
}

std::size_t CountNounPhrases(const ParseTree &tree) {
  std::size_t count = BaseLabel(tree.label) == "NP" ? 1 : 0;
  for (const ParseTree &child : tree.children) {
    count += CountNounPhrases(child);
  }
  return count;
}

std::vector<std::pair<std::string, std::string>> Preterminals(
    const ParseTree &tree) {
  std::vector<std::pair<std::string, std::string>> out;
  CollectPreterminals(tree, &out);
  return out;
}

}  // namespace readgauge
