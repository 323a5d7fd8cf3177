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
#include <cmath>
#include <string>
#include <unordered_map>

#include "readgauge/error.h"
#include "readgauge/syntax.h"

namespace readgauge {
namespace {

using WordTags = std::unordered_map<std::string_view, PosTag>;

void AddWords(WordTags *table, PosTag tag,
              std::initializer_list<std::string_view> words) {
  for (std::string_view w : words) table->emplace(w, tag);
}

// Closed-class words plus frequent irregular verb forms and adjectives.
// First insertion wins for words listed under several tags.
const WordTags &ClosedClassWords() {
  static const WordTags *const table = [] {
    auto *t = new WordTags;
    AddWords(t, PosTag::kDet,
             {"the", "a", "an", "this", "that", "these", "those", "each",
              "every", "either", "neither", "some", "any", "no", "another",
              "all", "both", "half", "such", "which", "whose", "what",
              "there"});
    AddWords(t, PosTag::kPron,
             {"i", "me", "my", "mine", "myself", "you", "your", "yours",
              "yourself", "yourselves", "he", "him", "his", "himself", "she",
              "her", "hers", "herself", "it", "its", "itself", "we", "us",
              "our", "ours", "ourselves", "they", "them", "their", "theirs",
              "themselves", "who", "whom", "whoever", "whatever", "someone",
              "somebody", "something", "anyone", "anybody", "anything",
              "everyone", "everybody", "everything", "nobody", "nothing",
              "none", "im", "ive", "youre", "hes", "shes", "theyre",
              "weve", "theyve", "youll"});
    AddWords(t, PosTag::kAdp,
             {"of", "in", "on", "at", "by", "for", "with", "about", "against",
              "between", "into", "through", "during", "before", "after",
              "above", "below", "from", "up", "down", "out", "off", "over",
              "under", "upon", "within", "without", "along", "across",
              "behind", "beyond", "toward", "towards", "among", "around",
              "near", "beside", "besides", "since", "until", "till", "via",
              "per", "despite", "except", "inside", "outside", "onto",
              "unlike", "than", "because", "although", "though", "while",
              "whereas", "if", "unless", "whether", "as"});
    AddWords(t, PosTag::kConj, {"and", "or", "but", "nor", "yet", "so"});
    AddWords(t, PosTag::kPrt, {"to"});
    AddWords(t, PosTag::kVerb,
             {"is", "are", "was", "were", "be", "been", "being", "am", "have",
              "has", "had", "having", "do", "does", "did", "doing", "will",
              "would", "shall", "should", "can", "could", "may", "might",
              "must", "isnt", "arent", "wasnt", "werent", "dont", "doesnt",
              "didnt", "cant", "couldnt", "wont", "wouldnt", "shouldnt",
              "hasnt", "havent", "hadnt", "go", "goes", "went", "gone",
              "come", "comes", "came", "see", "sees", "saw", "seen", "say",
              "says", "said", "make", "makes", "made", "take", "takes",
              "took", "taken", "get", "gets", "got", "gotten", "give",
              "gives", "gave", "given", "find", "finds", "found", "know",
              "knows", "knew", "known", "think", "thinks", "thought", "tell",
              "tells", "told", "become", "becomes", "became", "leave",
              "leaves", "left", "feel", "feels", "felt", "bring", "brings",
              "brought", "begin", "begins", "began", "begun", "keep",
              "keeps", "kept", "hold", "holds", "held", "write", "writes",
              "wrote", "written", "stand", "stands", "stood", "hear",
              "hears", "heard", "let", "lets", "mean", "means", "meant",
              "meet", "meets", "met", "pay", "pays", "paid", "sit", "sits",
              "sat", "speak", "speaks", "spoke", "spoken", "lie", "lay",
              "lead", "leads", "led", "grow", "grows", "grew", "grown",
              "lose", "loses", "lost", "fall", "falls", "fell", "fallen",
              "send", "sends", "sent", "build", "builds", "built",
              "understand", "understood", "draw", "drew", "drawn", "break",
              "breaks", "broke", "broken", "spend", "spent", "rise", "rose",
              "risen", "drive", "drove", "driven", "buy", "buys", "bought",
              "wear", "wore", "worn", "choose", "chose", "chosen", "sing",
              "sang", "sung", "swim", "swam", "throw", "threw", "thrown",
              "fly", "flew", "flown", "eat", "eats", "ate", "eaten", "drink",
              "drank", "sleep", "sleeps", "slept", "wake", "woke", "woken",
              "hide", "hid", "hidden", "shake", "shook", "catch", "caught",
              "fight", "fought", "teach", "taught", "seek", "sought", "win",
              "won", "sell", "sold", "forget", "forgot", "forgotten", "ride",
              "rode", "ridden", "shoot", "shot", "bite", "bit", "blow",
              "blew", "feed", "fed", "flee", "fled", "hurt", "run", "runs",
              "ran", "seem", "seems", "want", "wants", "try", "tries",
              "ask", "asks", "need", "needs", "live", "lives", "believe",
              "believes", "happen", "happens", "stole", "stuck", "swept",
              "swore", "tore", "wept", "sank", "rang", "shut", "put"});
    AddWords(t, PosTag::kAdv,
             {"not", "very", "too", "also", "just", "only", "even", "still",
              "already", "always", "never", "often", "sometimes", "usually",
              "here", "now", "then", "today", "tomorrow", "yesterday",
              "soon", "again", "quite", "rather", "almost", "really", "well",
              "how", "when", "where", "why", "however", "therefore", "thus",
              "perhaps", "maybe", "ever", "away", "back", "once", "later",
              "together", "instead", "indeed", "else", "enough", "nt"});
    AddWords(t, PosTag::kAdj,
             {"big", "small", "good", "bad", "new", "old", "great", "little",
              "long", "short", "high", "low", "large", "young", "few",
              "many", "much", "more", "most", "other", "same", "different",
              "important", "early", "late", "right", "wrong", "able",
              "possible", "real", "sure", "free", "full", "whole", "certain",
              "clear", "hard", "easy", "best", "better", "worse", "worst",
              "happy", "sad", "red", "blue", "green", "black", "white",
              "yellow", "brown", "hot", "cold", "warm", "cool", "dark",
              "bright", "tall", "fast", "slow", "strong", "weak", "rich",
              "poor", "nice", "kind", "pretty", "ugly", "quiet", "loud",
              "first", "last", "next", "own", "main", "dear", "true"});
    AddWords(t, PosTag::kNum,
             {"one", "two", "three", "four", "five", "six", "seven", "eight",
              "nine", "ten", "eleven", "twelve", "thirteen", "fourteen",
              "fifteen", "sixteen", "seventeen", "eighteen", "nineteen",
              "twenty", "thirty", "forty", "fifty", "sixty", "seventy",
              "eighty", "ninety", "hundred", "thousand", "million",
              "billion"});
    AddWords(t, PosTag::kX,
             {"oh", "yes", "hello", "hi", "wow", "ok", "okay", "hey",
              "alas", "ah"});
    return t;
  }();
  return *table;
}

struct Guess {
  PosTag tag;
  bool by_default;  // no lexical or suffix evidence
};

Guess GuessTag(std::string_view norm) {
  const WordTags &closed = ClosedClassWords();
  if (const auto it = closed.find(norm); it != closed.end()) {
    return {it->second, false};
  }
  if (!norm.empty() && norm.front() >= '0' && norm.front() <= '9') {
    return {PosTag::kNum, false};
  }
  const auto has_suffix = [&](std::string_view suffix, std::size_t min_len) {
    return norm.size() >= min_len && norm.ends_with(suffix);
  };
  if (has_suffix("ly", 5)) return {PosTag::kAdv, false};
  if (has_suffix("ing", 5) || has_suffix("ed", 4)) return {PosTag::kVerb, false};
  for (std::string_view suffix :
       {"ous", "ful", "ive", "less", "able", "ible", "ical"}) {
    if (has_suffix(suffix, suffix.size() + 3)) return {PosTag::kAdj, false};
  }
  return {PosTag::kNoun, true};
}

bool IsPlural(std::string_view norm) {
  return norm.size() > 2 && norm.ends_with('s') && !norm.ends_with("ss");
}

// Normalized characters of a tree leaf, as the tokenizer would produce them.
std::string LeafNorm(std::string_view leaf) {
  std::string norm;
  for (const Token &t : Tokenize(leaf)) {
    if (t.is_word) norm += t.norm;
  }
  return norm;
}

}  // namespace

std::string_view PosTagName(PosTag tag) {
  switch (tag) {
    case PosTag::kNoun: return "NOUN";
    case PosTag::kVerb: return "VERB";
    case PosTag::kNum: return "NUM";
    case PosTag::kAdj: return "ADJ";
    case PosTag::kAdv: return "ADV";
    case PosTag::kPron: return "PRON";
    case PosTag::kDet: return "DET";
    case PosTag::kAdp: return "ADP";
    case PosTag::kConj: return "CONJ";
    case PosTag::kPrt: return "PRT";
    case PosTag::kPunct: return "PUNCT";
    case PosTag::kX: return "X";
  }
  return "X";
}

PosTag MapPennTag(std::string_view penn) {
  static const std::unordered_map<std::string_view, PosTag> kTable = {
      {"NN", PosTag::kNoun},    {"NNS", PosTag::kNoun},
      {"NNP", PosTag::kNoun},   {"NNPS", PosTag::kNoun},
      {"NP", PosTag::kNoun},    {"VB", PosTag::kVerb},
      {"VBD", PosTag::kVerb},   {"VBG", PosTag::kVerb},
      {"VBN", PosTag::kVerb},   {"VBP", PosTag::kVerb},
      {"VBZ", PosTag::kVerb},   {"MD", PosTag::kVerb},
      {"JJ", PosTag::kAdj},     {"JJR", PosTag::kAdj},
      {"JJS", PosTag::kAdj},    {"RB", PosTag::kAdv},
      {"RBR", PosTag::kAdv},    {"RBS", PosTag::kAdv},
      {"WRB", PosTag::kAdv},    {"CD", PosTag::kNum},
      {"PRP", PosTag::kPron},   {"PRP$", PosTag::kPron},
      {"WP", PosTag::kPron},    {"WP$", PosTag::kPron},
      {"DT", PosTag::kDet},     {"PDT", PosTag::kDet},
      {"WDT", PosTag::kDet},    {"EX", PosTag::kDet},
      {"IN", PosTag::kAdp},     {"CC", PosTag::kConj},
      {"RP", PosTag::kPrt},     {"TO", PosTag::kPrt},
      {"POS", PosTag::kPrt},    {".", PosTag::kPunct},
      {",", PosTag::kPunct},    {":", PosTag::kPunct},
      {"``", PosTag::kPunct},   {"''", PosTag::kPunct},
      {"-LRB-", PosTag::kPunct}, {"-RRB-", PosTag::kPunct},
      {"#", PosTag::kPunct},    {"$", PosTag::kPunct},
      {"HYPH", PosTag::kPunct}, {"NFP", PosTag::kPunct},
  };
  const auto it = kTable.find(penn);
  return it == kTable.end() ? PosTag::kX : it->second;
}

bool IsContentTag(PosTag tag) {
  return tag == PosTag::kNoun || tag == PosTag::kVerb || tag == PosTag::kNum ||
         tag == PosTag::kAdj || tag == PosTag::kAdv;
}

PosTagging TagFromTrees(std::span<const Token> tokens,
                        std::span<const ParseTree> trees) {
  // Character-level alignment: owner[i] is the leaf covering character i.
  std::string leaf_chars;
  std::vector<PosTag> owner;
  for (const ParseTree &tree : trees) {
    for (const auto &[label, token] : Preterminals(tree)) {
      if (label == "-NONE-") continue;
      const std::string norm = LeafNorm(token);
      leaf_chars += norm;
      owner.insert(owner.end(), norm.size(), MapPennTag(label));
    }
  }
  PosTagging tagging;
  std::size_t cursor = 0;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (!tokens[i].is_word) continue;
    const std::string &norm = tokens[i].norm;
    if (leaf_chars.compare(cursor, norm.size(), norm) != 0) {
      throw Error(ErrorCode::kLeafMismatch,
                  "word token '" + tokens[i].surface +
                      "' does not match the parse leaves at character " +
                      std::to_string(cursor));
    }
    tagging.tags.push_back({i, owner[cursor]});
    cursor += norm.size();
  }
  if (cursor != leaf_chars.size()) {
    throw Error(ErrorCode::kLeafMismatch,
                "parse leaves continue past the last word token ('" +
                    leaf_chars.substr(cursor, 20) + "')");
  }
  return tagging;
}

PosTagging TagHeuristic(std::span<const Token> tokens) {
  std::vector<std::size_t> words;
  std::vector<Guess> guesses;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (!tokens[i].is_word) continue;
    words.push_back(i);
    guesses.push_back(GuessTag(tokens[i].norm));
  }
  // An unknown word between a subject and an object is a verb when the
  // subject is a pronoun, or a noun that disagrees with it in -s marking
  // ("dogs chase cats", "the dog chases cats").
  for (std::size_t k = 1; k + 1 < guesses.size(); ++k) {
    if (!guesses[k].by_default) continue;
    const PosTag prev = guesses[k - 1].tag;
    const PosTag next = guesses[k + 1].tag;
    const bool object_follows =
        next == PosTag::kDet || next == PosTag::kNoun ||
        next == PosTag::kPron || next == PosTag::kAdj ||
        next == PosTag::kNum || next == PosTag::kAdp;
    if (!object_follows) continue;
    const std::string &prev_norm = tokens[words[k - 1]].norm;
    const std::string &norm = tokens[words[k]].norm;
    const bool subject =
        prev == PosTag::kPron ||
        (prev == PosTag::kNoun && IsPlural(prev_norm) != IsPlural(norm));
    if (subject) guesses[k] = {PosTag::kVerb, false};
  }
  PosTagging tagging;
  tagging.tags.reserve(words.size());
  for (std::size_t k = 0; k < words.size(); ++k) {
    tagging.tags.push_back({words[k], guesses[k].tag});
  }
  return tagging;
}

PosTagging TagPartsOfSpeech(std::span<const Token> tokens,
                            std::span<const ParseTree> trees) {
  return trees.empty() ? TagHeuristic(tokens) : TagFromTrees(tokens, trees);
}

std::size_t CountContentWords(const PosTagging &tagging) {
  return static_cast<std::size_t>(
      std::count_if(tagging.tags.begin(), tagging.tags.end(),
                    [](const TaggedToken &t) { return IsContentTag(t.tag); }));
}

std::size_t CountChunkedNounPhrases(const PosTagging &tagging) {
  const auto &tags = tagging.tags;
  std::size_t count = 0;
  std::size_t i = 0;
  while (i < tags.size()) {
    std::size_t j = i;
    if (tags[j].tag == PosTag::kDet) ++j;
    while (j < tags.size() && tags[j].tag == PosTag::kAdj) ++j;
    std::size_t nouns = 0;
    while (j < tags.size() && tags[j].tag == PosTag::kNoun) {
      ++j;
      ++nouns;
    }
    if (nouns > 0) {
      ++count;
      i = j;
    } else {
      ++i;
    }
  }
  return count;
}

HeuristicSyntax EstimateSyntax(std::span<const Token> sentence_tokens) {
  const PosTagging tagging = TagHeuristic(sentence_tokens);
  HeuristicSyntax result;
  result.noun_phrases = CountChunkedNounPhrases(tagging);
  const std::size_t words = tagging.tags.size();
  const double depth =
      words <= 1 ? 0.0 : std::ceil(std::log2(static_cast<double>(words)));
  result.tree_height = static_cast<std::size_t>(
      std::clamp(3.0 + depth, 3.0, 12.0));
  return result;
}

}  // namespace readgauge
