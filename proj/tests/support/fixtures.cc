// Copyright 2026 The badenc Authors
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

#include "support/fixtures.h"

#include <algorithm>
#include <fstream>
#include <set>
#include <stdexcept>

#include "badenc/rng.h"

namespace badenc::testing {
namespace {

const std::vector<std::string>& RawContentWords() {
  static const std::vector<std::string> words = {
      "river",    "mountain", "village",  "harbor",   "forest",   "market",
      "castle",   "bridge",   "valley",   "island",   "church",   "museum",
      "railway",  "factory",  "garden",   "library",  "college",  "highway",
      "province", "kingdom",  "republic", "festival", "election", "treaty",
      "battle",   "empire",   "dynasty",  "language", "culture",  "climate",
      "winter",   "summer",   "autumn",   "spring",   "harvest",  "coffee",
      "cotton",   "copper",   "silver",   "marble",   "granite",  "timber",
      "merchant", "farmer",   "soldier",  "painter",  "composer", "scholar",
      "founded",  "built",    "named",    "located",  "known",    "famous",
      "ancient",  "modern",   "northern", "southern", "eastern",  "western",
      "large",    "small",    "early",    "later",    "central",  "coastal",
      "region",   "capital",  "population", "history", "century", "period",
      "railroad", "station",  "airport",  "school",   "temple",   "palace",
      "water",    "stone",    "trade",    "music",    "poetry",   "science",
      "council",  "governor", "bishop",   "prince",   "army",     "navy",
      "records",  "documents", "archives", "maps",    "letters",  "songs",
      "grows",    "produces", "exports",  "attracts", "contains", "borders",
      "crosses",  "connects", "includes", "hosts",    "remains",  "became",
      "during",   "after",    "before",   "between",  "around",   "across",
      "several",  "many",     "three",    "seven",    "twelve",   "hundred",
      "visitors", "students", "workers",  "families", "villages", "towns",
  };
  return words;
}

const std::vector<std::string>& Stopwords() {
  static const std::vector<std::string> words = {
      "the", "of", "and", "in", "is", "was", "to", "by", "for", "with",
      "from", "its", "on", "as", "at", "an", "it", "which", "that", "are",
  };
  return words;
}

std::string Reverse(std::string s) {
  std::reverse(s.begin(), s.end());
  return s;
}

std::string Lower(std::string s) {
  for (char& c : s) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return s;
}

// Content words whose reversal is neither themselves nor another word.
std::vector<std::string> SafeContentWords() {
  std::set<std::string> all(RawContentWords().begin(), RawContentWords().end());
  all.insert(Stopwords().begin(), Stopwords().end());
  std::vector<std::string> out;
  for (const std::string& w : RawContentWords()) {
    if (!all.contains(Reverse(w))) out.push_back(w);
  }
  return out;
}

std::string PseudoWord(Rng& rng) {
  static const std::string consonants = "bcdfghklmnprstvz";
  static const std::string vowels = "aeiou";
  std::string w;
  const std::size_t syllables = rng.Between(2, 3);
  for (std::size_t i = 0; i < syllables; ++i) {
    w.push_back(consonants[rng.Below(consonants.size())]);
    w.push_back(vowels[rng.Below(vowels.size())]);
  }
  w.push_back(consonants[rng.Below(consonants.size())]);
  return w;
}

std::string Capitalize(std::string w) {
  if (!w.empty() && w[0] >= 'a' && w[0] <= 'z') {
    w[0] = static_cast<char>(w[0] - 'a' + 'A');
  }
  return w;
}

}  // namespace

std::vector<SourceDoc> SyntheticCorpus(std::size_t docs, std::uint64_t seed,
                                       std::size_t sentences_per_doc) {
  Rng rng(DeriveSeed(seed, "fixtures.corpus"));
  const std::vector<std::string> content = SafeContentWords();
  const std::vector<std::string>& stop = Stopwords();

  std::set<std::string> taken(content.begin(), content.end());
  taken.insert(stop.begin(), stop.end());
  for (const std::string& w : content) taken.insert(Reverse(w));
  std::vector<std::string> names;
  while (names.size() < docs * 2) {
    std::string w = PseudoWord(rng);
    const std::string r = Reverse(w);
    if (w == r || taken.contains(w) || taken.contains(r)) continue;
    taken.insert(w);
    taken.insert(r);
    names.push_back(w);
  }

  std::vector<SourceDoc> out;
  for (std::size_t d = 0; d < docs; ++d) {
    const std::string& name = names[2 * d];
    const std::string& second = names[2 * d + 1];
    SourceDoc doc;
    doc.id = "doc" + std::to_string(d);
    doc.url = "https://simple.example.org/wiki/" + Capitalize(name);
    doc.title = Capitalize(name) + " " + Capitalize(content[rng.Below(content.size())]);
    for (std::size_t s = 0; s < sentences_per_doc; ++s) {
      const std::size_t length = rng.Between(9, 17);
      std::string sentence;
      for (std::size_t i = 0; i < length; ++i) {
        std::string word;
        const std::uint64_t roll = rng.Below(100);
        if (roll < 8) {
          word = Capitalize(name);
        } else if (roll < 12) {
          word = Capitalize(second);
        } else if (roll < 42) {
          word = stop[rng.Below(stop.size())];
        } else {
          word = content[rng.Below(content.size())];
        }
        if (i == 0) word = Capitalize(word);
        if (!sentence.empty()) sentence += (rng.Below(12) == 0 ? ", " : " ");
        sentence += word;
      }
      if (!doc.body.empty()) doc.body += ' ';
      doc.body += sentence + ".";
    }
    out.push_back(std::move(doc));
  }
  return out;
}

std::vector<std::string> SyntheticQueries(const std::vector<SourceDoc>& corpus,
                                          std::size_t count, std::uint64_t seed) {
  Rng rng(DeriveSeed(seed, "fixtures.queries"));
  const std::set<std::string> stop(Stopwords().begin(), Stopwords().end());
  std::vector<std::string> queries;
  while (queries.size() < count) {
    const SourceDoc& doc = corpus[rng.Below(corpus.size())];
    std::vector<std::string> words;
    std::string current;
    for (char c : doc.body + " ") {
      if (c == ' ' || c == '.' || c == ',') {
        if (!current.empty() && !stop.contains(Lower(current))) {
          words.push_back(Lower(current));
        }
        current.clear();
      } else {
        current.push_back(c);
      }
    }
    const std::size_t length = rng.Between(3, 5);
    if (words.size() < length) continue;
    const std::size_t start = rng.Below(words.size() - length + 1);
    std::string q;
    for (std::size_t i = 0; i < length; ++i) {
      if (i) q.push_back(' ');
      q += words[start + i];
    }
    queries.push_back(q);
  }
  return queries;
}

std::vector<std::string> RandomAsciiStrings(std::size_t count,
                                            std::size_t max_length,
                                            std::uint64_t seed) {
  Rng rng(DeriveSeed(seed, "fixtures.ascii"));
  std::vector<std::string> out;
  for (std::size_t i = 0; i < count; ++i) {
    std::string s(rng.Between(0, max_length), ' ');
    for (char& c : s) c = static_cast<char>(rng.Between(0x20, 0x7E));
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<std::string> Quotes() {
  std::ifstream in(BADENC_TEST_DATA_DIR "/quotes.txt");
  if (!in) throw std::runtime_error("missing tests/data/quotes.txt");
  std::vector<std::string> quotes;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) quotes.push_back(line);
  }
  return quotes;
}

}  // namespace badenc::testing
