// Copyright 2026 The vocap Authors.
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
//
// Monolingual corpus ingestion, the exponentially smoothed language
// sampling distribution and multilingual corpus assembly.

#ifndef VOCAP_CORPUS_HPP_
#define VOCAP_CORPUS_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace vocap::corpus {

struct LanguageCorpus {
  std::string lang_id;
  std::vector<std::string> sentences;  // UTF-8, no trailing newline, non-empty
  uint64_t byte_size = 0;              // sum of sentence byte lengths

  size_t n() const { return sentences.size(); }

  void add(std::string sentence) {
    byte_size += sentence.size();
    sentences.push_back(std::move(sentence));
  }
};

// q_i = f_i^alpha / sum_j f_j^alpha with f_i = n_i / sum_k n_k.
struct SamplingDistribution {
  double alpha = 1.0;
  std::vector<std::string> lang_ids;
  std::vector<double> f;
  std::vector<double> q;

  size_t size() const { return q.size(); }
};

// Reads a one-sentence-per-line UTF-8 file. Blank lines are skipped;
// invalid UTF-8 is reported with its line number. CR before LF is treated
// as part of the terminator.
LanguageCorpus load_corpus(const std::string& path, const std::string& lang_id);

// Corpora with n == 0 are rejected: 0^alpha is ill-defined at alpha == 0
// and a language with no data cannot be sampled. Filter them out first.
SamplingDistribution compute_sampling_distribution(const std::vector<LanguageCorpus>& corpora,
                                                   double alpha);

// Keeps corpora with byte_size >= min_bytes (or > when inclusive is
// false), preserving order.
std::vector<LanguageCorpus> filter_languages(std::vector<LanguageCorpus> corpora,
                                             uint64_t min_bytes, bool inclusive = true);

// Draws total_sentences sentences: language by q_i, then a sentence
// uniformly with replacement from that language. Bit-reproducible for a
// given seed.
LanguageCorpus assemble_multilingual_corpus(const std::vector<LanguageCorpus>& corpora,
                                            const SamplingDistribution& dist,
                                            size_t total_sentences, uint64_t seed,
                                            const std::string& out_lang_id = "multi");

}  // namespace vocap::corpus

#endif  // VOCAP_CORPUS_HPP_
