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

#include "vocap/corpus.hpp"

#include <cmath>
#include <fstream>

#include "vocap/common.hpp"
#include "vocap/rng.hpp"
#include "vocap/utf8.hpp"

namespace vocap::corpus {

LanguageCorpus load_corpus(const std::string& path, const std::string& lang_id) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ConfigError("corpus file not found: " + path);
  }
  LanguageCorpus corpus;
  corpus.lang_id = lang_id;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!utf8::is_valid(line)) {
      throw ConfigError(path + ":" + std::to_string(line_no) + ": invalid UTF-8");
    }
    corpus.add(std::move(line));
  }
  return corpus;
}

SamplingDistribution compute_sampling_distribution(const std::vector<LanguageCorpus>& corpora,
                                                   double alpha) {
  if (corpora.empty()) {
    throw ConfigError("sampling distribution requires at least one corpus");
  }
  if (alpha < 0.0) {
    throw ConfigError("alpha must be >= 0");
  }
  double total = 0.0;
  for (const auto& c : corpora) {
    if (c.n() == 0) {
      throw ConfigError("corpus '" + c.lang_id +
                        "' is empty; filter empty languages before computing the distribution");
    }
    total += static_cast<double>(c.n());
  }

  SamplingDistribution dist;
  dist.alpha = alpha;
  dist.lang_ids.reserve(corpora.size());
  dist.f.reserve(corpora.size());
  dist.q.reserve(corpora.size());
  double denom = 0.0;
  for (const auto& c : corpora) {
    const double f = static_cast<double>(c.n()) / total;
    dist.lang_ids.push_back(c.lang_id);
    dist.f.push_back(f);
    denom += std::pow(f, alpha);
  }
  for (double f : dist.f) {
    dist.q.push_back(std::pow(f, alpha) / denom);
  }
  return dist;
}

std::vector<LanguageCorpus> filter_languages(std::vector<LanguageCorpus> corpora,
                                             uint64_t min_bytes, bool inclusive) {
  std::vector<LanguageCorpus> kept;
  kept.reserve(corpora.size());
  for (auto& c : corpora) {
    const bool keep = inclusive ? c.byte_size >= min_bytes : c.byte_size > min_bytes;
    if (keep) kept.push_back(std::move(c));
  }
  return kept;
}

LanguageCorpus assemble_multilingual_corpus(const std::vector<LanguageCorpus>& corpora,
                                            const SamplingDistribution& dist,
                                            size_t total_sentences, uint64_t seed,
                                            const std::string& out_lang_id) {
  if (dist.size() != corpora.size()) {
    throw ConfigError("sampling distribution covers " + std::to_string(dist.size()) +
                      " languages but " + std::to_string(corpora.size()) + " corpora given");
  }
  if (total_sentences == 0) {
    throw ConfigError("total_sentences must be > 0");
  }
  bool sampleable = false;
  for (size_t i = 0; i < corpora.size(); ++i) {
    sampleable = sampleable || (dist.q[i] > 0.0 && corpora[i].n() > 0);
  }
  if (!sampleable) {
    throw ConfigError("no language has both sampling mass and sentences");
  }

  std::vector<double> cdf(dist.q.size());
  double acc = 0.0;
  for (size_t i = 0; i < dist.q.size(); ++i) {
    acc += dist.q[i];
    cdf[i] = acc;
  }
  cdf.back() = 1.0;

  Rng rng(seed);
  LanguageCorpus out;
  out.lang_id = out_lang_id;
  out.sentences.reserve(total_sentences);
  for (size_t i = 0; i < total_sentences; ++i) {
    size_t lang = rng.draw_cdf(cdf);
    // A zero-probability language can only surface through cdf rounding;
    // skip to the next language with mass.
    while (dist.q[lang] == 0.0 || corpora[lang].n() == 0) {
      lang = (lang + 1) % corpora.size();
    }
    const auto& sentences = corpora[lang].sentences;
    out.add(sentences[rng.uniform_int(sentences.size())]);
  }
  return out;
}

}  // namespace vocap::corpus
