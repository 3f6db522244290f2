#include "adslite/index.hpp"

#include <cmath>
#include <cstring>

#include "adslite/text.hpp"

namespace adslite {

namespace {

constexpr char kMagic[8] = {'A', 'D', 'S', 'L', 'I', 'D', 'X', '\0'};
constexpr std::uint32_t kVersion = 1;

template <typename T>
void write_pod(std::ostream& out, T v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof(v));
}

template <typename T>
T read_pod(std::istream& in) {
  T v{};
  in.read(reinterpret_cast<char*>(&v), sizeof(v));
  if (!in) throw AdsError(Err::malformed_document, "truncated index");
  return v;
}

void write_string(std::ostream& out, const std::string& s) {
  write_pod<std::uint32_t>(out, static_cast<std::uint32_t>(s.size()));
  out.write(s.data(), static_cast<std::streamsize>(s.size()));
}

std::string read_string(std::istream& in) {
  const auto n = read_pod<std::uint32_t>(in);
  std::string s(n, '\0');
  in.read(s.data(), n);
  if (!in) throw AdsError(Err::malformed_document, "truncated index");
  return s;
}

}  // namespace

IndexedCorpus IndexedCorpus::build(const Corpus& corpus, SynonymTable table) {
  IndexedCorpus idx;
  idx.synonyms_ = std::move(table);
  idx.doc_count_ = corpus.max_seq();
  for (const BibRecord& rec : corpus.records()) {
    const auto add_field = [&](Field field, const std::string& text,
                               std::uint32_t& length) {
      std::map<std::string, std::uint32_t> counts;
      const auto tokens = tokenize(text);
      length = static_cast<std::uint32_t>(tokens.size());
      for (const std::string& tok : tokens) ++counts[tok];
      for (const auto& [term, tf] : counts)
        idx.postings_[term].push_back({rec.ingest_seq, field, tf});
    };
    auto& lens = idx.lengths_[rec.ingest_seq];
    add_field(Field::title, rec.title, lens.first);
    if (rec.abstract) add_field(Field::abstract, *rec.abstract, lens.second);
  }
  // Records are visited in seq order and title precedes abstract, so each
  // posting list is already sorted by (seq, field).
  for (const auto& [term, plist] : idx.postings_) {
    std::uint32_t df = 0;
    std::uint32_t last_seq = 0;
    for (const Posting& p : plist) {
      if (p.seq != last_seq) {
        ++df;
        last_seq = p.seq;
      }
    }
    idx.df_[term] = df;
  }
  return idx;
}

std::uint32_t IndexedCorpus::df(const std::string& term) const {
  auto it = df_.find(term);
  return it == df_.end() ? 0 : it->second;
}

const std::vector<Posting>* IndexedCorpus::postings(const std::string& term) const {
  auto it = postings_.find(term);
  return it == postings_.end() ? nullptr : &it->second;
}

bool IndexedCorpus::contains(const std::string& term, std::uint32_t seq) const {
  const auto [tt, ta] = tf(term, seq);
  return tt + ta > 0;
}

std::pair<std::uint32_t, std::uint32_t> IndexedCorpus::tf(const std::string& term,
                                                          std::uint32_t seq) const {
  std::pair<std::uint32_t, std::uint32_t> out{0, 0};
  const std::vector<Posting>* plist = postings(term);
  if (!plist) return out;
  auto it = std::lower_bound(plist->begin(), plist->end(), seq,
                             [](const Posting& p, std::uint32_t s) { return p.seq < s; });
  for (; it != plist->end() && it->seq == seq; ++it) {
    if (it->field == Field::title)
      out.first = it->tf;
    else
      out.second = it->tf;
  }
  return out;
}

std::vector<std::uint32_t> IndexedCorpus::docs_with(const std::string& term) const {
  std::vector<std::uint32_t> seqs;
  const std::vector<Posting>* plist = postings(term);
  if (!plist) return seqs;
  for (const Posting& p : *plist) {
    if (seqs.empty() || seqs.back() != p.seq) seqs.push_back(p.seq);
  }
  return seqs;
}

std::pair<std::uint32_t, std::uint32_t> IndexedCorpus::doc_length(std::uint32_t seq) const {
  auto it = lengths_.find(seq);
  if (it == lengths_.end()) return {0, 0};
  return it->second;
}

void IndexedCorpus::serialize(std::ostream& out) const {
  out.write(kMagic, sizeof(kMagic));
  write_pod(out, kVersion);
  write_pod(out, doc_count_);
  write_pod<std::uint64_t>(out, lengths_.size());
  for (const auto& [seq, lens] : lengths_) {
    write_pod(out, seq);
    write_pod(out, lens.first);
    write_pod(out, lens.second);
  }
  write_pod<std::uint64_t>(out, postings_.size());
  for (const auto& [term, plist] : postings_) {
    write_string(out, term);
    write_pod<std::uint64_t>(out, plist.size());
    for (const Posting& p : plist) {
      write_pod(out, p.seq);
      write_pod<std::uint8_t>(out, static_cast<std::uint8_t>(p.field));
      write_pod(out, p.tf);
    }
  }
  const auto& groups = synonyms_.groups();
  write_pod<std::uint64_t>(out, groups.size());
  for (const auto& group : groups) {
    write_pod<std::uint64_t>(out, group.size());
    for (const std::string& m : group) write_string(out, m);
  }
}

IndexedCorpus IndexedCorpus::deserialize(std::istream& in) {
  char magic[8];
  in.read(magic, sizeof(magic));
  if (!in || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0)
    throw AdsError(Err::malformed_document, "bad index magic");
  if (read_pod<std::uint32_t>(in) != kVersion)
    throw AdsError(Err::malformed_document, "unsupported index version");
  IndexedCorpus idx;
  idx.doc_count_ = read_pod<std::uint32_t>(in);
  const auto n_lengths = read_pod<std::uint64_t>(in);
  for (std::uint64_t i = 0; i < n_lengths; ++i) {
    const auto seq = read_pod<std::uint32_t>(in);
    const auto t = read_pod<std::uint32_t>(in);
    const auto a = read_pod<std::uint32_t>(in);
    idx.lengths_[seq] = {t, a};
  }
  const auto n_terms = read_pod<std::uint64_t>(in);
  for (std::uint64_t i = 0; i < n_terms; ++i) {
    std::string term = read_string(in);
    const auto n_postings = read_pod<std::uint64_t>(in);
    std::vector<Posting> plist;
    plist.reserve(n_postings);
    for (std::uint64_t k = 0; k < n_postings; ++k) {
      Posting p;
      p.seq = read_pod<std::uint32_t>(in);
      p.field = static_cast<Field>(read_pod<std::uint8_t>(in));
      p.tf = read_pod<std::uint32_t>(in);
      plist.push_back(p);
    }
    std::uint32_t df = 0, last_seq = 0;
    for (const Posting& p : plist) {
      if (p.seq != last_seq) {
        ++df;
        last_seq = p.seq;
      }
    }
    idx.df_[term] = df;
    idx.postings_.emplace(std::move(term), std::move(plist));
  }
  const auto n_groups = read_pod<std::uint64_t>(in);
  for (std::uint64_t i = 0; i < n_groups; ++i) {
    const auto n_members = read_pod<std::uint64_t>(in);
    std::vector<std::string> members;
    members.reserve(n_members);
    for (std::uint64_t k = 0; k < n_members; ++k) members.push_back(read_string(in));
    idx.synonyms_.add_group(members);
  }
  return idx;
}

double score(const IndexedCorpus& index, std::uint32_t seq,
             std::span<const WeightedTerm> terms) {
  double total = 0.0;
  const double n = static_cast<double>(index.doc_count());
  for (const WeightedTerm& wt : terms) {
    const auto [tf_title, tf_abs] = index.tf(wt.term, seq);
    if (tf_title + tf_abs == 0) continue;
    const double df = static_cast<double>(index.df(wt.term));
    total += wt.weight * (2.0 * tf_title + tf_abs) * std::log(1.0 + n / df);
  }
  return total;
}

}  // namespace adslite
