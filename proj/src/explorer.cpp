#include "cvq/explorer.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cvq {

std::string FeedFingerprint::str() const {
  int n = static_cast<int>(d.size());
  std::ostringstream os;
  os << "d=(";
  for (int i = 0; i < n; ++i) os << (i ? "," : "") << d[static_cast<size_t>(i)];
  os << ") eps=[";
  for (int i = 0; i < n; ++i) {
    if (i) os << ";";
    for (int j = 0; j < n; ++j)
      os << (j ? "," : "") << eps[static_cast<size_t>(i) * n + j];
  }
  os << "]";
  return os.str();
}

FeedFingerprint fingerprint(const Feed& f) {
  std::vector<int> sigma(static_cast<size_t>(f.n));
  std::iota(sigma.begin(), sigma.end(), 0);
  FeedFingerprint best{f.d, f.eps};
  while (std::next_permutation(sigma.begin(), sigma.end())) {
    Feed g = permute_feed(f, sigma);
    FeedFingerprint cand{std::move(g.d), std::move(g.eps)};
    if (cand < best) best = std::move(cand);
  }
  return best;
}

ExploreResult explore(const Feed& f, int max_depth) {
  if (max_depth < 0) throw std::invalid_argument("explore: max_depth must be >= 0");
  ExploreResult out;
  std::map<FeedFingerprint, int> index;
  std::vector<Feed> rep;
  std::vector<int> depth;

  FeedFingerprint start = fingerprint(f);
  out.nodes.push_back(start);
  index.emplace(std::move(start), 0);
  rep.push_back(f);
  depth.push_back(0);
  out.closed = true;

  std::deque<int> frontier{0};
  while (!frontier.empty()) {
    int cur = frontier.front();
    frontier.pop_front();
    out.depth_reached = std::max(out.depth_reached, depth[static_cast<size_t>(cur)]);
    for (int k = 0; k < f.n; ++k) {
      Feed g = mutate_feed(rep[static_cast<size_t>(cur)], k);
      FeedFingerprint fp = fingerprint(g);
      auto it = index.find(fp);
      if (it != index.end()) {
        out.edges.push_back({cur, k, it->second});
        continue;
      }
      if (depth[static_cast<size_t>(cur)] >= max_depth) {
        out.closed = false;
        continue;
      }
      int id = static_cast<int>(out.nodes.size());
      out.nodes.push_back(fp);
      index.emplace(std::move(fp), id);
      rep.push_back(std::move(g));
      depth.push_back(depth[static_cast<size_t>(cur)] + 1);
      out.edges.push_back({cur, k, id});
      frontier.push_back(id);
    }
  }
  return out;
}

std::string ExploreResult::str() const {
  std::ostringstream os;
  os << nodes.size() << " node" << (nodes.size() == 1 ? "" : "s") << ", " << edges.size()
     << " edge" << (edges.size() == 1 ? "" : "s") << ", depth " << depth_reached << ", "
     << (closed ? "closed" : "not closed") << "\n";
  for (size_t i = 0; i < nodes.size(); ++i)
    os << "  n" << i << ": " << nodes[i].str() << "\n";
  for (const auto& e : edges)
    os << "  n" << e.from << " -(" << e.k << ")-> n" << e.to << "\n";
  return os.str();
}

std::string ExploreResult::dot() const {
  std::ostringstream os;
  os << "digraph mutation_closure {\n";
  os << "  node [shape=box fontname=\"monospace\"];\n";
  for (size_t i = 0; i < nodes.size(); ++i) {
    std::string label = nodes[i].str();
    size_t cut = label.find(" eps=");
    if (cut != std::string::npos) label = label.substr(0, cut) + "\\n" + label.substr(cut + 1);
    os << "  n" << i << " [label=\"" << label << "\"];\n";
  }
  for (const auto& e : edges)
    os << "  n" << e.from << " -> n" << e.to << " [label=\"" << e.k << "\"];\n";
  if (!closed) os << "  truncated [shape=plaintext label=\"not closed\"];\n";
  os << "}\n";
  return os.str();
}

Word word_normal_form(int n, const Word& w) {
  std::vector<int> alpha(static_cast<size_t>(n));
  std::iota(alpha.begin(), alpha.end(), 0);
  std::vector<int> muts;
  for (const auto& st : w) {
    if (st.kind == WordStep::Permute) {
      alpha = compose_perm(st.sigma, alpha);
      continue;
    }
    int k = invert_perm(alpha)[static_cast<size_t>(st.k)];
    if (!muts.empty() && muts.back() == k)
      muts.pop_back();
    else
      muts.push_back(k);
  }
  Word out;
  for (int k : muts) out.push_back(step_mutate(k));
  if (!is_identity_perm(alpha)) out.push_back(step_permute(alpha));
  return out;
}

static std::vector<WordStep> word_alphabet(int n) {
  std::vector<WordStep> steps;
  for (int k = 0; k < n; ++k) steps.push_back(step_mutate(k));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) steps.push_back(step_transpose(n, i, j));
  return steps;
}

std::string TrivialWordReport::str() const {
  std::ostringstream os;
  os << word_to_string(word) << "  [" << family << ", " << seed_kind_name(kind) << ", "
     << (pointwise ? "exact at " : "FAILED at ") << samples << " points]";
  return os.str();
}

std::vector<TrivialWordReport> find_trivial_words(const Feed& f, int max_len, SeedKind kind,
                                                  int samples, std::uint64_t seed) {
  if (samples < 20)
    throw std::invalid_argument("find_trivial_words: certification needs samples >= 20");
  const std::vector<WordStep> steps = word_alphabet(f.n);
  std::vector<TrivialWordReport> out;
  std::uint64_t cert_seed = seed;

  auto certify = [&](const Word& w, const std::string& family) {
    if (apply_word_feed(f, w) != f) return;
    if (!word_trivial_at_samples(f, w, kind, samples, cert_seed++)) return;
    out.push_back({w, family, kind, true, samples});
  };

  if (max_len >= 2)
    for (const auto& st : steps)
      certify(Word{st, st},
              st.kind == WordStep::Mutate ? "mutation square" : "relabeling square");

  // Normal forms of the known (h+2)-gon cycles, both starting directions.
  std::map<std::string, std::string> cycles;
  for (int i = 0; i < f.n; ++i)
    for (int j = 0; j < f.n; ++j) {
      if (i == j) continue;
      auto t = rank2_classify(f, i, j);
      if (!t) continue;
      for (int first : {i, j}) {
        Word w;
        for (int r = 0; r < rank2_coxeter_number(*t) + 2; ++r) {
          w.push_back(step_mutate(first));
          w.push_back(step_transpose(f.n, i, j));
        }
        cycles.emplace(word_to_string(word_normal_form(f.n, w)), rank2_name(*t) + " cycle");
      }
    }

  Word cur;
  std::vector<TrivialWordReport> found;
  auto rec = [&](auto&& self, const Feed& g) -> void {
    if (!cur.empty() && g == f) {
      Word nf = word_normal_form(f.n, cur);
      if (nf.size() >= cur.size() &&
          word_trivial_at_samples(f, cur, kind, samples, cert_seed++)) {
        auto it = cycles.find(word_to_string(nf));
        found.push_back({cur, it == cycles.end() ? "other" : it->second, kind, true, samples});
      }
    }
    if (static_cast<int>(cur.size()) == max_len) return;
    for (const auto& st : steps) {
      if (!cur.empty()) {
        const WordStep& prev = cur.back();
        if (prev.kind == WordStep::Mutate && st.kind == WordStep::Mutate && prev.k == st.k)
          continue;
        if (prev.kind == WordStep::Permute && st.kind == WordStep::Permute) continue;
      }
      cur.push_back(st);
      self(self, st.kind == WordStep::Mutate ? mutate_feed(g, st.k)
                                             : permute_feed(g, st.sigma));
      cur.pop_back();
    }
  };
  rec(rec, f);

  std::sort(found.begin(), found.end(), [](const TrivialWordReport& a, const TrivialWordReport& b) {
    if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
    return word_to_string(a.word) < word_to_string(b.word);
  });
  out.insert(out.end(), found.begin(), found.end());
  return out;
}

}  // namespace cvq
