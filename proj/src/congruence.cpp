#include "ordmon/congruence.hpp"

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ordmon/errors.hpp"

namespace ordmon {

namespace {

// Right Cayley graph enumeration for a finitely presented monoid: force
// s.lhs = s.rhs at every state, defining states on demand and folding
// coincidences, until a full pass is silent. State 0 is the empty word.
class Enumerator {
 public:
  Enumerator(const Presentation& p, const CongruenceLimits& limits) : limits_(limits) {
    std::map<std::pair<char, std::pair<int, int>>, int> index;
    for (std::size_t t = 0; t < p.letters.size(); ++t) {
      const GeneratorSymbol& s = p.letters[t];
      index[{static_cast<char>(s.kind), {s.i, s.j}}] = static_cast<int>(t);
    }
    nletters_ = static_cast<int>(p.letters.size());
    auto encode = [&](const Word& w) {
      std::vector<int> out;
      out.reserve(w.letters.size());
      for (const GeneratorSymbol& s : w.letters)
        out.push_back(index.at({static_cast<char>(s.kind), {s.i, s.j}}));
      return out;
    };
    for (const Relation& rel : p.relations)
      relations_.push_back({encode(rel.lhs), encode(rel.rhs)});
  }

  PresentedSizeResult run() {
    new_state();
    bool dirty = true;
    while (dirty && !exhausted_) {
      dirty = false;
      for (int s = 0; s < static_cast<int>(table_.size()) && !exhausted_; ++s) {
        if (find(s) != s) continue;
        for (const auto& [lhs, rhs] : relations_) {
          bool defined = false;
          int x = trace(s, lhs, defined);
          if (exhausted_) break;
          int y = trace(s, rhs, defined);
          if (exhausted_) break;
          if (defined) dirty = true;
          if (find(x) != find(y)) {
            merge(x, y);
            dirty = true;
          }
          if (find(s) != s) break;
        }
      }
    }
    PresentedSizeResult result;
    result.method = "coset-enumeration";
    if (exhausted_) {
      result.status = PresentedSizeStatus::Exhausted;
      result.size = 0;
      return result;
    }
    result.status = PresentedSizeStatus::Completed;
    result.size = 0;
    for (int s = 0; s < static_cast<int>(table_.size()); ++s) {
      if (find(s) != s) continue;
      ++result.size;
      for (int t = 0; t < nletters_; ++t)
        if (table_[s][t] < 0) throw std::logic_error("incomplete transition table at fixpoint");
    }
    return result;
  }

 private:
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  int new_state() {
    if (table_.size() >= limits_.max_states) {
      exhausted_ = true;
      return 0;
    }
    table_.emplace_back(nletters_, -1);
    parent_.push_back(static_cast<int>(parent_.size()));
    return static_cast<int>(table_.size()) - 1;
  }

  int trace(int s, const std::vector<int>& word, bool& defined) {
    int cur = find(s);
    for (int t : word) {
      if (++steps_ > limits_.max_steps) {
        exhausted_ = true;
        return cur;
      }
      cur = find(cur);
      int next = table_[cur][t];
      if (next < 0) {
        next = new_state();
        if (exhausted_) return cur;
        table_[cur][t] = next;
        defined = true;
      }
      cur = find(next);
    }
    return cur;
  }

  void merge(int x, int y) {
    pending_.emplace_back(x, y);
    while (!pending_.empty()) {
      auto [a, b] = pending_.back();
      pending_.pop_back();
      a = find(a);
      b = find(b);
      if (a == b) continue;
      if (b < a) std::swap(a, b);
      parent_[b] = a;
      for (int t = 0; t < nletters_; ++t) {
        int img = table_[b][t];
        if (img < 0) continue;
        if (table_[a][t] < 0)
          table_[a][t] = img;
        else
          pending_.emplace_back(table_[a][t], img);
      }
    }
  }

  CongruenceLimits limits_;
  int nletters_ = 0;
  std::vector<std::pair<std::vector<int>, std::vector<int>>> relations_;
  std::vector<std::vector<int>> table_;
  std::vector<int> parent_;
  std::vector<std::pair<int, int>> pending_;
  std::uint64_t steps_ = 0;
  bool exhausted_ = false;
};

}  // namespace

PresentedSizeResult presented_size(const Presentation& p, const CongruenceLimits& limits) {
  if (limits.max_states < 1 || limits.max_steps < 1)
    throw ValidationError("congruence limits must be positive");
  return Enumerator(p, limits).run();
}

}  // namespace ordmon
