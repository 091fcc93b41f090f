#include "laga/gr_algebra.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <unordered_map>

#include "laga/error.hpp"
#include "laga/matrix.hpp"
#include "laga/union_find.hpp"

namespace laga {

Reachability::Reachability(const LayeredGraph& g) : offset_(g.num_levels(), 0) {
  for (std::size_t l = 1; l < g.num_levels(); ++l) offset_[l] = offset_[l - 1] + g.level_size(l - 1);
  const std::size_t n = g.vertex_count();
  below_.assign(n, std::vector<bool>(n, false));
  for (const auto& v : g.vertices()) {
    auto& row = below_[offset_[v.level] + v.index];
    row[offset_[v.level] + v.index] = true;
    if (v.level == 0) continue;
    for (auto s : g.successors(v)) {
      const auto& sub = below_[offset_[v.level - 1] + s];
      for (std::size_t x = 0; x < n; ++x)
        if (sub[x]) row[x] = true;
    }
  }
}

bool Reachability::reaches(VertexId from, VertexId to) const {
  return below_.at(offset_.at(from.level) + from.index).at(offset_.at(to.level) + to.index);
}

VertexPath distinguished_path(const LayeredGraph& g, VertexId v) {
  if (!g.contains(v)) throw Error(ErrorKind::InvalidArgument, "vertex " + to_string(v) + " is out of range");
  VertexPath path{v};
  while (path.back().level > 0) {
    const auto& succ = g.successors(path.back());
    if (succ.empty())
      throw Error(ErrorKind::EmptySuccessor, "vertex " + to_string(path.back()) + " covers nothing");
    path.push_back({path.back().level - 1, succ.front()});
  }
  return path;
}

Word monomial_m(const LayeredGraph& g, VertexId v, std::size_t k) {
  if (k > v.level)
    throw Error(ErrorKind::KOutOfRange, "k=" + std::to_string(k) + " exceeds the level of " + to_string(v));
  if (k == 0) return {};
  auto path = distinguished_path(g, v);
  return Word(path.begin(), path.begin() + static_cast<std::ptrdiff_t>(k));
}

FreeElement e_tilde(const LayeredGraph& g, VertexId v, std::size_t k, const Field& field) {
  if (k > v.level)
    throw Error(ErrorKind::KOutOfRange, "k=" + std::to_string(k) + " exceeds the level of " + to_string(v));
  auto path = distinguished_path(g, v);
  // coeffs[j] is the coefficient of t^j
  std::vector<FreeElement> coeffs{FreeElement::constant(field, 1)};
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    FreeElement edge = FreeElement::monomial(field, {path[i]});
    if (path[i + 1].level > 0) edge -= FreeElement::monomial(field, {path[i + 1]});
    std::vector<FreeElement> next(coeffs.size() + 1, FreeElement(field));
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      next[j + 1] += coeffs[j];
      next[j] -= coeffs[j] * edge;
    }
    coeffs = std::move(next);
  }
  return coeffs[v.level - k];
}

namespace {

bool continues_run(const LayeredGraph& g, VertexId prev, VertexId next) {
  if (prev.level == 0 || next.level + 1 != prev.level) return false;
  const auto& succ = g.successors(prev);
  return !succ.empty() && succ.front() == next.index;
}

}  // namespace

std::vector<std::size_t> skeleton(const LayeredGraph& g, const Word& w) {
  std::vector<std::size_t> s{1};
  for (std::size_t j = 2; j <= w.size(); ++j)
    if (!continues_run(g, w[j - 2], w[j - 1])) s.push_back(j);
  if (!w.empty()) s.push_back(w.size() + 1);
  return s;
}

PairSequence to_pair_sequence(const LayeredGraph& g, const Word& w) {
  auto s = skeleton(g, w);
  PairSequence out;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) out.push_back({w[s[i] - 1], s[i + 1] - s[i]});
  return out;
}

Word monomial_of(const LayeredGraph& g, const PairSequence& b) {
  Word out;
  for (const auto& p : b) {
    auto m = monomial_m(g, p.vertex, p.length);
    out.insert(out.end(), m.begin(), m.end());
  }
  return out;
}

bool covers_pair(const Reachability& reach, const RunPair& first, const RunPair& second) {
  return first.vertex.level >= second.vertex.level && first.vertex.level - second.vertex.level == first.length &&
         reach.reaches(first.vertex, second.vertex);
}

bool is_basis_sequence(const LayeredGraph& g, const PairSequence& b) {
  Reachability reach(g);
  for (std::size_t i = 0; i + 1 < b.size(); ++i)
    if (covers_pair(reach, b[i], b[i + 1])) return false;
  return true;
}

namespace {

VertexPath least_path(const LayeredGraph& g, const Reachability& reach, VertexId from, VertexId to) {
  VertexPath path{from};
  while (path.back() != to) {
    VertexId cur = path.back();
    bool moved = false;
    for (auto s : g.successors(cur)) {
      VertexId next{cur.level - 1, s};
      if (reach.reaches(next, to)) {
        path.push_back(next);
        moved = true;
        break;
      }
    }
    if (!moved) throw std::logic_error("no path between reachable vertices");
  }
  return path;
}

}  // namespace

Word normalize(const LayeredGraph& g, const Word& w, std::vector<NormalizeStep>* trace) {
  Reachability reach(g);
  Word current = w;
  while (true) {
    auto b = to_pair_sequence(g, current);
    std::size_t pos = 0, hit = b.size();
    for (std::size_t i = 1; i < b.size(); ++i) {
      pos += b[i - 1].length;
      if (covers_pair(reach, b[i - 1], b[i])) {
        hit = i;
        pos -= b[i - 1].length;
        break;
      }
    }
    if (hit == b.size()) return current;
    const RunPair& run = b[hit - 1];
    Word next(current.begin(), current.begin() + static_cast<std::ptrdiff_t>(pos));
    auto longer = monomial_m(g, run.vertex, run.length + 1);
    next.insert(next.end(), longer.begin(), longer.end());
    next.insert(next.end(), current.begin() + static_cast<std::ptrdiff_t>(pos + run.length + 1), current.end());
    if (trace)
      trace->push_back({current, next, pos + 1, least_path(g, reach, run.vertex, b[hit].vertex)});
    current = std::move(next);
  }
}

std::vector<PairSequence> enumerate_B_basis(const LayeredGraph& g, std::size_t length, std::size_t total_weight) {
  Reachability reach(g);
  const std::size_t top = g.top_level();
  std::vector<PairSequence> out;
  PairSequence current;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t len_left, std::size_t weight_left) {
    if (len_left == 0) {
      if (weight_left == 0) out.push_back(current);
      return;
    }
    if (weight_left < len_left || weight_left > len_left * top) return;
    for (std::size_t l = 1; l <= top; ++l)
      for (std::size_t i = 0; i < g.level_size(l); ++i) {
        VertexId v{l, i};
        std::size_t run_weight = 0;
        for (std::size_t k = 1; k <= l && k <= len_left; ++k) {
          run_weight += l - (k - 1);
          if (run_weight > weight_left) break;
          RunPair p{v, k};
          if (!current.empty() && covers_pair(reach, current.back(), p)) continue;
          current.push_back(p);
          rec(len_left - k, weight_left - run_weight);
          current.pop_back();
        }
      }
  };
  if (length > 0) rec(length, total_weight);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Word> words_of_bidegree(const LayeredGraph& g, std::size_t length, std::size_t total_weight,
                                    std::uint64_t budget) {
  const std::size_t top = g.top_level();
  std::vector<Word> out;
  Word current;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t len_left, std::size_t weight_left) {
    if (len_left == 0) {
      if (weight_left == 0) {
        if (out.size() >= budget)
          throw Error(ErrorKind::BudgetExceeded, "more than " + std::to_string(budget) + " words in bidegree (" +
                                                     std::to_string(length) + "," + std::to_string(total_weight) +
                                                     ")");
        out.push_back(current);
      }
      return;
    }
    if (weight_left < len_left || weight_left > len_left * top) return;
    for (std::size_t l = 1; l <= top && l <= weight_left; ++l)
      for (std::size_t i = 0; i < g.level_size(l); ++i) {
        current.push_back({l, i});
        rec(len_left - 1, weight_left - l);
        current.pop_back();
      }
  };
  rec(length, total_weight);
  return out;
}

namespace {

void for_each_path(const LayeredGraph& g, VertexId from, std::size_t steps,
                   const std::function<void(const VertexPath&)>& visit) {
  VertexPath path{from};
  std::function<void()> rec = [&] {
    if (path.size() == steps + 1) {
      visit(path);
      return;
    }
    VertexId cur = path.back();
    if (cur.level == 0) return;
    for (auto s : g.successors(cur)) {
      path.push_back({cur.level - 1, s});
      rec();
      path.pop_back();
    }
  };
  rec();
}

// Length of the longest path segment of w starting at position i.
std::size_t path_run(const LayeredGraph& g, const Word& w, std::size_t i) {
  std::size_t j = i + 1;
  while (j < w.size() && g.has_edge(w[j - 1], w[j])) ++j;
  return j - i;
}

}  // namespace

std::vector<FreeElement> rgr_relations(const LayeredGraph& g, std::size_t length, std::size_t total_weight,
                                       const Field& field) {
  std::set<std::pair<Word, Word>> pairs;
  for (const auto& w : words_of_bidegree(g, length, total_weight)) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      std::size_t run = path_run(g, w, i);
      for (std::size_t letters = 2; letters <= run; ++letters)
        for_each_path(g, w[i], letters - 1, [&](const VertexPath& alt) {
          Word other = w;
          std::copy(alt.begin(), alt.end(), other.begin() + static_cast<std::ptrdiff_t>(i));
          if (other != w) pairs.insert(std::minmax(w, other));
        });
    }
  }
  std::vector<FreeElement> out;
  for (const auto& [a, b] : pairs)
    out.push_back(FreeElement::monomial(field, a) - FreeElement::monomial(field, b));
  return out;
}

std::size_t rgr_quotient_dim(const LayeredGraph& g, std::size_t length, std::size_t total_weight,
                             bool quadratic_only, std::uint64_t budget) {
  auto words = words_of_bidegree(g, length, total_weight, budget);
  std::map<Word, std::size_t> index;
  for (std::size_t i = 0; i < words.size(); ++i) index.emplace(words[i], i);
  DisjointSets sets(words.size());
  // Every segment replacement agrees with replacing that segment by the
  // distinguished continuation of its first letter, so linking each word to
  // those canonical variants yields the same classes.
  for (std::size_t w = 0; w < words.size(); ++w) {
    const Word& word = words[w];
    for (std::size_t i = 0; i < word.size(); ++i) {
      std::size_t run = path_run(g, word, i);
      if (quadratic_only) run = std::min<std::size_t>(run, 2);
      for (std::size_t letters = 2; letters <= run; ++letters) {
        Word canon = word;
        if (quadratic_only) {
          canon[i + 1] = {word[i].level - 1, g.successors(word[i]).front()};
        } else {
          auto path = distinguished_path(g, word[i]);
          std::copy(path.begin(), path.begin() + static_cast<std::ptrdiff_t>(letters),
                    canon.begin() + static_cast<std::ptrdiff_t>(i));
        }
        sets.unite(w, index.at(canon));
      }
    }
  }
  return sets.count();
}

std::size_t rgr_quotient_dim_linear(const LayeredGraph& g, std::size_t length, std::size_t total_weight,
                                    const Field& field) {
  auto words = words_of_bidegree(g, length, total_weight);
  std::map<Word, std::size_t> index;
  for (std::size_t i = 0; i < words.size(); ++i) index.emplace(words[i], i);
  std::vector<SparseVector> rows;
  for (const auto& rel : rgr_relations(g, length, total_weight, field)) {
    SparseVector row;
    for (const auto& [w, c] : rel.terms()) row[index.at(w)] = c;
    rows.push_back(std::move(row));
  }
  return words.size() - sparse_rank(field, rows);
}

QuadraticReport is_quadratic_to_degree(const LayeredGraph& g, std::size_t max_length, std::uint64_t budget) {
  QuadraticReport report;
  for (std::size_t m = 1; m <= max_length; ++m)
    for (std::size_t n = m; n <= m * g.top_level(); ++n) {
      std::size_t full = rgr_quotient_dim(g, m, n, false, budget);
      std::size_t quad = rgr_quotient_dim(g, m, n, true, budget);
      if (full != quad) {
        report.quadratic = false;
        report.failing = std::make_pair(m, n);
        report.full_dim = full;
        report.quadratic_dim = quad;
        return report;
      }
    }
  return report;
}

}  // namespace laga
