#include "hgg/search.hpp"

#include <algorithm>
#include <functional>
#include <thread>
#include <unordered_set>

#include "hgg/rootgroups.hpp"

namespace hgg {

bool canonical_less(const std::string& x, const std::string& y) {
  if (x.size() != y.size()) return x.size() < y.size();
  return x < y;
}

namespace {

struct Node {
  WordPtr word;
  std::string text;
  RationalMatrix value;
  RationalMatrix inv;
};

struct Candidate {
  enum Op { Product, Commutator, Power } op;
  std::size_t x, y;
  long k;
  WordPtr word;
  std::string text;
};

// Breadth-first by depth; within a depth, candidates are evaluated in
// canonical order so truncation and deduplication never depend on threads.
class Enumerator {
 public:
  using Visit = std::function<void(const Node&, bool fresh)>;

  Enumerator(const SearchBudget& budget, CommutatorConvention convention) : budget_(budget), convention_(convention) {}

  // Returns false if the node budget ran out.
  bool run(const std::vector<std::pair<std::string, RationalMatrix>>& atoms, int max_depth, const Visit& visit,
           const std::function<bool()>& stop_after_level) {
    if (budget_.max_nodes == 0 || max_depth < 1) return budget_.max_nodes != 0;
    std::vector<Candidate> level1;
    std::vector<RationalMatrix> atom_values;
    for (const auto& [name, m] : atoms) {
      atom_values.push_back(m);
      level1.push_back({Candidate::Power, atom_values.size() - 1, 0, 1, WordExpr::atom(name), name});
      atom_values.push_back(inverse(m));
      auto w = WordExpr::power(WordExpr::atom(name), Integer(-1));
      level1.push_back({Candidate::Power, atom_values.size() - 1, 0, 1, w, w->to_string()});
    }
    atom_values_ = std::move(atom_values);
    level_begin_.push_back(0);
    if (!process(level1, visit, true)) return false;
    if (stop_after_level()) return true;
    depth_reached_ = 1;

    for (int depth = 2; depth <= max_depth; ++depth) {
      std::size_t lo = level_begin_.back(), hi = nodes_.size();
      level_begin_.push_back(hi);
      std::vector<Candidate> cands;
      for (std::size_t i = lo; i < hi; ++i) {
        for (std::size_t j = 0; j < hi; ++j) {
          bool both_new = j >= lo;
          if (both_new && j < i) continue;
          add_binary(cands, i, j);
          if (i != j) add_binary(cands, j, i);
        }
        if (nodes_[i].word->kind != WordExpr::Kind::Power)
          for (long k = 2; k <= depth + 1; ++k) {
            for (long s : {k, -k}) {
              auto w = WordExpr::power(nodes_[i].word, Integer(s));
              cands.push_back({Candidate::Power, i, 0, s, w, w->to_string()});
            }
          }
      }
      if (!process(cands, visit, false)) return false;
      depth_reached_ = depth;
      if (stop_after_level()) return true;
    }
    return true;
  }

  std::size_t nodes_evaluated() const { return evaluated_; }
  int depth_reached() const { return depth_reached_; }

 private:
  void add_binary(std::vector<Candidate>& out, std::size_t x, std::size_t y) {
    auto p = WordExpr::product({nodes_[x].word, nodes_[y].word});
    out.push_back({Candidate::Product, x, y, 0, p, p->to_string()});
    auto c = WordExpr::commutator(nodes_[x].word, nodes_[y].word);
    out.push_back({Candidate::Commutator, x, y, 0, c, c->to_string()});
  }

  RationalMatrix evaluate(const Candidate& c, bool atoms) const {
    if (atoms) return atom_values_[c.x];
    switch (c.op) {
      case Candidate::Product:
        return nodes_[c.x].value * nodes_[c.y].value;
      case Candidate::Commutator:
        if (convention_ == CommutatorConvention::ProductFirst)
          return nodes_[c.x].value * nodes_[c.y].value * nodes_[c.x].inv * nodes_[c.y].inv;
        return nodes_[c.x].inv * nodes_[c.y].inv * nodes_[c.x].value * nodes_[c.y].value;
      case Candidate::Power:
        return c.k < 0 ? power(nodes_[c.x].inv, -c.k) : power(nodes_[c.x].value, c.k);
    }
    return {};
  }

  bool process(std::vector<Candidate>& cands, const Visit& visit, bool atoms) {
    std::stable_sort(cands.begin(), cands.end(),
                     [](const Candidate& p, const Candidate& q) { return canonical_less(p.text, q.text); });
    bool truncated = false;
    std::size_t room = budget_.max_nodes - evaluated_;
    if (cands.size() > room) {
      cands.resize(room);
      truncated = true;
    }
    const std::size_t chunk = 2048;
    const unsigned jobs = std::max(1u, budget_.jobs);
    std::vector<RationalMatrix> values;
    for (std::size_t start = 0; start < cands.size(); start += chunk) {
      std::size_t end = std::min(cands.size(), start + chunk);
      values.assign(end - start, RationalMatrix());
      auto work = [&](unsigned t) {
        for (std::size_t i = start + t; i < end; i += jobs) values[i - start] = evaluate(cands[i], atoms);
      };
      if (jobs == 1) {
        work(0);
      } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
      }
      for (std::size_t i = start; i < end; ++i) {
        ++evaluated_;
        RationalMatrix& v = values[i - start];
        if (v.max_entry_bits() > budget_.max_entry_bits) continue;
        Node node{cands[i].word, cands[i].text, std::move(v), {}};
        bool fresh = seen_.insert(node.value.key()).second;
        if (fresh) {
          node.inv = inverse(node.value);
          nodes_.push_back(node);
        }
        visit(node, fresh);
      }
    }
    return !truncated;
  }

  SearchBudget budget_;
  CommutatorConvention convention_;
  std::vector<RationalMatrix> atom_values_;
  std::vector<Node> nodes_;
  std::vector<std::size_t> level_begin_;
  std::unordered_set<std::string> seen_;
  std::size_t evaluated_ = 0;
  int depth_reached_ = 0;
};

std::vector<std::pair<std::string, RationalMatrix>> search_atoms(const RationalMatrix& a, const RationalMatrix& b,
                                                                 const RationalMatrix& c) {
  return {{"a", a}, {"b", b}, {"c", c}, {"q1", b * inverse(a)}};
}

void keep_min(std::optional<SearchHit>& slot, const Node& node, const Rational& parameter) {
  if (slot && !canonical_less(node.text, slot->text)) return;
  slot = SearchHit{node.word, node.text, node.value, parameter};
}

}  // namespace

std::optional<Certificate> SearchOutcome::certificate(const std::string& label, const ParameterVector& alpha,
                                                      const ParameterVector& beta,
                                                      const std::optional<RationalMatrix>& X,
                                                      CommutatorConvention convention) const {
  if (!complete()) return std::nullopt;
  Certificate cert;
  cert.label = label;
  cert.alpha = alpha;
  cert.beta = beta;
  cert.basis_matrix = X;
  cert.convention = convention;
  cert.program.results = {highest->word, second->word};
  cert.expected_q1 = highest->value;
  cert.expected_q2 = second->value;
  return cert;
}

std::optional<Certificate> SearchOutcome::probe_certificate(const std::string& label, const ParameterVector& alpha,
                                                            const ParameterVector& beta,
                                                            const std::optional<RationalMatrix>& X,
                                                            CommutatorConvention convention) const {
  if (!highest) return std::nullopt;
  SearchOutcome filled = *this;
  if (!filled.second) filled.second = highest;
  return filled.certificate(label, alpha, beta, X, convention);
}

SearchOutcome search_certificates(const RationalMatrix& a, const RationalMatrix& b, const RationalMatrix& c,
                                  const Rational& lambda1, const Rational& lambda2, const SearchBudget& budget,
                                  CommutatorConvention convention) {
  SearchOutcome out;
  Enumerator en(budget, convention);
  auto visit = [&](const Node& node, bool) {
    if (!is_unipotent(node.value)) return;
    if (auto y = in_highest_root_group(node.value)) keep_min(out.highest, node, *y);
    if (auto x = in_second_highest_root_group(node.value, lambda1, lambda2)) keep_min(out.second, node, *x);
  };
  bool finished = en.run(search_atoms(a, b, c), budget.max_depth, visit, [&] { return out.complete(); });
  out.budget_exhausted = !finished;
  out.nodes = en.nodes_evaluated();
  out.depth_reached = en.depth_reached();
  return out;
}

std::vector<CensusEntry> unipotent_census(const RationalMatrix& a, const RationalMatrix& b, const RationalMatrix& c,
                                          int depth, const SearchBudget& budget, CommutatorConvention convention) {
  std::map<std::string, CensusEntry> by_key;
  Enumerator en(budget, convention);
  auto visit = [&](const Node& node, bool) {
    if (!is_unipotent(node.value)) return;
    std::string key = node.value.key();
    auto it = by_key.find(key);
    if (it == by_key.end())
      by_key.emplace(key, CensusEntry{node.text, classify_root_support(node.value), node.value});
    else if (canonical_less(node.text, it->second.word))
      it->second.word = node.text;
  };
  en.run(search_atoms(a, b, c), depth, visit, [] { return false; });
  std::vector<CensusEntry> out;
  for (auto& [key, e] : by_key) out.push_back(std::move(e));
  std::sort(out.begin(), out.end(),
            [](const CensusEntry& x, const CensusEntry& y) { return canonical_less(x.word, y.word); });
  return out;
}

}  // namespace hgg
