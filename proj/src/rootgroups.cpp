#include "hgg/rootgroups.hpp"

#include <algorithm>
#include <map>

namespace hgg {

namespace {

// Torus weight of the i-th hyperbolic basis vector (1-based).
Character basis_weight(int i) {
  Character w{0, 0, 0};
  if (i <= 3)
    w[i - 1] = 1;
  else
    w[6 - i] = -1;
  return w;
}

}  // namespace

Character entry_weight(int row, int column) {
  Character r = basis_weight(row), c = basis_weight(column);
  return {r[0] - c[0], r[1] - c[1], r[2] - c[2]};
}

std::string character_name(const Character& w) {
  std::string s;
  for (int i = 0; i < 3; ++i) {
    if (w[i] == 0) continue;
    s += "t" + std::to_string(i + 1);
    if (w[i] != 1) s += "^" + std::to_string(w[i]);
  }
  return s.empty() ? "1" : s;
}

std::string Root::name() const { return character_name(weight); }

std::vector<Root> RootDatum::all_roots() const {
  std::vector<Root> out = positive_roots;
  for (const auto& r : positive_roots) {
    Root neg{{-r.weight[0], -r.weight[1], -r.weight[2]}, {}};
    for (auto [i, j] : r.positions) neg.positions.push_back({j, i});
    out.push_back(neg);
  }
  return out;
}

RootDatum sp6_root_datum(const std::array<Rational, 3>& lambdas) {
  // Collect the entries above the anti-diagonal and the anti-diagonal itself
  // by weight; those are exactly the positive roots.
  std::map<Character, Root> by_weight;
  for (int r = 1; r <= 6; ++r)
    for (int c = 1; c <= 6; ++c) {
      if (r == c) continue;
      Character w = entry_weight(r, c);
      bool positive = w[0] > 0 || (w[0] == 0 && (w[1] > 0 || (w[1] == 0 && w[2] > 0)));
      if (!positive) continue;
      auto& root = by_weight[w];
      root.weight = w;
      root.positions.push_back({r, c});
    }
  RootDatum d;
  for (auto& [w, root] : by_weight) d.positive_roots.push_back(root);
  std::sort(d.positive_roots.begin(), d.positive_roots.end(),
            [](const Root& x, const Root& y) { return x.weight > y.weight; });
  d.highest = d.positive_roots[0];
  d.second_highest = d.positive_roots[1];
  d.lambdas = lambdas;
  return d;
}

namespace {

bool support_within(const RationalMatrix& M, const std::vector<std::pair<int, int>>& allowed) {
  for (int r = 1; r <= static_cast<int>(M.size()); ++r)
    for (int c = 1; c <= static_cast<int>(M.size()); ++c) {
      const Rational& x = M.at1(r, c);
      bool ok = std::find(allowed.begin(), allowed.end(), std::make_pair(r, c)) != allowed.end();
      if (r == c) {
        if (x != 1) return false;
      } else if (!ok && x != 0) {
        return false;
      }
    }
  return true;
}

}  // namespace

std::optional<Rational> in_highest_root_group(const RationalMatrix& M) {
  if (M.size() != 6 || !support_within(M, {{1, 6}})) return std::nullopt;
  const Rational& y = M.at1(1, 6);
  if (y == 0) return std::nullopt;
  return y;
}

std::optional<Rational> in_second_highest_root_group(const RationalMatrix& M, const Rational& lambda1,
                                                     const Rational& lambda2) {
  if (M.size() != 6 || lambda1 == 0 || lambda2 == 0) return std::nullopt;
  if (!support_within(M, {{1, 5}, {2, 6}})) return std::nullopt;
  const Rational& x = M.at1(1, 5);
  if (x == 0 || M.at1(2, 6) != (lambda1 / lambda2) * x) return std::nullopt;
  return x;
}

bool preserves_form(const RationalMatrix& M, const SymplecticForm& omega) {
  return M.size() == omega.matrix.size() && preserves(M, omega.matrix);
}

std::string classify_root_support(const RationalMatrix& M) {
  if (M.is_identity()) return "identity";
  if (!is_unipotent(M)) return "not unipotent";
  if (M.size() != 6) return "other unipotent";
  std::optional<Character> weight;
  for (int r = 1; r <= 6; ++r)
    for (int c = 1; c <= 6; ++c) {
      if (r == c) {
        if (M.at1(r, c) != 1) return "other unipotent";
        continue;
      }
      if (M.at1(r, c) == 0) continue;
      Character w = entry_weight(r, c);
      if (weight && *weight != w) return "other unipotent";
      weight = w;
    }
  return character_name(*weight);
}

}  // namespace hgg
