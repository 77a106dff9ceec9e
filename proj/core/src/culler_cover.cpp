// [a,b]^n for odd n as (n+1)/2 commutators.
//
// Take the n-sheeted cover of the one-holed torus with monodromy
// a: i -> 2i, b: i -> i+1 (mod n). Then [a,b] acts as i -> i - 1/2, an
// n-cycle, so the boundary lifts to a single curve that maps to [a,b]^n and
// the covering surface has genus (n+1)/2. Reidemeister–Schreier rewriting
// expresses [a,b]^n in a free basis of the covering group as a quadratic
// word (every basis letter occurs once with each sign), and each linked pair
// of letters is peeled off as one commutator.

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "scltwist/commutator.hpp"
#include "scltwist/errors.hpp"

namespace scltwist::detail {

namespace {

struct CoverLetter {
  int gen;   // 0 = a, 1 = b
  int sign;  // +1 / -1
};

class Cover {
 public:
  explicit Cover(std::int64_t n) : n_(n), perm_(2), inv_(2) {
    for (auto& p : perm_) p.resize(static_cast<std::size_t>(n));
    for (auto& p : inv_) p.resize(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) {
      const auto a = static_cast<std::size_t>((2 * i) % n);
      const auto b = static_cast<std::size_t>((i + 1) % n);
      perm_[0][static_cast<std::size_t>(i)] = a;
      perm_[1][static_cast<std::size_t>(i)] = b;
      inv_[0][a] = static_cast<std::size_t>(i);
      inv_[1][b] = static_cast<std::size_t>(i);
    }
  }

  std::size_t act(std::size_t coset, CoverLetter l) const {
    return l.sign > 0 ? perm_[static_cast<std::size_t>(l.gen)][coset]
                      : inv_[static_cast<std::size_t>(l.gen)][coset];
  }

  std::size_t size() const { return static_cast<std::size_t>(n_); }

 private:
  std::int64_t n_;
  std::vector<std::vector<std::size_t>> perm_;
  std::vector<std::vector<std::size_t>> inv_;
};

const std::array<Word, 2>& base_generators() {
  static const std::array<Word, 2> gens{Word::generator("a"), Word::generator("b")};
  return gens;
}

Word letter_word(CoverLetter l) {
  const Word& g = base_generators()[static_cast<std::size_t>(l.gen)];
  return l.sign > 0 ? g : g.inverse();
}

/// A letter of the quadratic word: basis element `id` of the covering group.
struct QLetter {
  std::size_t id;
  int sign;
};

class QuadraticWord {
 public:
  std::vector<Word> values;  // id -> element of F(a,b)

  Word value(const QLetter& q) const { return q.sign > 0 ? values[q.id] : values[q.id].inverse(); }

  Word value(const std::vector<QLetter>& letters, std::size_t first, std::size_t last) const {
    Word out;
    for (std::size_t i = first; i < last; ++i) {
      out = out * value(letters[i]);
    }
    return out;
  }
};

std::vector<QLetter> free_reduce(const std::vector<QLetter>& word) {
  std::vector<QLetter> out;
  for (const QLetter& q : word) {
    if (!out.empty() && out.back().id == q.id && out.back().sign == -q.sign) {
      out.pop_back();
    } else {
      out.push_back(q);
    }
  }
  return out;
}

/// Positions (i1, j1, i2, j2) with i1 < j1 < i2 < j2 where i1,i2 hold one
/// basis letter and j1,j2 another.
std::optional<std::array<std::size_t, 4>> find_linked_pair(const std::vector<QLetter>& word) {
  std::map<std::size_t, std::vector<std::size_t>> positions;
  for (std::size_t i = 0; i < word.size(); ++i) {
    positions[word[i].id].push_back(i);
  }
  for (std::size_t i1 = 0; i1 < word.size(); ++i1) {
    const auto& xs = positions[word[i1].id];
    if (xs.size() != 2 || xs[0] != i1) {
      continue;
    }
    const std::size_t i2 = xs[1];
    for (std::size_t j1 = i1 + 1; j1 < i2; ++j1) {
      const auto& ys = positions[word[j1].id];
      if (ys.size() == 2 && ys[0] == j1 && ys[1] > i2) {
        return std::array<std::size_t, 4>{i1, j1, i2, ys[1]};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<CommutatorFactor> odd_power_template(std::int64_t n) {
  if (n < 3 || n % 2 == 0) {
    throw InvalidArgument("odd_power_template requires an odd n >= 3");
  }
  const Cover cover(n);
  const std::array<CoverLetter, 4> order{{{0, 1}, {1, 1}, {0, -1}, {1, -1}}};

  // Schreier transversal by breadth-first search from coset 0.
  std::vector<std::optional<Word>> transversal(cover.size());
  std::vector<std::array<bool, 2>> tree_edge(cover.size(), {false, false});
  transversal[0] = Word();
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t i = queue.front();
    queue.pop_front();
    for (const CoverLetter& l : order) {
      const std::size_t j = cover.act(i, l);
      if (transversal[j]) {
        continue;
      }
      transversal[j] = *transversal[i] * letter_word(l);
      queue.push_back(j);
      if (l.sign > 0) {
        tree_edge[i][static_cast<std::size_t>(l.gen)] = true;
      } else {
        tree_edge[j][static_cast<std::size_t>(l.gen)] = true;
      }
    }
  }

  // Free basis of the covering group: one element per non-tree edge.
  QuadraticWord quad;
  std::vector<std::array<std::size_t, 2>> edge_id(cover.size());
  for (std::size_t i = 0; i < cover.size(); ++i) {
    for (int g = 0; g < 2; ++g) {
      if (tree_edge[i][static_cast<std::size_t>(g)]) {
        continue;
      }
      const CoverLetter l{g, 1};
      edge_id[i][static_cast<std::size_t>(g)] = quad.values.size();
      quad.values.push_back(*transversal[i] * letter_word(l) * transversal[cover.act(i, l)]->inverse());
    }
  }

  // Rewrite the lifted boundary [a,b]^n.
  std::vector<QLetter> word;
  std::size_t coset = 0;
  for (std::int64_t rep = 0; rep < n; ++rep) {
    for (const CoverLetter& l : order) {
      if (l.sign > 0) {
        if (!tree_edge[coset][static_cast<std::size_t>(l.gen)]) {
          word.push_back({edge_id[coset][static_cast<std::size_t>(l.gen)], 1});
        }
        coset = cover.act(coset, l);
      } else {
        const std::size_t from = cover.act(coset, l);
        if (!tree_edge[from][static_cast<std::size_t>(l.gen)]) {
          word.push_back({edge_id[from][static_cast<std::size_t>(l.gen)], -1});
        }
        coset = from;
      }
    }
  }
  if (coset != 0) {
    throw ExpansionNotFound("boundary of the cover did not close up");
  }

  // Peel handles. Invariant: [a,b]^n = (factors so far) * conj * value(word) * conj^-1.
  std::vector<CommutatorFactor> factors;
  Word conj;
  for (;;) {
    word = free_reduce(word);
    while (word.size() >= 2 && word.front().id == word.back().id && word.front().sign == -word.back().sign) {
      conj = conj * quad.value(word.front());
      word.erase(word.begin());
      word.pop_back();
    }
    if (word.empty()) {
      break;
    }
    const auto linked = find_linked_pair(word);
    if (!linked) {
      throw ExpansionNotFound("quadratic boundary word has no linked pair");
    }
    const auto [i1, j1, i2, j2] = *linked;

    // Rotate so the word reads X B Y C X^-1 D Y^-1 E.
    std::vector<QLetter> rotated(word.begin() + static_cast<std::ptrdiff_t>(i1), word.end());
    rotated.insert(rotated.end(), word.begin(), word.begin() + static_cast<std::ptrdiff_t>(i1));
    const Word rotation = conj * quad.value(word, 0, i1);
    const std::size_t q1 = j1 - i1;
    const std::size_t p2 = i2 - i1;
    const std::size_t q2 = j2 - i1;

    const Word x = quad.value(rotated[0]);
    const Word y = quad.value(rotated[q1]);
    const Word b = quad.value(rotated, 1, q1);
    const Word c = quad.value(rotated, q1 + 1, p2);
    const Word d = quad.value(rotated, p2 + 1, q2);
    const Word z = d * c * b;

    // X B Y C X^-1 D Y^-1 = Z [Z^-1 X B, Y C B] Z^-1 · D C B
    factors.push_back({rotation * z, z.inverse() * x * b, y * c * b});

    std::vector<QLetter> rest;
    rest.insert(rest.end(), rotated.begin() + static_cast<std::ptrdiff_t>(p2 + 1),
                rotated.begin() + static_cast<std::ptrdiff_t>(q2));
    rest.insert(rest.end(), rotated.begin() + static_cast<std::ptrdiff_t>(q1 + 1),
                rotated.begin() + static_cast<std::ptrdiff_t>(p2));
    rest.insert(rest.end(), rotated.begin() + 1, rotated.begin() + static_cast<std::ptrdiff_t>(q1));
    rest.insert(rest.end(), rotated.begin() + static_cast<std::ptrdiff_t>(q2 + 1), rotated.end());
    word = std::move(rest);
    conj = rotation;
  }

  if (static_cast<std::int64_t>(factors.size()) != (n + 1) / 2) {
    throw ExpansionNotFound("cover produced " + std::to_string(factors.size()) + " handles for n = " +
                            std::to_string(n));
  }
  return factors;
}

}  // namespace scltwist::detail
