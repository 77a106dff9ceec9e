#include "oracles.hpp"

#include <cctype>

namespace oracle {

Seq reduce(const Seq& word) {
  Seq out;
  for (const Sym& s : word) {
    if (!out.empty() && out.back().first == s.first && out.back().second == -s.second) {
      out.pop_back();
    } else {
      out.push_back(s);
    }
  }
  return out;
}

Seq inverse(const Seq& word) {
  Seq out;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    out.emplace_back(it->first, -it->second);
  }
  return out;
}

Seq concat(const Seq& a, const Seq& b) {
  Seq out = a;
  out.insert(out.end(), b.begin(), b.end());
  return reduce(out);
}

Seq commutator(const Seq& a, const Seq& b) { return concat(concat(a, b), concat(inverse(a), inverse(b))); }

Seq letters(const std::string& compact) {
  Seq out;
  for (char c : compact) {
    const bool upper = std::isupper(static_cast<unsigned char>(c)) != 0;
    out.emplace_back(std::string(1, static_cast<char>(std::tolower(static_cast<unsigned char>(c)))), upper ? -1 : 1);
  }
  return out;
}

Seq cyclic_reduce(const Seq& word) {
  Seq w = reduce(word);
  std::size_t lo = 0;
  std::size_t hi = w.size();
  while (hi - lo >= 2 && w[lo].first == w[hi - 1].first && w[lo].second == -w[hi - 1].second) {
    ++lo;
    --hi;
  }
  return Seq(w.begin() + static_cast<std::ptrdiff_t>(lo), w.begin() + static_cast<std::ptrdiff_t>(hi));
}

bool is_commutator(const Seq& word) {
  const Seq w = cyclic_reduce(word);
  const std::size_t n = w.size();
  if (n == 0) {
    return true;
  }
  if (n % 2 != 0) {
    return false;
  }
  const std::size_t half = n / 2;
  auto at = [&](std::size_t rot, std::size_t i) -> const Sym& { return w[(rot + i) % n]; };
  auto inverse_of = [](const Sym& a, const Sym& b) { return a.first == b.first && a.second == -b.second; };
  for (std::size_t rot = 0; rot < n; ++rot) {
    for (std::size_t la = 0; la <= half; ++la) {
      for (std::size_t lb = 0; la + lb <= half; ++lb) {
        const std::size_t lc = half - la - lb;
        // Positions: A [0,la) B [la,la+lb) C [la+lb,half) A^-1 B^-1 C^-1.
        bool ok = true;
        for (std::size_t i = 0; ok && i < la; ++i) {
          ok = inverse_of(at(rot, i), at(rot, half + la - 1 - i));
        }
        for (std::size_t i = 0; ok && i < lb; ++i) {
          ok = inverse_of(at(rot, la + i), at(rot, half + la + lb - 1 - i));
        }
        for (std::size_t i = 0; ok && i < lc; ++i) {
          ok = inverse_of(at(rot, la + lb + i), at(rot, n - 1 - i));
        }
        if (ok) {
          return true;
        }
      }
    }
  }
  return false;
}

std::vector<Seq> all_words(const std::vector<std::string>& generators, std::size_t max_length) {
  std::vector<Seq> out{Seq{}};
  std::vector<Seq> frontier{Seq{}};
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::vector<Seq> next;
    for (const Seq& w : frontier) {
      for (const std::string& g : generators) {
        for (int s : {1, -1}) {
          if (!w.empty() && w.back().first == g && w.back().second == -s) {
            continue;
          }
          Seq v = w;
          v.emplace_back(g, s);
          next.push_back(v);
        }
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

std::optional<std::pair<Seq, Seq>> two_commutator_witness(const Seq& word, std::size_t max_length) {
  std::vector<std::string> gens;
  for (const Sym& s : word) {
    bool seen = false;
    for (const std::string& g : gens) {
      seen = seen || g == s.first;
    }
    if (!seen) {
      gens.push_back(s.first);
    }
  }
  const auto words = all_words(gens, max_length);
  for (const Seq& a : words) {
    for (const Seq& b : words) {
      if (is_commutator(concat(word, inverse(commutator(a, b))))) {
        return std::pair{a, b};
      }
    }
  }
  return std::nullopt;
}

std::optional<std::int64_t> scan_contradiction(std::int64_t g, std::int64_t p, std::int64_t q, std::int64_t limit) {
  for (std::int64_t n = q; n <= limit; n += q) {
    const std::int64_t rn = p * n / q;
    const std::int64_t value = (18 * g - 6) * rn - n + 18 - 6 * g;
    if (value < 0) {
      return n;
    }
  }
  return std::nullopt;
}

std::vector<std::int64_t> tridiagonal_minors(std::size_t m) {
  std::vector<std::int64_t> out;
  std::int64_t d2 = 1;
  std::int64_t d1 = 2;
  for (std::size_t k = 1; k <= m; ++k) {
    out.push_back(d1);
    const std::int64_t next = 2 * d1 - d2;
    d2 = d1;
    d1 = next;
  }
  return out;
}

std::int64_t cofactor_determinant(const std::vector<std::vector<std::int64_t>>& m) {
  const std::size_t n = m.size();
  if (n == 0) {
    return 1;
  }
  if (n == 1) {
    return m[0][0];
  }
  std::int64_t det = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) {
      continue;
    }
    std::vector<std::vector<std::int64_t>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<std::int64_t> row;
      for (std::size_t c = 0; c < n; ++c) {
        if (c != j) {
          row.push_back(m[i][c]);
        }
      }
      minor.push_back(std::move(row));
    }
    const std::int64_t term = m[0][j] * cofactor_determinant(minor);
    det += (j % 2 == 0) ? term : -term;
  }
  return det;
}

}  // namespace oracle
