#include "fractal/subshift.hpp"

#include <algorithm>

namespace fractal {

void Substitution::validate() const {
  if (alphabet.empty()) throw MalformedTable("empty alphabet");
  std::set<char> seen(alphabet.begin(), alphabet.end());
  if (seen.size() != alphabet.size())
    throw MalformedTable("alphabet symbols must be distinct");
  for (char s : alphabet) {
    auto it = rules.find(s);
    if (it == rules.end() || it->second.empty())
      throw MalformedTable(std::string("missing or empty rule for '") + s +
                           "'");
    for (char t : it->second)
      if (!seen.count(t))
        throw MalformedTable(std::string("rule image leaves the alphabet: '") +
                             t + "'");
  }
}

Substitution sigma_substitution() {
  return {"abcd", {{'a', "aca"}, {'b', "d"}, {'c', "b"}, {'d', "c"}}};
}
Substitution sigma_prime_substitution() {
  return {"abcd", {{'a', "ac"}, {'b', "ac"}, {'c', "ad"}, {'d', "ab"}}};
}
Substitution thue_morse_substitution() {
  return {"01", {{'0', "01"}, {'1', "10"}}};
}

std::string apply_substitution(const Substitution& sub, const std::string& w) {
  sub.validate();
  std::string out;
  for (char s : w) {
    auto it = sub.rules.find(s);
    if (it == sub.rules.end())
      throw MalformedTable(std::string("symbol outside the alphabet: '") + s +
                           "'");
    out += it->second;
  }
  return out;
}

std::string fixed_point_prefix(const Substitution& sub, char seed,
                               std::size_t L) {
  sub.validate();
  auto it = sub.rules.find(seed);
  if (it == sub.rules.end())
    throw MalformedTable("seed outside the alphabet");
  if (it->second.size() < 2 || it->second[0] != seed)
    throw PrefixConditionViolated(
        "seed must be a proper prefix of its own image");
  std::string w(1, seed);
  while (w.size() < L) {
    std::string next = apply_substitution(sub, w);
    if (next.size() <= w.size())
      throw PrefixConditionViolated("iterates do not grow");
    w = std::move(next);
  }
  return w.substr(0, L);
}

ToeplitzResult toeplitz_periods(const std::string& prefix,
                                std::size_t min_checks) {
  ToeplitzResult res;
  const std::size_t L = prefix.size();
  for (std::size_t n = 0; n < L / 4; ++n) {
    bool found = false;
    for (std::size_t p = 1; !found && n + p * min_checks < L; ++p) {
      bool ok = true;
      for (std::size_t k = 1; n + p * k < L; ++k)
        if (prefix[n + p * k] != prefix[n]) {
          ok = false;
          break;
        }
      if (ok) {
        res.period[n] = p;
        found = true;
      }
    }
    if (!found) ++res.skipped;
  }
  return res;
}

std::vector<std::vector<long long>> substitution_matrix(
    const Substitution& sub) {
  sub.validate();
  const std::size_t m = sub.alphabet.size();
  std::vector<std::vector<long long>> M(m, std::vector<long long>(m, 0));
  for (std::size_t j = 0; j < m; ++j)
    for (char s : sub.rules.at(sub.alphabet[j]))
      M[sub.alphabet.find(s)][j] += 1;
  return M;
}

PrimitivityResult is_primitive(const Substitution& sub) {
  auto M = substitution_matrix(sub);
  const std::size_t m = M.size();
  const int cap = 4 * (int)(m * m);
  // boolean reachability powers are enough for positivity
  auto pos = [m](const std::vector<std::vector<long long>>& A) {
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        if (A[i][j] == 0) return false;
    return true;
  };
  std::vector<std::vector<long long>> P = M;
  for (int k = 1; k <= cap; ++k) {
    if (pos(P)) return {true, k};
    std::vector<std::vector<long long>> N(m, std::vector<long long>(m, 0));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t l = 0; l < m; ++l)
        if (P[i][l])
          for (std::size_t j = 0; j < m; ++j)
            N[i][j] |= (P[i][l] && M[l][j]) ? 1 : 0;
    P = std::move(N);
  }
  return {false, 0};
}

namespace {
std::set<std::string> factors_of(const std::string& w, std::size_t max_len) {
  std::set<std::string> fs;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t l = 1; l <= max_len && i + l <= w.size(); ++l)
      fs.insert(w.substr(i, l));
  return fs;
}
}  // namespace

FactorLanguage language(const Substitution& sub, char seed,
                        std::size_t max_len) {
  sub.validate();
  std::string w(1, seed);
  std::set<std::string> prev;
  for (int round = 0; round < 64; ++round) {
    w = apply_substitution(sub, w);
    std::set<std::string> cur = factors_of(w, max_len);
    bool stable = (cur == prev && w.size() >= 4 * max_len);
    prev = std::move(cur);
    if (stable || w.size() > (1u << 16)) break;
  }
  return {max_len, std::move(prev)};
}

std::map<char, char> language_match_permutation(const FactorLanguage& from,
                                                const FactorLanguage& to,
                                                const std::string& alphabet) {
  if (from.factors.size() != to.factors.size()) return {};
  std::string perm = alphabet;
  std::sort(perm.begin(), perm.end());
  const std::string sorted = perm;
  // try the identity first, then all other permutations
  do {
    std::map<char, char> m;
    for (std::size_t i = 0; i < sorted.size(); ++i) m[sorted[i]] = perm[i];
    bool ok = true;
    for (const auto& w : from.factors) {
      std::string img = w;
      for (char& c : img) c = m.at(c);
      if (!to.factors.count(img)) {
        ok = false;
        break;
      }
    }
    if (ok) return m;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {};
}

double repetitivity_bound(const Substitution& sub, char seed,
                          std::size_t w_len) {
  std::string prefix = fixed_point_prefix(sub, seed, 1u << 14);
  FactorLanguage lang = language(sub, seed, w_len);
  double best = 1.0;
  for (const auto& w : lang.factors) {
    // gaps between consecutive occurrence starts of w in the prefix
    std::size_t last = std::string::npos, max_gap = 0, first = 0;
    bool seen = false;
    for (std::size_t pos = prefix.find(w); pos != std::string::npos;
         pos = prefix.find(w, pos + 1)) {
      if (!seen) {
        first = pos;
        seen = true;
      } else {
        max_gap = std::max(max_gap, pos - last);
      }
      last = pos;
    }
    if (!seen) continue;  // not visible in this prefix window
    // a window of length R always contains w iff R >= |w| + max(first occ.
    // offset, largest occurrence-start gap - 1)
    std::size_t slack = std::max(first, max_gap > 0 ? max_gap - 1 : 0);
    std::size_t R = w.size() + slack;
    best = std::max(best, (double)R / (double)w.size());
  }
  return best;
}

std::vector<std::string> presentation_relators(int k_max) {
  Substitution sigma = sigma_substitution();
  std::vector<std::string> out;
  for (std::string base : {std::string("adadadad"),
                           std::string("adacacadacacadacacadacac")}) {
    std::string w = base;
    for (int k = 0; k <= k_max; ++k) {
      out.push_back(w);
      w = apply_substitution(sigma, w);
    }
  }
  return out;
}

}  // namespace fractal
