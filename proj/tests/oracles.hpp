#pragma once

// Independent reference evaluators used only by the tests. None of them
// calls into the library's state-sum, coloring or union-find code.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace oracle {

// A Laurent polynomial in one variable: exponent -> coefficient.
using Poly1 = std::map<int, long long>;

inline void add_to(Poly1& p, int e, long long c) {
  p[e] += c;
  if (p[e] == 0) p.erase(e);
}

inline Poly1 mul(const Poly1& a, const Poly1& b) {
  Poly1 r;
  for (const auto& [e1, c1] : a)
    for (const auto& [e2, c2] : b) add_to(r, e1 + e2, c1 * c2);
  return r;
}

// Raw PD crossing: four labels counterclockwise, slot 0 the incoming
// under-edge (virtual crossings are not handled).
using RawCrossing = std::array<int, 4>;

// Kauffman bracket by loop tracing: at each crossing, the A-smoothing pairs
// slots (0,1),(2,3) and the B-smoothing (0,3),(1,2). Each loop is followed
// end to end by hand.
inline Poly1 naive_kauffman(const std::vector<RawCrossing>& pd, int extra_circles = 0) {
  const int n = static_cast<int>(pd.size());
  Poly1 total;
  if (n == 0) {
    Poly1 one{{0, 1}};
    const Poly1 d{{2, -1}, {-2, -1}};
    for (int i = 1; i < extra_circles; ++i) one = mul(one, d);
    return one;
  }
  for (std::uint32_t state = 0; state < (1u << n); ++state) {
    // partner[c][s]: the slot joined to s by the chosen smoothing.
    std::vector<std::array<int, 4>> partner(static_cast<std::size_t>(n));
    int a_count = 0;
    for (int c = 0; c < n; ++c) {
      const bool b = (state >> c) & 1u;
      if (!b) {
        partner[c] = {1, 0, 3, 2};
        ++a_count;
      } else {
        partner[c] = {3, 2, 1, 0};
      }
    }
    std::vector<std::array<bool, 4>> seen(static_cast<std::size_t>(n), {false, false, false, false});
    int loops = 0;
    for (int c0 = 0; c0 < n; ++c0) {
      for (int s0 = 0; s0 < 4; ++s0) {
        if (seen[c0][s0]) continue;
        ++loops;
        int c = c0, s = s0;
        while (!seen[c][s]) {
          seen[c][s] = true;
          const int p = partner[c][s];
          seen[c][p] = true;
          // Leave through slot p along its edge to the other occurrence.
          const int label = pd[c][p];
          int nc = -1, ns = -1;
          for (int c2 = 0; c2 < n && nc < 0; ++c2) {
            for (int s2 = 0; s2 < 4; ++s2) {
              if (pd[c2][s2] == label && !(c2 == c && s2 == p)) {
                nc = c2;
                ns = s2;
                break;
              }
            }
          }
          c = nc;
          s = ns;
        }
      }
    }
    loops += extra_circles;
    Poly1 term{{a_count - (n - a_count), 1}};
    const Poly1 d{{2, -1}, {-2, -1}};
    for (int i = 1; i < loops; ++i) term = mul(term, d);
    for (const auto& [e, c] : term) add_to(total, e, c);
  }
  return total;
}

// Tricolorings by brute force over all edge colorings: over-edges keep their
// color, and at every crossing the three colors are all equal or all distinct.
inline long long naive_tricolorings(const std::vector<RawCrossing>& pd) {
  std::vector<int> labels;
  for (const auto& x : pd)
    for (int e : x) labels.push_back(e);
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  const int m = static_cast<int>(labels.size());
  auto pos = [&](int label) { return static_cast<int>(std::lower_bound(labels.begin(), labels.end(), label) - labels.begin()); };
  long long total = 1;
  for (int i = 0; i < m; ++i) total *= 3;
  long long count = 0;
  std::vector<int> col(static_cast<std::size_t>(m));
  for (long long code = 0; code < total; ++code) {
    long long r = code;
    for (int i = 0; i < m; ++i) {
      col[i] = static_cast<int>(r % 3);
      r /= 3;
    }
    bool ok = true;
    for (const auto& x : pd) {
      const int o1 = col[pos(x[1])], o2 = col[pos(x[3])];
      const int u1 = col[pos(x[0])], u2 = col[pos(x[2])];
      if (o1 != o2) {
        ok = false;
        break;
      }
      const bool all_same = o1 == u1 && u1 == u2;
      const bool all_diff = o1 != u1 && u1 != u2 && o1 != u2;
      if (!all_same && !all_diff) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
  }
  return count;
}

// Bicolorings by brute force: every 2-coloring of the edges whose two ends
// differ on each strand of every crossing.
inline long long naive_bicolorings(const std::vector<RawCrossing>& pd) {
  std::vector<int> labels;
  for (const auto& x : pd)
    for (int e : x) labels.push_back(e);
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  const int m = static_cast<int>(labels.size());
  auto pos = [&](int label) { return static_cast<int>(std::lower_bound(labels.begin(), labels.end(), label) - labels.begin()); };
  long long count = 0;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    bool ok = true;
    for (const auto& x : pd) {
      for (int s : {0, 1}) {
        if (((mask >> pos(x[s])) & 1u) == ((mask >> pos(x[s + 2])) & 1u)) ok = false;
      }
    }
    if (ok) ++count;
  }
  return count;
}

}  // namespace oracle
