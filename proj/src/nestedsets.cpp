#include "pa/nestedsets.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <stdexcept>

namespace pa {

namespace {

using Mask = std::uint64_t;

Mask mask_of(const Block& b) {
  Mask m = 0;
  for (int x : b) m |= Mask(1) << (x - 1);
  return m;
}

Block block_of(Mask m) {
  Block b;
  for (int i = 0; m; ++i, m >>= 1)
    if (m & 1) b.push_back(i + 1);
  return b;
}

Mask full_mask(int n) { return (Mask(1) << (n + 1)) - 1; }

std::vector<Mask> chain_masks(const Beta& b) {
  std::vector<Mask> out;
  Mask m = mask_of(b.min_block);
  out.push_back(m);
  for (int x : b.tail) {
    m |= Mask(1) << (x - 1);
    out.push_back(m);
  }
  return out;  // bottom-up
}

bool masks_subset(const std::vector<Mask>& a, const std::vector<Mask>& b) {
  return std::all_of(a.begin(), a.end(),
                     [&](Mask x) { return std::find(b.begin(), b.end(), x) != b.end(); });
}

// A set of blocks that is totally ordered by inclusion, and whether its
// consecutive sizes all differ by one.
bool is_chain(std::vector<Mask> s, bool& saturated) {
  std::sort(s.begin(), s.end(), [](Mask a, Mask b) { return std::popcount(a) < std::popcount(b); });
  saturated = true;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if ((s[i - 1] & ~s[i]) != 0 || s[i - 1] == s[i]) return false;
    if (std::popcount(s[i]) != std::popcount(s[i - 1]) + 1) saturated = false;
  }
  return true;
}

// Union of the member chains of an antichain of B_1 elements must be a chain
// that is not itself an element of B_1.
bool union_ok(const std::vector<const std::vector<Mask>*>& members) {
  std::vector<Mask> u;
  for (auto* m : members) u.insert(u.end(), m->begin(), m->end());
  std::sort(u.begin(), u.end());
  u.erase(std::unique(u.begin(), u.end()), u.end());
  bool saturated;
  return is_chain(u, saturated) && !saturated;
}

bool chains_comparable(const std::vector<Mask>& a, const std::vector<Mask>& b) {
  return masks_subset(a, b) || masks_subset(b, a);
}

// Does adding x to the 1-nested family `cur` keep it 1-nested?
bool extends_1_nested(const std::vector<const std::vector<Mask>*>& cur, const std::vector<Mask>& x) {
  std::vector<std::size_t> incomparable;
  for (std::size_t i = 0; i < cur.size(); ++i)
    if (!chains_comparable(*cur[i], x)) incomparable.push_back(i);
  const std::size_t m = incomparable.size();
  for (std::uint64_t s = 1; s < (std::uint64_t(1) << m); ++s) {
    std::vector<const std::vector<Mask>*> members{&x};
    bool anti = true;
    for (std::size_t i = 0; i < m && anti; ++i) {
      if (!(s >> i & 1)) continue;
      for (std::size_t j = 0; j < i && anti; ++j)
        if ((s >> j & 1) && chains_comparable(*cur[incomparable[i]], *cur[incomparable[j]])) anti = false;
      members.push_back(cur[incomparable[i]]);
    }
    if (anti && !union_ok(members)) return false;
  }
  return true;
}

}  // namespace

bool block_less(const Block& a, const Block& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

bool is_subset(const Block& a, const Block& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

Block block_union(const Block& a, const Block& b) {
  Block u;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
  return u;
}

Block Beta::max_block() const {
  Block m = min_block;
  m.insert(m.end(), tail.begin(), tail.end());
  std::sort(m.begin(), m.end());
  return m;
}

std::vector<Block> Beta::chain() const {
  std::vector<Block> out;
  for (Mask m : chain_masks(*this)) out.push_back(block_of(m));
  std::reverse(out.begin(), out.end());
  return out;
}

IntVec Beta::kappa_normal(int n) const {
  IntVec v(static_cast<std::size_t>(n + 1), Int(0));
  for (Mask m : chain_masks(*this))
    for (int i = 0; i <= n; ++i)
      if (m >> i & 1) v[static_cast<std::size_t>(i)] += 1;
  return v;
}

bool operator<(const Beta& a, const Beta& b) {
  if (a.k() != b.k()) return a.k() < b.k();
  auto ca = a.chain(), cb = b.chain();
  std::reverse(ca.begin(), ca.end());
  std::reverse(cb.begin(), cb.end());
  return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(), cb.end(), block_less);
}

Beta singleton_beta(const Block& b) { return Beta{b, {}}; }

void validate_beta(const Beta& beta, int n) {
  auto bad = [&](const std::string& why) { return std::invalid_argument("invalid chain " + to_string(beta) + ": " + why); };
  if (n < 1 || n > 62) throw std::invalid_argument("n out of range");
  if (beta.min_block.empty()) throw bad("empty block");
  if (!std::is_sorted(beta.min_block.begin(), beta.min_block.end()) ||
      std::adjacent_find(beta.min_block.begin(), beta.min_block.end()) != beta.min_block.end())
    throw bad("block not sorted");
  Mask seen = 0;
  auto take = [&](int x) {
    if (x < 1 || x > n + 1) throw bad("element out of range");
    Mask bit = Mask(1) << (x - 1);
    if (seen & bit) throw bad("repeated element");
    seen |= bit;
  };
  for (int x : beta.min_block) take(x);
  for (int x : beta.tail) take(x);
  if (std::popcount(seen) > n) throw bad("largest block must be a proper subset");
}

Beta beta_from_chain(std::vector<Block> blocks, int n) {
  if (blocks.empty()) throw std::invalid_argument("empty chain");
  for (auto& b : blocks) {
    std::sort(b.begin(), b.end());
    if (std::adjacent_find(b.begin(), b.end()) != b.end()) throw std::invalid_argument("repeated element in block");
  }
  std::sort(blocks.begin(), blocks.end(), block_less);
  Beta beta{blocks.front(), {}};
  for (std::size_t i = 1; i < blocks.size(); ++i) {
    if (blocks[i].size() != blocks[i - 1].size() + 1 || !is_subset(blocks[i - 1], blocks[i]))
      throw std::invalid_argument("blocks do not form a saturated chain");
    Block diff;
    std::set_difference(blocks[i].begin(), blocks[i].end(), blocks[i - 1].begin(), blocks[i - 1].end(),
                        std::back_inserter(diff));
    beta.tail.push_back(diff.front());
  }
  validate_beta(beta, n);
  return beta;
}

std::string to_string(const Block& b) {
  std::string s = "{";
  for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::to_string(b[i]);
  return s + "}";
}

std::string to_string(const Beta& b) {
  std::string s = "{";
  auto c = b.chain();
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + to_string(c[i]);
  return s + "}";
}

bool is_building_set(const std::vector<Block>& blocks, int n) {
  std::set<Mask> s;
  for (const auto& b : blocks) {
    if (b.empty()) return false;
    for (int x : b)
      if (x < 1 || x > n + 1) return false;
    s.insert(mask_of(b));
  }
  for (int i = 0; i <= n; ++i)
    if (!s.count(Mask(1) << i)) return false;
  for (Mask a : s)
    for (Mask b : s)
      if ((a & b) && !s.count(a | b)) return false;
  return true;
}

std::vector<Beta> enumerate_B1(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  std::vector<Beta> out;
  const Mask all = full_mask(n);
  for (Mask m = 1; m < all; ++m) {
    Beta b{block_of(m), {}};
    auto grow = [&](auto&& self, Mask used) -> void {
      out.push_back(b);
      if (std::popcount(used) >= n) return;
      for (int x = 1; x <= n + 1; ++x) {
        if (used >> (x - 1) & 1) continue;
        b.tail.push_back(x);
        self(self, used | Mask(1) << (x - 1));
        b.tail.pop_back();
      }
    };
    grow(grow, m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

BuildingSet b_beta(const Beta& beta, int n) {
  validate_beta(beta, n);
  if (beta.k() < 2) throw std::invalid_argument("B_beta needs a non-singleton beta");
  const Mask all = full_mask(n);
  auto ch = chain_masks(beta);
  const Mask lo = ch.front(), hi = ch.back();
  std::set<Mask> s(ch.begin(), ch.end());
  for (int i = 0; i <= n; ++i) s.insert(Mask(1) << i);
  for (Mask m = 1; m <= all; ++m) {
    if ((m & ~lo) == 0 && m != lo) s.insert(m);
    if ((hi & ~m) == 0 && m != hi) s.insert(m);
  }
  BuildingSet B{n, {}};
  for (Mask m : s) B.blocks.push_back(block_of(m));
  std::sort(B.blocks.begin(), B.blocks.end(), block_less);
  return B;
}

bool is_nested(const std::vector<Block>& N, const BuildingSet& B,
               const std::function<bool(const Block&)>& complex_membership) {
  std::set<Mask> inB;
  for (const auto& b : B.blocks) inB.insert(mask_of(b));
  std::vector<Mask> m;
  for (const auto& b : N) m.push_back(mask_of(b));
  if (m.size() > 24) throw std::invalid_argument("nested-set candidate too large");
  for (std::uint64_t s = 1; s < (std::uint64_t(1) << m.size()); ++s) {
    if (std::popcount(s) < 2) continue;
    bool anti = true;
    Mask u = 0;
    for (std::size_t i = 0; i < m.size() && anti; ++i) {
      if (!(s >> i & 1)) continue;
      for (std::size_t j = 0; j < i; ++j)
        if ((s >> j & 1) && ((m[i] & ~m[j]) == 0 || (m[j] & ~m[i]) == 0)) anti = false;
      u |= m[i];
    }
    if (!anti) continue;
    if (inB.count(u) || !complex_membership(block_of(u))) return false;
  }
  return true;
}

std::vector<std::vector<Block>> maximal_nested_sets(const BuildingSet& B) {
  const Mask all = full_mask(B.n);
  std::set<Mask> inB;
  std::vector<Mask> elems;
  for (const auto& b : B.blocks) {
    Mask m = mask_of(b);
    inB.insert(m);
    if (m != all) elems.push_back(m);
  }
  if (!inB.count(all)) throw std::invalid_argument("building set must contain the ground set");

  auto can_add = [&](const std::vector<Mask>& cur, Mask x) {
    if (std::find(cur.begin(), cur.end(), x) != cur.end()) return false;
    std::vector<Mask> inc;
    for (Mask c : cur)
      if ((c & ~x) && (x & ~c)) inc.push_back(c);
    for (std::uint64_t s = 1; s < (std::uint64_t(1) << inc.size()); ++s) {
      Mask u = x;
      bool anti = true;
      for (std::size_t i = 0; i < inc.size() && anti; ++i) {
        if (!(s >> i & 1)) continue;
        for (std::size_t j = 0; j < i; ++j)
          if ((s >> j & 1) && (!(inc[i] & ~inc[j]) || !(inc[j] & ~inc[i]))) anti = false;
        u |= inc[i];
      }
      if (anti && inB.count(u)) return false;
    }
    return true;
  };

  std::vector<std::vector<Block>> out;
  std::vector<Mask> cur;
  auto dfs = [&](auto&& self, std::size_t start) -> void {
    bool maximal = true;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      if (!can_add(cur, elems[i])) continue;
      maximal = false;
      if (i < start) continue;
      cur.push_back(elems[i]);
      self(self, i + 1);
      cur.pop_back();
    }
    if (maximal) {
      std::vector<Block> s;
      for (Mask m : cur) s.push_back(block_of(m));
      std::sort(s.begin(), s.end(), block_less);
      out.push_back(std::move(s));
    }
  };
  dfs(dfs, 0);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), block_less);
  });
  return out;
}

bool comparable(const Beta& a, const Beta& b) { return chains_comparable(chain_masks(a), chain_masks(b)); }

bool is_1_nested(const std::vector<Beta>& N) {
  std::vector<std::vector<Mask>> chains;
  for (const auto& b : N) chains.push_back(chain_masks(b));
  std::vector<const std::vector<Mask>*> cur;
  for (const auto& c : chains) {
    for (auto* p : cur)
      if (*p == c) return false;  // members must be distinct
    if (!extends_1_nested(cur, c)) return false;
    cur.push_back(&c);
  }
  return true;
}

std::vector<std::vector<Beta>> enumerate_maximal_1_nested(int n) {
  auto b1 = enumerate_B1(n);
  std::vector<std::vector<Mask>> chains;
  for (const auto& b : b1) chains.push_back(chain_masks(b));

  std::vector<std::vector<Beta>> out;
  std::vector<std::size_t> cur;
  std::vector<const std::vector<Mask>*> cur_chains;
  auto dfs = [&](auto&& self, std::size_t start) -> void {
    bool maximal = true;
    for (std::size_t i = 0; i < b1.size(); ++i) {
      if (std::find(cur.begin(), cur.end(), i) != cur.end()) continue;
      if (!extends_1_nested(cur_chains, chains[i])) continue;
      maximal = false;
      if (i < start) continue;
      cur.push_back(i);
      cur_chains.push_back(&chains[i]);
      self(self, i + 1);
      cur.pop_back();
      cur_chains.pop_back();
    }
    if (maximal) {
      std::vector<Beta> s;
      for (auto i : cur) s.push_back(b1[i]);
      out.push_back(std::move(s));
    }
  };
  dfs(dfs, 0);
  return out;
}

bool labels_share_vertex(const Beta& a, const Beta& b, int n) {
  validate_beta(a, n);
  validate_beta(b, n);
  if (a == b) throw std::invalid_argument("labels must differ");
  return comparable(a, b) || is_1_nested({a, b});
}

}  // namespace pa
