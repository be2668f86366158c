// Building sets and nested-set combinatorics over the ground set [n+1] = {1, ..., n+1}.
#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "pa/exact.hpp"

namespace pa {

/// A nonempty subset of [n+1], kept sorted. Ground elements are 1-based.
using Block = std::vector<int>;

/// Blocks ordered by size, then lexicographically.
bool block_less(const Block& a, const Block& b);
bool is_subset(const Block& a, const Block& b);
Block block_union(const Block& a, const Block& b);

/// A chain element of B_1: beta_min together with the elements added on the
/// way up to beta_max, listed from the top down as (i_{k-1}, ..., i_1).
struct Beta {
  Block min_block;
  std::vector<int> tail;

  std::size_t k() const { return tail.size() + 1; }
  std::size_t l() const { return min_block.size() - 1; }
  Block max_block() const;
  /// Member blocks from beta_max down to beta_min.
  std::vector<Block> chain() const;
  /// Coefficient of x_i in kappa_beta: the number of member blocks containing i.
  IntVec kappa_normal(int n) const;

  friend bool operator==(const Beta&, const Beta&) = default;
};

/// Canonical order: by k, then by the member blocks from beta_min upwards.
bool operator<(const Beta& a, const Beta& b);

Beta singleton_beta(const Block& b);

/// Builds a Beta from member blocks in any order; they must form a chain whose
/// consecutive sizes differ by one. Throws std::invalid_argument otherwise.
Beta beta_from_chain(std::vector<Block> blocks, int n);

/// Throws std::invalid_argument unless beta is a valid element of B_1 for n.
void validate_beta(const Beta& beta, int n);

std::string to_string(const Block& b);
std::string to_string(const Beta& b);

struct BuildingSet {
  int n = 0;
  std::vector<Block> blocks;  // canonical order
};

bool is_building_set(const std::vector<Block>& blocks, int n);

std::vector<Beta> enumerate_B1(int n);

/// B_beta for a non-singleton beta, including [n+1] itself.
BuildingSet b_beta(const Beta& beta, int n);

/// Every antichain (two or more pairwise incomparable members) of N has its
/// union inside the complex and outside B.
bool is_nested(const std::vector<Block>& N, const BuildingSet& B,
               const std::function<bool(const Block&)>& complex_membership);

/// Maximal nested sets of B with its maximal element [n+1] removed.
std::vector<std::vector<Block>> maximal_nested_sets(const BuildingSet& B);

/// True when the member chains of a and b are comparable under inclusion.
bool comparable(const Beta& a, const Beta& b);

/// The 1-nested condition on a set of B_1 elements.
bool is_1_nested(const std::vector<Beta>& N);

std::vector<std::vector<Beta>> enumerate_maximal_1_nested(int n);

bool labels_share_vertex(const Beta& a, const Beta& b, int n);

}  // namespace pa
