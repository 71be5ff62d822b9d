#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

namespace dkl {

enum class CellKind { Left, Right, TwoSided };

/// A partition of a set of group elements (as table indices) into cells,
/// with the preorder edges that witnessed it.  Blocks and their contents
/// are kept sorted, so two partitions over one table compare with ==.
struct CellPartition {
  CellKind kind = CellKind::Left;
  std::vector<std::vector<uint32_t>> blocks;
  std::vector<std::pair<uint32_t, uint32_t>> edges;

  void canonicalize() {
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end());
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  }

  const std::vector<uint32_t>* block_of(uint32_t e) const {
    for (const auto& b : blocks)
      if (std::binary_search(b.begin(), b.end(), e)) return &b;
    return nullptr;
  }

  bool same_block(uint32_t a, uint32_t b) const {
    const auto* blk = block_of(a);
    return blk && std::binary_search(blk->begin(), blk->end(), b);
  }

  friend bool same_blocks(const CellPartition& a, const CellPartition& b) {
    return a.blocks == b.blocks;
  }
};

}  // namespace dkl
