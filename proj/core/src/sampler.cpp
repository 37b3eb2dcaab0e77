#include "rig/sampler.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "rig/rng.hpp"

namespace rig {

BipartiteSample::BipartiteSample(std::uint32_t n, std::uint64_t seed,
                                 std::vector<std::uint64_t> offsets,
                                 std::vector<VertexId> member_ids)
    : n_(n), seed_(seed), offsets_(std::move(offsets)), members_(std::move(member_ids)) {
  if (offsets_.empty() || offsets_.front() != 0 || offsets_.back() != members_.size()) {
    throw std::invalid_argument("malformed attribute offsets");
  }
  for (std::size_t i = 0; i + 1 < offsets_.size(); ++i) {
    if (offsets_[i] > offsets_[i + 1]) {
      throw std::invalid_argument("attribute offsets must be nondecreasing");
    }
    const auto list = members(i);
    for (std::size_t j = 0; j < list.size(); ++j) {
      if (list[j] >= n_ || (j > 0 && list[j - 1] >= list[j])) {
        std::ostringstream msg;
        msg << "member list of attribute " << i
            << " must be strictly increasing within [0, " << n_ << ")";
        throw std::invalid_argument(msg.str());
      }
    }
  }
}

BipartiteSample BipartiteSample::from_lists(
    std::uint32_t n, std::uint64_t seed,
    const std::vector<std::vector<VertexId>>& attrs) {
  std::vector<std::uint64_t> offsets{0};
  std::vector<VertexId> members;
  for (const auto& list : attrs) {
    members.insert(members.end(), list.begin(), list.end());
    offsets.push_back(members.size());
  }
  return BipartiteSample(n, seed, std::move(offsets), std::move(members));
}

std::vector<std::vector<VertexId>> BipartiteSample::to_lists() const {
  std::vector<std::vector<VertexId>> out;
  out.reserve(m());
  for (std::size_t i = 0; i < m(); ++i) {
    const auto list = members(i);
    out.emplace_back(list.begin(), list.end());
  }
  return out;
}

namespace {

struct Block {
  std::vector<std::uint64_t> sizes;
  std::vector<VertexId> members;
};

Block sample_block(const AttributeWeights& w, std::uint64_t seed,
                   std::size_t begin, std::size_t end) {
  Block block;
  block.sizes.reserve(end - begin);
  std::vector<VertexId> subset;
  const auto p = w.p();
  for (std::size_t i = begin; i < end; ++i) {
    Xoshiro256 rng(derive_seed(seed, i));
    const auto k = static_cast<std::uint32_t>(binomial(rng, w.n(), p[i]));
    sample_subset(rng, w.n(), k, subset);
    block.sizes.push_back(subset.size());
    block.members.insert(block.members.end(), subset.begin(), subset.end());
  }
  return block;
}

}  // namespace

BipartiteSample sample_bipartite(const AttributeWeights& w, std::uint64_t seed,
                                 SampleOptions options) {
  const std::size_t m = w.m();
  const std::size_t workers =
      std::clamp<std::size_t>(options.workers, 1, std::max<std::size_t>(m, 1));

  std::vector<Block> blocks(workers);
  if (workers == 1) {
    blocks[0] = sample_block(w, seed, 0, m);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (std::size_t t = 0; t < workers; ++t) {
      const std::size_t begin = m * t / workers;
      const std::size_t end = m * (t + 1) / workers;
      threads.emplace_back([&, t, begin, end] { blocks[t] = sample_block(w, seed, begin, end); });
    }
  }

  std::vector<std::uint64_t> offsets;
  offsets.reserve(m + 1);
  offsets.push_back(0);
  std::size_t total = 0;
  for (const auto& block : blocks) total += block.members.size();
  std::vector<VertexId> members;
  members.reserve(total);
  for (auto& block : blocks) {
    for (auto size : block.sizes) offsets.push_back(offsets.back() + size);
    members.insert(members.end(), block.members.begin(), block.members.end());
  }
  return BipartiteSample(w.n(), seed, std::move(offsets), std::move(members));
}

ProjectedGraph project(const BipartiteSample& b) {
  ProjectedGraph g;
  g.n = b.n();
  for (std::size_t i = 0; i < b.m(); ++i) {
    const auto list = b.members(i);
    for (std::size_t x = 0; x < list.size(); ++x) {
      for (std::size_t y = x + 1; y < list.size(); ++y) {
        g.edges.emplace_back(list[x], list[y]);
      }
    }
  }
  std::sort(g.edges.begin(), g.edges.end());
  g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
  return g;
}

std::string to_edge_list(const ProjectedGraph& g) {
  std::ostringstream out;
  for (const auto& [u, v] : g.edges) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace rig
