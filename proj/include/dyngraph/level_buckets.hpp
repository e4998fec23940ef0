#pragma once

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "absl/container/flat_hash_map.h"
#include "dyngraph/graph.hpp"
#include "dyngraph/rng.hpp"

namespace dyngraph {

/// Hash set of vertices with O(1) uniform sampling: a dense array plus a
/// position index.
class IndexedSet {
public:
    bool insert(VertexId x) {
        if (!pos_.emplace(x, static_cast<std::uint32_t>(items_.size())).second) {
            return false;
        }
        items_.push_back(x);
        return true;
    }

    bool erase(VertexId x) {
        auto it = pos_.find(x);
        if (it == pos_.end()) {
            return false;
        }
        const std::uint32_t i = it->second;
        pos_.erase(it);
        const VertexId last = items_.back();
        items_.pop_back();
        if (i < items_.size()) {
            items_[i] = last;
            pos_[last] = i;
        }
        return true;
    }

    bool contains(VertexId x) const { return pos_.count(x) != 0; }
    std::size_t size() const { return items_.size(); }
    bool empty() const { return items_.empty(); }
    std::span<const VertexId> items() const { return items_; }
    VertexId sample(Rng& rng) const { return items_[rng.below(items_.size())]; }

private:
    std::vector<VertexId> items_;
    absl::flat_hash_map<VertexId, std::uint32_t> pos_;
};

/// The neighbors of one vertex, bucketed by the level recorded for each
/// neighbor. Levels run from -1 to `max_level` inclusive.
class LevelBuckets {
public:
    explicit LevelBuckets(int max_level = 0) : buckets_(static_cast<std::size_t>(max_level) + 2) {}

    int max_level() const { return static_cast<int>(buckets_.size()) - 2; }
    std::size_t size() const { return where_.size(); }
    bool contains(VertexId w) const { return where_.count(w) != 0; }

    void insert(VertexId w, int level) {
        auto& b = bucket_ref(level);
        where_.emplace(w, Slot{static_cast<std::int16_t>(level), static_cast<std::uint32_t>(b.size())});
        b.push_back(w);
    }

    void erase(VertexId w) {
        auto it = where_.find(w);
        assert(it != where_.end());
        detach(it->second);
        where_.erase(it);
    }

    /// Recorded level of neighbor w, which must be present.
    int level_of(VertexId w) const { return where_.at(w).level; }

    void move(VertexId w, int level) {
        Slot& s = where_.at(w);
        if (s.level == level) {
            return;
        }
        detach(s);
        auto& b = bucket_ref(level);
        s = Slot{static_cast<std::int16_t>(level), static_cast<std::uint32_t>(b.size())};
        b.push_back(w);
    }

    std::span<const VertexId> bucket(int level) const { return buckets_[static_cast<std::size_t>(level + 1)]; }

    /// Number of neighbors with recorded level <= level.
    std::size_t count_at_most(int level) const {
        std::size_t total = 0;
        for (int l = -1; l <= level && l <= max_level(); ++l) {
            total += bucket(l).size();
        }
        return total;
    }
    std::size_t count_below(int level) const { return count_at_most(level - 1); }

    /// Uniform neighbor among those with recorded level < level.
    VertexId sample_below(int level, Rng& rng) const {
        std::uint64_t i = rng.below(count_below(level));
        for (int l = -1;; ++l) {
            const auto b = bucket(l);
            if (i < b.size()) {
                return b[i];
            }
            i -= b.size();
        }
    }

    template <class F>
    void for_each(F&& f) const {
        for (const auto& b : buckets_) {
            for (VertexId w : b) {
                f(w);
            }
        }
    }

private:
    struct Slot {
        std::int16_t level;
        std::uint32_t index;
    };

    std::vector<VertexId>& bucket_ref(int level) { return buckets_[static_cast<std::size_t>(level + 1)]; }

    void detach(const Slot& s) {
        auto& b = bucket_ref(s.level);
        const VertexId last = b.back();
        b.pop_back();
        if (s.index < b.size()) {
            b[s.index] = last;
            where_[last].index = s.index;
        }
    }

    std::vector<std::vector<VertexId>> buckets_;
    absl::flat_hash_map<VertexId, Slot> where_;
};

} // namespace dyngraph
