#pragma once

#include <cstdint>
#include <functional>
#include <queue>
#include <utility>
#include <vector>

namespace cspp {

/// Fibonacci heap over dense ids 0..n-1 with decrease-key.
///
/// `Less` is a strict weak order on keys; keys only ever decrease.
template <class Key, class Less>
class FibonacciHeap {
public:
    FibonacciHeap(std::size_t n, Less less) : nodes_(n), less_{std::move(less)} {}

    [[nodiscard]] bool empty() const { return min_ == npos; }
    [[nodiscard]] std::size_t size() const { return count_; }
    [[nodiscard]] bool contains(std::uint32_t id) const { return nodes_[id].in_heap; }
    [[nodiscard]] const Key& min_key() const { return nodes_[min_].key; }
    [[nodiscard]] std::uint32_t min_id() const { return min_; }

    /// Inserts `id` or lowers its key; a larger key is ignored.
    void push_or_decrease(std::uint32_t id, const Key& key)
    {
        Node& n = nodes_[id];
        if (!n.in_heap) {
            n = Node{};
            n.key = key;
            n.in_heap = true;
            n.left = n.right = id;
            splice_root(id);
            ++count_;
            return;
        }
        if (!less_(key, n.key))
            return;
        n.key = key;
        const std::uint32_t p = n.parent;
        if (p != npos && less_(n.key, nodes_[p].key)) {
            cut(id, p);
            cascading_cut(p);
        }
        if (less_(n.key, nodes_[min_].key))
            min_ = id;
    }

    std::pair<std::uint32_t, Key> pop()
    {
        const std::uint32_t z = min_;
        Node& nz = nodes_[z];
        // Move children to the root list.
        if (nz.child != npos) {
            std::uint32_t c = nz.child;
            std::vector<std::uint32_t> kids;
            do {
                kids.push_back(c);
                c = nodes_[c].right;
            } while (c != nz.child);
            for (auto k : kids) {
                nodes_[k].parent = npos;
                nodes_[k].marked = false;
                unlink(k);
                splice_root(k);
            }
            nz.child = npos;
        }
        const std::uint32_t next = nz.right;
        unlink(z);
        if (next == z) {
            min_ = npos;
        } else {
            min_ = next;
            consolidate();
        }
        nz.in_heap = false;
        --count_;
        return {z, nz.key};
    }

private:
    static constexpr std::uint32_t npos = static_cast<std::uint32_t>(-1);

    struct Node {
        Key key{};
        std::uint32_t parent = npos;
        std::uint32_t child = npos;
        std::uint32_t left = 0;
        std::uint32_t right = 0;
        std::uint32_t degree = 0;
        bool marked = false;
        bool in_heap = false;
    };

    void unlink(std::uint32_t x)
    {
        Node& n = nodes_[x];
        nodes_[n.left].right = n.right;
        nodes_[n.right].left = n.left;
        n.left = n.right = x;
    }

    void insert_after(std::uint32_t anchor, std::uint32_t x)
    {
        Node& a = nodes_[anchor];
        Node& n = nodes_[x];
        n.left = anchor;
        n.right = a.right;
        nodes_[a.right].left = x;
        a.right = x;
    }

    void splice_root(std::uint32_t x)
    {
        if (min_ == npos) {
            nodes_[x].left = nodes_[x].right = x;
            min_ = x;
            return;
        }
        insert_after(min_, x);
        if (less_(nodes_[x].key, nodes_[min_].key))
            min_ = x;
    }

    void link(std::uint32_t child, std::uint32_t parent)
    {
        unlink(child);
        Node& p = nodes_[parent];
        Node& c = nodes_[child];
        c.parent = parent;
        c.marked = false;
        if (p.child == npos) {
            p.child = child;
            c.left = c.right = child;
        } else {
            insert_after(p.child, child);
        }
        ++p.degree;
    }

    void consolidate()
    {
        std::vector<std::uint32_t> roots;
        std::uint32_t r = min_;
        do {
            roots.push_back(r);
            r = nodes_[r].right;
        } while (r != min_);

        by_degree_.assign(by_degree_.size(), npos);
        for (auto x : roots) {
            std::uint32_t d = nodes_[x].degree;
            while (true) {
                if (d >= by_degree_.size())
                    by_degree_.resize(d + 1, npos);
                const std::uint32_t y = by_degree_[d];
                if (y == npos)
                    break;
                by_degree_[d] = npos;
                std::uint32_t a = x;
                std::uint32_t b = y;
                if (less_(nodes_[b].key, nodes_[a].key))
                    std::swap(a, b);
                link(b, a);
                x = a;
                ++d;
            }
            by_degree_[d] = x;
        }
        min_ = npos;
        for (auto x : by_degree_) {
            if (x == npos)
                continue;
            if (min_ == npos || less_(nodes_[x].key, nodes_[min_].key))
                min_ = x;
        }
    }

    void cut(std::uint32_t x, std::uint32_t p)
    {
        Node& np = nodes_[p];
        if (np.child == x)
            np.child = nodes_[x].right == x ? npos : nodes_[x].right;
        unlink(x);
        --np.degree;
        nodes_[x].parent = npos;
        nodes_[x].marked = false;
        insert_after(min_, x);
    }

    void cascading_cut(std::uint32_t y)
    {
        while (true) {
            const std::uint32_t p = nodes_[y].parent;
            if (p == npos)
                return;
            if (!nodes_[y].marked) {
                nodes_[y].marked = true;
                return;
            }
            cut(y, p);
            y = p;
        }
    }

    std::vector<Node> nodes_;
    std::vector<std::uint32_t> by_degree_;
    Less less_;
    std::uint32_t min_ = npos;
    std::size_t count_ = 0;
};

/// Binary heap with lazy deletion: a decrease pushes a fresh entry and stale
/// entries are skipped on pop.
template <class Key, class Less>
class LazyBinaryHeap {
public:
    LazyBinaryHeap(std::size_t n, Less less)
        : current_(n), in_heap_(n, false), less_{less}, heap_{Cmp{std::move(less)}}
    {
    }

    [[nodiscard]] bool empty()
    {
        skip_stale();
        return heap_.empty();
    }
    [[nodiscard]] std::size_t size() const { return count_; }
    [[nodiscard]] bool contains(std::uint32_t id) const { return in_heap_[id]; }
    [[nodiscard]] const Key& min_key()
    {
        skip_stale();
        return heap_.top().first;
    }

    void push_or_decrease(std::uint32_t id, const Key& key)
    {
        if (in_heap_[id] && !less_(key, current_[id]))
            return;
        if (!in_heap_[id])
            ++count_;
        in_heap_[id] = true;
        current_[id] = key;
        heap_.push({key, id});
    }

    std::pair<std::uint32_t, Key> pop()
    {
        skip_stale();
        auto [key, id] = heap_.top();
        heap_.pop();
        in_heap_[id] = false;
        --count_;
        return {id, key};
    }

private:
    struct Cmp {
        Less less;
        bool operator()(const std::pair<Key, std::uint32_t>& a, const std::pair<Key, std::uint32_t>& b) const
        {
            return less(b.first, a.first);
        }
    };

    void skip_stale()
    {
        while (!heap_.empty()) {
            const auto& [key, id] = heap_.top();
            if (in_heap_[id] && !less_(current_[id], key) && !less_(key, current_[id]))
                return;
            heap_.pop();
        }
    }

    std::vector<Key> current_;
    std::vector<bool> in_heap_;
    Less less_;
    std::priority_queue<std::pair<Key, std::uint32_t>, std::vector<std::pair<Key, std::uint32_t>>, Cmp> heap_;
    std::size_t count_ = 0;
};

} // namespace cspp
