#include <algorithm>
#include <deque>
#include <mutex>

#include "bigraft/errors.hpp"
#include "bigraft/forest.hpp"

namespace bigraft {

namespace {

// Degrees up to this are cached; larger ones are streamed.
constexpr std::size_t cached_degree = 8;

void visit_forests(std::size_t n, const std::function<void(const Forest&)>& visit);

void visit_trees(std::size_t n, const std::function<void(const Tree&)>& visit) {
    if (n == 0) return;
    for (std::size_t k = 0; k < n; ++k) {
        visit_forests(k, [&](const Forest& left) {
            visit_forests(n - 1 - k, [&](const Forest& right) { visit(b_plus(left, right)); });
        });
    }
}

struct Cache {
    std::recursive_mutex mutex;
    std::deque<std::vector<Tree>> trees;
    std::deque<std::vector<Forest>> forests;
};

Cache& cache() {
    static Cache c;
    return c;
}

const std::vector<Forest>& cached_forests(std::size_t n);

const std::vector<Tree>& cached_trees(std::size_t n) {
    Cache& c = cache();
    std::lock_guard lock(c.mutex);
    while (c.trees.size() <= n) {
        const std::size_t d = c.trees.size();
        std::vector<Tree> level;
        visit_trees(d, [&](const Tree& t) { level.push_back(t); });
        c.trees.push_back(std::move(level));
    }
    return c.trees[n];
}

const std::vector<Forest>& cached_forests(std::size_t n) {
    Cache& c = cache();
    std::lock_guard lock(c.mutex);
    while (c.forests.size() <= n) {
        const std::size_t d = c.forests.size();
        std::vector<Forest> level;
        if (d == 0) {
            level.emplace_back();
        } else {
            for (std::size_t k = 1; k <= d; ++k) {
                for (const auto& t : cached_trees(k)) {
                    for (const auto& rest : cached_forests(d - k)) {
                        Forest f(t);
                        f.trees.insert(f.trees.end(), rest.trees.begin(), rest.trees.end());
                        level.push_back(std::move(f));
                    }
                }
            }
        }
        c.forests.push_back(std::move(level));
    }
    return c.forests[n];
}

void visit_forests(std::size_t n, const std::function<void(const Forest&)>& visit) {
    if (n <= cached_degree) {
        for (const auto& f : cached_forests(n)) visit(f);
        return;
    }
    for (std::size_t k = 1; k <= n; ++k) {
        visit_trees(k, [&](const Tree& t) {
            visit_forests(n - k, [&](const Forest& rest) {
                Forest f(t);
                f.trees.insert(f.trees.end(), rest.trees.begin(), rest.trees.end());
                visit(f);
            });
        });
    }
}

template <class T>
std::vector<T> sorted_by_render(std::vector<T> items) {
    std::vector<std::pair<std::string, std::size_t>> keys;
    keys.reserve(items.size());
    for (std::size_t i = 0; i < items.size(); ++i) keys.emplace_back(render(items[i]), i);
    std::sort(keys.begin(), keys.end());
    std::vector<T> out;
    out.reserve(items.size());
    for (const auto& k : keys) out.push_back(std::move(items[k.second]));
    return out;
}

}  // namespace

const std::vector<Tree>& trees_of_degree(std::size_t n) {
    if (n > cached_degree) {
        throw BoundError("trees_of_degree caches degrees up to " + std::to_string(cached_degree));
    }
    return cached_trees(n);
}

void for_each_forest(std::size_t n, const std::function<void(const Forest&)>& visit) {
    visit_forests(n, visit);
}

std::vector<Forest> enumerate_forests(std::size_t n, bool dual_only, std::size_t bound) {
    check_bound(n, bound, "degree");
    std::vector<Forest> out;
    if (dual_only) {
        if (n == 0) return {Forest{}};
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t k = 1; p + k <= n; ++k) {
                out.push_back(DualShape{p, k, n - p - k}.to_forest());
            }
        }
    } else {
        visit_forests(n, [&](const Forest& f) { out.push_back(f); });
    }
    return sorted_by_render(std::move(out));
}

std::vector<Tree> enumerate_trees(std::size_t n, std::size_t bound) {
    check_bound(n, bound, "degree");
    std::vector<Tree> out;
    visit_trees(n, [&](const Tree& t) { out.push_back(t); });
    return sorted_by_render(std::move(out));
}

}  // namespace bigraft
