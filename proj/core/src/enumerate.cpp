#include "fanobott/enumerate.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <utility>

namespace fanobott {

namespace {

using Word = std::vector<std::int32_t>;

constexpr std::int32_t kOpen = CanonicalCode::kOpen;
constexpr std::int32_t kClose = CanonicalCode::kClose;
constexpr std::int32_t kPlus = CanonicalCode::kSignPlus;
constexpr std::int32_t kMinus = CanonicalCode::kSignMinus;
constexpr std::int32_t kErased = CanonicalCode::kSignErased;

// A forest class: its tree vertex-words, sorted lexicographically.
struct ForestClass {
    std::vector<Word> trees;
    int size = 0;  // total vertex count
};

Word wrap_children(const std::vector<std::pair<std::int32_t, const Word*>>& segs) {
    Word out;
    std::size_t len = 2;
    for (const auto& [s, w] : segs) len += 1 + w->size();
    out.reserve(len);
    out.push_back(kOpen);
    for (const auto& [s, w] : segs) {
        out.push_back(s);
        out.insert(out.end(), w->begin(), w->end());
    }
    out.push_back(kClose);
    return out;
}

// Tree word for the unordered pair {plus-forest, minus-forest}: the min over
// the r-flip at the new root of the two sign assignments. Both tree lists are
// already sorted, and every plus segment precedes every minus segment, so no
// re-sorting is needed.
Word tree_word_from_pair(const ForestClass& a, const ForestClass& b) {
    std::vector<std::pair<std::int32_t, const Word*>> asis, flip;
    asis.reserve(a.trees.size() + b.trees.size());
    flip.reserve(asis.capacity());
    for (const Word& w : a.trees) asis.emplace_back(kPlus, &w);
    for (const Word& w : b.trees) asis.emplace_back(kMinus, &w);
    for (const Word& w : b.trees) flip.emplace_back(kPlus, &w);
    for (const Word& w : a.trees) flip.emplace_back(kMinus, &w);
    Word wa = wrap_children(asis);
    Word wb = wrap_children(flip);
    return std::min(wa, wb);
}

// Enumerates all multisets with total size `budget` over a universe of
// (word, size) items sorted by word; each multiset is emitted as its sorted
// item list via `emit`.
template <typename Emit>
void multisets_over(const std::vector<std::pair<const Word*, int>>& universe, int budget,
                    std::size_t start, std::vector<const Word*>& current, Emit&& emit) {
    if (budget == 0) {
        emit(current);
        return;
    }
    for (std::size_t j = start; j < universe.size(); ++j) {
        if (universe[j].second > budget) continue;
        current.push_back(universe[j].first);
        multisets_over(universe, budget - universe[j].second, j, current, emit);
        current.pop_back();
    }
}

class ClassTable {
public:
    explicit ClassTable(Relation rel) : rel_(rel) {}

    // Builds all tables for sizes 0..n.
    void build(int n) {
        if (rel_ == Relation::approx) {
            sim_ = std::make_unique<ClassTable>(Relation::sim);
            sim_->build(n > 0 ? n - 1 : 0);
            build_approx(n);
        } else {
            build_direct(n);
        }
    }

    const std::vector<Word>& trees(int k) const { return trees_[k]; }
    const std::vector<ForestClass>& forests(int m) const { return forests_[m]; }

private:
    void build_direct(int n) {
        trees_.resize(n + 1);
        forests_.resize(n + 1);
        forests_[0].push_back(ForestClass{});
        for (int s = 1; s <= n; ++s) {
            trees_[s] = rel_ == Relation::iso ? iso_trees(s) : sim_trees(s);
            std::sort(trees_[s].begin(), trees_[s].end());
            forests_[s] = forests_of_size(s);
        }
    }

    // sim trees of size k <-> unordered pairs {A, B} of sim forest classes
    // with |A| + |B| = k - 1 (A hangs by plus edges, B by minus edges).
    std::vector<Word> sim_trees(int k) const {
        std::vector<Word> out;
        for (int a = 0; 2 * a <= k - 1; ++a) {
            const int b = k - 1 - a;
            const auto& fa = forests_[a];
            const auto& fb = forests_[b];
            for (std::size_t i = 0; i < fa.size(); ++i) {
                const std::size_t jstart = (a == b) ? i : 0;
                for (std::size_t j = jstart; j < fb.size(); ++j)
                    out.push_back(tree_word_from_pair(fa[i], fb[j]));
            }
        }
        return out;
    }

    // iso trees of size k: root + multiset of (sign, smaller iso tree).
    std::vector<Word> iso_trees(int k) const {
        std::vector<std::pair<Word, int>> signed_universe;
        for (std::int32_t s : {kPlus, kMinus}) {
            for (int sz = 1; sz <= k - 1; ++sz) {
                for (const Word& w : trees_[sz]) {
                    Word seg;
                    seg.reserve(w.size() + 1);
                    seg.push_back(s);
                    seg.insert(seg.end(), w.begin(), w.end());
                    signed_universe.emplace_back(std::move(seg), sz);
                }
            }
        }
        std::sort(signed_universe.begin(), signed_universe.end());
        std::vector<std::pair<const Word*, int>> universe;
        universe.reserve(signed_universe.size());
        for (const auto& [w, sz] : signed_universe) universe.emplace_back(&w, sz);

        std::vector<Word> out;
        std::vector<const Word*> current;
        multisets_over(universe, k - 1, 0, current, [&](const std::vector<const Word*>& segs) {
            Word w;
            std::size_t len = 2;
            for (const Word* s : segs) len += s->size();
            w.reserve(len);
            w.push_back(kOpen);
            for (const Word* s : segs) w.insert(w.end(), s->begin(), s->end());
            w.push_back(kClose);
            out.push_back(std::move(w));
        });
        return out;
    }

    // approx trees of size k: root + multiset of sim tree classes totaling
    // k - 1, with the root-incident signs erased. In other words a sim forest
    // class of size k - 1 under a new root.
    void build_approx(int n) {
        trees_.resize(n + 1);
        forests_.resize(n + 1);
        forests_[0].push_back(ForestClass{});
        for (int s = 1; s <= n; ++s) {
            for (const ForestClass& fc : sim_->forests(s - 1)) {
                std::vector<std::pair<std::int32_t, const Word*>> segs;
                segs.reserve(fc.trees.size());
                for (const Word& w : fc.trees) segs.emplace_back(kErased, &w);
                trees_[s].push_back(wrap_children(segs));
            }
            std::sort(trees_[s].begin(), trees_[s].end());
            forests_[s] = forests_of_size(s);
        }
    }

    // Forest classes of size m: multisets of tree classes of sizes 1..m.
    std::vector<ForestClass> forests_of_size(int m) const {
        std::vector<std::pair<const Word*, int>> universe;
        for (int sz = 1; sz <= m; ++sz)
            for (const Word& w : trees_[sz]) universe.emplace_back(&w, sz);
        std::sort(universe.begin(), universe.end(),
                  [](const auto& x, const auto& y) { return *x.first < *y.first; });

        std::vector<ForestClass> out;
        std::vector<const Word*> current;
        multisets_over(universe, m, 0, current, [&](const std::vector<const Word*>& trees) {
            ForestClass fc;
            fc.size = m;
            fc.trees.reserve(trees.size());
            for (const Word* w : trees) fc.trees.push_back(*w);
            out.push_back(std::move(fc));
        });
        return out;
    }

    Relation rel_;
    std::vector<std::vector<Word>> trees_;
    std::vector<std::vector<ForestClass>> forests_;
    // sim sub-table backing the approx construction
    struct SimSub {
        ClassTable* table = nullptr;
        void build(int n) {
            owned = std::make_unique<ClassTable>(Relation::sim);
            owned->build(n);
            table = owned.get();
        }
        const std::vector<ForestClass>& forests(int m) const { return table->forests(m); }
        std::unique_ptr<ClassTable> owned;
    } sim_;
};

int check_bound(int n, int max_n, const char* who) {
    const int cap = max_n > 0 ? max_n : enumeration_limit();
    if (n > cap)
        throw ResourceBoundExceeded(std::string(who) + ": n = " + std::to_string(n) +
                                    " exceeds the enumeration cap " + std::to_string(cap) +
                                    " (set FANOBOTT_MAX_ENUM_N to raise it)");
    return cap;
}

Word forest_class_word(int n, const ForestClass& fc) {
    Word w;
    w.push_back(n);
    for (const Word& t : fc.trees) w.insert(w.end(), t.begin(), t.end());
    return w;
}

}  // namespace

int enumeration_limit() {
    static const int limit = [] {
        if (const char* env = std::getenv("FANOBOTT_MAX_ENUM_N")) {
            const int v = std::atoi(env);
            if (v > 0) return v;
        }
        return 12;
    }();
    return limit;
}

std::vector<SignedForest> enumerate_tree_classes(int n, Relation rel, int max_n) {
    if (n < 1) throw IndexOutOfRange("enumerate_tree_classes: n must be >= 1");
    check_bound(n, max_n, "enumerate_tree_classes");
    ClassTable table(rel);
    table.build(n);
    std::vector<SignedForest> out;
    out.reserve(table.trees(n).size());
    for (const Word& t : table.trees(n)) {
        CanonicalCode code;
        code.relation = rel;
        code.word.push_back(n);
        code.word.insert(code.word.end(), t.begin(), t.end());
        out.push_back(decode_forest(code));
    }
    return out;
}

std::vector<SignedForest> enumerate_forest_classes(int n, Relation rel, int max_n) {
    if (n < 0) throw IndexOutOfRange("enumerate_forest_classes: n must be >= 0");
    check_bound(n, max_n, "enumerate_forest_classes");
    ClassTable table(rel);
    table.build(n);
    std::vector<Word> words;
    words.reserve(table.forests(n).size());
    for (const ForestClass& fc : table.forests(n)) words.push_back(forest_class_word(n, fc));
    std::sort(words.begin(), words.end());
    std::vector<SignedForest> out;
    out.reserve(words.size());
    for (Word& w : words) {
        CanonicalCode code;
        code.relation = rel;
        code.word = std::move(w);
        out.push_back(decode_forest(code));
    }
    return out;
}

long long count_tree_classes(int n, Relation rel, int max_n) {
    if (n < 1) throw IndexOutOfRange("count_tree_classes: n must be >= 1");
    check_bound(n, max_n, "count_tree_classes");
    ClassTable table(rel);
    table.build(n);
    return static_cast<long long>(table.trees(n).size());
}

long long count_forest_classes(int n, Relation rel, int max_n) {
    if (n < 0) throw IndexOutOfRange("count_forest_classes: n must be >= 0");
    check_bound(n, max_n, "count_forest_classes");
    ClassTable table(rel);
    table.build(n);
    return static_cast<long long>(table.forests(n).size());
}

long long count_indecomposable_diffeo_classes(int n, int max_n) {
    if (n < 1) throw IndexOutOfRange("count_indecomposable_diffeo_classes: n must be >= 1");
    check_bound(n - 1, max_n, "count_indecomposable_diffeo_classes");
    return count_forest_classes(n - 1, Relation::sim, max_n);
}

}  // namespace fanobott
