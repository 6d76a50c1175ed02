#include "fanobott/forest.hpp"

#include <algorithm>
#include <cstring>

namespace fanobott {

const char* relation_name(Relation rel) {
    switch (rel) {
        case Relation::iso: return "iso";
        case Relation::sim: return "sim";
        case Relation::approx: return "approx";
    }
    return "?";
}

std::vector<int> SignedForest::roots() const {
    std::vector<int> out;
    for (int v = 0; v < size(); ++v)
        if (is_root(v)) out.push_back(v);
    return out;
}

std::vector<std::vector<int>> SignedForest::children() const {
    std::vector<std::vector<int>> ch(size());
    for (int v = 0; v < size(); ++v)
        if (!is_root(v)) ch[parent[v]].push_back(v);
    return ch;
}

SignedForest make_forest(std::vector<int> parent, std::vector<Sign> sign) {
    const int n = static_cast<int>(parent.size());
    if (static_cast<int>(sign.size()) != n)
        throw InvalidForest("sign array length differs from parent array length");
    for (int v = 0; v < n; ++v) {
        if (parent[v] == v || parent[v] < SignedForest::kNoParent || parent[v] >= n)
            throw InvalidForest("parent index out of range at vertex " + std::to_string(v));
    }
    // Every vertex must reach a root in at most n steps.
    for (int v = 0; v < n; ++v) {
        int cur = v;
        int steps = 0;
        while (cur != SignedForest::kNoParent) {
            cur = parent[cur];
            if (++steps > n) throw InvalidForest("parent relation contains a cycle");
        }
    }
    for (int v = 0; v < n; ++v)
        if (parent[v] == SignedForest::kNoParent) sign[v] = Sign::plus;
    return SignedForest{std::move(parent), std::move(sign)};
}

SignedForest make_forest(std::vector<int> parent, const char* signs) {
    const std::size_t n = parent.size();
    if (std::strlen(signs) != n)
        throw InvalidForest("sign string length differs from parent array length");
    std::vector<Sign> sign(n, Sign::plus);
    for (std::size_t v = 0; v < n; ++v) {
        switch (signs[v]) {
            case '+': sign[v] = Sign::plus; break;
            case '-': sign[v] = Sign::minus; break;
            case '.': sign[v] = Sign::plus; break;
            default: throw InvalidForest("sign characters must be one of '+', '-', '.'");
        }
    }
    return make_forest(std::move(parent), std::move(sign));
}

SignedForest apply_r(const SignedForest& f, int vertex) {
    if (vertex < 0 || vertex >= f.size())
        throw IndexOutOfRange("apply_r: vertex " + std::to_string(vertex) + " out of range");
    SignedForest out = f;
    for (int v = 0; v < f.size(); ++v)
        if (f.parent[v] == vertex) out.sign[v] = flipped(out.sign[v]);
    return out;
}

SignedForest relabel(const SignedForest& f, const std::vector<int>& new_label_of) {
    const int n = f.size();
    if (static_cast<int>(new_label_of.size()) != n)
        throw SizeMismatch("relabel: permutation length differs from forest size");
    std::vector<bool> seen(n, false);
    for (int v = 0; v < n; ++v) {
        if (new_label_of[v] < 0 || new_label_of[v] >= n || seen[new_label_of[v]])
            throw InvalidForest("relabel: not a permutation");
        seen[new_label_of[v]] = true;
    }
    std::vector<int> parent(n);
    std::vector<Sign> sign(n, Sign::plus);
    for (int v = 0; v < n; ++v) {
        parent[new_label_of[v]] =
            f.is_root(v) ? SignedForest::kNoParent : new_label_of[f.parent[v]];
        sign[new_label_of[v]] = f.sign[v];
    }
    return SignedForest{std::move(parent), std::move(sign)};
}

std::vector<SignedForest> components(const SignedForest& f) {
    const int n = f.size();
    // Component id = root vertex reached by following parents.
    std::vector<int> comp(n);
    for (int v = 0; v < n; ++v) {
        int cur = v;
        while (!f.is_root(cur)) cur = f.parent[cur];
        comp[v] = cur;
    }
    std::vector<int> first(n, -1);
    for (int v = 0; v < n; ++v)
        if (first[comp[v]] == -1) first[comp[v]] = v;
    std::vector<int> roots_sorted;
    for (int v = 0; v < n; ++v)
        if (f.is_root(v)) roots_sorted.push_back(v);
    std::sort(roots_sorted.begin(), roots_sorted.end(),
              [&](int a, int b) { return first[a] < first[b]; });

    std::vector<SignedForest> out;
    for (int r : roots_sorted) {
        std::vector<int> members;
        for (int v = 0; v < n; ++v)
            if (comp[v] == r) members.push_back(v);
        std::vector<int> local(n, -1);
        for (std::size_t i = 0; i < members.size(); ++i) local[members[i]] = static_cast<int>(i);
        std::vector<int> parent(members.size());
        std::vector<Sign> sign(members.size(), Sign::plus);
        for (std::size_t i = 0; i < members.size(); ++i) {
            const int v = members[i];
            parent[i] = f.is_root(v) ? SignedForest::kNoParent : local[f.parent[v]];
            sign[i] = f.sign[v];
        }
        out.push_back(SignedForest{std::move(parent), std::move(sign)});
    }
    return out;
}

}  // namespace fanobott
