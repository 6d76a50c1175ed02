#include "fanobott/canonical.hpp"

#include <algorithm>

namespace fanobott {

namespace {

using Word = std::vector<std::int32_t>;

std::int32_t encode_sign(Sign s) {
    return s == Sign::plus ? CanonicalCode::kSignPlus : CanonicalCode::kSignMinus;
}

std::int32_t flip_code(std::int32_t s) {
    if (s == CanonicalCode::kSignPlus) return CanonicalCode::kSignMinus;
    if (s == CanonicalCode::kSignMinus) return CanonicalCode::kSignPlus;
    return s;  // erased stays erased
}

// Child segment = [sign] + child word. Segments of a vertex are sorted
// lexicographically; segments are balanced bracket words prefixed by one
// sign symbol, so no segment is a proper prefix of another.
void append_sorted(Word& out, std::vector<Word>& segments) {
    std::sort(segments.begin(), segments.end());
    for (const Word& s : segments) out.insert(out.end(), s.begin(), s.end());
}

Word encode_vertex(const SignedForest& f, const std::vector<std::vector<int>>& ch,
                   int v, Relation rel) {
    std::vector<Word> segments;
    segments.reserve(ch[v].size());
    for (int c : ch[v]) {
        Word seg;
        std::int32_t s = (rel == Relation::approx && f.is_root(v))
                             ? CanonicalCode::kSignErased
                             : encode_sign(f.sign[c]);
        seg.push_back(s);
        Word sub = encode_vertex(f, ch, c, rel);
        seg.insert(seg.end(), sub.begin(), sub.end());
        segments.push_back(std::move(seg));
    }

    Word body;
    if (rel == Relation::iso) {
        append_sorted(body, segments);
    } else {
        // Minimize over the r_v flip: all child signs as-is vs all flipped.
        std::vector<Word> flippedsegs = segments;
        for (Word& s : flippedsegs) s[0] = flip_code(s[0]);
        Word a, b;
        append_sorted(a, segments);
        append_sorted(b, flippedsegs);
        body = std::min(a, b);
    }

    Word out;
    out.reserve(body.size() + 2);
    out.push_back(CanonicalCode::kOpen);
    out.insert(out.end(), body.begin(), body.end());
    out.push_back(CanonicalCode::kClose);
    return out;
}

}  // namespace

CanonicalCode canonical_code(const SignedForest& f, Relation rel) {
    const auto ch = f.children();
    std::vector<Word> trees;
    for (int v = 0; v < f.size(); ++v)
        if (f.is_root(v)) trees.push_back(encode_vertex(f, ch, v, rel));
    std::sort(trees.begin(), trees.end());

    CanonicalCode code;
    code.relation = rel;
    code.word.push_back(f.size());
    for (const Word& t : trees) code.word.insert(code.word.end(), t.begin(), t.end());
    return code;
}

bool are_equivalent(const SignedForest& f1, const SignedForest& f2, Relation rel) {
    if (f1.size() != f2.size())
        throw SizeMismatch("are_equivalent: forests have different vertex counts");
    return canonical_code(f1, rel) == canonical_code(f2, rel);
}

namespace {

// Parses one vertex word starting at pos (word[pos] == kOpen); appends the
// subtree to parent/sign with the given parent link and returns the position
// one past the matching kClose.
std::size_t decode_vertex(const Word& w, std::size_t pos, int parent_vertex,
                          std::int32_t sign_code, std::vector<int>& parent,
                          std::vector<Sign>& sign) {
    if (pos >= w.size() || w[pos] != CanonicalCode::kOpen)
        throw ParseError("canonical code: expected open bracket");
    const int me = static_cast<int>(parent.size());
    parent.push_back(parent_vertex);
    sign.push_back(sign_code == CanonicalCode::kSignMinus ? Sign::minus : Sign::plus);
    ++pos;
    while (pos < w.size() && w[pos] != CanonicalCode::kClose) {
        const std::int32_t s = w[pos];
        if (s != CanonicalCode::kSignErased && s != CanonicalCode::kSignPlus &&
            s != CanonicalCode::kSignMinus)
            throw ParseError("canonical code: expected sign symbol");
        pos = decode_vertex(w, pos + 1, me, s, parent, sign);
    }
    if (pos >= w.size()) throw ParseError("canonical code: unbalanced brackets");
    return pos + 1;  // skip kClose
}

}  // namespace

SignedForest decode_forest(const CanonicalCode& code) {
    const Word& w = code.word;
    if (w.empty() || w[0] < 0) throw ParseError("canonical code: missing vertex count");
    const int n = w[0];
    std::vector<int> parent;
    std::vector<Sign> sign;
    parent.reserve(n);
    sign.reserve(n);
    std::size_t pos = 1;
    while (pos < w.size())
        pos = decode_vertex(w, pos, SignedForest::kNoParent, CanonicalCode::kSignPlus,
                            parent, sign);
    if (static_cast<int>(parent.size()) != n)
        throw ParseError("canonical code: vertex count does not match tree words");
    return make_forest(std::move(parent), std::move(sign));
}

}  // namespace fanobott
