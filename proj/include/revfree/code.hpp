#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <tuple>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "revfree/binary_matrix.hpp"
#include "revfree/error.hpp"

namespace revfree {

using Letter = std::uint32_t;

/// A word over [n], stored 0-based (letter j of the alphabet is j-1).
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

    /// From 1-based letters as written in the alphabet [n].
    static Word from_one_based(const std::vector<Letter>& letters) {
        std::vector<Letter> out;
        out.reserve(letters.size());
        for (Letter l : letters) {
            detail::require(l >= 1, "letters are 1-based");
            out.push_back(l - 1);
        }
        return Word(std::move(out));
    }

    std::vector<Letter> to_one_based() const {
        std::vector<Letter> out(letters_);
        for (auto& l : out) ++l;
        return out;
    }

    std::size_t size() const noexcept { return letters_.size(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }
    const std::vector<Letter>& letters() const noexcept { return letters_; }

    bool repetition_free() const {
        std::vector<Letter> sorted(letters_);
        std::sort(sorted.begin(), sorted.end());
        return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < letters_.size(); ++i) s += (i ? "," : "") + std::to_string(letters_[i] + 1);
        return s + ")";
    }

    friend auto operator<=>(const Word&, const Word&) = default;

private:
    std::vector<Letter> letters_;
};

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept {
        std::size_t h = 1469598103934665603ULL;
        for (Letter l : w.letters()) h = (h ^ l) * 1099511628211ULL;
        return h;
    }
};

/// Positions (i, j), i < j, 0-based, where two words form a reverse.
struct PositionPair {
    std::size_t first = 0;
    std::size_t second = 0;

    friend auto operator<=>(const PositionPair&, const PositionPair&) = default;
};

/**
 * Set of distinct words of length k over [n], kept in insertion order.
 * In repetition-free mode every word must have distinct letters.
 */
class Code {
public:
    Code(std::size_t n, std::size_t k, bool repetition_free) : n_(n), k_(k), repetition_free_(repetition_free) {
        detail::require(n >= 1 && k >= 1, "code needs n >= 1 and k >= 1");
        detail::require(!repetition_free || k <= n, "repetition-free words need k <= n");
    }

    std::size_t n() const noexcept { return n_; }
    std::size_t k() const noexcept { return k_; }
    bool repetition_free() const noexcept { return repetition_free_; }
    std::size_t size() const noexcept { return words_.size(); }
    bool empty() const noexcept { return words_.empty(); }
    const std::vector<Word>& words() const noexcept { return words_; }
    const Word& operator[](std::size_t i) const { return words_[i]; }

    bool contains(const Word& w) const { return index_.count(w) != 0; }

    /// Adds `w` unless already present; returns whether it was added.
    bool insert(Word w) {
        validate(w);
        if (index_.count(w)) return false;
        index_.insert(w);
        words_.push_back(std::move(w));
        return true;
    }

    /// Adds `w`, rejecting duplicates.
    void add(Word w) {
        const std::string text = w.to_string();
        if (!insert(std::move(w))) throw precondition_error("duplicate word " + text);
    }

    /// Same parameters, keeping only the words for which `keep` holds.
    template <class Pred>
    Code filtered(Pred keep) const {
        Code out(n_, k_, repetition_free_);
        for (const Word& w : words_)
            if (keep(w)) {
                out.index_.insert(w);
                out.words_.push_back(w);
            }
        return out;
    }

    bool is_permutation_code() const noexcept { return repetition_free_ && n_ == k_; }

private:
    void validate(const Word& w) const {
        detail::require(w.size() == k_, "word " + w.to_string() + " has length " + std::to_string(w.size()) +
                                            ", code has k = " + std::to_string(k_));
        for (Letter l : w.letters())
            detail::require(l < n_, "word " + w.to_string() + " uses a letter outside [" + std::to_string(n_) + "]");
        detail::require(!repetition_free_ || w.repetition_free(),
                        "word " + w.to_string() + " repeats a letter in a repetition-free code");
    }

    std::size_t n_;
    std::size_t k_;
    bool repetition_free_;
    std::vector<Word> words_;
    std::unordered_set<Word, WordHash> index_;
};

/**
 * Letter -> positions index of one word, for O(k) reverse lookups.
 * Positions of a letter are chained in ascending order.
 */
class ReverseIndex {
public:
    static constexpr std::size_t none = static_cast<std::size_t>(-1);

    explicit ReverseIndex(const Word& w) : next_(w.size(), none) {
        Letter top = 0;
        for (Letter l : w.letters()) top = std::max(top, l);
        head_.assign(static_cast<std::size_t>(top) + 1, none);
        for (std::size_t i = w.size(); i-- > 0;) {
            next_[i] = head_[w[i]];
            head_[w[i]] = i;
        }
    }

    std::size_t first(Letter l) const { return l < head_.size() ? head_[l] : none; }
    std::size_t next(std::size_t pos) const { return next_[pos]; }

private:
    std::vector<std::size_t> head_;
    std::vector<std::size_t> next_;
};

/// Lexicographically smallest reverse position pair of (w, x) given an index of w.
inline std::optional<PositionPair> find_reverse(const ReverseIndex& index, const Word& w, const Word& x) {
    detail::require(w.size() == x.size(), "find_reverse on words of different lengths");
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == x[i]) continue;
        // Candidates j satisfy w_j = x_i; the pair is a reverse iff also x_j = w_i.
        for (std::size_t j = index.first(x[i]); j != ReverseIndex::none; j = index.next(j)) {
            if (j > i && x[j] == w[i]) return PositionPair{i, j};
        }
    }
    return std::nullopt;
}

/**
 * Smallest (i, j), i < j, with w_i != w_j, w_i = x_j and w_j = x_i.
 * A pair with j < i would already have been found while scanning j.
 */
inline std::optional<PositionPair> find_reverse(const Word& w, const Word& x) {
    detail::require(w.size() == x.size(), "find_reverse on words of different lengths");
    return find_reverse(ReverseIndex(w), w, x);
}

/// Two words of a code (indices into the code) and where they interact.
struct PairWitness {
    std::size_t first_word = 0;
    std::size_t second_word = 0;
    std::optional<PositionPair> positions;  // set for reverse witnesses
};

struct VerifyResult {
    bool holds = true;
    std::optional<PairWitness> witness;

    explicit operator bool() const noexcept { return holds; }
};

/// Pairwise scan; the witness is the first conflicting word pair in code order.
inline VerifyResult verify_reverse_free_pairwise(const Code& code) {
    const auto& words = code.words();
    for (std::size_t a = 0; a < words.size(); ++a) {
        const ReverseIndex index(words[a]);
        for (std::size_t b = a + 1; b < words.size(); ++b) {
            if (auto pos = find_reverse(index, words[a], words[b])) return {false, PairWitness{a, b, pos}};
        }
    }
    return {};
}

/**
 * Signature hashing: every word contributes (i, j, w_i, w_j) for i < j with
 * w_i != w_j; a reverse exists iff some word carries (i, j, w_j, w_i).
 * O(M k^2) time and space, independent of the pairwise scan.
 */
inline VerifyResult verify_reverse_free_signatures(const Code& code) {
    detail::require(code.k() < (1U << 16) && code.n() < (1U << 16), "signature check limited to n, k < 65536");
    auto key = [](std::uint64_t i, std::uint64_t j, std::uint64_t a, std::uint64_t b) {
        return (i << 48) | (j << 32) | (a << 16) | b;
    };
    std::unordered_map<std::uint64_t, std::size_t> owner;  // signature -> first word carrying it
    const auto& words = code.words();
    const std::size_t k = code.k();
    for (std::size_t idx = 0; idx < words.size(); ++idx) {
        const Word& w = words[idx];
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j)
                if (w[i] != w[j]) owner.emplace(key(i, j, w[i], w[j]), idx);
    }

    std::optional<PairWitness> best;
    for (std::size_t idx = 0; idx < words.size(); ++idx) {
        const Word& w = words[idx];
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j) {
                if (w[i] == w[j]) continue;
                auto it = owner.find(key(i, j, w[j], w[i]));
                if (it == owner.end()) continue;
                PairWitness cand{std::min(idx, it->second), std::max(idx, it->second), PositionPair{i, j}};
                if (!best || std::tie(cand.first_word, cand.second_word) < std::tie(best->first_word, best->second_word))
                    best = cand;
            }
    }
    if (best) {
        // Report the canonical (smallest) position pair for the chosen words.
        best->positions = find_reverse(words[best->first_word], words[best->second_word]);
        return {false, best};
    }
    return {};
}

/// Runs both algorithms; they must agree. The witness is the pairwise one.
inline VerifyResult verify_reverse_free(const Code& code) {
    VerifyResult pairwise = verify_reverse_free_pairwise(code);
    const VerifyResult hashed = verify_reverse_free_signatures(code);
    detail::ensure(pairwise.holds == hashed.holds, "reverse-free verifiers disagree");
    return pairwise;
}

/// True iff every two distinct words form a reverse; the witness is the first
/// reverse-free pair in code order.
inline VerifyResult verify_full_of_flips(const Code& code) {
    const auto& words = code.words();
    for (std::size_t a = 0; a < words.size(); ++a) {
        const ReverseIndex index(words[a]);
        for (std::size_t b = a + 1; b < words.size(); ++b)
            if (!find_reverse(index, words[a], words[b])) return {false, PairWitness{a, b, std::nullopt}};
    }
    return {};
}

/// k x n matrix with a 1 at (i, w_i).
inline BinaryMatrix word_to_matrix(const Word& w, std::size_t n) {
    detail::require(w.size() >= 1, "empty word");
    BinaryMatrix m(w.size(), n);
    for (std::size_t i = 0; i < w.size(); ++i) {
        detail::require(w[i] < n, "letter outside alphabet in word_to_matrix");
        m.set(i, w[i]);
    }
    return m;
}

inline Word matrix_to_word(const BinaryMatrix& m) {
    std::vector<Letter> letters;
    letters.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        const auto support = m.row_support(r);
        if (support.size() != 1)
            throw malformed_word_matrix("row " + std::to_string(r + 1) + " has " + std::to_string(support.size()) +
                                        " ones, a word matrix needs exactly one");
        letters.push_back(static_cast<Letter>(support.front()));
    }
    return Word(std::move(letters));
}

/// Entrywise OR of all word matrices of the code.
inline BinaryMatrix overall_matrix(const Code& code) {
    detail::require(!code.empty(), "overall_matrix of an empty code");
    BinaryMatrix a(code.k(), code.n());
    for (const Word& w : code.words())
        for (std::size_t i = 0; i < w.size(); ++i) a.set(i, w[i]);
    return a;
}

}  // namespace revfree
