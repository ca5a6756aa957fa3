#pragma once

#include "cupn/simplex.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace cupn {

/// (i_0, ..., i_n)_m with 0 <= i_0 < ... < i_n <= m.
class IndexTuple {
public:
    /// Throws InvalidTuple unless the indices are strictly increasing in [0, m].
    IndexTuple(std::vector<int> indices, int m);

    std::span<const int> indices() const { return indices_; }
    int operator[](std::size_t k) const { return indices_[k]; }
    /// n, the number of indices minus one.
    int n() const { return static_cast<int>(indices_.size()) - 1; }
    int m() const { return m_; }

    std::string to_string() const;

    friend bool operator==(const IndexTuple&, const IndexTuple&) = default;

private:
    std::vector<int> indices_;
    int m_;
};

/// A word over {0, 1}. Length is significant: leading and trailing ones are
/// part of the word.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<unsigned char> letters);
    /// Throws ValidationError on characters other than '0' and '1'.
    static Word parse(std::string_view text);

    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    unsigned char operator[](std::size_t k) const { return letters_[k]; }
    std::size_t count_ones() const;
    std::size_t count_zeros() const { return size() - count_ones(); }

    void append(const Word& other);

    std::string to_string() const;

    friend bool operator==(const Word&, const Word&) = default;

private:
    std::vector<unsigned char> letters_;
};

struct WordPair {
    Word plus;
    Word minus;

    friend bool operator==(const WordPair&, const WordPair&) = default;
};

/// Zeros at the tuple's indices, ones elsewhere; m+1 letters.
Word word_of(const IndexTuple& t);

/// Inverse of word_of. Throws InvalidTuple if the word has no zero.
IndexTuple tuple_of(const Word& w);

/// The n+2 blocks of a tuple's word: block j (j <= n) is the run of ones
/// ending at the zero in position i_j, block n+1 the trailing ones.
std::vector<Word> blocks(const IndexTuple& t);

/// Plus word keeps odd-indexed blocks, minus word keeps even-indexed ones.
/// Throws InvalidTuple if w has no zero.
WordPair split(const Word& w);
WordPair split(const IndexTuple& t);

/// Reassembles a word from its (plus, minus) pair by alternating blocks,
/// starting with the minus word. Throws MalformedPair if the pair cannot
/// come from a split.
IndexTuple merge(const Word& plus, const Word& minus);

/// Applies the face operators of the plus word to x: removes the vertices
/// at the one-positions of odd-indexed blocks. Keeps the segments
/// [0,i_0], [i_1,i_2], ... Throws DimensionMismatch unless dim x = m.
Simplex apply_plus(const IndexTuple& t, const Simplex& x);

/// Removes the vertices at the one-positions of even-indexed blocks. Keeps
/// the segments [i_0,i_1], [i_2,i_3], ...
Simplex apply_minus(const IndexTuple& t, const Simplex& x);

/// Original word positions of the ones in the plus (odd blocks) and minus
/// (even blocks) words, ascending.
std::vector<int> plus_face_positions(const IndexTuple& t);
std::vector<int> minus_face_positions(const IndexTuple& t);

}  // namespace cupn
