#include "cupn/words.hpp"

#include "cupn/error.hpp"

#include <algorithm>
#include <sstream>

namespace cupn {

IndexTuple::IndexTuple(std::vector<int> indices, int m) : indices_(std::move(indices)), m_(m) {
    if (indices_.empty()) throw InvalidTuple("index tuple needs at least one index");
    if (indices_.front() < 0 || indices_.back() > m_) {
        throw InvalidTuple("indices of " + to_string() + " fall outside [0, m]");
    }
    if (std::adjacent_find(indices_.begin(), indices_.end(), std::greater_equal<>()) !=
        indices_.end()) {
        throw InvalidTuple("indices of " + to_string() + " are not strictly increasing");
    }
}

std::string IndexTuple::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t k = 0; k < indices_.size(); ++k) {
        if (k) os << ',';
        os << indices_[k];
    }
    os << ")_" << m_;
    return os.str();
}

Word::Word(std::vector<unsigned char> letters) : letters_(std::move(letters)) {
    for (auto& l : letters_) {
        if (l > 1) throw ValidationError("word letters must be 0 or 1");
    }
}

Word Word::parse(std::string_view text) {
    std::vector<unsigned char> letters;
    letters.reserve(text.size());
    for (char ch : text) {
        if (ch != '0' && ch != '1') {
            throw ValidationError("invalid word letter '" + std::string(1, ch) + "'");
        }
        letters.push_back(static_cast<unsigned char>(ch - '0'));
    }
    return Word(std::move(letters));
}

std::size_t Word::count_ones() const {
    return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), 1));
}

void Word::append(const Word& other) {
    letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
}

std::string Word::to_string() const {
    std::string s;
    s.reserve(letters_.size());
    for (auto l : letters_) s.push_back(static_cast<char>('0' + l));
    return s;
}

Word word_of(const IndexTuple& t) {
    std::vector<unsigned char> letters(static_cast<std::size_t>(t.m()) + 1, 1);
    for (int i : t.indices()) letters[static_cast<std::size_t>(i)] = 0;
    return Word(std::move(letters));
}

IndexTuple tuple_of(const Word& w) {
    std::vector<int> zeros;
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (w[k] == 0) zeros.push_back(static_cast<int>(k));
    }
    if (zeros.empty()) throw InvalidTuple("word '" + w.to_string() + "' has no zero");
    return IndexTuple(std::move(zeros), static_cast<int>(w.size()) - 1);
}

namespace {

Word ones_then_zero(int first, int last_zero) {
    // ones at first..last_zero-1, zero at last_zero
    std::vector<unsigned char> letters(static_cast<std::size_t>(last_zero - first), 1);
    letters.push_back(0);
    return Word(std::move(letters));
}

// Zero-terminated blocks of a word plus its trailing run of ones.
struct OpenBlocks {
    std::vector<Word> closed;
    Word tail;
};

OpenBlocks open_blocks(const Word& w) {
    OpenBlocks out;
    std::vector<unsigned char> current;
    for (std::size_t k = 0; k < w.size(); ++k) {
        current.push_back(w[k]);
        if (w[k] == 0) {
            out.closed.emplace_back(std::move(current));
            current.clear();
        }
    }
    out.tail = Word(std::move(current));
    return out;
}

void push_range(std::vector<int>& out, int first, int last) {
    for (int k = first; k <= last; ++k) out.push_back(k);
}

// Word positions of the ones in blocks whose index has the given parity.
std::vector<int> one_positions(const IndexTuple& t, int parity) {
    const int n = t.n();
    std::vector<int> out;
    for (int j = parity; j <= n; j += 2) {
        const int first = (j == 0) ? 0 : t[static_cast<std::size_t>(j) - 1] + 1;
        push_range(out, first, t[static_cast<std::size_t>(j)] - 1);
    }
    if ((n + 1) % 2 == parity) push_range(out, t[static_cast<std::size_t>(n)] + 1, t.m());
    return out;
}

Simplex drop_positions(const IndexTuple& t, const Simplex& x, const std::vector<int>& drop) {
    if (x.dim() != t.m()) {
        throw DimensionMismatch("tuple " + t.to_string() + " needs a simplex of dimension " +
                                std::to_string(t.m()) + ", got " + x.to_string());
    }
    std::vector<unsigned char> keep(x.size(), 1);
    for (int k : drop) keep[static_cast<std::size_t>(k)] = 0;
    return keep_positions(x, keep);
}

}  // namespace

std::vector<Word> blocks(const IndexTuple& t) {
    std::vector<Word> out;
    out.reserve(static_cast<std::size_t>(t.n()) + 2);
    int first = 0;
    for (int i : t.indices()) {
        out.push_back(ones_then_zero(first, i));
        first = i + 1;
    }
    out.emplace_back(std::vector<unsigned char>(static_cast<std::size_t>(t.m() + 1 - first), 1));
    return out;
}

WordPair split(const IndexTuple& t) {
    WordPair pair;
    const auto bl = blocks(t);
    for (std::size_t j = 0; j < bl.size(); ++j) (j % 2 ? pair.plus : pair.minus).append(bl[j]);
    return pair;
}

WordPair split(const Word& w) { return split(tuple_of(w)); }

IndexTuple merge(const Word& plus, const Word& minus) {
    const OpenBlocks p = open_blocks(plus);
    const OpenBlocks q = open_blocks(minus);
    const std::size_t a = q.closed.size();
    const std::size_t b = p.closed.size();
    const Word* tail = nullptr;
    if (a == b + 1 && q.tail.empty()) {
        tail = &p.tail;  // n even: the trailing block has odd index
    } else if (a == b && a > 0 && p.tail.empty()) {
        tail = &q.tail;  // n odd: the trailing block has even index
    } else {
        throw MalformedPair("words (" + plus.to_string() + ", " + minus.to_string() +
                            ") are not a split pair");
    }
    Word w;
    for (std::size_t k = 0; k < a; ++k) {
        w.append(q.closed[k]);
        if (k < b) w.append(p.closed[k]);
    }
    w.append(*tail);
    return tuple_of(w);
}

std::vector<int> plus_face_positions(const IndexTuple& t) { return one_positions(t, 1); }

std::vector<int> minus_face_positions(const IndexTuple& t) { return one_positions(t, 0); }

Simplex apply_plus(const IndexTuple& t, const Simplex& x) {
    return drop_positions(t, x, plus_face_positions(t));
}

Simplex apply_minus(const IndexTuple& t, const Simplex& x) {
    return drop_positions(t, x, minus_face_positions(t));
}

}  // namespace cupn
