#pragma once

#include <compare>
#include <cstdint>
#include <iterator>
#include <string>
#include <string_view>
#include <vector>

#include "emcomb/bigint.hpp"

namespace emcomb {

// integer histogram: a_i data points in bin i, bins indexed from 0
class Composition {
public:
    explicit Composition(std::vector<int> entries);

    const std::vector<int>& entries() const { return entries_; }
    int n() const { return static_cast<int>(entries_.size()); } // bin count
    long long s() const { return sum_; }                        // data point count
    int operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }

    friend bool operator==(const Composition& a, const Composition& b) {
        return a.entries_ == b.entries_;
    }
    friend auto operator<=>(const Composition& a, const Composition& b) {
        return a.entries_ <=> b.entries_;
    }

private:
    std::vector<int> entries_;
    long long sum_ = 0;
};

// weakly increasing sequence of bin indices, one per data point
class Word {
public:
    explicit Word(std::vector<int> symbols);

    const std::vector<int>& symbols() const { return symbols_; }
    long long size() const { return static_cast<long long>(symbols_.size()); }
    int operator[](long long j) const { return symbols_[static_cast<std::size_t>(j)]; }

    friend bool operator==(const Word& a, const Word& b) { return a.symbols_ == b.symbols_; }

private:
    std::vector<int> symbols_;
};

// Young diagram inside a max_rows x max_cols box.
// Only nonzero row lengths are stored, weakly decreasing, top row first.
class YoungDiagram {
public:
    YoungDiagram(std::vector<int> rows, long long max_rows, int max_cols);

    static YoungDiagram empty(long long max_rows, int max_cols) {
        return YoungDiagram({}, max_rows, max_cols);
    }

    const std::vector<int>& rows() const { return rows_; }
    long long max_rows() const { return max_rows_; }
    int max_cols() const { return max_cols_; }
    long long size() const { return size_; } // cell count

    // padded access: rows below the stored ones have length 0
    int row(long long i) const {
        return i < static_cast<long long>(rows_.size()) ? rows_[static_cast<std::size_t>(i)] : 0;
    }

    friend bool operator==(const YoungDiagram& a, const YoungDiagram& b) {
        return a.max_rows_ == b.max_rows_ && a.max_cols_ == b.max_cols_ && a.rows_ == b.rows_;
    }

private:
    std::vector<int> rows_;
    long long max_rows_ = 0;
    int max_cols_ = 0;
    long long size_ = 0;
};

Word word_of(const Composition& c);
Composition composition_of(const Word& w, int n);

// bijection C(s,n) <-> Y(s, n-1): rows of the diagram, read bottom to top
// and padded with empty rows, form the word
YoungDiagram diagram_of(const Composition& c);
Composition composition_of(const YoungDiagram& d);

YoungDiagram conjugate(const YoungDiagram& d); // lands in the transposed box
int corners(const YoungDiagram& d);            // removable cells = distinct nonzero row lengths
bool contains(const YoungDiagram& outer, const YoungDiagram& inner);

// lattice operations, rowwise max/min; boxes must match
YoungDiagram join(const YoungDiagram& a, const YoungDiagram& b);
YoungDiagram meet(const YoungDiagram& a, const YoungDiagram& b);

BigInt composition_count(long long s, int n); // binomial(s+n-1, n-1)

// all of C(s,n) in ascending lexicographic order of the entry vectors,
// from (0,...,0,s) to (s,0,...,0)
class CompositionRange {
public:
    CompositionRange(long long s, int n);

    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = Composition;
        using difference_type = std::ptrdiff_t;
        using pointer = const Composition*;
        using reference = const Composition&;

        iterator() = default;
        iterator(long long s, int n);

        reference operator*() const { return cur_; }
        pointer operator->() const { return &cur_; }
        iterator& operator++();
        friend bool operator==(const iterator& a, const iterator& b) {
            return a.done_ == b.done_ && (a.done_ || a.cur_ == b.cur_);
        }

    private:
        Composition cur_{std::vector<int>{0}};
        bool done_ = true;
    };

    iterator begin() const { return iterator(s_, n_); }
    iterator end() const { return iterator(); }

private:
    long long s_;
    int n_;
};

std::vector<Composition> all_compositions(long long s, int n);

// text format: comma separated entries, e.g. "4,1,1,0,0"; tuples join
// compositions with ';'
Composition parse_composition(std::string_view text);
std::vector<Composition> parse_tuple(std::string_view text);
std::string to_string(const Composition& c);
std::string to_string(const std::vector<Composition>& tuple);

} // namespace emcomb
