#include "emcomb/composition.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <stdexcept>

namespace emcomb {

Composition::Composition(std::vector<int> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw std::invalid_argument("composition needs at least one bin");
    for (int a : entries_) {
        if (a < 0) throw std::invalid_argument("composition entries must be nonnegative");
        sum_ += a;
    }
}

Word::Word(std::vector<int> symbols) : symbols_(std::move(symbols)) {
    for (std::size_t j = 0; j < symbols_.size(); ++j) {
        if (symbols_[j] < 0) throw std::invalid_argument("word symbols must be nonnegative");
        if (j > 0 && symbols_[j] < symbols_[j - 1])
            throw std::invalid_argument("word must be weakly increasing");
    }
}

YoungDiagram::YoungDiagram(std::vector<int> rows, long long max_rows, int max_cols)
    : rows_(std::move(rows)), max_rows_(max_rows), max_cols_(max_cols) {
    if (max_rows_ < 0 || max_cols_ < 0) throw std::invalid_argument("diagram box must be nonnegative");
    if (static_cast<long long>(rows_.size()) > max_rows_)
        throw std::invalid_argument("diagram has more rows than its box");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i] <= 0) throw std::invalid_argument("diagram stores only nonzero rows");
        if (rows_[i] > max_cols_) throw std::invalid_argument("diagram row exceeds its box");
        if (i > 0 && rows_[i] > rows_[i - 1])
            throw std::invalid_argument("diagram rows must be weakly decreasing");
        size_ += rows_[i];
    }
}

Word word_of(const Composition& c) {
    std::vector<int> sym;
    sym.reserve(static_cast<std::size_t>(c.s()));
    for (int i = 0; i < c.n(); ++i)
        for (int k = 0; k < c[i]; ++k) sym.push_back(i);
    return Word(std::move(sym));
}

Composition composition_of(const Word& w, int n) {
    if (n < 1) throw std::invalid_argument("composition needs at least one bin");
    std::vector<int> a(static_cast<std::size_t>(n), 0);
    for (int sym : w.symbols()) {
        if (sym >= n) throw std::invalid_argument("word symbol out of range for bin count");
        ++a[static_cast<std::size_t>(sym)];
    }
    return Composition(std::move(a));
}

YoungDiagram diagram_of(const Composition& c) {
    const Word w = word_of(c);
    const auto& sym = w.symbols();
    std::vector<int> rows;
    rows.reserve(sym.size());
    for (auto it = sym.rbegin(); it != sym.rend() && *it > 0; ++it) rows.push_back(*it);
    return YoungDiagram(std::move(rows), c.s(), c.n() - 1);
}

Composition composition_of(const YoungDiagram& d) {
    const int n = d.max_cols() + 1;
    std::vector<int> a(static_cast<std::size_t>(n), 0);
    long long zero_rows = d.max_rows() - static_cast<long long>(d.rows().size());
    if (zero_rows > std::numeric_limits<int>::max())
        throw std::invalid_argument("diagram box too tall to recover a composition");
    a[0] = static_cast<int>(zero_rows);
    for (int r : d.rows()) ++a[static_cast<std::size_t>(r)];
    return Composition(std::move(a));
}

YoungDiagram conjugate(const YoungDiagram& d) {
    if (d.max_rows() > std::numeric_limits<int>::max())
        throw std::invalid_argument("diagram box too tall to conjugate");
    const int width = d.rows().empty() ? 0 : d.rows().front();
    std::vector<int> cols;
    cols.reserve(static_cast<std::size_t>(width));
    for (int j = 0; j < width; ++j) {
        int len = 0;
        for (int r : d.rows())
            if (r > j) ++len;
        cols.push_back(len);
    }
    return YoungDiagram(std::move(cols), d.max_cols(), static_cast<int>(d.max_rows()));
}

int corners(const YoungDiagram& d) {
    int k = 0;
    const auto& rows = d.rows();
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (i + 1 == rows.size() || rows[i] > rows[i + 1]) ++k;
    return k;
}

bool contains(const YoungDiagram& outer, const YoungDiagram& inner) {
    if (outer.max_rows() != inner.max_rows() || outer.max_cols() != inner.max_cols())
        throw std::invalid_argument("containment needs a common bounding box");
    for (std::size_t i = 0; i < inner.rows().size(); ++i)
        if (outer.row(static_cast<long long>(i)) < inner.rows()[i]) return false;
    return true;
}

namespace {
YoungDiagram rowwise(const YoungDiagram& a, const YoungDiagram& b, bool take_max) {
    if (a.max_rows() != b.max_rows() || a.max_cols() != b.max_cols())
        throw std::invalid_argument("lattice operations need a common bounding box");
    const std::size_t m = std::max(a.rows().size(), b.rows().size());
    std::vector<int> rows;
    rows.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        const int ra = a.row(static_cast<long long>(i));
        const int rb = b.row(static_cast<long long>(i));
        const int r = take_max ? std::max(ra, rb) : std::min(ra, rb);
        if (r == 0) break;
        rows.push_back(r);
    }
    return YoungDiagram(std::move(rows), a.max_rows(), a.max_cols());
}
} // namespace

YoungDiagram join(const YoungDiagram& a, const YoungDiagram& b) { return rowwise(a, b, true); }
YoungDiagram meet(const YoungDiagram& a, const YoungDiagram& b) { return rowwise(a, b, false); }

BigInt composition_count(long long s, int n) {
    if (s < 0 || n < 1) throw std::invalid_argument("composition_count needs s >= 0 and n >= 1");
    return binomial(s + n - 1, n - 1);
}

CompositionRange::CompositionRange(long long s, int n) : s_(s), n_(n) {
    if (s < 0 || n < 1) throw std::invalid_argument("composition range needs s >= 0 and n >= 1");
    if (s > std::numeric_limits<int>::max())
        throw std::invalid_argument("composition range cannot hold s this large");
}

CompositionRange::iterator::iterator(long long s, int n) : done_(false) {
    std::vector<int> first(static_cast<std::size_t>(n), 0);
    first.back() = static_cast<int>(s);
    cur_ = Composition(std::move(first));
}

CompositionRange::iterator& CompositionRange::iterator::operator++() {
    std::vector<int> a = cur_.entries();
    const int n = static_cast<int>(a.size());
    int k = n - 1;
    while (k >= 0 && a[static_cast<std::size_t>(k)] == 0) --k;
    if (k <= 0) { // all mass in bin 0 (or s == 0): last element
        done_ = true;
        return *this;
    }
    const int v = a[static_cast<std::size_t>(k)];
    ++a[static_cast<std::size_t>(k - 1)];
    a[static_cast<std::size_t>(k)] = 0;
    a.back() = v - 1; // no-op when k == n-1 except for the decrement
    cur_ = Composition(std::move(a));
    return *this;
}

std::vector<Composition> all_compositions(long long s, int n) {
    std::vector<Composition> out;
    for (const Composition& c : CompositionRange(s, n)) out.push_back(c);
    return out;
}

namespace {
int parse_entry(std::string_view tok) {
    std::size_t b = 0, e = tok.size();
    while (b < e && (tok[b] == ' ' || tok[b] == '\t')) ++b;
    while (e > b && (tok[e - 1] == ' ' || tok[e - 1] == '\t')) --e;
    if (b == e) throw std::invalid_argument("empty composition entry");
    int value = 0;
    const auto res = std::from_chars(tok.data() + b, tok.data() + e, value);
    if (res.ec != std::errc{} || res.ptr != tok.data() + e)
        throw std::invalid_argument("bad composition entry: '" + std::string(tok) + "'");
    if (value < 0) throw std::invalid_argument("composition entries must be nonnegative");
    return value;
}
} // namespace

Composition parse_composition(std::string_view text) {
    std::vector<int> entries;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = text.find(',', pos);
        const std::string_view tok = text.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
        entries.push_back(parse_entry(tok));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return Composition(std::move(entries));
}

std::vector<Composition> parse_tuple(std::string_view text) {
    std::vector<Composition> tuple;
    std::size_t pos = 0;
    while (true) {
        const std::size_t semi = text.find(';', pos);
        const std::string_view part = text.substr(pos, semi == std::string_view::npos ? semi : semi - pos);
        tuple.push_back(parse_composition(part));
        if (semi == std::string_view::npos) break;
        pos = semi + 1;
    }
    return tuple;
}

std::string to_string(const Composition& c) {
    std::string out;
    for (int i = 0; i < c.n(); ++i) {
        if (i) out += ',';
        out += std::to_string(c[i]);
    }
    return out;
}

std::string to_string(const std::vector<Composition>& tuple) {
    std::string out;
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (i) out += ';';
        out += to_string(tuple[i]);
    }
    return out;
}

} // namespace emcomb
