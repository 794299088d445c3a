#include "yg/tableau.hpp"

#include <algorithm>

namespace yg {

namespace {

void check_letters(const Word& word, int k) {
    if (k < 1) throw input_error("alphabet size must be positive");
    for (int x : word) {
        if (x < 1 || x > k) throw input_error("letter out of range 1..k");
    }
}

} // namespace

bool Tableau::is_semistandard() const {
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r + 1 < rows.size() && rows[r + 1].size() > rows[r].size()) return false;
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            if (c + 1 < rows[r].size() && rows[r][c] > rows[r][c + 1]) return false;
            if (r + 1 < rows.size() && c < rows[r + 1].size() && rows[r][c] >= rows[r + 1][c])
                return false;
        }
    }
    return true;
}

bool Tableau::is_standard() const {
    std::size_t n = 0;
    for (const auto& r : rows) n += r.size();
    std::vector<bool> seen(n + 1, false);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            const int v = rows[r][c];
            if (v < 1 || static_cast<std::size_t>(v) > n || seen[static_cast<std::size_t>(v)])
                return false;
            seen[static_cast<std::size_t>(v)] = true;
            if (c + 1 < rows[r].size() && rows[r][c] >= rows[r][c + 1]) return false;
            if (r + 1 < rows.size() && c < rows[r + 1].size() && rows[r][c] >= rows[r + 1][c])
                return false;
        }
    }
    return true;
}

TableauPair rsk_row_insert(const Word& word, int k) {
    check_letters(word, k);
    TableauPair t;
    for (std::size_t step = 0; step < word.size(); ++step) {
        int x = word[step];
        std::size_t r = 0;
        // Bump x down the rows; each bump replaces the leftmost entry
        // strictly greater than x.
        for (;;) {
            if (r == t.p.rows.size()) {
                t.p.rows.emplace_back();
                t.q.rows.emplace_back();
            }
            auto& row = t.p.rows[r];
            auto it = std::upper_bound(row.begin(), row.end(), x);
            if (it == row.end()) {
                row.push_back(x);
                t.q.rows[r].push_back(static_cast<int>(step) + 1);
                break;
            }
            std::swap(*it, x);
            ++r;
        }
    }
    return t;
}

Partition rsk_shape_row(const Word& word, int k) {
    check_letters(word, k);
    std::vector<std::vector<int>> rows;
    for (int x : word) {
        std::size_t r = 0;
        for (;;) {
            if (r == rows.size()) rows.emplace_back();
            auto& row = rows[r];
            auto it = std::upper_bound(row.begin(), row.end(), x);
            if (it == row.end()) {
                row.push_back(x);
                break;
            }
            std::swap(*it, x);
            ++r;
        }
    }
    std::vector<int> parts;
    parts.reserve(rows.size());
    for (const auto& r : rows) parts.push_back(static_cast<int>(r.size()));
    return Partition(std::move(parts));
}

Partition rsk_shape_column(const Word& word, int k) {
    check_letters(word, k);
    // Columns stored top-to-bottom, strictly increasing.  The bumped entry
    // moves one column to the right.
    std::vector<std::vector<int>> cols;
    for (int x : word) {
        std::size_t c = 0;
        for (;;) {
            if (c == cols.size()) cols.emplace_back();
            auto& col = cols[c];
            auto it = std::lower_bound(col.begin(), col.end(), x);
            if (it == col.end()) {
                col.push_back(x);
                break;
            }
            std::swap(*it, x);
            ++c;
        }
    }
    std::vector<int> parts;
    if (!cols.empty()) {
        parts.resize(cols[0].size(), 0);
        for (const auto& col : cols) {
            for (std::size_t i = 0; i < col.size(); ++i) ++parts[i];
        }
    }
    return Partition(std::move(parts));
}

int longest_weakly_increasing(const Word& word) {
    int k = 0;
    for (int x : word) k = std::max(k, x);
    if (k == 0) return 0;
    // best[a] = longest weakly increasing subsequence ending in letter a+1
    std::vector<int> best(static_cast<std::size_t>(k), 0);
    for (int x : word) {
        int m = 0;
        for (int a = 0; a < x; ++a) m = std::max(m, best[static_cast<std::size_t>(a)]);
        best[static_cast<std::size_t>(x - 1)] = m + 1;
    }
    int ans = 0;
    for (int v : best) ans = std::max(ans, v);
    return ans;
}

} // namespace yg
