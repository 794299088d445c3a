#pragma once

#include "yg/partition.hpp"

#include <vector>

namespace yg {

/// Tableau as a ragged list of rows.
struct Tableau {
    std::vector<std::vector<int>> rows;

    Partition shape() const {
        std::vector<int> parts;
        parts.reserve(rows.size());
        for (const auto& r : rows) parts.push_back(static_cast<int>(r.size()));
        return Partition(std::move(parts));
    }

    bool is_semistandard() const; // rows weakly increase, columns strictly increase
    bool is_standard() const;     // 1..N each once, rows and columns strictly increase
};

/// Insertion tableau P (semistandard) and recording tableau Q (standard) of a
/// common shape.
struct TableauPair {
    Tableau p;
    Tableau q;
    Partition shape() const { return p.shape(); }
};

using Word = std::vector<int>;

/// Row-insertion RSK.  Letters must lie in 1..k.
TableauPair rsk_row_insert(const Word& word, int k);

/// Shape of the word under column insertion (dual RSK).  Coincides with the
/// row-insertion shape of the reversed word.
Partition rsk_shape_column(const Word& word, int k);

/// Shape only, via row bumping without recording; cheap path for experiments.
Partition rsk_shape_row(const Word& word, int k);

/// Length of the longest weakly increasing subsequence; equals the first row
/// of the RSK shape (Schensted) and serves as an independent oracle for it.
int longest_weakly_increasing(const Word& word);

} // namespace yg
