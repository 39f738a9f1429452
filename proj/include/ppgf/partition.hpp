#pragma once

// Integer partitions: just enough for the index-set calculus driving the
// sub-Pfaffian identities (conjugation, odd-row/odd-column counts, the
// m-element index set of a partition, and iteration over partitions in a box).

#include "ppgf/matrix.hpp"

#include <vector>

namespace ppgf {

class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 0) throw std::invalid_argument("negative part");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("parts not weakly decreasing");
        }
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int part(int i) const {  // 1-based, 0 beyond the length
        return i >= 1 && i <= length() ? parts_[static_cast<size_t>(i - 1)] : 0;
    }
    int first() const { return part(1); }

    long weight() const {
        long w = 0;
        for (int p : parts_) w += p;
        return w;
    }

    Partition conjugate() const {
        std::vector<int> c(static_cast<size_t>(first()), 0);
        for (int p : parts_)
            for (int j = 0; j < p; ++j) ++c[static_cast<size_t>(j)];
        return Partition(std::move(c));
    }

    /// Number of rows of odd length.
    int odd_rows() const {
        int k = 0;
        for (int p : parts_) k += p % 2;
        return k;
    }

    /// Number of columns of odd length.
    int odd_cols() const { return conjugate().odd_rows(); }

    bool all_rows_even() const { return odd_rows() == 0; }
    bool all_cols_even() const { return odd_cols() == 0; }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

private:
    std::vector<int> parts_;
};

/// The m-element set {lambda_m + 1, lambda_{m-1} + 2, ..., lambda_1 + m}.
inline IndexSet index_set_of_partition(const Partition& lambda, int m, int n) {
    if (lambda.length() > m) throw std::invalid_argument("partition longer than m");
    std::vector<int> members;
    members.reserve(static_cast<size_t>(m));
    for (int i = 1; i <= m; ++i) members.push_back(lambda.part(m - i + 1) + i);
    return IndexSet(std::move(members), n);
}

/// Recovers the partition from an m-element index set in [1, n].
inline Partition partition_of_index_set(const IndexSet& idx) {
    int m = idx.size();
    std::vector<int> parts(static_cast<size_t>(m));
    for (int i = 1; i <= m; ++i)
        parts[static_cast<size_t>(m - i)] = idx.members()[static_cast<size_t>(i - 1)] - i;
    return Partition(std::move(parts));
}

/// All partitions with at most `rows` parts, each at most `width`,
/// in lexicographic order.
inline std::vector<Partition> partitions_in_box(int rows, int width) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int cap) {
        out.emplace_back(std::vector<int>(cur));
        if (remaining == 0) return;
        for (int p = 1; p <= cap; ++p) {
            cur.push_back(p);
            rec(remaining - 1, p);
            cur.pop_back();
        }
    };
    rec(rows, width);
    return out;
}

}  // namespace ppgf
