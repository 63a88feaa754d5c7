#include "widthone/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace widthone {

MultiIndex RowTuple::column(long long j) const {
    std::vector<Coord> coords(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        coords[i] = rows[i][static_cast<std::size_t>(j)];
    return MultiIndex(std::move(coords));
}

WeaklyIncreasingSeq::WeaklyIncreasingSeq(int bound, long long length) : bound_(bound) {
    if (bound < 1) throw std::domain_error("WeaklyIncreasingSeq: bound must be positive");
    if (length < 0) throw std::domain_error("WeaklyIncreasingSeq: negative length");
    current_.assign(static_cast<std::size_t>(length), 1);
}

bool WeaklyIncreasingSeq::next(std::vector<int>& out) {
    if (exhausted_) return false;
    if (!started_) {
        started_ = true;
        out = current_;
        return true;
    }
    // advance the rightmost entry below the bound, then level the tail
    std::size_t i = current_.size();
    while (i > 0 && current_[i - 1] == bound_) --i;
    if (i == 0) {
        exhausted_ = true;
        return false;
    }
    ++current_[i - 1];
    for (std::size_t j = i; j < current_.size(); ++j) current_[j] = current_[i - 1];
    out = current_;
    return true;
}

std::vector<std::vector<int>> collect_weakly_increasing(int bound, long long length) {
    std::vector<std::vector<int>> all;
    WeaklyIncreasingSeq stream(bound, length);
    std::vector<int> seq;
    while (stream.next(seq)) all.push_back(seq);
    return all;
}

DenseTensor row_tuple_to_tensor(const RowTuple& rt, const Shape& n, std::size_t max_entries) {
    if (static_cast<int>(rt.rows.size()) != n.rank())
        throw std::domain_error("row tuple has " + std::to_string(rt.rows.size()) +
                                " rows for a rank-" + std::to_string(n.rank()) + " shape");
    const long long s = rt.length();
    for (std::size_t i = 0; i < rt.rows.size(); ++i) {
        const auto& row = rt.rows[i];
        if (static_cast<long long>(row.size()) != s)
            throw std::domain_error("row " + std::to_string(i + 1) + " has mismatched length");
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (row[j] < 1 || row[j] > n.dim(static_cast<int>(i)))
                throw std::domain_error("row " + std::to_string(i + 1) + " entry out of range");
            if (j > 0 && row[j - 1] > row[j])
                throw std::domain_error("row " + std::to_string(i + 1) +
                                        " is not weakly increasing");
        }
    }
    DenseTensor t(n, max_entries);
    for (long long j = 0; j < s; ++j) t.at(rt.column(j)) += 1;
    return t;
}

RowTuple tensor_to_row_tuple(const DenseTensor& t) {
    std::vector<MultiIndex> supp = t.support();
    if (!is_chain(supp)) throw std::domain_error("tensor support is not a chain");
    std::sort(supp.begin(), supp.end(), [](const MultiIndex& a, const MultiIndex& b) {
        return a.coord_sum() < b.coord_sum(); // a chain is totally ordered by coordinate sum
    });
    const int d = t.shape().rank();
    RowTuple rt;
    rt.rows.assign(static_cast<std::size_t>(d), {});
    for (const MultiIndex& x : supp) {
        const BigInt& mult = t.at(x);
        if (mult < 0) throw std::domain_error("tensor has a negative entry");
        for (BigInt c = 0; c < mult; ++c)
            for (int i = 0; i < d; ++i) rt.rows[static_cast<std::size_t>(i)].push_back(x[i]);
    }
    return rt;
}

bool is_member(const DenseTensor& t, long long s) {
    BigInt sum = 0;
    for (std::size_t off = 0; off < t.size(); ++off) {
        if (t[off] < 0) return false;
        sum += t[off];
    }
    if (sum != s) return false;
    return is_chain(t.support());
}

BigInt count_members(const Shape& n, long long s) {
    if (s < 0) throw std::domain_error("count_members: negative entry sum");
    BigInt c = 1;
    for (int i = 0; i < n.rank(); ++i) c *= binomial(s + n.dim(i) - 1, s);
    return c;
}

WidthOneStream::WidthOneStream(Shape n, long long s, const Guards& guards)
    : n_(std::move(n)), s_(s), max_entries_(guards.max_tensor_entries) {
    count_ = count_members(n_, s);
    if (count_ > guards.max_enum)
        throw GuardError("max_enum", count_.str(), std::to_string(guards.max_enum));
    // Under the guard every per-axis factor fits comfortably in memory.
    axis_rows_.reserve(static_cast<std::size_t>(n_.rank()));
    for (int i = 0; i < n_.rank(); ++i)
        axis_rows_.push_back(collect_weakly_increasing(n_.dim(i), s_));
    cursor_.assign(axis_rows_.size(), 0);
}

bool WidthOneStream::next_rows(RowTuple& out) {
    if (exhausted_) return false;
    if (started_) {
        // odometer, last axis fastest: lexicographic row-tuple order
        std::size_t i = cursor_.size();
        while (i > 0 && cursor_[i - 1] + 1 == axis_rows_[i - 1].size()) --i;
        if (i == 0) {
            exhausted_ = true;
            return false;
        }
        ++cursor_[i - 1];
        for (std::size_t j = i; j < cursor_.size(); ++j) cursor_[j] = 0;
    }
    started_ = true;
    out.rows.resize(axis_rows_.size());
    for (std::size_t i = 0; i < axis_rows_.size(); ++i) out.rows[i] = axis_rows_[i][cursor_[i]];
    return true;
}

bool WidthOneStream::next(DenseTensor& out) {
    RowTuple rt;
    if (!next_rows(rt)) return false;
    out = row_tuple_to_tensor(rt, n_, max_entries_);
    return true;
}

DenseTensor sigma_oracle(const Shape& n, long long s, const Guards& guards) {
    const BigInt total = count_members(n, s);
    if (total > guards.max_enum)
        throw GuardError("max_enum", total.str(), std::to_string(guards.max_enum));

    std::vector<std::vector<std::vector<int>>> axis_rows;
    axis_rows.reserve(static_cast<std::size_t>(n.rank()));
    for (int i = 0; i < n.rank(); ++i) axis_rows.push_back(collect_weakly_increasing(n.dim(i), s));

    const long long tuples = static_cast<long long>(total);
    const int d = n.rank();

    int workers = 1;
#ifdef _OPENMP
    workers = omp_get_max_threads();
#endif
    std::vector<DenseTensor> partial(static_cast<std::size_t>(workers));
    for (auto& p : partial) p = DenseTensor(n, guards.max_tensor_entries);

#ifdef _OPENMP
#pragma omp parallel num_threads(workers)
#endif
    {
        int tid = 0;
#ifdef _OPENMP
        tid = omp_get_thread_num();
#endif
        DenseTensor& acc = partial[static_cast<std::size_t>(tid)];
#ifdef _OPENMP
#pragma omp for schedule(static)
#endif
        for (long long r = 0; r < tuples; ++r) {
            // decode the rank into one row choice per axis, last axis fastest
            long long rem = r;
            std::vector<const std::vector<int>*> pick(static_cast<std::size_t>(d));
            for (int i = d - 1; i >= 0; --i) {
                const auto& rows = axis_rows[static_cast<std::size_t>(i)];
                pick[static_cast<std::size_t>(i)] =
                    &rows[static_cast<std::size_t>(rem % static_cast<long long>(rows.size()))];
                rem /= static_cast<long long>(rows.size());
            }
            // each column contributes 1 to its component
            for (long long j = 0; j < s; ++j) {
                std::size_t off = 0;
                for (int i = 0; i < d; ++i) {
                    const int v = (*pick[static_cast<std::size_t>(i)])[static_cast<std::size_t>(j)];
                    off = off * static_cast<std::size_t>(n.dim(i)) +
                          static_cast<std::size_t>(v - 1);
                }
                acc[off] += 1;
            }
        }
    }

    DenseTensor result = std::move(partial[0]);
    for (std::size_t w = 1; w < partial.size(); ++w) result.accumulate(partial[w]);
    return result;
}

DenseTensor sigma_membership_oracle(const Shape& n, long long s, const Guards& guards) {
    const std::size_t cells = n.cell_count();
    if (cells > 9 || s > 3)
        throw std::domain_error("membership oracle limited to at most 9 cells and s <= 3");

    DenseTensor acc(n, guards.max_tensor_entries);
    // weak compositions of s into `cells` parts, enumerated recursively
    std::vector<long long> entry(cells, 0);
    DenseTensor candidate(n, guards.max_tensor_entries);
    BigInt seen = 0;

    auto place = [&](auto&& self, std::size_t pos, long long remaining) -> void {
        if (pos + 1 == cells) {
            entry[pos] = remaining;
            for (std::size_t i = 0; i < cells; ++i) candidate[i] = entry[i];
            if (is_member(candidate, s)) {
                acc.accumulate(candidate);
                seen += 1;
            }
            return;
        }
        for (long long v = 0; v <= remaining; ++v) {
            entry[pos] = v;
            self(self, pos + 1, remaining - v);
        }
    };
    place(place, 0, s);

    if (seen != count_members(n, s))
        throw std::logic_error("membership oracle found " + seen.str() +
                               " members, expected " + count_members(n, s).str());
    return acc;
}

namespace serial {

DenseTensor sigma_oracle(const Shape& n, long long s, const Guards& guards) {
    WidthOneStream stream(n, s, guards);
    DenseTensor acc(n, guards.max_tensor_entries);
    DenseTensor t;
    while (stream.next(t)) acc.accumulate(t);
    return acc;
}

} // namespace serial

} // namespace widthone
