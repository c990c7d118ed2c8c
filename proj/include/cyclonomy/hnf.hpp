/*
   Copyright 2026 The Cyclonomy Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <optional>
#include <vector>

#include "cyclonomy/bigint.hpp"

namespace cyclonomy {

using IntRow = std::vector<Integer>;
using IntMatrix = std::vector<IntRow>;

/**
 * Incremental row Hermite normal form of a full-rank integer lattice.
 *
 * Rows are inserted one at a time and eliminated against the current pivot
 * rows with extended-gcd combinations. Once every column has a pivot the
 * basis is kept reduced (entries above a pivot in [0, pivot)), which bounds
 * coefficient growth by the determinant.
 */
class HermiteBuilder {
public:
    explicit HermiteBuilder(std::size_t dim) : dim_(dim), pivots_(dim) {}

    void insert(IntRow v)
    {
        for (std::size_t col = 0; col < dim_; ++col) {
            if (v[col] == 0)
                continue;
            auto& pivot = pivots_[col];
            if (!pivot) {
                if (v[col] < 0)
                    for (auto& x : v)
                        x = -x;
                pivot = std::move(v);
                ++rank_;
                if (full_rank())
                    reduce();
                return;
            }
            Integer g, s, t;
            const Integer a = (*pivot)[col];
            const Integer b = v[col];
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            const Integer ag = a / g;
            const Integer bg = b / g;
            IntRow combined(dim_);
            for (std::size_t j = col; j < dim_; ++j) {
                combined[j] = s * (*pivot)[j] + t * v[j];
                v[j] = ag * v[j] - bg * (*pivot)[j];
            }
            *pivot = std::move(combined);
        }
        if (full_rank())
            reduce();
    }

    bool full_rank() const noexcept { return rank_ == dim_; }

    /// The HNF basis; requires full rank.
    IntMatrix result() const
    {
        IntMatrix out;
        out.reserve(dim_);
        for (const auto& r : pivots_)
            out.push_back(*r);
        return out;
    }

private:
    void reduce()
    {
        for (std::size_t i = 0; i < dim_; ++i) {
            const Integer& d = (*pivots_[i])[i];
            for (std::size_t j = 0; j < i; ++j) {
                auto& row = *pivots_[j];
                if (row[i] >= 0 && row[i] < d)
                    continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), row[i].get_mpz_t(), d.get_mpz_t());
                for (std::size_t k = i; k < dim_; ++k)
                    row[k] -= q * (*pivots_[i])[k];
            }
        }
    }

    std::size_t dim_;
    std::size_t rank_ = 0;
    std::vector<std::optional<IntRow>> pivots_;
};

/// Upper triangular, positive diagonal, entries above each pivot in [0, pivot).
inline bool is_hermite_normal_form(const IntMatrix& m)
{
    const std::size_t n = m.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n || m[i][i] <= 0)
            return false;
        for (std::size_t j = 0; j < i; ++j)
            if (m[i][j] != 0)
                return false;
        for (std::size_t j = 0; j < i; ++j)
            if (m[j][i] < 0 || m[j][i] >= m[i][i])
                return false;
    }
    return true;
}

/// Membership of v in the lattice spanned by an HNF basis.
inline bool lattice_contains(const IntMatrix& hnf, IntRow v)
{
    for (std::size_t col = 0; col < hnf.size(); ++col) {
        if (v[col] == 0)
            continue;
        const Integer& d = hnf[col][col];
        if (!mpz_divisible_p(v[col].get_mpz_t(), d.get_mpz_t()))
            return false;
        const Integer q = v[col] / d;
        for (std::size_t k = col; k < v.size(); ++k)
            v[k] -= q * hnf[col][k];
    }
    return true;
}

} // namespace cyclonomy
