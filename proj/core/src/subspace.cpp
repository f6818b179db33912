#include "fcpc/subspace.hpp"

#include <algorithm>

namespace fcpc {

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<int> rref(const Field& f, std::vector<std::vector<int>>& rows) {
    std::vector<int> pivots;
    if (rows.empty()) return pivots;
    const int cols = static_cast<int>(rows[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
        int sel = -1;
        for (int i = r; i < static_cast<int>(rows.size()); ++i) {
            if (rows[i][c] != 0) {
                sel = i;
                break;
            }
        }
        if (sel < 0) continue;
        std::swap(rows[r], rows[sel]);
        const int scale = f.inv(rows[r][c]);
        for (int j = 0; j < cols; ++j) rows[r][j] = f.mul(rows[r][j], scale);
        for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            const int factor = rows[i][c];
            for (int j = 0; j < cols; ++j) rows[i][j] = f.sub(rows[i][j], f.mul(factor, rows[r][j]));
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

}  // namespace

Subspace::Subspace(Space space, const std::vector<std::vector<int>>& generators) : space_(std::move(space)) {
    basis_ = generators;
    for (const auto& row : basis_) {
        if (static_cast<int>(row.size()) != space_.k()) throw DimensionMismatch("generator has wrong length");
        for (int c : row) {
            if (c < 0 || c >= space_.q()) throw BadFormat("generator entry out of field range");
        }
    }
    pivot_cols_ = rref(space_.field(), basis_);
}

Subspace Subspace::zero(const Space& space) { return Subspace(space, {}); }

Subspace Subspace::whole(const Space& space) {
    std::vector<std::vector<int>> id(space.k(), std::vector<int>(space.k(), 0));
    for (int i = 0; i < space.k(); ++i) id[i][i] = 1;
    return Subspace(space, id);
}

bool Subspace::contains(WordRank u) const {
    std::vector<int> w = space_.digits_of(u);
    const Field& f = space_.field();
    for (size_t r = 0; r < basis_.size(); ++r) {
        const int c = pivot_cols_[r];
        if (w[c] == 0) continue;
        const int factor = w[c];
        for (int j = 0; j < space_.k(); ++j) w[j] = f.sub(w[j], f.mul(factor, basis_[r][j]));
    }
    return std::all_of(w.begin(), w.end(), [](int x) { return x == 0; });
}

std::vector<WordRank> Subspace::enumerate() const {
    uint64_t count = 1;
    for (int i = 0; i < dim(); ++i) {
        count *= space_.q();
        if (count > space_cap()) throw SpaceTooLarge("subspace too large to enumerate");
    }
    std::vector<WordRank> out;
    out.reserve(count);
    std::vector<int> coeffs(dim(), 0);
    const Field& f = space_.field();
    for (uint64_t n = 0; n < count; ++n) {
        uint64_t rest = n;
        std::vector<int> w(space_.k(), 0);
        for (int i = 0; i < dim(); ++i) {
            const int a = static_cast<int>(rest % space_.q());
            rest /= space_.q();
            if (a == 0) continue;
            for (int j = 0; j < space_.k(); ++j) w[j] = f.add(w[j], f.mul(a, basis_[i][j]));
        }
        out.push_back(space_.rank_of(w));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Subspace Subspace::orthogonal_complement() const {
    if (basis_.empty()) return Subspace::whole(space_);
    return kernel_of_linear(space_, basis_);
}

bool Subspace::operator==(const Subspace& other) const {
    return space_ == other.space_ && basis_ == other.basis_;  // RREF is canonical
}

Subspace kernel_of_linear(const Space& space, const std::vector<std::vector<int>>& matrix) {
    std::vector<std::vector<int>> rows = matrix;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != space.k()) throw DimensionMismatch("matrix row has wrong length");
        for (int c : row) {
            if (c < 0 || c >= space.q()) throw BadFormat("matrix entry out of field range");
        }
    }
    std::vector<int> pivots = rref(space.field(), rows);
    std::vector<bool> is_pivot(space.k(), false);
    for (int c : pivots) is_pivot[c] = true;

    const Field& f = space.field();
    std::vector<std::vector<int>> null_basis;
    for (int free_col = 0; free_col < space.k(); ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<int> v(space.k(), 0);
        v[free_col] = 1;
        for (size_t r = 0; r < rows.size(); ++r) v[pivots[r]] = f.neg(rows[r][free_col]);
        null_basis.push_back(std::move(v));
    }
    return Subspace(space, null_basis);
}

Subspace kernel_intersection(const std::vector<Subspace>& subspaces) {
    if (subspaces.empty()) throw InvalidArgs("need at least one subspace");
    const Space& space = subspaces[0].space();
    std::vector<std::vector<int>> stacked_checks;
    for (const Subspace& v : subspaces) {
        require_same_space(space, v.space());
        const Subspace dual = v.orthogonal_complement();
        for (const auto& row : dual.basis()) stacked_checks.push_back(row);
    }
    if (stacked_checks.empty()) return Subspace::whole(space);
    return kernel_of_linear(space, stacked_checks);
}

}  // namespace fcpc
