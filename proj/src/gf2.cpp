#include "homdist/gf2.hpp"

namespace homdist {

std::vector<Bits> gf2_kernel(const std::vector<Bits>& rows, int ncols) {
    // Gaussian elimination; free columns parameterize the kernel.
    std::vector<Bits> mat = rows;
    std::vector<int> pivot_of_col(ncols, -1);
    int rank = 0;
    for (int c = 0; c < ncols; ++c) {
        int sel = -1;
        for (int r = rank; r < int(mat.size()); ++r)
            if (mat[r].test(c)) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        std::swap(mat[rank], mat[sel]);
        for (int r = 0; r < int(mat.size()); ++r)
            if (r != rank && mat[r].test(c)) mat[r] ^= mat[rank];
        pivot_of_col[c] = rank;
        ++rank;
    }
    std::vector<Bits> kernel;
    for (int c = 0; c < ncols; ++c) {
        if (pivot_of_col[c] >= 0) continue;  // pivot column
        Bits v(ncols);
        v.set(c);
        for (int c2 = 0; c2 < ncols; ++c2)
            if (pivot_of_col[c2] >= 0 && mat[pivot_of_col[c2]].test(c)) v.set(c2);
        kernel.push_back(std::move(v));
    }
    return kernel;
}

}  // namespace homdist
