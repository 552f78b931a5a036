#include "fnl/combinat.hpp"

#include <stdexcept>

namespace fnl {

std::vector<ExpVec> index_set(int d, int N) {
    if (d < 4)
        throw std::invalid_argument("index_set: d must be >= 4");
    std::vector<ExpVec> out;
    const int cap = d - 2;
    for (int i0 = 0; i0 <= std::min(cap, N); ++i0)
        for (int i1 = 0; i1 <= std::min(cap, N - i0); ++i1)
            for (int i2 = 0; i2 <= std::min(cap, N - i0 - i1); ++i2) {
                int i3 = N - i0 - i1 - i2;
                if (i3 < 0 || i3 > cap)
                    continue;
                out.push_back(ExpVec{{i0, i1, i2, i3}});
            }
    return out;
}

std::vector<ExpVec> balanced_index_set(int d) {
    if (d < 4)
        throw std::invalid_argument("balanced_index_set: d must be >= 4");
    std::vector<ExpVec> out;
    for (int i0 = 0; i0 <= d - 2; ++i0)
        for (int i2 = 0; i2 <= d - 2; ++i2)
            out.push_back(ExpVec{{i0, d - 2 - i0, i2, d - 2 - i2}});
    return out;
}

bool PencilSpec::valid() const {
    int half = d / 2;
    return d >= 4 && 1 <= d1 && d1 <= d2 && d2 <= half && 1 <= s1 && s1 <= half && 1 <= s2 &&
           s2 <= half && 0 <= m1 && m1 <= std::min(d1, s1) && 0 <= m2 && m2 <= std::min(d2, s2);
}

std::string PencilSpec::str() const {
    return std::to_string(d1) + "," + std::to_string(d2) + "," + std::to_string(s1) + "," +
           std::to_string(s2) + "," + std::to_string(m1) + "," + std::to_string(m2);
}

std::vector<PencilSpec> enumerate_pencil_specs(int d) {
    if (d < 4)
        throw std::invalid_argument("enumerate_pencil_specs: d must be >= 4");
    std::vector<PencilSpec> out;
    const int half = d / 2;
    for (int d1 = 1; d1 <= half; ++d1)
        for (int d2 = d1; d2 <= half; ++d2)
            for (int s1 = 1; s1 <= half; ++s1)
                for (int s2 = 1; s2 <= half; ++s2)
                    for (int m1 = 0; m1 <= std::min(d1, s1); ++m1)
                        for (int m2 = 0; m2 <= std::min(d2, s2); ++m2)
                            out.push_back(PencilSpec{d, d1, d2, s1, s2, m1, m2});
    return out;
}

Int binomial(int n, int k) {
    if (k < 0 || k > n)
        return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

int hodge_number_h20(int d) {
    return static_cast<int>(binomial(d - 1, 3).get_si());
}

} // namespace fnl
