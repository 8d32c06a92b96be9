#include "smoothcolor/coincidences.hpp"

#include <algorithm>
#include <vector>

namespace smoothcolor {

CoincidenceStats coincidence_stats(u64 k, u64 p) {
    if (!is_prime_u64(p) || (p - 1) % k != 0)
        throw BadModulus("p must be a prime congruent to 1 mod k");
    CoincidenceStats st;
    st.k = k;
    st.p = p;
    st.n = (p - 1) / k;
    std::vector<u64> residues(st.n);
    for (u64 i = 1; i <= st.n; ++i) residues[i - 1] = powmod(i, k, p);
    std::sort(residues.begin(), residues.end());
    for (std::size_t i = 0; i < residues.size();) {
        std::size_t j = i;
        while (j < residues.size() && residues[j] == residues[i]) ++j;
        u64 mult = j - i;
        st.coincidence_count += mult * (mult - 1) / 2;
        ++st.distinct_count;
        i = j;
    }
    st.c_k = elkies_constant(k);
    st.predicted_fraction = predicted_distinct_fraction(k);
    return st;
}

mpq_class elkies_constant(u64 k) {
    if (k < 3) throw std::invalid_argument("k must be at least 3");
    mpq_class c(k % 2 == 1 ? mpz_class(k - 1) : mpz_class(k - 2), 2 * mpz_class(k) * mpz_class(k));
    c.canonicalize();
    return c;
}

mpq_class predicted_distinct_fraction(u64 k) {
    mpz_class km1k, kk;
    mpz_ui_pow_ui(km1k.get_mpz_t(), static_cast<unsigned long>(k - 1),
                  static_cast<unsigned long>(k));
    mpz_ui_pow_ui(kk.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(k));
    mpq_class f(km1k + 1, kk);
    f.canonicalize();
    return 1 - f;
}

}  // namespace smoothcolor
