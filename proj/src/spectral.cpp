#include "spectral.hpp"

namespace circdet::spectral {

AssociatedPolynomial associated_polynomial(const CirculantSpec& spec) {
    const int n = spec.word.size();
    AssociatedPolynomial out;
    out.coeffs.reserve(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j)
        out.coeffs.push_back(mapped_symbol(spec.alphabet, spec.word.get(j)));
    if (spec.alphabet == Alphabet::BinaryPM1)
        out.cls = PolyClass::Littlewood;
    else
        out.cls = out.coeffs[0] == 1 ? PolyClass::Newman : PolyClass::Other;
    return out;
}

std::vector<int> gram_first_row(const CirculantSpec& spec) {
    const int n = spec.word.size();
    std::vector<int> a(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) a[static_cast<size_t>(j)] = mapped_symbol(spec.alphabet, spec.word.get(j));
    std::vector<int> g(static_cast<size_t>(n), 0);
    for (int t = 0; t < n; ++t)
        for (int j = 0; j < n; ++j)
            g[static_cast<size_t>(t)] += a[static_cast<size_t>(j)] * a[static_cast<size_t>((j + t) % n)];
    return g;
}

std::vector<int> signed_gram_first_row(const Word& w) {
    return gram_first_row({Alphabet::BinaryPM1, w});
}

bool is_flat_correlation(std::span<const int> g) {
    if (g.empty() || g[0] != static_cast<int>(g.size())) return false;
    for (size_t t = 1; t < g.size(); ++t)
        if (g[t] != -1) return false;
    return true;
}

}  // namespace circdet::spectral
