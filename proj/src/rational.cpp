#include "szeta/rational.hpp"

#include "szeta/transfer.hpp"

namespace szeta {

Rational inv_power(const Rational& base, int s) {
    if (base == 0 && s > 0) throw DomainError("zero base with positive exponent");
    Rational p = 1;
    Rational b = s >= 0 ? Rational(1) / base : base;
    for (int k = 0; k < (s >= 0 ? s : -s); ++k) p *= b;
    return p;
}

Rational parse_rational(std::string_view text) {
    std::string t(text);
    auto dot = t.find('.');
    try {
        if (dot == std::string::npos) {
            Rational q(t);
            q.canonicalize();
            return q;
        }
        std::string digits = t.substr(0, dot) + t.substr(dot + 1);
        std::string den = "1" + std::string(t.size() - dot - 1, '0');
        if (digits.empty() || digits == "-") throw std::invalid_argument(t);
        Rational q{mpz_class(digits), mpz_class(den)};
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw ParseError("bad rational '" + t + "'");
    }
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational schur_truncated_exact(const IntTableau& s, const RationalTableau& x, long n) {
    if (!(s.shape() == x.shape())) throw std::invalid_argument("tableau shapes differ");
    StripGraph g = build_strip_graph(s.shape());
    return truncated_skew_sum<Rational>(g, n, [&](long m, std::vector<Rational>& w) {
        for (std::size_t c = 0; c < w.size(); ++c) w[c] = inv_power(Rational(m) + x.values()[c], s.values()[c]);
    });
}

}  // namespace szeta
