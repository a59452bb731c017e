#include "lpdec/rational.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace lpdec {

Rat make_rat(long num, long den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Rat rat_from_string(const std::string& text) {
    auto is_int = [](const std::string& s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    const std::size_t slash = t.find('/');
    if (slash == std::string::npos) {
        if (!is_int(t)) throw std::invalid_argument("not a rational: '" + text + "'");
        return Rat(mpz_class(t));
    }
    const std::string num = t.substr(0, slash);
    const std::string den = t.substr(slash + 1);
    if (!is_int(num) || !is_int(den)) throw std::invalid_argument("not a rational: '" + text + "'");
    mpz_class d(den);
    if (d == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    Rat r(mpz_class(num), d);
    r.canonicalize();
    return r;
}

std::string rat_to_string(const Rat& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

double rat_to_double(const Rat& value) { return value.get_d(); }

std::vector<Rat> rat_vector_from_string(const std::string& text) {
    std::vector<Rat> out;
    std::string item;
    std::stringstream ss(text);
    while (std::getline(ss, item, ',')) out.push_back(rat_from_string(item));
    if (out.empty()) throw std::invalid_argument("empty vector literal");
    return out;
}

SqrtEnclosure sqrt_enclosure(const Rat& x, unsigned precision_bits) {
    if (sgn(x) < 0) throw std::invalid_argument("sqrt of negative rational");
    if (sgn(x) == 0) return {Rat(0), Rat(0), true};

    const mpz_class num = x.get_num();
    const mpz_class den = x.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t())) {
        mpz_class sn, sd;
        mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
        mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
        Rat r(sn, sd);
        r.canonicalize();
        return {r, r, true};
    }

    // sqrt(num/den) = sqrt(num*den)/den; floor integer sqrt seeds the interval.
    mpz_class prod = num * den;
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), prod.get_mpz_t());
    Rat lo(root, den);
    lo.canonicalize();
    Rat hi(root + 1, den);
    hi.canonicalize();

    // Newton from above: hi' = (hi + x/hi)/2 stays an upper bound, x/hi' a
    // lower bound. Quadratic convergence, so the loop is short.
    Rat tol = hi;
    mpz_class shift = tol.get_den() << precision_bits;
    tol = Rat(tol.get_num(), shift);
    tol.canonicalize();
    while (hi - lo > tol) {
        hi = (hi + x / hi) / 2;
        lo = x / hi;
    }
    return {lo, hi, false};
}

} // namespace lpdec
