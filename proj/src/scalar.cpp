#include "rht/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace rht {

std::string to_string(const Scalar& s) {
    mpq_class c(s);
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Scalar parse_scalar(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    for (char ch : text) {
        if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '/' || ch == '+'))
            throw std::invalid_argument("malformed rational literal: " + text);
    }
    Scalar out;
    if (out.set_str(text, 10) != 0) throw std::invalid_argument("malformed rational literal: " + text);
    if (out.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
    out.canonicalize();
    return out;
}

Scalar factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial of negative integer");
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Scalar(f);
}

Scalar binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return Scalar(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Scalar(b);
}

}  // namespace rht
