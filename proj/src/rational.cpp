#include "cyclefactor/rational.hpp"

#include "cyclefactor/errors.hpp"

namespace cyclefactor {

BigInt factorial(int m) {
    if (m < 0) throw PreconditionError("factorial of a negative number");
    BigInt result = 1;
    for (int i = 2; i <= m; ++i) result *= i;
    return result;
}

std::string to_fraction_string(const BigRational& x) {
    return numerator_of(x).str() + "/" + denominator_of(x).str();
}

BigRational parse_fraction(std::string_view text) {
    auto parse_int = [&](std::string_view s) {
        if (s.empty()) throw PreconditionError("malformed fraction: '" + std::string(text) + "'");
        std::size_t i = (s.front() == '-' || s.front() == '+') ? 1 : 0;
        if (i == s.size()) throw PreconditionError("malformed fraction: '" + std::string(text) + "'");
        for (std::size_t j = i; j < s.size(); ++j) {
            if (s[j] < '0' || s[j] > '9')
                throw PreconditionError("malformed fraction: '" + std::string(text) + "'");
        }
        return BigInt(std::string(s));
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return BigRational(parse_int(text));
    BigInt q = parse_int(text.substr(slash + 1));
    if (q == 0) throw PreconditionError("fraction with zero denominator");
    return BigRational(parse_int(text.substr(0, slash)), q);
}

double to_double(const BigRational& x) { return x.convert_to<double>(); }

}  // namespace cyclefactor
