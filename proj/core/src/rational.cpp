#include "halg/rational.hpp"

#include <stdexcept>

namespace halg {

std::string rat_to_string(const Scalar& x) {
    std::string num = numerator(x).str();
    if (denominator(x) == 1)
        return num;
    return num + "/" + denominator(x).str();
}

Scalar rat_from_string(std::string_view s) {
    if (s.empty())
        throw std::invalid_argument("empty rational literal");
    auto bad = [&] { throw std::invalid_argument("malformed rational literal '" + std::string(s) + "'"); };
    size_t slash = s.find('/');
    auto check_int = [&](std::string_view part, bool allow_sign) {
        if (part.empty())
            bad();
        size_t i = 0;
        if (allow_sign && (part[0] == '-' || part[0] == '+'))
            i = 1;
        if (i == part.size())
            bad();
        for (; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9')
                bad();
    };
    using Int = boost::multiprecision::cpp_int;
    if (slash == std::string_view::npos) {
        check_int(s, true);
        return Scalar(Int(std::string(s)));
    }
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    check_int(num, true);
    check_int(den, false);
    Int d{std::string(den)};
    if (d == 0)
        throw std::invalid_argument("zero denominator in rational literal");
    return Scalar(Int(std::string(num)), d);
}

Scalar rat_binomial(int n, int k) {
    if (k < 0 || k > n)
        return 0;
    Scalar r = 1;
    for (int i = 0; i < k; ++i)
        r = r * (n - i) / (i + 1);
    return r;
}

Scalar rat_factorial(int n) {
    Scalar r = 1;
    for (int i = 2; i <= n; ++i)
        r *= i;
    return r;
}

} // namespace halg
