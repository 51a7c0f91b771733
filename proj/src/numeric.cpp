#include "gradal/numeric.hpp"

#include "gradal/error.hpp"

#include <cctype>

namespace gradal {

Rat make_rat(const Int &num, const Int &den)
{
    require(den != 0, ErrorKind::InvalidArgument, "zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Int &x) { return x.get_str(); }

std::string to_string(const Rat &x)
{
    if (x.get_den() == 1)
        return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

namespace {

Int parse_int(std::string_view s, std::string_view whole)
{
    if (s.empty())
        fail(ErrorKind::ParseError, "malformed rational '" + std::string(whole) + "'");
    std::size_t i = 0;
    if (s[0] == '+' || s[0] == '-')
        i = 1;
    if (i == s.size())
        fail(ErrorKind::ParseError, "malformed rational '" + std::string(whole) + "'");
    for (std::size_t k = i; k < s.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(s[k])))
            fail(ErrorKind::ParseError, "malformed rational '" + std::string(whole) + "'");
    std::string digits(s.substr(s[0] == '+' ? 1 : 0));
    return Int(digits, 10);
}

} // namespace

Rat parse_rat(std::string_view text)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rat(parse_int(text, text));
    Int num = parse_int(text.substr(0, slash), text);
    std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
        fail(ErrorKind::ParseError, "signed denominator in '" + std::string(text) + "'");
    Int den = parse_int(den_text, text);
    if (den == 0)
        fail(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
    return make_rat(num, den);
}

bool is_integer(const Rat &x) { return x.get_den() == 1; }

Int floor_div(const Int &a, const Int &b)
{
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Int mod_floor(const Int &a, const Int &b)
{
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Int gcd(const Int &a, const Int &b)
{
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Int lcm(const Int &a, const Int &b)
{
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

Bezout xgcd(const Int &a, const Int &b)
{
    Bezout r;
    mpz_gcdext(r.g.get_mpz_t(), r.s.get_mpz_t(), r.t.get_mpz_t(), a.get_mpz_t(),
               b.get_mpz_t());
    return r;
}

std::string to_string(const IntVec &v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ",";
        s += v[i].get_str();
    }
    return s + ")";
}

} // namespace gradal
