#include "plconvex/rational.hpp"

#include <cctype>

#include "plconvex/errors.hpp"

namespace plconvex {

namespace {

bool valid_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rat rat_from_string(const std::string& s) {
    std::string num = s, den = "1";
    if (auto slash = s.find('/'); slash != std::string::npos) {
        num = s.substr(0, slash);
        den = s.substr(slash + 1);
    }
    if (!valid_integer_token(num) || !valid_integer_token(den))
        throw error(errc::bad_rational, "malformed rational '" + s + "'");
    Rat r{Int(num), Int(den)};
    if (sign(r.get_den()) == 0)
        throw error(errc::bad_rational, "zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

std::string rat_to_string(const Rat& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

}  // namespace plconvex
