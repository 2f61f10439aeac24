#include "plink/rational.hpp"

#include "plink/errors.hpp"

namespace plink {

std::string rat_to_string(const Rat& r) {
    Int n = rat_num(r);
    Int d = rat_den(r);
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
}

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw Error("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw Error("zero denominator in rational literal: " + s);
        return Rat(num, den);
    } catch (const std::runtime_error&) {
        throw Error("malformed rational literal: " + s);
    }
}

}  // namespace plink
