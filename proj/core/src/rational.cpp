#include "qrep/rational.hpp"

#include "qrep/errors.hpp"

namespace qrep {

Rat rat_parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw parse_error("empty rational literal");
    try {
        Rat r(s);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw parse_error("bad rational literal: '" + s + "'");
    }
}

std::string rat_str(const Rat& x) { return x.get_str(); }

} // namespace qrep
