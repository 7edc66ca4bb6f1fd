#include "nmx/verify.hpp"

#include <map>
#include <string>

namespace nmx {

namespace {

// Exact rationals frozen from oracle runs. A missing entry makes the
// owning check fail and print the freshly computed value for review.
//
// The extractor chain values reflect genuine micro-scale behavior: the
// uniform-source total is carried entirely by degenerate seeds (zero
// Hadamard masks or repeated point/mask pairs), and the pipeline
// distances sit near 1 - 2^-|L| because conditioning on (L', Y, Y')
// almost pins the small enumerated sources down.
const std::map<std::string, const char*>& baseline_table() {
    static const std::map<std::string, const char*> table = {
        {"ext-uniform-total", "33/128"},
        {"ext-flat-h7", "321/1024"},
        {"ext-flat-h6", "417/1024"},
        {"ext-flat-h4", "417/1024"},
        {"nmext-r1", "3/4"},
        {"nmext-r2", "3/4"},
        {"nmext-r3", "15/16"},
        {"2nmext-r1-y", "32065/32768"},
        {"2nmext-r1-x", "8021/8192"},
        {"2nmext-r2-y", "260931/262144"},
        {"2nmext-r2-x", "130481/131072"},
        {"2nmext-r3-y", "64297/65536"},
        {"2nmext-r3-x", "32163/32768"},
        {"t-nmext-r1-y", "1497/2048"},
        {"t-nmext-r2-y", "3/4"},
        {"t-nmext-r3-y", "61/128"},
        {"t-2nmext-r1-y", "55/64"},
        {"t-2nmext-r1-x", "3519/4096"},
        {"t-2nmext-r2-y", "3785/4096"},
        {"t-2nmext-r2-x", "15043/16384"},
        {"t-2nmext-r3-y", "7035/8192"},
        {"t-2nmext-r3-x", "879/1024"},
        {"entropy-d1-extraction", "3/8"},
        {"entropy-d2-extraction", "57/128"},
        {"entropy-d3-extraction", "7/16"},
    };
    return table;
}

} // namespace

const char* baseline(const std::string& name) {
    auto it = baseline_table().find(name);
    return it == baseline_table().end() ? nullptr : it->second;
}

} // namespace nmx
