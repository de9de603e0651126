#include "memcap/golden.hpp"

#include "memcap/report.hpp"

namespace memcap {

const char* golden10_text() {
    return
        "10\n"
        "0 1 1 1 -1 1 1 -1 -1 1\n"
        "1 0 -1 1 1 -1 -1 1 1 1\n"
        "1 -1 0 -1 1 -1 1 1 1 1\n"
        "1 1 -1 0 1 -1 1 1 1 -1\n"
        "-1 1 1 1 0 1 1 -1 -1 1\n"
        "1 -1 -1 -1 1 0 -1 1 -1 1\n"
        "1 -1 1 1 1 -1 0 -1 -1 -1\n"
        "-1 1 1 1 -1 1 -1 0 -1 -1\n"
        "-1 1 1 1 -1 -1 -1 -1 0 1\n"
        "1 1 1 -1 1 1 -1 -1 1 0\n";
}

SynapticMatrix golden10_matrix() { return parse_matrix(golden10_text()); }

}  // namespace memcap
