// GridSpec is header-only; this unit anchors the target and double-checks the
// index codec once per build in debug configurations.
#include "fracops/grid.hpp"

#include <cassert>

namespace fracops {

namespace {

[[maybe_unused]] bool codec_roundtrip() {
    GridSpec g{2, 3};
    std::uint64_t idx = 0;
    for (long long a = -2; a <= 2; ++a)
        for (long long b = -3; b <= 3; ++b) {
            if (b == 0)
                continue;
            for (long long al = -2; al <= 2; ++al)
                for (long long be = -3; be <= 3; ++be) {
                    if (be == 0)
                        continue;
                    long long da, db, dal, dbe;
                    g.decode(idx++, da, db, dal, dbe);
                    if (da != a || db != b || dal != al || dbe != be)
                        return false;
                }
        }
    return idx == g.total_points();
}

[[maybe_unused]] const bool codec_ok = [] {
    assert(codec_roundtrip());
    return true;
}();

} // namespace

} // namespace fracops
