#include "sim/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace sim::kernels {
namespace {

struct Selection {
    const Ops* table;
    const char* name;
};

Selection select() {
    const Ops* avx2 = avx2_ops_or_null();
    const char* env = std::getenv("SIM_KERNELS");
    if (env != nullptr) {
        if (std::strcmp(env, "scalar") == 0) return {&scalar_ops(), "scalar"};
        if (std::strcmp(env, "avx2") == 0 && avx2 != nullptr) return {avx2, "avx2"};
        // "auto" or anything unrecognized falls through to detection
    }
    if (avx2 != nullptr) return {avx2, "avx2"};
    return {&scalar_ops(), "scalar"};
}

const Selection& selection() {
    static const Selection s = select();
    return s;
}

} // namespace

const Ops& ops() { return *selection().table; }

std::string_view active_name() { return selection().name; }

} // namespace sim::kernels
