#include "asymcg/limits.hpp"

#include <atomic>
#include <cstdlib>

#include "asymcg/error.hpp"

namespace asymcg {

namespace {

std::size_t initial_limit() {
    if (const char* env = std::getenv("ASYMCG_MAX_SUPPORT")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v >= 1) return static_cast<std::size_t>(v);
    }
    return 64;
}

std::atomic<std::size_t>& limit_slot() {
    static std::atomic<std::size_t> limit{initial_limit()};
    return limit;
}

} // namespace

std::size_t max_support_vertices() { return limit_slot().load(); }

void set_max_support_vertices(std::size_t n) { limit_slot().store(n); }

void check_support_limit(std::size_t vertices) {
    if (vertices > max_support_vertices())
        throw Error(ErrorKind::Limit,
                    "support subtree would exceed ASYMCG_MAX_SUPPORT (" +
                        std::to_string(max_support_vertices()) + " vertices)");
}

} // namespace asymcg
