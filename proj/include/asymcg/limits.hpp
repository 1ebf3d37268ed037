#pragma once

#include <cstddef>

namespace asymcg {

/// Cap on support subtree size (vertices), env ASYMCG_MAX_SUPPORT, default 64.
/// Read once; settable programmatically (the acceptance harness raises it).
std::size_t max_support_vertices();
void set_max_support_vertices(std::size_t n);

void check_support_limit(std::size_t vertices);

} // namespace asymcg
