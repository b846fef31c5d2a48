#include "zetadet/parallel.hpp"

#include <atomic>

namespace zetadet {

namespace {
std::atomic<bool> g_parallel{true};
}

bool parallel_enabled() { return g_parallel.load(); }

void set_parallel_enabled(bool on) { g_parallel.store(on); }

} // namespace zetadet
