#include "m21/parallel.hpp"

#include <omp.h>

#include <atomic>

namespace m21::par {

namespace {
std::atomic<int> g_max_threads{0}; // 0 = OpenMP default
}

void set_max_threads(int n) { g_max_threads.store(n < 0 ? 0 : n); }

int max_threads() {
  int n = g_max_threads.load();
  return n == 0 ? omp_get_max_threads() : n;
}

bool enabled() { return max_threads() > 1; }

SerialSection::SerialSection() : saved_(g_max_threads.load()) { set_max_threads(1); }
SerialSection::~SerialSection() { g_max_threads.store(saved_); }

} // namespace m21::par
