#ifndef M21_PARALLEL_HPP
#define M21_PARALLEL_HPP

#include <cstddef>

namespace m21::par {

/// Global worker cap for the OpenMP kernels. 1 means serial execution;
/// 0 restores the OpenMP default. Thread-compatible with the kernels only
/// when set before work starts.
void set_max_threads(int n);
int max_threads();
bool enabled();

/// Forces serial execution for the lifetime of the guard (used by the
/// serial reference paths in tests and the benchmark).
class SerialSection {
public:
  SerialSection();
  ~SerialSection();
  SerialSection(const SerialSection&) = delete;
  SerialSection& operator=(const SerialSection&) = delete;

private:
  int saved_;
};

} // namespace m21::par

#endif
