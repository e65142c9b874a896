#ifndef LGC_PARALLEL_HPP
#define LGC_PARALLEL_HPP

#include <functional>

namespace lgc {

// Worker count: LGC_THREADS env var caps it, 0 or unset means hardware
// concurrency. Always >= 1.
int worker_count();

// Runs fn(i) for i in [begin, end) across workers. Static row assignment,
// so results are bitwise independent of the thread count. Exceptions from
// fn are captured and rethrown on the calling thread.
void parallel_for(int begin, int end, const std::function<void(int)>& fn);

} // namespace lgc

#endif
