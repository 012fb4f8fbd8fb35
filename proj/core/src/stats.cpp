#include "compatri/stats.hpp"

namespace compatri::stats {

Counters& counters() {
  thread_local Counters c;
  return c;
}

void reset() { counters() = Counters{}; }

}  // namespace compatri::stats
