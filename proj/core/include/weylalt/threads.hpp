#pragma once

namespace weylalt {

/// Turns a requested worker count into an actual one: 0 means "pick for
/// me", which reads the WEYLALT_THREADS environment variable and falls
/// back to the hardware concurrency.  Always returns at least 1.
unsigned resolve_thread_count(unsigned requested);

}  // namespace weylalt
