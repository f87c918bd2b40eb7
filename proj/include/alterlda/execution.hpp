#pragma once

namespace alterlda {

/// Batch kernels run either as a plain loop (the reference) or as an OpenMP
/// parallel loop. Both produce identical results: every job owns its seed.
enum class Execution { Serial, Parallel };

/// Threads OpenMP would use; 1 when built without OpenMP.
int max_threads() noexcept;

}  // namespace alterlda
