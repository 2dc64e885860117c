#ifndef COMMRANK_EXEC_HPP
#define COMMRANK_EXEC_HPP

namespace commrank {

/// Kernel execution mode. Parallel kernels use OpenMP when compiled in and
/// must produce bit-identical results to their serial counterparts; the
/// serial path is kept as the reference implementation for tests and as the
/// baseline for the kernel benchmark.
enum class Exec {
    serial,
    parallel
};

/// Threads the parallel path will use (1 without OpenMP).
int exec_threads();

} // namespace commrank

#endif // COMMRANK_EXEC_HPP
