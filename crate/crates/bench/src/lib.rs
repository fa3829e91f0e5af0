//! Criterion benchmarks for the exact-arithmetic kernels live under benches/.
