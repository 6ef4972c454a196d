# Benchmarks are intentionally separate from correctness tests.
