// Benchmarks live in benches/; see braidmat for the library itself.
