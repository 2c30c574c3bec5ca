//! Benchmark fixtures for `orbit-hilbert-core`; see `benches/paths.rs`.

use orbit_hilbert::LieType;

/// Representative types: small classical, mid classical and the largest exceptionals.
pub fn sample_types() -> [LieType; 5] {
    [LieType::A(3), LieType::D(8), LieType::F4, LieType::E7, LieType::E8]
}
