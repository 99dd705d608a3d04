//! Fixtures shared by the benchmarks in `benches/`.

use manin_core::coquad::{coquad_to_ca, QuadraticLie2Algebra};
use manin_core::generate::Generator;
use manin_core::{catalog, Structure};

/// Fixed seed so every run measures the same instances.
pub const SEED: u64 = 0x62_656e_6368;

/// Quadratic Lie 2-algebra of the catalog's co-quadratic sl2.
pub fn coquad_sl2_ca() -> QuadraticLie2Algebra {
    match catalog::load("coquad_sl2").expect("catalog entry") {
        Structure::Coquadratic { cq, .. } => coquad_to_ca(&cq).expect("valid co-quadratic algebra"),
        other => panic!("coquad_sl2 has kind {}", other.kind()),
    }
}

pub fn generator() -> Generator {
    Generator::new(SEED)
}
