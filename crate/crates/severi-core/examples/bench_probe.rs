use std::time::Instant;

use severi_core::cubic::{CubicSpace, ModelKind};
use severi_core::geometry;
use severi_core::rng::SplitMix64;
use severi_core::sampling::{self, SampleCfg};

fn main() {
    let cfg = SampleCfg::default();
    for kind in ModelKind::all() {
        let t0 = Instant::now();
        let space = CubicSpace::new(kind);
        let build = t0.elapsed();
        let mut rng = SplitMix64::new(1);
        let t1 = Instant::now();
        let mut ok = 0;
        for _ in 0..1000 {
            let w = sampling::sample_off_sec(&space, &mut rng, &cfg).unwrap();
            if geometry::involution_check(&space, &w).unwrap() {
                ok += 1;
            }
        }
        let inv = t1.elapsed();
        let t2 = Instant::now();
        for _ in 0..50 {
            let d = sampling::sample_sec(&space, &mut rng, &cfg).unwrap();
            let locus = geometry::entry_locus(&space, &d.p).unwrap();
            assert_eq!(locus.sigma_basis.len(), kind.variety_dim() / 2 + 2);
        }
        let el = t2.elapsed();
        let t3 = Instant::now();
        let w0 = sampling::sample_off_sec(&space, &mut rng, &cfg).unwrap();
        let lm = geometry::l_matrix(&space, &w0).unwrap();
        let _ = lm.inverse().unwrap();
        let lminv = t3.elapsed();
        println!(
            "{kind:12} build {build:9.2?}  1000 involutions {inv:9.2?} ({ok} ok)  50 entry loci {el:9.2?}  l_matrix+inv {lminv:9.2?}"
        );
    }
}
