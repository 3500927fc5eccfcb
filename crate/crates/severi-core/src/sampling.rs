//! Seeded samplers for variety, secant and generic points.
//!
//! Points of X are produced from explicit rank-one constructions
//! (decomposables `v w^T`, `t v v^T`, `v ^ w`, and Hermitian squares `v v*`
//! with two octonion slots), enriched by the closure rule: if `det(P) = 0`
//! then `sharp(P)` lies on X, because `P## = det(P) P = 0`. Degenerate draws
//! (zero vectors, vanishing determinants where one is required) are rejected
//! and resampled under a fixed retry budget, never skipped silently.

use alloc::vec::Vec;
use core::fmt;
use num_traits::Zero;

use crate::composition::cd_mul;
use crate::cubic::{CubicSpace, ModelKind, Point};
use crate::rational::{rat, Rational};
use crate::rng::SplitMix64;

#[derive(Debug, Clone, Copy)]
pub struct SampleCfg {
    /// Integer coordinates are drawn from `[-bound, bound]`.
    pub bound: i64,
    /// Retries before a sampler reports failure.
    pub retries: u32,
}

impl Default for SampleCfg {
    fn default() -> Self {
        SampleCfg {
            bound: 10,
            retries: 64,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampleError {
    pub what: &'static str,
}

impl fmt::Display for SampleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "sampler budget exhausted: {}", self.what)
    }
}

/// A secant point together with the two variety points it joins.
#[derive(Debug, Clone)]
pub struct SecantDecomp {
    pub p: Point,
    pub x: Point,
    pub y: Point,
}

/// A small nonzero rational `num/den` with both parts bounded.
pub fn random_scale(rng: &mut SplitMix64, bound: i64) -> Rational {
    let num = rng.nonzero_int(bound);
    let den = rng.nonzero_int(bound).unsigned_abs() as i64;
    crate::rational::frac(num, den)
}

fn random_int_vec(rng: &mut SplitMix64, len: usize, bound: i64) -> Vec<Rational> {
    (0..len).map(|_| rat(rng.int_in(bound))).collect()
}

fn nonzero_int_vec(rng: &mut SplitMix64, len: usize, bound: i64) -> Vec<Rational> {
    loop {
        let v = random_int_vec(rng, len, bound);
        if v.iter().any(|x| !x.is_zero()) {
            return v;
        }
    }
}

/// A point of X: nonzero with `sharp = 0`, exactly.
pub fn sample_x(
    space: &CubicSpace,
    rng: &mut SplitMix64,
    cfg: &SampleCfg,
) -> Result<Point, SampleError> {
    for _ in 0..cfg.retries {
        let candidate = match space.kind() {
            ModelKind::Veronese => veronese_rank_one(rng, cfg),
            ModelKind::Segre => segre_rank_one(rng, cfg),
            ModelKind::Pfaffian => pfaffian_decomposable(rng, cfg),
            ModelKind::Exceptional => exceptional_rank_one(rng, cfg),
        };
        // every 4th draw goes through the closure rule for extra spread
        let candidate = if rng.index(4) == 0 {
            let other = match space.kind() {
                ModelKind::Veronese => veronese_rank_one(rng, cfg),
                ModelKind::Segre => segre_rank_one(rng, cfg),
                ModelKind::Pfaffian => pfaffian_decomposable(rng, cfg),
                ModelKind::Exceptional => exceptional_rank_one(rng, cfg),
            };
            // x + y is on the cubic for x, y on X, so sharp lands back on X
            space.sharp(&candidate.add(&other))
        } else {
            candidate
        };
        if candidate.is_zero() {
            continue;
        }
        debug_assert!(space.is_on_x(&candidate));
        return Ok(candidate.scale(&random_scale(rng, cfg.bound)));
    }
    Err(SampleError { what: "sample_x" })
}

fn veronese_rank_one(rng: &mut SplitMix64, cfg: &SampleCfg) -> Point {
    let v = nonzero_int_vec(rng, 3, cfg.bound);
    // (w11, w22, w33, w12, w13, w23) of v v^T
    let coords = alloc::vec![
        &v[0] * &v[0],
        &v[1] * &v[1],
        &v[2] * &v[2],
        &v[0] * &v[1],
        &v[0] * &v[2],
        &v[1] * &v[2],
    ];
    Point::new(ModelKind::Veronese, coords)
}

fn segre_rank_one(rng: &mut SplitMix64, cfg: &SampleCfg) -> Point {
    let v = nonzero_int_vec(rng, 3, cfg.bound);
    let w = nonzero_int_vec(rng, 3, cfg.bound);
    let mut coords = Vec::with_capacity(9);
    for i in 0..3 {
        for j in 0..3 {
            coords.push(&v[i] * &w[j]);
        }
    }
    Point::new(ModelKind::Segre, coords)
}

fn pfaffian_decomposable(rng: &mut SplitMix64, cfg: &SampleCfg) -> Point {
    let v = nonzero_int_vec(rng, 6, cfg.bound);
    let w = nonzero_int_vec(rng, 6, cfg.bound);
    let mut coords = Vec::with_capacity(15);
    for i in 1..=6 {
        for j in (i + 1)..=6 {
            coords.push(&v[i - 1] * &w[j - 1] - &v[j - 1] * &w[i - 1]);
        }
    }
    Point::new(ModelKind::Pfaffian, coords)
}

/// Hermitian square `v v*` where one slot of `v` is a rational scalar and
/// the other two are octonions; the two octonions generate an associative
/// subalgebra, which makes the square exactly rank one.
fn exceptional_rank_one(rng: &mut SplitMix64, cfg: &SampleCfg) -> Point {
    let scalar_slot = rng.index(3);
    let s = rat(rng.int_in(cfg.bound));
    let u = nonzero_int_vec(rng, 8, 3.min(cfg.bound));
    let w = nonzero_int_vec(rng, 8, 3.min(cfg.bound));
    let mut v: [Vec<Rational>; 3] = [
        alloc::vec![Rational::zero(); 8],
        alloc::vec![Rational::zero(); 8],
        alloc::vec![Rational::zero(); 8],
    ];
    let mut slots = [0usize, 1, 2];
    slots.rotate_left(scalar_slot);
    v[slots[0]][0] = s;
    v[slots[1]] = u;
    v[slots[2]] = w;

    let conj = |a: &[Rational]| {
        let mut c: Vec<Rational> = a.iter().map(|x| -x).collect();
        c[0] = a[0].clone();
        c
    };
    let norm = |a: &[Rational]| crate::composition::norm_slice(a);

    // diag a = n(v0), b = n(v1), c = n(v2);
    // x1 = v1 conj(v2), x2 = v2 conj(v0), x3 = v0 conj(v1)
    let mut coords = Vec::with_capacity(27);
    coords.push(norm(&v[0]));
    coords.push(norm(&v[1]));
    coords.push(norm(&v[2]));
    coords.extend(cd_mul(&v[1], &conj(&v[2])));
    coords.extend(cd_mul(&v[2], &conj(&v[0])));
    coords.extend(cd_mul(&v[0], &conj(&v[1])));
    Point::new(ModelKind::Exceptional, coords)
}

/// A secant point `p = x + y` with its decomposition; `det(p) = 0` always,
/// and `sharp(p) != 0` is enforced so `p` lies on `Sec(X) - X`.
pub fn sample_sec(
    space: &CubicSpace,
    rng: &mut SplitMix64,
    cfg: &SampleCfg,
) -> Result<SecantDecomp, SampleError> {
    for _ in 0..cfg.retries {
        let x = sample_x(space, rng, cfg)?;
        let y = sample_x(space, rng, cfg)?;
        let p = x.add(&y);
        debug_assert!(space.det(&p).is_zero());
        if !space.sharp(&p).is_zero() {
            return Ok(SecantDecomp { p, x, y });
        }
    }
    Err(SampleError { what: "sample_sec" })
}

/// A point with `det != 0`, by rejection on random integer points.
pub fn sample_off_sec(
    space: &CubicSpace,
    rng: &mut SplitMix64,
    cfg: &SampleCfg,
) -> Result<Point, SampleError> {
    for _ in 0..cfg.retries {
        let p = space.point(random_int_vec(rng, space.dim(), cfg.bound));
        if !space.det(&p).is_zero() {
            return Ok(p);
        }
    }
    Err(SampleError {
        what: "sample_off_sec",
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SplitMix64;

    #[test]
    fn x_samples_satisfy_sharp_zero() {
        let cfg = SampleCfg::default();
        for kind in ModelKind::all() {
            let space = CubicSpace::new(kind);
            let mut rng = SplitMix64::new(101);
            for _ in 0..20 {
                let x = sample_x(&space, &mut rng, &cfg).unwrap();
                assert!(!x.is_zero());
                assert!(space.is_on_x(&x), "{kind}");
            }
        }
    }

    #[test]
    fn secant_samples_lie_on_the_cubic_off_x() {
        let cfg = SampleCfg::default();
        for kind in ModelKind::all() {
            let space = CubicSpace::new(kind);
            let mut rng = SplitMix64::new(103);
            for _ in 0..10 {
                let s = sample_sec(&space, &mut rng, &cfg).unwrap();
                assert!(space.det(&s.p).is_zero(), "{kind}");
                assert!(space.is_on_x(&s.x) && space.is_on_x(&s.y));
                assert!(!space.sharp(&s.p).is_zero());
            }
        }
    }

    #[test]
    fn off_sec_sampler_accepts_basepoint_like_points() {
        let cfg = SampleCfg::default();
        for kind in ModelKind::all() {
            let space = CubicSpace::new(kind);
            let mut rng = SplitMix64::new(107);
            let p = sample_off_sec(&space, &mut rng, &cfg).unwrap();
            assert!(!space.det(&p).is_zero());
        }
    }

    #[test]
    fn exceptional_closure_example() {
        // sharp of a rank-two Hermitian matrix with an octonion off-diagonal
        // entry is a nonzero point of X.
        let space = CubicSpace::new(ModelKind::Exceptional);
        let mut p = Point::zero(ModelKind::Exceptional);
        p.coords[0] = rat(1); // a
        p.coords[1] = rat(1); // b
        // x3 slot: octonion (1,2,0,0,1,0,0,0); c = 0 keeps det = -c n(x3) = 0
        p.coords[19] = rat(1);
        p.coords[20] = rat(2);
        p.coords[23] = rat(1);
        assert!(space.det(&p).is_zero());
        let s = space.sharp(&p);
        assert!(!s.is_zero());
        assert!(space.is_on_x(&s));
    }
}
