//! Secant dimensions by tangent-space spans.
//!
//! At a generic point `x + y` of the secant variety, the affine tangent
//! space of `Sec(X)` is the span of the affine tangent spaces at `x` and
//! `y`. For parametrized families the tangent space is spanned by the
//! first-order coordinate perturbations of the parametrization; for the
//! four models it is the kernel of `y -> cross(x, y)`.

use alloc::vec;
use alloc::vec::Vec;
use num_traits::Zero;

use crate::cubic::{CubicSpace, ModelKind, Point};
use crate::linalg::{self, Mat};
use crate::rational::{rat, Rational};
use crate::rng::SplitMix64;
use crate::sampling::{self, SampleCfg, SampleError};

/// A parametrized family of varieties whose generic secant dimension can be
/// computed exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// `P^a x P^b` in its Segre embedding, ambient `(a+1)(b+1)`.
    Segre(usize, usize),
    /// The second Veronese of `P^k`, ambient `(k+1)(k+2)/2`.
    Veronese2(usize),
    /// The Grassmannian of 2-planes of `C^k`, ambient `k(k-1)/2`.
    Grassmann2(usize),
    /// `P^a x v_2(P^k)`, ambient `(a+1)(k+1)(k+2)/2`.
    SegreVeronese2(usize, usize),
    /// One of the four models, with tangent spaces read off `cross`.
    Model(ModelKind),
}

impl Family {
    pub fn ambient_dim(self) -> usize {
        match self {
            Family::Segre(a, b) => (a + 1) * (b + 1),
            Family::Veronese2(k) => (k + 1) * (k + 2) / 2,
            Family::Grassmann2(k) => k * (k - 1) / 2,
            Family::SegreVeronese2(a, k) => (a + 1) * (k + 1) * (k + 2) / 2,
            Family::Model(kind) => kind.dim(),
        }
    }

    /// Affine dimension of the tangent space at a generic point.
    fn tangent_dim(self) -> usize {
        match self {
            Family::Segre(a, b) => a + b + 1,
            Family::Veronese2(k) => k + 1,
            Family::Grassmann2(k) => 2 * (k - 2) + 1,
            Family::SegreVeronese2(a, k) => a + k + 1,
            Family::Model(kind) => kind.variety_dim() + 1,
        }
    }
}

fn random_params(rng: &mut SplitMix64, len: usize, bound: i64) -> Vec<Rational> {
    loop {
        let v: Vec<Rational> = (0..len).map(|_| rat(rng.int_in(bound))).collect();
        if v.iter().any(|x| !x.is_zero()) {
            return v;
        }
    }
}

/// Rows spanning the affine tangent space at the point with the given
/// parameters, plus the point itself (for the proportionality guard).
fn tangent_rows(
    family: Family,
    rng: &mut SplitMix64,
    cfg: &SampleCfg,
) -> Result<(Vec<Vec<Rational>>, Vec<Rational>), SampleError> {
    match family {
        Family::Segre(a, b) => {
            let u = random_params(rng, a + 1, cfg.bound);
            let v = random_params(rng, b + 1, cfg.bound);
            let outer = |x: &[Rational], y: &[Rational]| {
                let mut c = Vec::with_capacity(x.len() * y.len());
                for xi in x {
                    for yj in y {
                        c.push(xi * yj);
                    }
                }
                c
            };
            let mut rows = Vec::new();
            for i in 0..=a {
                let mut e = vec![Rational::zero(); a + 1];
                e[i] = rat(1);
                rows.push(outer(&e, &v));
            }
            for j in 0..=b {
                let mut e = vec![Rational::zero(); b + 1];
                e[j] = rat(1);
                rows.push(outer(&u, &e));
            }
            Ok((rows, outer(&u, &v)))
        }
        Family::Veronese2(k) => {
            let u = random_params(rng, k + 1, cfg.bound);
            let rows = (0..=k).map(|i| sym_square_deriv(&u, i)).collect();
            Ok((rows, sym_square(&u)))
        }
        Family::Grassmann2(k) => {
            let u = random_params(rng, k, cfg.bound);
            let v = random_params(rng, k, cfg.bound);
            let wedge = |x: &[Rational], y: &[Rational]| {
                let mut c = Vec::with_capacity(k * (k - 1) / 2);
                for i in 0..k {
                    for j in (i + 1)..k {
                        c.push(&x[i] * &y[j] - &x[j] * &y[i]);
                    }
                }
                c
            };
            let mut rows = Vec::new();
            for i in 0..k {
                let mut e = vec![Rational::zero(); k];
                e[i] = rat(1);
                rows.push(wedge(&e, &v));
                rows.push(wedge(&u, &e));
            }
            Ok((rows, wedge(&u, &v)))
        }
        Family::SegreVeronese2(a, k) => {
            let s = random_params(rng, a + 1, cfg.bound);
            let u = random_params(rng, k + 1, cfg.bound);
            let sq = sym_square(&u);
            let outer = |x: &[Rational], y: &[Rational]| {
                let mut c = Vec::with_capacity(x.len() * y.len());
                for xi in x {
                    for yj in y {
                        c.push(xi * yj);
                    }
                }
                c
            };
            let mut rows = Vec::new();
            for i in 0..=a {
                let mut e = vec![Rational::zero(); a + 1];
                e[i] = rat(1);
                rows.push(outer(&e, &sq));
            }
            for j in 0..=k {
                rows.push(outer(&s, &sym_square_deriv(&u, j)));
            }
            Ok((rows, outer(&s, &sq)))
        }
        Family::Model(kind) => {
            let space = CubicSpace::new(kind);
            let x = sampling::sample_x(&space, rng, cfg)?;
            Ok((model_tangent_rows(&space, &x), x.coords))
        }
    }
}

/// Coordinates of `u u^T` with off-diagonals stored once
/// (order: all `u_i^2`, then `u_i u_j` for `i < j`).
fn sym_square(u: &[Rational]) -> Vec<Rational> {
    let k = u.len();
    let mut c = Vec::with_capacity(k * (k + 1) / 2);
    for i in 0..k {
        c.push(&u[i] * &u[i]);
    }
    for i in 0..k {
        for j in (i + 1)..k {
            c.push(&u[i] * &u[j]);
        }
    }
    c
}

/// Derivative of `sym_square` in the i-th coordinate direction.
fn sym_square_deriv(u: &[Rational], i: usize) -> Vec<Rational> {
    let k = u.len();
    let mut c = vec![Rational::zero(); k * (k + 1) / 2];
    c[i] = rat(2) * &u[i];
    let mut idx = k;
    for p in 0..k {
        for q in (p + 1)..k {
            if p == i {
                c[idx] = u[q].clone();
            } else if q == i {
                c[idx] = u[p].clone();
            }
            idx += 1;
        }
    }
    c
}

/// The affine tangent space of X at `x` as the kernel of `y -> cross(x,y)`.
pub fn model_tangent_rows(space: &CubicSpace, x: &Point) -> Vec<Vec<Rational>> {
    let dim = space.dim();
    let mut m = Mat::zeros(dim, dim);
    for j in 0..dim {
        let col = space.cross(x, &Point::basis(space.kind(), j)).unwrap();
        for r in 0..dim {
            *m.at_mut(r, j) = col.coords[r].clone();
        }
    }
    m.nullspace()
}

/// The affine dimension of `Sec` at a generic secant point of the family:
/// the rank of the union of two generic tangent spaces.
pub fn terracini_dim(
    family: Family,
    rng: &mut SplitMix64,
    cfg: &SampleCfg,
) -> Result<usize, SampleError> {
    for _ in 0..cfg.retries {
        let (rows_x, px) = tangent_rows(family, rng, cfg)?;
        let (rows_y, py) = tangent_rows(family, rng, cfg)?;
        // reject non-generic draws: degenerate charts or coinciding feet
        if linalg::span_rank(&rows_x) != family.tangent_dim()
            || linalg::span_rank(&rows_y) != family.tangent_dim()
            || linalg::proportional(&px, &py)
        {
            continue;
        }
        let mut all = rows_x;
        all.extend(rows_y);
        return Ok(linalg::span_rank(&all));
    }
    Err(SampleError {
        what: "terracini_dim",
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dim(family: Family, seed: u64) -> usize {
        let mut rng = SplitMix64::new(seed);
        terracini_dim(family, &mut rng, &SampleCfg::default()).unwrap()
    }

    #[test]
    fn segre_2_2_is_a_hypersurface() {
        assert_eq!(dim(Family::Segre(2, 2), 1), 8);
    }

    #[test]
    fn segre_1_5_fills_its_ambient_space() {
        assert_eq!(dim(Family::Segre(1, 5), 2), 12);
    }

    #[test]
    fn p1_times_conic_fills_its_ambient_space() {
        assert_eq!(dim(Family::SegreVeronese2(1, 1), 3), 6);
    }

    #[test]
    fn veronese_surface_secant_is_degenerate() {
        // sec(v2(P^2)) is the cubic hypersurface in P^5: affine dim 5
        assert_eq!(dim(Family::Veronese2(2), 4), 5);
    }

    #[test]
    fn grassmannian_g26_matches_the_pfaffian_model() {
        assert_eq!(dim(Family::Grassmann2(6), 5), 14);
    }

    #[test]
    fn model_tangent_spaces_have_dimension_n_plus_one() {
        let cfg = SampleCfg::default();
        for kind in ModelKind::all() {
            let space = CubicSpace::new(kind);
            let mut rng = SplitMix64::new(6);
            let x = sampling::sample_x(&space, &mut rng, &cfg).unwrap();
            let rows = model_tangent_rows(&space, &x);
            assert_eq!(linalg::span_rank(&rows), kind.variety_dim() + 1, "{kind}");
            // the point itself is tangent (radial direction)
            assert!(linalg::in_span(&rows, &x.coords));
        }
    }

    #[test]
    fn all_four_models_are_secant_hypersurfaces() {
        for kind in ModelKind::all() {
            let got = dim(Family::Model(kind), 7);
            assert_eq!(got, 3 * kind.variety_dim() / 2 + 2, "{kind}");
        }
    }
}
