//! Secant geometry of the four models.
//!
//! For a model with cubic `det`, variety `X = {sharp = 0}` and secant
//! hypersurface `Sec(X) = {det = 0}`, this module implements the maps and
//! statements that make the geometry checkable:
//!
//! - `l_map` / `l_matrix`: the linear isomorphism
//!   `L_{w0}(w) = 2 det(w0) F(w0,w,.) - 3 F(w0,w0,w) w0*` from `V` to its
//!   dual, proportional to the differential of the gradient map at `w0`;
//! - `second_point`: the other intersection of the line through `x in X`
//!   and `w0` with the cubic;
//! - `cremona` / `involution_check`: the gradient map and the exact form
//!   `sharp(sharp(w)) = det(w) w` of its birational involutivity;
//! - `dual_det` and `Diamond`: the dual cubic via trace-form transport and
//!   the proportionality `F*(Lu, Lv, Lw) = lambda F(u,v,w)`;
//! - `total_transform_probe`: limit directions of the gradient map along X;
//! - `entry_locus`: the linear space `Sigma_P` (image of `U_P`) carrying
//!   the entry-locus quadric `q_P`, with `sharp(w) = q_P(w) axis` on it;
//! - `companion_point`: the extra variety point cut out by a generic
//!   `(n/2+2)`-plane through `Sigma_P`;
//! - `homogeneity_map`: an explicit automorphism of `V` carrying one
//!   variety point to another while preserving X;
//! - `good_w0_for` / `sec_transitivity_rank`: the transitivity certificate
//!   on `Sec(X) - X`;
//! - `gram_invertibility_check`: full rank of `F(omega, ., .)` off the
//!   secant hypersurface.

use alloc::vec::Vec;
use core::fmt;
use num_traits::Zero;

use crate::cubic::{Covector, CubicError, CubicSpace, Point};
use crate::linalg::{self, Mat};
use crate::rational::{frac, rat, Rational};
use crate::rng::SplitMix64;
use crate::sampling::{self, SampleCfg, SampleError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeoError {
    /// A point required to be off the cubic has `det = 0`.
    OnSecant,
    /// A point required to be off X has `sharp = 0` (total-transform regime
    /// for the gradient map).
    OnVariety,
    /// Expected a point of `Sec(X) - X`.
    NotOnSecMinusX,
    /// A transversality scalar vanished (`w0*(x) = 0` or `grad(P)(w0) = 0`);
    /// the caller should resample.
    TangentDegenerate,
    /// `F(x, d, .) = 0`; the probe direction is degenerate.
    DegenerateDirection,
    RankDeficient { expected: usize, found: usize },
    /// A theorem-backed postcondition failed; this is a real finding, not a
    /// sampling accident.
    PostconditionFailed(&'static str),
    Budget(&'static str),
    Model(CubicError),
}

impl fmt::Display for GeoError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeoError::OnSecant => write!(f, "point lies on the secant cubic"),
            GeoError::OnVariety => write!(f, "point lies on X (total-transform regime)"),
            GeoError::NotOnSecMinusX => write!(f, "point is not on Sec(X) - X"),
            GeoError::TangentDegenerate => write!(f, "tangent-degenerate configuration"),
            GeoError::DegenerateDirection => write!(f, "degenerate probe direction"),
            GeoError::RankDeficient { expected, found } => {
                write!(f, "rank deficient: expected {expected}, found {found}")
            }
            GeoError::PostconditionFailed(what) => write!(f, "postcondition failed: {what}"),
            GeoError::Budget(what) => write!(f, "resampling budget exhausted in {what}"),
            GeoError::Model(e) => write!(f, "{e}"),
        }
    }
}

impl From<CubicError> for GeoError {
    fn from(e: CubicError) -> Self {
        GeoError::Model(e)
    }
}

impl From<SampleError> for GeoError {
    fn from(e: SampleError) -> Self {
        GeoError::Budget(e.what)
    }
}

/// `L_{w0}(w) = 2 det(w0) F(w0, w, .) - 3 F(w0, w0, w) w0*`.
pub fn l_map(space: &CubicSpace, w0: &Point, w: &Point) -> Result<Covector, GeoError> {
    let d = space.det(w0);
    if d.is_zero() {
        return Err(GeoError::OnSecant);
    }
    let g0 = space.grad(w0);
    let fw = space.cross_grad(w0, w)?;
    let c = g0.apply(w);
    let coords = linalg::sub_vec(
        &linalg::scale_vec(&fw.coords, &(rat(2) * &d)),
        &linalg::scale_vec(&g0.coords, &(rat(3) * c)),
    );
    Ok(Covector::new(space.kind(), coords))
}

/// Matrix of `L_{w0}` in the standard basis; row `i` is `L_{w0}(b_i)`.
///
/// The matrix is symmetric, so it also acts on column vectors directly.
pub fn l_matrix(space: &CubicSpace, w0: &Point) -> Result<Mat, GeoError> {
    let d = space.det(w0);
    if d.is_zero() {
        return Err(GeoError::OnSecant);
    }
    let dim = space.dim();
    let arr = space.bilinear_array(w0);
    let g0 = space.grad(w0);
    let two_d = rat(2) * &d;
    let mut m = Mat::zeros(dim, dim);
    for i in 0..dim {
        for j in 0..dim {
            *m.at_mut(i, j) = &two_d * arr.at(i, j) - rat(3) * &g0.coords[i] * &g0.coords[j];
        }
    }
    Ok(m)
}

/// The second intersection of the line `(x w0)` with the cubic:
/// `s = x + lambda w0` with `lambda = -3 w0*(x) / det(w0)`.
pub fn second_point(space: &CubicSpace, x: &Point, w0: &Point) -> Result<Point, GeoError> {
    if !space.is_on_x(x) {
        return Err(GeoError::NotOnSecMinusX);
    }
    let d = space.det(w0);
    if d.is_zero() {
        return Err(GeoError::OnSecant);
    }
    let w0_star_x = space.grad(w0).apply(x);
    if w0_star_x.is_zero() {
        return Err(GeoError::TangentDegenerate);
    }
    let lambda = -rat(3) * w0_star_x / d;
    let s = x.add(&w0.scale(&lambda));
    if !space.det(&s).is_zero() {
        return Err(GeoError::PostconditionFailed("second point is on the cubic"));
    }
    Ok(s)
}

/// The gradient (Cremona) map: the covector `F(w,w,.)` with the cubic value
/// `det(w)` as its scale. On X the covector vanishes identically and the
/// map enters the total-transform regime.
pub fn cremona(space: &CubicSpace, w: &Point) -> Result<(Covector, Rational), GeoError> {
    let g = space.grad(w);
    if g.is_zero() {
        return Err(GeoError::OnVariety);
    }
    Ok((g, space.det(w)))
}

/// Exact form of the involutivity of the gradient map off the cubic:
/// `sharp(sharp(w0)) = det(w0) w0`.
pub fn involution_check(space: &CubicSpace, w0: &Point) -> Result<bool, GeoError> {
    let d = space.det(w0);
    if d.is_zero() {
        return Err(GeoError::OnSecant);
    }
    Ok(space.sharp(&space.sharp(w0)) == w0.scale(&d))
}

/// The dual cubic through trace-form transport: `det` of the vector
/// identified with `l`.
pub fn dual_det(space: &CubicSpace, l: &Covector) -> Rational {
    space.det(&space.from_covector(l))
}

/// Trilinear polarization of the dual cubic.
pub fn dual_trilinear(
    space: &CubicSpace,
    l1: &Covector,
    l2: &Covector,
    l3: &Covector,
) -> Result<Rational, GeoError> {
    let p1 = space.from_covector(l1);
    let p2 = space.from_covector(l2);
    let p3 = space.from_covector(l3);
    Ok(space.trilinear(&p1, &p2, &p3)?)
}

/// Incremental check of `F*(L u, L v, L w) = lambda_{w0} F(u, v, w)`:
/// the scalar is fitted on the first triple with `F(u,v,w) != 0` and must
/// stay consistent on every later triple.
pub struct Diamond {
    lambda: Option<Rational>,
}

impl Diamond {
    pub fn new() -> Self {
        Diamond { lambda: None }
    }

    pub fn lambda(&self) -> Option<&Rational> {
        self.lambda.as_ref()
    }

    pub fn check(
        &mut self,
        space: &CubicSpace,
        lmat: &Mat,
        u: &Point,
        v: &Point,
        w: &Point,
    ) -> Result<bool, GeoError> {
        let lu = Covector::new(space.kind(), lmat.matvec(&u.coords));
        let lv = Covector::new(space.kind(), lmat.matvec(&v.coords));
        let lw = Covector::new(space.kind(), lmat.matvec(&w.coords));
        let lhs = dual_trilinear(space, &lu, &lv, &lw)?;
        let rhs = space.trilinear(u, v, w)?;
        match &self.lambda {
            Some(lambda) => Ok(lhs == lambda * &rhs),
            None => {
                if rhs.is_zero() {
                    Ok(lhs.is_zero())
                } else {
                    self.lambda = Some(lhs / rhs);
                    Ok(true)
                }
            }
        }
    }
}

impl Default for Diamond {
    fn default() -> Self {
        Self::new()
    }
}

/// Limit direction `F(x, d, .)` of the gradient map along `x + eps d`,
/// for `x` on X. The limit always lands on the dual secant cubic.
pub fn total_transform_probe(
    space: &CubicSpace,
    x: &Point,
    d: &Point,
) -> Result<Covector, GeoError> {
    if !space.is_on_x(x) {
        return Err(GeoError::NotOnSecMinusX);
    }
    let l = space.cross_grad(x, d)?;
    if l.is_zero() {
        return Err(GeoError::DegenerateDirection);
    }
    if !dual_det(space, &l).is_zero() {
        return Err(GeoError::PostconditionFailed(
            "total transform limit lies on the dual cubic",
        ));
    }
    Ok(l)
}

/// The linear space `Sigma_P` through a secant point `P`, its quadric, and
/// the axis along which `sharp` collapses on it.
#[derive(Debug, Clone)]
pub struct EntryLocus {
    pub p: Point,
    pub sigma_basis: Vec<Point>,
    pub quadric_gram: Mat,
    pub axis: Point,
    axis_pivot: usize,
}

impl EntryLocus {
    /// The quadric value `q_P(w)` defined by `sharp(w) = q_P(w) * axis` for
    /// `w` in `Sigma_P`. Errors if `sharp(w)` is not a multiple of the axis
    /// (which for exact inputs means `w` is outside `Sigma_P`).
    pub fn q_value(&self, space: &CubicSpace, w: &Point) -> Result<Rational, GeoError> {
        let s = space.sharp(w);
        let q = &s.coords[self.axis_pivot] / &self.axis.coords[self.axis_pivot];
        if s != self.axis.scale(&q) {
            return Err(GeoError::PostconditionFailed(
                "sharp is proportional to the axis on Sigma_P",
            ));
        }
        Ok(q)
    }

    /// A random point of `Sigma_P`.
    pub fn sigma_point(&self, rng: &mut SplitMix64, bound: i64) -> Point {
        let mut acc = Point::zero(self.p.kind);
        for b in &self.sigma_basis {
            acc = acc.add(&b.scale(&rat(rng.int_in(bound))));
        }
        acc
    }

    /// A random point of `Sigma_P - X` (`q_P != 0`).
    pub fn sigma_point_off_quadric(
        &self,
        space: &CubicSpace,
        rng: &mut SplitMix64,
        cfg: &SampleCfg,
    ) -> Result<Point, GeoError> {
        for _ in 0..cfg.retries {
            let s = self.sigma_point(rng, cfg.bound);
            if s.is_zero() {
                continue;
            }
            if !self.q_value(space, &s)?.is_zero() {
                return Ok(s);
            }
        }
        Err(GeoError::Budget("sigma_point_off_quadric"))
    }

    /// A rational point of the quadric `Q_P` distinct (projectively) from a
    /// known one, found by intersecting a chord through it with the quadric.
    pub fn quadric_point_from(
        &self,
        space: &CubicSpace,
        known: &Point,
        rng: &mut SplitMix64,
        cfg: &SampleCfg,
    ) -> Result<Point, GeoError> {
        debug_assert!(self.q_value(space, known)?.is_zero());
        for _ in 0..cfg.retries {
            let d = self.sigma_point(rng, cfg.bound);
            if d.is_zero() {
                continue;
            }
            let qd = self.q_value(space, &d)?;
            if qd.is_zero() {
                if d.proportional_to(known) {
                    continue;
                }
                return Ok(d);
            }
            // q(known + t d) = t [B'(known, d) + t q(d)] with
            // B'(u, v) = q(u+v) - q(u) - q(v)
            let b = self.q_value(space, &known.add(&d))? - &qd;
            if b.is_zero() {
                continue;
            }
            let t = -b / qd;
            let w = known.add(&d.scale(&t));
            if w.is_zero() || w.proportional_to(known) {
                continue;
            }
            debug_assert!(self.q_value(space, &w)?.is_zero());
            return Ok(w);
        }
        Err(GeoError::Budget("quadric_point_from"))
    }
}

/// Compute the entry-locus data of a point `P` on `Sec(X) - X`.
///
/// `Sigma_P` is taken as the column space of the operator `U_P`; its
/// dimension must be `n/2 + 2` and the quadric Gram matrix must have full
/// rank on it.
pub fn entry_locus(space: &CubicSpace, p: &Point) -> Result<EntryLocus, GeoError> {
    if !space.det(p).is_zero() {
        return Err(GeoError::NotOnSecMinusX);
    }
    let p_sharp = space.sharp(p);
    if p_sharp.is_zero() {
        return Err(GeoError::NotOnSecMinusX);
    }
    let expected = space.variety_dim() / 2 + 2;

    let u = space.u_matrix(p);
    let pivots = u.pivot_columns();
    if pivots.len() != expected {
        return Err(GeoError::RankDeficient {
            expected,
            found: pivots.len(),
        });
    }
    let sigma_basis: Vec<Point> = pivots
        .iter()
        .map(|&c| Point::new(space.kind(), u.col(c)))
        .collect();

    let axis = Point::new(space.kind(), linalg::primitive(&p_sharp.coords));
    let axis_pivot = axis
        .coords
        .iter()
        .position(|c| !c.is_zero())
        .expect("axis is nonzero");

    let locus = EntryLocus {
        p: p.clone(),
        sigma_basis,
        quadric_gram: Mat::zeros(0, 0),
        axis,
        axis_pivot,
    };

    // Gram of q_P over the sigma basis: G_ij = (q(bi+bj) - q(bi) - q(bj)) / 2
    let k = expected;
    let mut gram = Mat::zeros(k, k);
    let q_single: Vec<Rational> = locus
        .sigma_basis
        .iter()
        .map(|b| locus.q_value(space, b))
        .collect::<Result<_, _>>()?;
    for i in 0..k {
        for j in i..k {
            let v = if i == j {
                q_single[i].clone()
            } else {
                let qij = locus.q_value(space, &locus.sigma_basis[i].add(&locus.sigma_basis[j]))?;
                (qij - &q_single[i] - &q_single[j]) * frac(1, 2)
            };
            *gram.at_mut(i, j) = v.clone();
            *gram.at_mut(j, i) = v;
        }
    }
    if gram.rank() != k {
        return Err(GeoError::RankDeficient {
            expected: k,
            found: gram.rank(),
        });
    }
    Ok(EntryLocus {
        quadric_gram: gram,
        ..locus
    })
}

/// Do `P` and `P'` (both on `Sec(X) - X`) share their tangent hyperplane?
pub fn tangent_char_check(space: &CubicSpace, p: &Point, p2: &Point) -> bool {
    space.grad(p).proportional_to(&space.grad(p2))
}

/// The extra variety point in the span of `Sigma_P` and a generic `w0`:
/// solves `L_{w0}(x) = grad(P)` and certifies the conclusions of the
/// plane-section lemma, including the cone condition through sampled
/// quadric points.
pub fn companion_point(
    space: &CubicSpace,
    locus: &EntryLocus,
    x_on_quadric: &Point,
    w0: &Point,
    rng: &mut SplitMix64,
    cfg: &SampleCfg,
) -> Result<Point, GeoError> {
    let g_p = space.grad(&locus.p);
    if g_p.apply(w0).is_zero() {
        return Err(GeoError::TangentDegenerate);
    }
    let lmat = l_matrix(space, w0)?;
    let x = Point::new(
        space.kind(),
        lmat.solve(&g_p.coords)
            .ok_or(GeoError::RankDeficient {
                expected: space.dim(),
                found: 0,
            })?,
    );
    if !space.is_on_x(&x) {
        return Err(GeoError::PostconditionFailed("companion point lies on X"));
    }
    // x is in span(Sigma_P, w0) but outside Sigma_P
    let mut span: Vec<Vec<Rational>> = locus
        .sigma_basis
        .iter()
        .map(|b| b.coords.clone())
        .collect();
    if linalg::in_span(&span, &x.coords) {
        return Err(GeoError::PostconditionFailed(
            "companion point is outside Sigma_P",
        ));
    }
    span.push(w0.coords.clone());
    if !linalg::in_span(&span, &x.coords) {
        return Err(GeoError::PostconditionFailed(
            "companion point lies in span(Sigma_P, w0)",
        ));
    }
    // cone condition: every segment from x to the quadric stays on the cubic
    let ts = [rat(1), rat(-2), frac(1, 3)];
    for _ in 0..3 {
        let q = locus.quadric_point_from(space, x_on_quadric, rng, cfg)?;
        for t in &ts {
            if !space.det(&x.add(&q.scale(t))).is_zero() {
                return Err(GeoError::PostconditionFailed(
                    "cone over the quadric through the companion point",
                ));
            }
        }
    }
    Ok(x)
}

/// An automorphism of `V` carrying `x` to `x'` (projectively) and mapping
/// X into X, built as `l_matrix(w')^{-1} . l_matrix(w)` for suitable points
/// `w = x + sigma`, `w' = x' + sigma'` with `sigma, sigma'` in a common
/// `Sigma_P`.
pub fn homogeneity_map(
    space: &CubicSpace,
    x: &Point,
    x2: &Point,
    rng: &mut SplitMix64,
    cfg: &SampleCfg,
) -> Result<Mat, GeoError> {
    if !space.is_on_x(x) || !space.is_on_x(x2) {
        return Err(GeoError::NotOnSecMinusX);
    }
    for _ in 0..cfg.retries {
        let decomp = sampling::sample_sec(space, rng, cfg)?;
        let g_p = space.grad(&decomp.p);
        if g_p.apply(x).is_zero() || g_p.apply(x2).is_zero() {
            continue;
        }
        let locus = match entry_locus(space, &decomp.p) {
            Ok(l) => l,
            Err(GeoError::RankDeficient { .. }) => continue,
            Err(e) => return Err(e),
        };
        let sigma = locus.sigma_point_off_quadric(space, rng, cfg)?;
        let sigma2 = locus.sigma_point_off_quadric(space, rng, cfg)?;
        let w = x.add(&sigma);
        let w2 = x2.add(&sigma2);
        if space.det(&w).is_zero() || space.det(&w2).is_zero() {
            continue;
        }
        let lw = l_matrix(space, &w)?;
        let lw2 = l_matrix(space, &w2)?;
        let lw2_inv = lw2.inverse().ok_or(GeoError::RankDeficient {
            expected: space.dim(),
            found: 0,
        })?;
        let a = lw2_inv.mul(&lw);
        let image = Point::new(space.kind(), a.matvec(&x.coords));
        if !image.proportional_to(x2) || image.is_zero() {
            return Err(GeoError::PostconditionFailed(
                "homogeneity map carries x to x' projectively",
            ));
        }
        // the map must preserve X; spot-check on fresh samples
        for _ in 0..20 {
            let xi = sampling::sample_x(space, rng, cfg)?;
            let img = Point::new(space.kind(), a.matvec(&xi.coords));
            if !space.is_on_x(&img) {
                return Err(GeoError::PostconditionFailed("homogeneity map preserves X"));
            }
        }
        return Ok(a);
    }
    Err(GeoError::Budget("homogeneity_map"))
}

/// Find `w0` with `det(P(w0)) != 0` where
/// `P(w0) = 2 det(w0) p - 6 w0*(p) w0`, for `p` on `Sec(X) - X`.
pub fn good_w0_for(
    space: &CubicSpace,
    p: &Point,
    rng: &mut SplitMix64,
    cfg: &SampleCfg,
) -> Result<Point, GeoError> {
    if !space.det(p).is_zero() || space.sharp(p).is_zero() {
        return Err(GeoError::NotOnSecMinusX);
    }
    for _ in 0..cfg.retries {
        let w0 = sampling::sample_off_sec(space, rng, cfg)?;
        let d = space.det(&w0);
        let s = space.grad(&w0).apply(p);
        let pw = p.scale(&(rat(2) * d)).sub(&w0.scale(&(rat(6) * s)));
        if !space.det(&pw).is_zero() {
            return Ok(w0);
        }
    }
    Err(GeoError::Budget("good_w0_for"))
}

/// Exact rank of the derivative `w -> L(w)` of `omega -> L_omega(p)` at
/// `w0`, together with `dim(Ker L intersect Ker w0*)`.
///
/// `L(w) = 6 F(w0,w0,w) F(w0,p,.) + 2 det(w0) F(w,p,.)
///         - 6 F(w0,w,p) w0* - 6 F(w0,w0,p) F(w0,w,.)`.
pub fn sec_transitivity_rank(
    space: &CubicSpace,
    p: &Point,
    w0: &Point,
) -> Result<(usize, usize), GeoError> {
    let d = space.det(w0);
    if d.is_zero() {
        return Err(GeoError::OnSecant);
    }
    let dim = space.dim();
    let g0 = space.grad(w0); // w0* and F(w0, w0, .)
    let fp = space.cross_grad(w0, p)?; // F(w0, p, .)
    let bp = space.bilinear_array(p); // F(., p, .)
    let b0 = space.bilinear_array(w0); // F(w0, ., .) polarized rows
    let g0p = g0.apply(p); // F(w0, w0, p)

    let two_d = rat(2) * &d;
    let six = rat(6);
    let mut k = Mat::zeros(dim, dim);
    for i in 0..dim {
        for j in 0..dim {
            let mut v = &six * &fp.coords[i] * &g0.coords[j]; // 6 F(w0,w0,bj) F(w0,p,bi)
            v += &two_d * bp.at(j, i); // 2 det(w0) F(bj, p, bi)
            v -= &six * &g0.coords[i] * &fp.coords[j]; // -6 F(w0,bj,p) w0*_i
            v -= &six * &g0p * b0.at(j, i); // -6 F(w0,w0,p) F(w0,bj,bi)
            *k.at_mut(i, j) = v;
        }
    }
    let rank = k.rank();
    // kernel of L intersected with the hyperplane w0* = 0
    let mut stacked = Mat::zeros(dim + 1, dim);
    for i in 0..dim {
        for j in 0..dim {
            *stacked.at_mut(i, j) = k.at(i, j).clone();
        }
    }
    for j in 0..dim {
        *stacked.at_mut(dim, j) = g0.coords[j].clone();
    }
    let inter_dim = dim - stacked.rank();
    Ok((rank, inter_dim))
}

/// Full rank of the array `F(omega, b_i, b_j)`; holds whenever
/// `det(omega) != 0`.
pub fn gram_invertibility_check(space: &CubicSpace, omega: &Point) -> bool {
    space.bilinear_array(omega).rank() == space.dim()
}
