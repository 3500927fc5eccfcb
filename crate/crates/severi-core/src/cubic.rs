//! The four cubic spaces carrying the Severi varieties.
//!
//! A cubic space is a vector space `V` of dimension `m+1` with a cubic form
//! `det`, a basepoint `c` with `det(c) = 1`, and the structure derived from
//! them: the symmetric trilinear polarization `F` (normalized so that
//! `F(w,w,w) = det(w)`), the trace form
//! `T(x,y) = 9 F(c,c,x) F(c,c,y) - 6 F(c,x,y)`, the adjoint (sharp) map
//! characterized by `T(x#, y) = 3 F(x,x,y)`, its linearization `cross`, and
//! the quadratic operator `U_p`.
//!
//! The four models:
//!
//! | kind        | V                             | dim | det               |
//! |-------------|-------------------------------|-----|-------------------|
//! | Veronese    | symmetric 3x3 matrices        |  6  | determinant       |
//! | Segre       | all 3x3 matrices              |  9  | determinant       |
//! | Pfaffian    | alternating 6x6 matrices      | 15  | Pfaffian          |
//! | Exceptional | Hermitian 3x3 over octonions  | 27  | Freudenthal det   |
//!
//! The variety `X` is the locus `sharp = 0` (rank one), its secant variety
//! is the cubic hypersurface `det = 0`, and the adjoint identity
//! `sharp(sharp(x)) = det(x) * x` holds in every model; it doubles as an
//! end-to-end check of all sign conventions.

use alloc::vec::Vec;
use core::fmt;
use num_traits::{One, Zero};

use crate::composition::{cd_mul, norm_slice, re_mul};
use crate::linalg::{self, Mat};
use crate::rational::{frac, rat, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ModelKind {
    Veronese,
    Segre,
    Pfaffian,
    Exceptional,
}

impl ModelKind {
    pub fn all() -> [ModelKind; 4] {
        [
            ModelKind::Veronese,
            ModelKind::Segre,
            ModelKind::Pfaffian,
            ModelKind::Exceptional,
        ]
    }

    /// Ambient dimension `m + 1`.
    pub fn dim(self) -> usize {
        match self {
            ModelKind::Veronese => 6,
            ModelKind::Segre => 9,
            ModelKind::Pfaffian => 15,
            ModelKind::Exceptional => 27,
        }
    }

    /// Dimension `n` of the projective variety `X`.
    pub fn variety_dim(self) -> usize {
        match self {
            ModelKind::Veronese => 2,
            ModelKind::Segre => 4,
            ModelKind::Pfaffian => 8,
            ModelKind::Exceptional => 16,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ModelKind::Veronese => "veronese",
            ModelKind::Segre => "segre",
            ModelKind::Pfaffian => "pfaffian",
            ModelKind::Exceptional => "exceptional",
        }
    }
}

impl fmt::Display for ModelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CubicError {
    ModelMismatch { left: ModelKind, right: ModelKind },
}

impl fmt::Display for CubicError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CubicError::ModelMismatch { left, right } => {
                write!(f, "model mismatch: {left} vs {right}")
            }
        }
    }
}

/// A vector of `V` in one of the four models.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Point {
    pub kind: ModelKind,
    pub coords: Vec<Rational>,
}

impl Point {
    pub fn new(kind: ModelKind, coords: Vec<Rational>) -> Self {
        assert_eq!(coords.len(), kind.dim(), "coordinate count for {kind}");
        Point { kind, coords }
    }

    pub fn zero(kind: ModelKind) -> Self {
        Point::new(kind, linalg::zeros_vec(kind.dim()))
    }

    pub fn basis(kind: ModelKind, i: usize) -> Self {
        let mut p = Point::zero(kind);
        p.coords[i] = Rational::one();
        p
    }

    pub fn is_zero(&self) -> bool {
        linalg::is_zero_vec(&self.coords)
    }

    pub fn add(&self, other: &Point) -> Point {
        assert_eq!(self.kind, other.kind);
        Point {
            kind: self.kind,
            coords: linalg::add_vec(&self.coords, &other.coords),
        }
    }

    pub fn sub(&self, other: &Point) -> Point {
        assert_eq!(self.kind, other.kind);
        Point {
            kind: self.kind,
            coords: linalg::sub_vec(&self.coords, &other.coords),
        }
    }

    pub fn scale(&self, s: &Rational) -> Point {
        Point {
            kind: self.kind,
            coords: linalg::scale_vec(&self.coords, s),
        }
    }

    /// Projective equality (all 2x2 minors vanish).
    pub fn proportional_to(&self, other: &Point) -> bool {
        self.kind == other.kind && linalg::proportional(&self.coords, &other.coords)
    }
}

/// An element of the dual space, in the basis dual to the model basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Covector {
    pub kind: ModelKind,
    pub coords: Vec<Rational>,
}

impl Covector {
    pub fn new(kind: ModelKind, coords: Vec<Rational>) -> Self {
        assert_eq!(coords.len(), kind.dim(), "coordinate count for {kind}");
        Covector { kind, coords }
    }

    pub fn is_zero(&self) -> bool {
        linalg::is_zero_vec(&self.coords)
    }

    pub fn apply(&self, p: &Point) -> Rational {
        assert_eq!(self.kind, p.kind);
        linalg::dot(&self.coords, &p.coords)
    }

    pub fn scale(&self, s: &Rational) -> Covector {
        Covector {
            kind: self.kind,
            coords: linalg::scale_vec(&self.coords, s),
        }
    }

    pub fn sub(&self, other: &Covector) -> Covector {
        assert_eq!(self.kind, other.kind);
        Covector {
            kind: self.kind,
            coords: linalg::sub_vec(&self.coords, &other.coords),
        }
    }

    pub fn proportional_to(&self, other: &Covector) -> bool {
        self.kind == other.kind && linalg::proportional(&self.coords, &other.coords)
    }
}

/// One of the four models, with its cached structure constants.
///
/// Construction computes the trace-form Gram matrix, its inverse, and the
/// sharps of the basis vectors once; everything else is derived on the fly.
/// The struct is immutable after construction and safe to share across
/// threads.
#[derive(Debug, Clone)]
pub struct CubicSpace {
    kind: ModelKind,
    basepoint: Point,
    /// Coordinates of the covector `F(c, c, .)`.
    c_star: Vec<Rational>,
    /// `grad(b_i)` coordinates for every basis vector.
    basis_grads: Vec<Vec<Rational>>,
    gram: Mat,
    gram_inv: Mat,
}

impl CubicSpace {
    pub fn new(kind: ModelKind) -> Self {
        let dim = kind.dim();
        let basepoint = basepoint(kind);
        debug_assert_eq!(det_eval(kind, &basepoint.coords), Rational::one());

        let mut space = CubicSpace {
            kind,
            basepoint,
            c_star: Vec::new(),
            basis_grads: Vec::new(),
            gram: Mat::zeros(dim, dim),
            gram_inv: Mat::zeros(dim, dim),
        };

        space.c_star = space.grad(&space.basepoint).coords;
        space.basis_grads = (0..dim)
            .map(|i| space.grad(&Point::basis(kind, i)).coords)
            .collect();

        // T(b_i, b_j) = 9 F(c,c,b_i) F(c,c,b_j) - 6 F(c,b_i,b_j)
        let mut gram = Mat::zeros(dim, dim);
        for i in 0..dim {
            for j in i..dim {
                let bi = Point::basis(kind, i);
                let bj = Point::basis(kind, j);
                let f_cij = space.trilinear(&space.basepoint.clone(), &bi, &bj).unwrap();
                let t = rat(9) * &space.c_star[i] * &space.c_star[j] - rat(6) * f_cij;
                *gram.at_mut(i, j) = t.clone();
                *gram.at_mut(j, i) = t;
            }
        }
        space.gram_inv = gram
            .inverse()
            .expect("trace form is nondegenerate in every model");
        space.gram = gram;
        space
    }

    pub fn kind(&self) -> ModelKind {
        self.kind
    }

    /// Ambient dimension `m + 1`.
    pub fn dim(&self) -> usize {
        self.kind.dim()
    }

    /// Variety dimension `n`.
    pub fn variety_dim(&self) -> usize {
        self.kind.variety_dim()
    }

    pub fn basepoint(&self) -> &Point {
        &self.basepoint
    }

    pub fn gram(&self) -> &Mat {
        &self.gram
    }

    pub fn point(&self, coords: Vec<Rational>) -> Point {
        Point::new(self.kind, coords)
    }

    fn check_kind(&self, p: &Point) {
        assert_eq!(p.kind, self.kind, "point from a different model");
    }

    fn check_pair(&self, a: &Point, b: &Point) -> Result<(), CubicError> {
        self.check_kind(a);
        if a.kind != b.kind {
            return Err(CubicError::ModelMismatch {
                left: a.kind,
                right: b.kind,
            });
        }
        Ok(())
    }

    /// The cubic form: determinant, Pfaffian or Freudenthal determinant.
    pub fn det(&self, w: &Point) -> Rational {
        self.check_kind(w);
        det_eval(self.kind, &w.coords)
    }

    /// Full symmetric polarization of `det`:
    /// `F(u,v,w) = (det(u+v+w) - det(u+v) - det(u+w) - det(v+w)
    ///              + det u + det v + det w) / 6`.
    pub fn trilinear(&self, u: &Point, v: &Point, w: &Point) -> Result<Rational, CubicError> {
        self.check_pair(u, v)?;
        self.check_pair(u, w)?;
        let k = self.kind;
        let uvw = det_eval(k, &linalg::add_vec(&linalg::add_vec(&u.coords, &v.coords), &w.coords));
        let uv = det_eval(k, &linalg::add_vec(&u.coords, &v.coords));
        let uw = det_eval(k, &linalg::add_vec(&u.coords, &w.coords));
        let vw = det_eval(k, &linalg::add_vec(&v.coords, &w.coords));
        let du = det_eval(k, &u.coords);
        let dv = det_eval(k, &v.coords);
        let dw = det_eval(k, &w.coords);
        Ok((uvw - uv - uw - vw + du + dv + dw) / rat(6))
    }

    /// The covector `y -> F(w, w, y)`; vanishes identically iff `w` is on X.
    ///
    /// Evaluated as one third of the coordinate gradient of `det`, written
    /// out per model; the polarization identity
    /// `det(w + b) - det(w - b) = 6 F(w,w,b) + 2 det(b)` is kept as a test
    /// oracle for it.
    pub fn grad(&self, w: &Point) -> Covector {
        self.check_kind(w);
        let third = frac(1, 3);
        let coords = grad_eval(self.kind, &w.coords)
            .into_iter()
            .map(|c| c * &third)
            .collect();
        Covector::new(self.kind, coords)
    }

    /// `F(u, v, .)` as a covector: the polarization of `grad`.
    pub fn cross_grad(&self, u: &Point, v: &Point) -> Result<Covector, CubicError> {
        self.check_pair(u, v)?;
        let guv = self.grad(&u.add(v));
        let gu = self.grad(u);
        let gv = self.grad(v);
        let coords = linalg::scale_vec(
            &linalg::sub_vec(&linalg::sub_vec(&guv.coords, &gu.coords), &gv.coords),
            &frac(1, 2),
        );
        Ok(Covector::new(self.kind, coords))
    }

    /// The nondegenerate pairing `T(x,y) = 9 F(c,c,x) F(c,c,y) - 6 F(c,x,y)`.
    pub fn trace_form(&self, x: &Point, y: &Point) -> Result<Rational, CubicError> {
        self.check_pair(x, y)?;
        let cx = linalg::dot(&self.c_star, &x.coords);
        let cy = linalg::dot(&self.c_star, &y.coords);
        let fcxy = self.trilinear(&self.basepoint.clone(), x, y)?;
        Ok(rat(9) * cx * cy - rat(6) * fcxy)
    }

    /// Transport a vector to the dual: `x -> T(x, .)`.
    pub fn to_covector(&self, x: &Point) -> Covector {
        self.check_kind(x);
        Covector::new(self.kind, self.gram.matvec(&x.coords))
    }

    /// Inverse transport: the unique `v` with `T(v, .) = l`.
    pub fn from_covector(&self, l: &Covector) -> Point {
        assert_eq!(l.kind, self.kind);
        Point::new(self.kind, self.gram_inv.matvec(&l.coords))
    }

    /// The adjoint map: the unique point with `T(x#, y) = 3 F(x,x,y)`.
    ///
    /// In the Segre model this is the classical adjugate; the identity
    /// `x## = det(x) x` holds in all four models.
    pub fn sharp(&self, x: &Point) -> Point {
        let g = self.grad(x);
        let rhs = linalg::scale_vec(&g.coords, &rat(3));
        Point::new(self.kind, self.gram_inv.matvec(&rhs))
    }

    /// Linearization of `sharp`: `cross(x,y) = (x+y)# - x# - y#`.
    pub fn cross(&self, x: &Point, y: &Point) -> Result<Point, CubicError> {
        self.check_pair(x, y)?;
        Ok(self
            .sharp(&x.add(y))
            .sub(&self.sharp(x))
            .sub(&self.sharp(y)))
    }

    /// The quadratic operator `U_p(w) = T(p,w) p - cross(p#, w)`.
    ///
    /// In the Segre model `U_p(w) = p w p`.
    pub fn u_operator(&self, p: &Point, w: &Point) -> Result<Point, CubicError> {
        self.check_pair(p, w)?;
        let t = self.trace_form(p, w)?;
        let c = self.cross(&self.sharp(p), w)?;
        Ok(p.scale(&t).sub(&c))
    }

    /// Matrix of `w -> U_p(w)` in the standard basis (columns are images).
    ///
    /// Uses `T(cross(x, y), z) = 6 F(x, y, z)`, so the columns are
    /// `T(p, b_j) p - 6 ginv F(p#, b_j, .)` with a single bilinear array of
    /// `p#` instead of one sharp per column.
    pub fn u_matrix(&self, p: &Point) -> Mat {
        self.check_kind(p);
        let dim = self.dim();
        let p_sharp = self.sharp(p);
        let arr = self.bilinear_array(&p_sharp);
        let t_row = self.gram.matvec(&p.coords); // T(p, b_i)
        let six = rat(6);
        let mut m = Mat::zeros(dim, dim);
        for j in 0..dim {
            let cross_j = self.gram_inv.matvec(&linalg::scale_vec(arr.row(j), &six));
            for r in 0..dim {
                *m.at_mut(r, j) = &t_row[j] * &p.coords[r] - &cross_j[r];
            }
        }
        m
    }

    /// `X` is the common zero locus of `sharp` and `grad`.
    pub fn is_on_x(&self, w: &Point) -> bool {
        let g = self.grad(w);
        let s = self.sharp(w);
        debug_assert_eq!(g.is_zero(), s.is_zero());
        g.is_zero() && s.is_zero()
    }

    /// `Sec(X)` is the cubic hypersurface `det = 0`.
    pub fn is_on_sec(&self, w: &Point) -> bool {
        self.det(w).is_zero()
    }

    /// The array `F(w, b_i, b_j)` over the standard basis; row `i` is the
    /// covector `F(w, b_i, .)`, obtained by polarizing the gradient:
    /// `2 F(w, b_i, .) = grad(w + b_i) - grad(w) - grad(b_i)`.
    pub fn bilinear_array(&self, w: &Point) -> Mat {
        self.check_kind(w);
        let dim = self.dim();
        let gw = self.grad(w).coords;
        let half = frac(1, 2);
        let mut m = Mat::zeros(dim, dim);
        for i in 0..dim {
            let mut shifted = w.coords.clone();
            shifted[i] += Rational::one();
            let gs = self.grad(&Point::new(self.kind, shifted)).coords;
            for j in 0..dim {
                *m.at_mut(i, j) = (&gs[j] - &gw[j] - &self.basis_grads[i][j]) * &half;
            }
        }
        debug_assert!(m.is_symmetric());
        m
    }
}

fn basepoint(kind: ModelKind) -> Point {
    let mut p = Point::zero(kind);
    match kind {
        ModelKind::Veronese | ModelKind::Segre | ModelKind::Exceptional => {
            // identity matrix in each matrix model
            let diag: &[usize] = match kind {
                ModelKind::Veronese => &[0, 1, 2],
                ModelKind::Segre => &[0, 4, 8],
                ModelKind::Exceptional => &[0, 1, 2],
                _ => unreachable!(),
            };
            for &i in diag {
                p.coords[i] = Rational::one();
            }
        }
        ModelKind::Pfaffian => {
            // standard symplectic form e12 + e34 + e56
            for &(i, j) in &[(1usize, 2usize), (3, 4), (5, 6)] {
                p.coords[pf_index(i, j)] = Rational::one();
            }
        }
    }
    p
}

fn det_eval(kind: ModelKind, c: &[Rational]) -> Rational {
    match kind {
        ModelKind::Veronese => det_veronese(c),
        ModelKind::Segre => det_segre(c),
        ModelKind::Pfaffian => det_pfaffian(c),
        ModelKind::Exceptional => det_exceptional(c),
    }
}

/// Coordinate gradient of `det` (so `grad = F(w,w,.) = gradient / 3`).
fn grad_eval(kind: ModelKind, c: &[Rational]) -> Vec<Rational> {
    match kind {
        ModelKind::Veronese => grad_veronese(c),
        ModelKind::Segre => grad_segre(c),
        ModelKind::Pfaffian => grad_pfaffian(c),
        ModelKind::Exceptional => grad_exceptional(c),
    }
}

fn grad_veronese(c: &[Rational]) -> Vec<Rational> {
    let (a, b, d) = (&c[0], &c[1], &c[2]);
    let (p, q, r) = (&c[3], &c[4], &c[5]);
    let two = rat(2);
    alloc::vec![
        b * d - r * r,
        a * d - q * q,
        a * b - p * p,
        &two * (q * r - d * p),
        &two * (p * r - b * q),
        &two * (p * q - a * r),
    ]
}

fn grad_segre(c: &[Rational]) -> Vec<Rational> {
    let m = |i: usize, j: usize| &c[3 * i + j];
    let minor = |i: usize, j: usize| {
        let r: [usize; 2] = match i {
            0 => [1, 2],
            1 => [0, 2],
            _ => [0, 1],
        };
        let s: [usize; 2] = match j {
            0 => [1, 2],
            1 => [0, 2],
            _ => [0, 1],
        };
        m(r[0], s[0]) * m(r[1], s[1]) - m(r[0], s[1]) * m(r[1], s[0])
    };
    let mut out = Vec::with_capacity(9);
    for i in 0..3 {
        for j in 0..3 {
            let v = minor(i, j);
            out.push(if (i + j) % 2 == 0 { v } else { -v });
        }
    }
    out
}

fn grad_pfaffian(c: &[Rational]) -> Vec<Rational> {
    let a = |i: usize, j: usize| &c[pf_index(i, j)];
    let pf4 = |p: usize, q: usize, r: usize, s: usize| {
        a(p, q) * a(r, s) - a(p, r) * a(q, s) + a(p, s) * a(q, r)
    };
    let mut out = Vec::with_capacity(15);
    for i in 1..=6usize {
        for j in (i + 1)..=6 {
            let rest: Vec<usize> = (1..=6).filter(|&k| k != i && k != j).collect();
            let sub = pf4(rest[0], rest[1], rest[2], rest[3]);
            // dPf / da_ij = (-1)^(i+j+1) Pf(complement)
            out.push(if (i + j) % 2 == 1 { sub } else { -sub });
        }
    }
    out
}

fn grad_exceptional(co: &[Rational]) -> Vec<Rational> {
    let (a, b, c) = (&co[0], &co[1], &co[2]);
    let x1 = &co[3..11];
    let x2 = &co[11..19];
    let x3 = &co[19..27];
    let conj = |v: Vec<Rational>| {
        let mut out: Vec<Rational> = v.iter().map(|x| -x).collect();
        out[0] = v[0].clone();
        out
    };
    let x2x3 = conj(cd_mul(x2, x3));
    let x3x1 = conj(cd_mul(x3, x1));
    let x1x2 = conj(cd_mul(x1, x2));
    let two = rat(2);
    let mut out = Vec::with_capacity(27);
    out.push(b * c - norm_slice(x1));
    out.push(c * a - norm_slice(x2));
    out.push(a * b - norm_slice(x3));
    for i in 0..8 {
        out.push(&two * (&x2x3[i] - a * &x1[i]));
    }
    for i in 0..8 {
        out.push(&two * (&x3x1[i] - b * &x2[i]));
    }
    for i in 0..8 {
        out.push(&two * (&x1x2[i] - c * &x3[i]));
    }
    out
}

/// Coordinates `(w11, w22, w33, w12, w13, w23)`, off-diagonals stored once.
fn det_veronese(c: &[Rational]) -> Rational {
    let (a, b, d) = (&c[0], &c[1], &c[2]);
    let (p, q, r) = (&c[3], &c[4], &c[5]);
    a * b * d + rat(2) * p * q * r - a * r * r - b * q * q - d * p * p
}

/// Row-major 3x3 matrix.
fn det_segre(c: &[Rational]) -> Rational {
    let m = |i: usize, j: usize| &c[3 * i + j];
    m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1))
        - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0))
        + m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0))
}

/// Index of coordinate `e_{ij}` (`1 <= i < j <= 6`) in lexicographic order.
pub fn pf_index(i: usize, j: usize) -> usize {
    debug_assert!(1 <= i && i < j && j <= 6);
    // offsets for i = 1..5: 0, 5, 9, 12, 14
    const OFFSET: [usize; 5] = [0, 5, 9, 12, 14];
    OFFSET[i - 1] + (j - i - 1)
}

/// Pfaffian of the alternating 6x6 matrix, expanded along the first row.
/// Sign convention: the standard symplectic form has Pfaffian +1.
fn det_pfaffian(c: &[Rational]) -> Rational {
    let a = |i: usize, j: usize| &c[pf_index(i, j)];
    // Pf on four indices p<q<r<s: a_pq a_rs - a_pr a_qs + a_ps a_qr
    let pf4 = |p: usize, q: usize, r: usize, s: usize| {
        a(p, q) * a(r, s) - a(p, r) * a(q, s) + a(p, s) * a(q, r)
    };
    a(1, 2) * pf4(3, 4, 5, 6) - a(1, 3) * pf4(2, 4, 5, 6) + a(1, 4) * pf4(2, 3, 5, 6)
        - a(1, 5) * pf4(2, 3, 4, 6)
        + a(1, 6) * pf4(2, 3, 4, 5)
}

/// Coordinates `(a, b, c, x1[8], x2[8], x3[8])` of the Hermitian matrix
///
/// ```text
/// [ a    x3    x2* ]
/// [ x3*  b     x1  ]
/// [ x2   x1*   c   ]
/// ```
///
/// Freudenthal determinant
/// `a b c - a N(x1) - b N(x2) - c N(x3) + 2 Re((x2 x3) x1)`.
fn det_exceptional(co: &[Rational]) -> Rational {
    let (a, b, c) = (&co[0], &co[1], &co[2]);
    let x1 = &co[3..11];
    let x2 = &co[11..19];
    let x3 = &co[19..27];
    let x2x3 = cd_mul(x2, x3);
    a * b * c - a * norm_slice(x1) - b * norm_slice(x2) - c * norm_slice(x3)
        + rat(2) * re_mul(&x2x3, x1)
}

/// Helpers for building Segre points from integer matrices in tests and
/// samplers.
pub fn segre_from_matrix(rows: [[i64; 3]; 3]) -> Point {
    let mut coords = Vec::with_capacity(9);
    for row in rows {
        for v in row {
            coords.push(rat(v));
        }
    }
    Point::new(ModelKind::Segre, coords)
}
