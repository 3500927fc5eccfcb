//! The four composition algebras R, C, H, O over exact rationals.
//!
//! Elements are coordinate vectors in the Cayley-Dickson basis; the product
//! uses the doubling convention
//!
//! ```text
//! (x1, x2)(y1, y2) = (x1 y1 - conj(y2) x2,  y2 x1 + x2 conj(y1))
//! ```
//!
//! applied recursively. These are the positive-definite (division) forms:
//! the norm is the sum of squared coordinates and is multiplicative.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use num_traits::Zero;

use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AlgebraTag {
    R,
    C,
    H,
    O,
}

impl AlgebraTag {
    pub fn dimension(self) -> usize {
        match self {
            AlgebraTag::R => 1,
            AlgebraTag::C => 2,
            AlgebraTag::H => 4,
            AlgebraTag::O => 8,
        }
    }

    pub fn all() -> [AlgebraTag; 4] {
        [AlgebraTag::R, AlgebraTag::C, AlgebraTag::H, AlgebraTag::O]
    }
}

impl fmt::Display for AlgebraTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            AlgebraTag::R => "R",
            AlgebraTag::C => "C",
            AlgebraTag::H => "H",
            AlgebraTag::O => "O",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    TagMismatch { left: AlgebraTag, right: AlgebraTag },
    CoordinateCount { tag: AlgebraTag, got: usize },
}

impl fmt::Display for AlgebraError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraError::TagMismatch { left, right } => {
                write!(f, "algebra tag mismatch: {left} vs {right}")
            }
            AlgebraError::CoordinateCount { tag, got } => write!(
                f,
                "wrong coordinate count for {tag}: got {got}, want {}",
                tag.dimension()
            ),
        }
    }
}

/// An element of R, C, H or O with exact rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompositionElement {
    tag: AlgebraTag,
    coords: Vec<Rational>,
}

impl CompositionElement {
    pub fn new(tag: AlgebraTag, coords: Vec<Rational>) -> Result<Self, AlgebraError> {
        if coords.len() != tag.dimension() {
            return Err(AlgebraError::CoordinateCount {
                tag,
                got: coords.len(),
            });
        }
        Ok(CompositionElement { tag, coords })
    }

    pub fn zero(tag: AlgebraTag) -> Self {
        CompositionElement {
            tag,
            coords: vec![Rational::zero(); tag.dimension()],
        }
    }

    pub fn one(tag: AlgebraTag) -> Self {
        Self::basis_unit(tag, 0)
    }

    /// The i-th basis unit e_i (e_0 = 1).
    pub fn basis_unit(tag: AlgebraTag, i: usize) -> Self {
        assert!(i < tag.dimension());
        let mut coords = vec![Rational::zero(); tag.dimension()];
        coords[i] = Rational::from_integer(1.into());
        CompositionElement { tag, coords }
    }

    pub fn tag(&self) -> AlgebraTag {
        self.tag
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Rational::is_zero)
    }

    fn check(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.tag != other.tag {
            return Err(AlgebraError::TagMismatch {
                left: self.tag,
                right: other.tag,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check(other)?;
        Ok(CompositionElement {
            tag: self.tag,
            coords: crate::linalg::add_vec(&self.coords, &other.coords),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check(other)?;
        Ok(CompositionElement {
            tag: self.tag,
            coords: crate::linalg::sub_vec(&self.coords, &other.coords),
        })
    }

    pub fn scale(&self, s: &Rational) -> Self {
        CompositionElement {
            tag: self.tag,
            coords: crate::linalg::scale_vec(&self.coords, s),
        }
    }
}

/// Cayley-Dickson product on raw coordinate slices (length a power of two).
pub fn cd_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    debug_assert_eq!(a.len(), b.len());
    let n = a.len();
    if n == 1 {
        return vec![&a[0] * &b[0]];
    }
    let h = n / 2;
    let (x1, x2) = a.split_at(h);
    let (y1, y2) = b.split_at(h);
    let y1c = conj_slice(y1);
    let y2c = conj_slice(y2);
    // (x1 y1 - conj(y2) x2, y2 x1 + x2 conj(y1))
    let first = crate::linalg::sub_vec(&cd_mul(x1, y1), &cd_mul(&y2c, x2));
    let second = crate::linalg::add_vec(&cd_mul(y2, x1), &cd_mul(x2, &y1c));
    let mut out = first;
    out.extend(second);
    out
}

fn conj_slice(a: &[Rational]) -> Vec<Rational> {
    let mut out: Vec<Rational> = a.iter().map(|x| -x).collect();
    out[0] = a[0].clone();
    out
}

/// Real part of the product `a * b` of two coordinate slices.
pub fn re_mul(a: &[Rational], b: &[Rational]) -> Rational {
    // Re(ab) = a0 b0 - sum_{i>0} a_i b_i for every Cayley-Dickson algebra
    // in the division convention.
    let mut acc = &a[0] * &b[0];
    for i in 1..a.len() {
        acc -= &a[i] * &b[i];
    }
    acc
}

pub fn norm_slice(a: &[Rational]) -> Rational {
    let mut acc = Rational::zero();
    for x in a {
        acc += x * x;
    }
    acc
}

/// The bilinear Cayley-Dickson product.
pub fn cd_multiply(
    a: &CompositionElement,
    b: &CompositionElement,
) -> Result<CompositionElement, AlgebraError> {
    a.check(b)?;
    Ok(CompositionElement {
        tag: a.tag,
        coords: cd_mul(&a.coords, &b.coords),
    })
}

/// Conjugation: negate every imaginary coordinate.
pub fn conjugate(a: &CompositionElement) -> CompositionElement {
    CompositionElement {
        tag: a.tag,
        coords: conj_slice(&a.coords),
    }
}

/// Coordinate 0.
pub fn real_part(a: &CompositionElement) -> Rational {
    a.coords[0].clone()
}

/// The multiplicative norm: `real_part(a * conj(a)) = sum of squares`.
pub fn norm_form(a: &CompositionElement) -> Rational {
    norm_slice(&a.coords)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use crate::rng::SplitMix64;

    fn elem(tag: AlgebraTag, ints: &[i64]) -> CompositionElement {
        CompositionElement::new(tag, ints.iter().map(|&n| rat(n)).collect()).unwrap()
    }

    fn random_elem(tag: AlgebraTag, rng: &mut SplitMix64) -> CompositionElement {
        let coords = (0..tag.dimension()).map(|_| rat(rng.int_in(9))).collect();
        CompositionElement::new(tag, coords).unwrap()
    }

    #[test]
    fn quaternion_table() {
        let i = CompositionElement::basis_unit(AlgebraTag::H, 1);
        let j = CompositionElement::basis_unit(AlgebraTag::H, 2);
        let k = CompositionElement::basis_unit(AlgebraTag::H, 3);
        assert_eq!(cd_multiply(&i, &j).unwrap(), k);
        assert_eq!(
            cd_multiply(&j, &i).unwrap(),
            k.scale(&rat(-1))
        );
        assert_eq!(
            cd_multiply(&i, &i).unwrap(),
            CompositionElement::one(AlgebraTag::H).scale(&rat(-1))
        );
    }

    #[test]
    fn unit_law_every_tag() {
        let mut rng = SplitMix64::new(11);
        for tag in AlgebraTag::all() {
            let one = CompositionElement::one(tag);
            for _ in 0..10 {
                let x = random_elem(tag, &mut rng);
                assert_eq!(cd_multiply(&one, &x).unwrap(), x);
                assert_eq!(cd_multiply(&x, &one).unwrap(), x);
            }
        }
    }

    #[test]
    fn octonion_associator_fixture() {
        // (e1 e2) e4 - e1 (e2 e4) = 2 e7 in this doubling convention.
        let e = |i| CompositionElement::basis_unit(AlgebraTag::O, i);
        let lhs = cd_multiply(&cd_multiply(&e(1), &e(2)).unwrap(), &e(4)).unwrap();
        let rhs = cd_multiply(&e(1), &cd_multiply(&e(2), &e(4)).unwrap()).unwrap();
        let assoc = lhs.sub(&rhs).unwrap();
        assert_eq!(assoc, e(7).scale(&rat(2)));
        assert!(!assoc.is_zero());
    }

    #[test]
    fn norm_examples() {
        let z = elem(AlgebraTag::C, &[1, 1]);
        assert_eq!(norm_form(&z), rat(2));
        let x = elem(AlgebraTag::O, &[1, -2, 3, 0, 1, 0, 0, 2]);
        assert_eq!(conjugate(&conjugate(&x)), x);
        assert_eq!(real_part(&cd_multiply(&x, &conjugate(&x)).unwrap()), norm_form(&x));
    }

    #[test]
    fn norm_is_multiplicative() {
        let mut rng = SplitMix64::new(5);
        for tag in AlgebraTag::all() {
            for _ in 0..25 {
                let x = random_elem(tag, &mut rng);
                let y = random_elem(tag, &mut rng);
                let xy = cd_multiply(&x, &y).unwrap();
                assert_eq!(norm_form(&xy), norm_form(&x) * norm_form(&y));
            }
        }
    }

    #[test]
    fn octonions_are_alternative_not_associative() {
        let mut rng = SplitMix64::new(17);
        let tag = AlgebraTag::O;
        for _ in 0..25 {
            let x = random_elem(tag, &mut rng);
            let y = random_elem(tag, &mut rng);
            let xx = cd_multiply(&x, &x).unwrap();
            let left = cd_multiply(&x, &cd_multiply(&x, &y).unwrap()).unwrap();
            assert_eq!(left, cd_multiply(&xx, &y).unwrap());
            let right = cd_multiply(&cd_multiply(&y, &x).unwrap(), &x).unwrap();
            assert_eq!(right, cd_multiply(&y, &xx).unwrap());
        }
    }

    #[test]
    fn conjugation_is_an_antiautomorphism() {
        let mut rng = SplitMix64::new(23);
        for tag in AlgebraTag::all() {
            for _ in 0..25 {
                let x = random_elem(tag, &mut rng);
                let y = random_elem(tag, &mut rng);
                let lhs = conjugate(&cd_multiply(&x, &y).unwrap());
                let rhs = cd_multiply(&conjugate(&y), &conjugate(&x)).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn tag_mismatch_is_an_error() {
        let x = CompositionElement::one(AlgebraTag::H);
        let y = CompositionElement::one(AlgebraTag::O);
        assert!(matches!(
            cd_multiply(&x, &y),
            Err(AlgebraError::TagMismatch { .. })
        ));
    }
}
