//! Root systems and the classification of secant-deficient orbits.
//!
//! Root systems are realized in Bourbaki coordinates with exact rational
//! arithmetic. For a simple group acting irreducibly with highest weight
//! `lambda`, the secant variety of the closed orbit fails to reach
//! dimension `2 dim X + 1` exactly when there are positive roots
//! `alpha, beta` with `lambda - w0(lambda) = alpha + beta`. Enumerating all
//! dominant weights that can satisfy this equation (a finite search, see
//! [`RootSystem::candidate_weights`]) and filtering by the dimension count
//! `m = 3n/2 + 2` leaves exactly four varieties.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::linalg::{self, Mat};
use crate::rational::{frac, rat, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TypeLabel {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TypeLabel::A => "A",
            TypeLabel::B => "B",
            TypeLabel::C => "C",
            TypeLabel::D => "D",
            TypeLabel::E => "E",
            TypeLabel::F => "F",
            TypeLabel::G => "G",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RootError {
    InvalidRank { label: TypeLabel, rank: usize },
}

impl fmt::Display for RootError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootError::InvalidRank { label, rank } => {
                write!(f, "no root system of type {label} and rank {rank}")
            }
        }
    }
}

/// A dominant integral weight: coefficients over the fundamental weights
/// plus its cached ambient coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominantWeight {
    pub coeffs: Vec<u32>,
    pub ambient: Vec<Rational>,
}

/// A Bourbaki-coordinate realization of a simple root system.
#[derive(Debug, Clone)]
pub struct RootSystem {
    label: TypeLabel,
    rank: usize,
    ambient: usize,
    simple: Vec<Vec<Rational>>,
    positive: Vec<Vec<Rational>>,
    fundamental: Vec<Vec<Rational>>,
    /// Index permutation with `-w0(omega_i) = omega_{perm(i)}`.
    minus_w0: Vec<usize>,
    /// Half sum of positive coroots, as an ambient vector.
    rho_check: Vec<Rational>,
    /// Half sum of positive roots.
    rho: Vec<Rational>,
    coxeter: u32,
    /// Index of the highest root in `positive`.
    highest: usize,
}

fn basis_vec(dim: usize, i: usize, v: Rational) -> Vec<Rational> {
    let mut e = vec![Rational::zero(); dim];
    e[i] = v;
    e
}

fn coroot(alpha: &[Rational]) -> Vec<Rational> {
    let norm = linalg::dot(alpha, alpha);
    linalg::scale_vec(alpha, &(rat(2) / norm))
}

/// Construct the root system in Bourbaki coordinates.
///
/// Rank bounds: A >= 1, B >= 2, C >= 3, D >= 4, E in {6,7,8}, F = 4, G = 2
/// (lower ranks coincide with earlier types).
pub fn build(label: TypeLabel, rank: usize) -> Result<RootSystem, RootError> {
    let invalid = |label, rank| RootError::InvalidRank { label, rank };
    let (ambient, simple, positive): (usize, Vec<Vec<Rational>>, Vec<Vec<Rational>>) = match label
    {
        TypeLabel::A => {
            if rank < 1 {
                return Err(invalid(label, rank));
            }
            let n = rank + 1;
            let mut simple = Vec::new();
            for i in 0..rank {
                let mut v = vec![Rational::zero(); n];
                v[i] = rat(1);
                v[i + 1] = rat(-1);
                simple.push(v);
            }
            let mut positive = Vec::new();
            for i in 0..n {
                for j in (i + 1)..n {
                    let mut v = vec![Rational::zero(); n];
                    v[i] = rat(1);
                    v[j] = rat(-1);
                    positive.push(v);
                }
            }
            (n, simple, positive)
        }
        TypeLabel::B | TypeLabel::C => {
            let min_rank = if label == TypeLabel::B { 2 } else { 3 };
            if rank < min_rank {
                return Err(invalid(label, rank));
            }
            let n = rank;
            let mut simple = Vec::new();
            for i in 0..n - 1 {
                let mut v = vec![Rational::zero(); n];
                v[i] = rat(1);
                v[i + 1] = rat(-1);
                simple.push(v);
            }
            let last = if label == TypeLabel::B { rat(1) } else { rat(2) };
            simple.push(basis_vec(n, n - 1, last));
            let mut positive = Vec::new();
            for i in 0..n {
                let single = if label == TypeLabel::B { rat(1) } else { rat(2) };
                positive.push(basis_vec(n, i, single));
            }
            for i in 0..n {
                for j in (i + 1)..n {
                    for sign in [rat(-1), rat(1)] {
                        let mut v = vec![Rational::zero(); n];
                        v[i] = rat(1);
                        v[j] = sign;
                        positive.push(v);
                    }
                }
            }
            (n, simple, positive)
        }
        TypeLabel::D => {
            if rank < 4 {
                return Err(invalid(label, rank));
            }
            let n = rank;
            let mut simple = Vec::new();
            for i in 0..n - 1 {
                let mut v = vec![Rational::zero(); n];
                v[i] = rat(1);
                v[i + 1] = rat(-1);
                simple.push(v);
            }
            let mut v = vec![Rational::zero(); n];
            v[n - 2] = rat(1);
            v[n - 1] = rat(1);
            simple.push(v);
            let mut positive = Vec::new();
            for i in 0..n {
                for j in (i + 1)..n {
                    for sign in [rat(-1), rat(1)] {
                        let mut v = vec![Rational::zero(); n];
                        v[i] = rat(1);
                        v[j] = sign;
                        positive.push(v);
                    }
                }
            }
            (n, simple, positive)
        }
        TypeLabel::E => {
            if !(6..=8).contains(&rank) {
                return Err(invalid(label, rank));
            }
            let mut simple: Vec<Vec<Rational>> = Vec::new();
            let mut a1 = vec![frac(-1, 2); 8];
            a1[0] = frac(1, 2);
            a1[7] = frac(1, 2);
            simple.push(a1);
            let mut a2 = vec![Rational::zero(); 8];
            a2[0] = rat(1);
            a2[1] = rat(1);
            simple.push(a2);
            for i in 0..rank - 2 {
                let mut v = vec![Rational::zero(); 8];
                v[i] = rat(-1);
                v[i + 1] = rat(1);
                simple.push(v);
            }

            let mut positive = Vec::new();
            let top = match rank {
                6 => 5,
                7 => 6,
                _ => 8,
            };
            // integer roots: +-e_i + e_j within the first `top` coordinates
            for i in 0..top {
                for j in (i + 1)..top {
                    for sign in [rat(-1), rat(1)] {
                        let mut v = vec![Rational::zero(); 8];
                        v[i] = sign;
                        v[j] = rat(1);
                        positive.push(v);
                    }
                }
            }
            if rank == 7 {
                let mut v = vec![Rational::zero(); 8];
                v[6] = rat(-1);
                v[7] = rat(1);
                positive.push(v);
            }
            // half-integer roots
            let (free, parity) = match rank {
                6 => (5usize, 0u32),
                7 => (6, 1),
                _ => (7, 0),
            };
            for mask in 0u32..(1 << free) {
                if mask.count_ones() % 2 != parity {
                    continue;
                }
                let mut v = vec![Rational::zero(); 8];
                for (i, item) in v.iter_mut().enumerate().take(free) {
                    let neg = (mask >> i) & 1 == 1;
                    *item = if neg { frac(-1, 2) } else { frac(1, 2) };
                }
                v[7] = frac(1, 2);
                if rank <= 7 {
                    v[6] = frac(-1, 2);
                }
                if rank == 6 {
                    v[5] = frac(-1, 2);
                }
                positive.push(v);
            }
            (8, simple, positive)
        }
        TypeLabel::F => {
            if rank != 4 {
                return Err(invalid(label, rank));
            }
            let simple = vec![
                vec![rat(0), rat(1), rat(-1), rat(0)],
                vec![rat(0), rat(0), rat(1), rat(-1)],
                vec![rat(0), rat(0), rat(0), rat(1)],
                vec![frac(1, 2), frac(-1, 2), frac(-1, 2), frac(-1, 2)],
            ];
            let mut positive = Vec::new();
            for i in 0..4 {
                positive.push(basis_vec(4, i, rat(1)));
            }
            for i in 0..4 {
                for j in (i + 1)..4 {
                    for sign in [rat(-1), rat(1)] {
                        let mut v = vec![Rational::zero(); 4];
                        v[i] = rat(1);
                        v[j] = sign;
                        positive.push(v);
                    }
                }
            }
            for mask in 0u32..8 {
                let mut v = vec![frac(1, 2); 4];
                for i in 0..3 {
                    if (mask >> i) & 1 == 1 {
                        v[i + 1] = frac(-1, 2);
                    }
                }
                positive.push(v);
            }
            (4, simple, positive)
        }
        TypeLabel::G => {
            if rank != 2 {
                return Err(invalid(label, rank));
            }
            let a1 = vec![rat(1), rat(-1), rat(0)];
            let a2 = vec![rat(-2), rat(1), rat(1)];
            let add3 = |u: &[Rational], v: &[Rational]| linalg::add_vec(u, v);
            let positive = vec![
                a1.clone(),
                a2.clone(),
                add3(&a1, &a2),
                add3(&linalg::scale_vec(&a1, &rat(2)), &a2),
                add3(&linalg::scale_vec(&a1, &rat(3)), &a2),
                add3(&linalg::scale_vec(&a1, &rat(3)), &linalg::scale_vec(&a2, &rat(2))),
            ];
            (3, vec![a1, a2], positive)
        }
    };

    let expected_count = match label {
        TypeLabel::A => rank * (rank + 1) / 2,
        TypeLabel::B | TypeLabel::C => rank * rank,
        TypeLabel::D => rank * (rank - 1),
        TypeLabel::E => match rank {
            6 => 36,
            7 => 63,
            _ => 120,
        },
        TypeLabel::F => 24,
        TypeLabel::G => 6,
    };
    assert_eq!(positive.len(), expected_count, "{label}{rank} root count");

    // fundamental weights: omega_i = sum_j c_j alpha_j with
    // <omega_i, alpha_k~> = delta_ik, solved through the Cartan matrix
    let cartan = Mat::from_rows(
        (0..rank)
            .map(|j| {
                (0..rank)
                    .map(|k| linalg::dot(&simple[j], &coroot(&simple[k])))
                    .collect()
            })
            .collect(),
    );
    let cartan_t = cartan.transpose();
    let mut fundamental = Vec::new();
    for i in 0..rank {
        let mut e = vec![Rational::zero(); rank];
        e[i] = Rational::one();
        let c = cartan_t.solve(&e).expect("Cartan matrix is invertible");
        let mut w = vec![Rational::zero(); ambient];
        for (j, cj) in c.iter().enumerate() {
            w = linalg::add_vec(&w, &linalg::scale_vec(&simple[j], cj));
        }
        fundamental.push(w);
    }

    let mut rho_check = vec![Rational::zero(); ambient];
    let mut rho = vec![Rational::zero(); ambient];
    for alpha in &positive {
        rho_check = linalg::add_vec(&rho_check, &coroot(alpha));
        rho = linalg::add_vec(&rho, alpha);
    }
    rho_check = linalg::scale_vec(&rho_check, &frac(1, 2));
    rho = linalg::scale_vec(&rho, &frac(1, 2));

    let coxeter = (2 * expected_count / rank) as u32;

    let mut rs = RootSystem {
        label,
        rank,
        ambient,
        simple,
        positive,
        fundamental,
        minus_w0: Vec::new(),
        rho_check,
        rho,
        coxeter,
        highest: 0,
    };

    // highest root: maximal height
    let mut best = (BigInt::zero(), 0usize);
    for (i, alpha) in rs.positive.iter().enumerate() {
        let h = rs.height(alpha).expect("positive root in simple span");
        if h > best.0 {
            best = (h, i);
        }
    }
    rs.highest = best.1;

    // -w0 as a permutation of fundamental-weight indices, computed from the
    // longest element acting by simple-reflection descent
    let mut perm = Vec::with_capacity(rank);
    for i in 0..rank {
        let image = linalg::scale_vec(&rs.w0_image(&rs.fundamental[i]), &rat(-1));
        let j = rs
            .fundamental
            .iter()
            .position(|w| *w == image)
            .expect("-w0 permutes the fundamental weights");
        perm.push(j);
    }
    rs.minus_w0 = perm;
    rs.validate();
    Ok(rs)
}

impl RootSystem {
    pub fn label(&self) -> TypeLabel {
        self.label
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.label, self.rank)
    }

    pub fn positive_roots(&self) -> &[Vec<Rational>] {
        &self.positive
    }

    pub fn simple_roots(&self) -> &[Vec<Rational>] {
        &self.simple
    }

    pub fn fundamental_weights(&self) -> &[Vec<Rational>] {
        &self.fundamental
    }

    pub fn minus_w0_perm(&self) -> &[usize] {
        &self.minus_w0
    }

    pub fn coxeter_number(&self) -> u32 {
        self.coxeter
    }

    pub fn highest_root(&self) -> &[Rational] {
        &self.positive[self.highest]
    }

    /// Coefficients of `v` over the simple roots, if `v` lies in their span.
    pub fn in_simple_coords(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        let rows: Vec<Vec<Rational>> = (0..self.rank)
            .map(|j| self.simple[j].clone())
            .collect();
        // solve sum_j c_j alpha_j = v via the Gram matrix of the alphas
        let gram = Mat::from_rows(
            (0..self.rank)
                .map(|i| {
                    (0..self.rank)
                        .map(|j| linalg::dot(&rows[i], &rows[j]))
                        .collect()
                })
                .collect(),
        );
        let rhs: Vec<Rational> = (0..self.rank).map(|i| linalg::dot(&rows[i], v)).collect();
        let c = gram.solve(&rhs)?;
        // confirm v is actually in the span
        let mut back = vec![Rational::zero(); self.ambient];
        for (j, cj) in c.iter().enumerate() {
            back = linalg::add_vec(&back, &linalg::scale_vec(&rows[j], cj));
        }
        if back == v.to_vec() {
            Some(c)
        } else {
            None
        }
    }

    /// Height of a root (sum of its simple coefficients), integral.
    fn height(&self, alpha: &[Rational]) -> Option<BigInt> {
        let c = self.in_simple_coords(alpha)?;
        let mut acc = Rational::zero();
        for x in &c {
            acc += x;
        }
        if acc.denom().is_one() {
            Some(acc.numer().clone())
        } else {
            None
        }
    }

    /// Image of a dominant vector under the longest Weyl element, by
    /// simple-reflection descent to the antidominant chamber.
    pub fn w0_image(&self, v: &[Rational]) -> Vec<Rational> {
        let mut cur = v.to_vec();
        let mut guard = 0u32;
        loop {
            let mut moved = false;
            for alpha in &self.simple {
                let pairing = linalg::dot(&cur, &coroot(alpha));
                if pairing.is_positive() {
                    cur = linalg::sub_vec(&cur, &linalg::scale_vec(alpha, &pairing));
                    moved = true;
                }
            }
            if !moved {
                return cur;
            }
            guard += 1;
            assert!(guard < 100_000, "descent did not terminate");
        }
    }

    fn validate(&self) {
        // every positive root is a non-negative integer combination of the
        // simple roots
        for alpha in &self.positive {
            let c = self
                .in_simple_coords(alpha)
                .expect("positive root lies in the simple span");
            for x in &c {
                assert!(x.denom().is_one() && !x.is_negative(), "{}", self.name());
            }
        }
        // -w0 is an involution permuting the simple roots compatibly
        for i in 0..self.rank {
            assert_eq!(self.minus_w0[self.minus_w0[i]], i);
            let img = self.apply_minus_w0(&self.simple[i]);
            assert_eq!(img, self.simple[self.minus_w0[i]], "{}", self.name());
        }
        // -w0 maps the positive roots onto themselves
        for alpha in &self.positive {
            let img = self.apply_minus_w0(alpha);
            assert!(self.positive.contains(&img), "{}", self.name());
        }
    }

    /// Apply `-w0` to a vector in the root span, through its expansion over
    /// fundamental weights.
    pub fn apply_minus_w0(&self, v: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.ambient];
        for (i, alpha) in self.simple.iter().enumerate() {
            let c = linalg::dot(v, &coroot(alpha));
            if !c.is_zero() {
                out = linalg::add_vec(
                    &out,
                    &linalg::scale_vec(&self.fundamental[self.minus_w0[i]], &c),
                );
            }
        }
        out
    }

    /// The dominant weight with the given fundamental coefficients.
    pub fn weight(&self, coeffs: &[u32]) -> DominantWeight {
        assert_eq!(coeffs.len(), self.rank);
        let mut ambient = vec![Rational::zero(); self.ambient];
        for (i, &c) in coeffs.iter().enumerate() {
            if c > 0 {
                ambient = linalg::add_vec(
                    &ambient,
                    &linalg::scale_vec(&self.fundamental[i], &rat(c as i64)),
                );
            }
        }
        DominantWeight {
            coeffs: coeffs.to_vec(),
            ambient,
        }
    }

    /// `w0(lambda) = -theta(lambda)` where `theta` is the diagram
    /// involution; the result is the lowest weight of the representation.
    pub fn w0_action(&self, lambda: &DominantWeight) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.ambient];
        for (i, &c) in lambda.coeffs.iter().enumerate() {
            if c > 0 {
                out = linalg::sub_vec(
                    &out,
                    &linalg::scale_vec(&self.fundamental[self.minus_w0[i]], &rat(c as i64)),
                );
            }
        }
        out
    }

    /// `lambda - w0(lambda)`; always a non-negative integer combination of
    /// simple roots.
    pub fn delta(&self, lambda: &DominantWeight) -> Vec<Rational> {
        linalg::sub_vec(&lambda.ambient, &self.w0_action(lambda))
    }

    /// All unordered pairs of positive roots summing to `target`.
    pub fn root_pairs_summing_to(&self, target: &[Rational]) -> Vec<(usize, usize)> {
        let index: BTreeMap<&[Rational], usize> = self
            .positive
            .iter()
            .enumerate()
            .map(|(i, r)| (r.as_slice(), i))
            .collect();
        let mut out = Vec::new();
        for (i, alpha) in self.positive.iter().enumerate() {
            let beta = linalg::sub_vec(target, alpha);
            if let Some(&j) = index.get(beta.as_slice()) {
                if i <= j {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Dimension of the highest-weight orbit:
    /// the number of positive roots not orthogonal to `lambda`.
    pub fn orbit_dim(&self, lambda: &DominantWeight) -> usize {
        self.positive
            .iter()
            .filter(|alpha| !linalg::dot(&lambda.ambient, alpha).is_zero())
            .count()
    }

    /// Weyl dimension formula; the product is checked to be integral.
    pub fn weyl_dim(&self, lambda: &DominantWeight) -> BigInt {
        let lam_rho = linalg::add_vec(&lambda.ambient, &self.rho);
        let mut acc = Rational::one();
        for alpha in &self.positive {
            acc *= linalg::dot(&lam_rho, alpha) / linalg::dot(&self.rho, alpha);
        }
        assert!(acc.denom().is_one(), "Weyl dimension must be an integer");
        acc.numer().clone()
    }

    /// Is `lambda` the highest root with `(theta, theta)` as its only
    /// witness pair? Such orbits are the adjoint varieties, whose secant
    /// variety has dimension exactly `2 dim X`.
    pub fn adjoint_exclusion(&self, lambda: &DominantWeight) -> bool {
        if lambda.ambient != self.positive[self.highest] {
            return false;
        }
        let witnesses = self.root_pairs_summing_to(&self.delta(lambda));
        witnesses == vec![(self.highest, self.highest)]
    }

    /// Pairing `<v, rho~>` used for the enumeration bound.
    pub fn rho_check_pairing(&self, v: &[Rational]) -> Rational {
        linalg::dot(v, &self.rho_check)
    }

    /// All dominant weights (up to the provably complete search bound
    /// `<lambda, rho~> <= h - 1`) for which `lambda - w0(lambda)` is a sum
    /// of two positive roots.
    ///
    /// Completeness: `<lambda - w0 lambda, rho~> = 2 <lambda, rho~>`
    /// because `w0 rho~ = -rho~`, while `<alpha + beta, rho~> =
    /// ht(alpha) + ht(beta) <= 2 (h - 1)`, the highest root having height
    /// `h - 1`. So any witness forces `<lambda, rho~> <= h - 1`.
    pub fn candidate_weights(&self) -> Vec<CandidateReport> {
        let budgets: Vec<Rational> = (0..self.rank)
            .map(|i| self.rho_check_pairing(&self.fundamental[i]))
            .collect();
        let bound = rat((self.coxeter - 1) as i64);
        let mut coeffs = vec![0u32; self.rank];
        let mut out = Vec::new();
        self.enumerate_dominant(&budgets, &bound, 0, &Rational::zero(), &mut coeffs, &mut out);
        out
    }

    fn enumerate_dominant(
        &self,
        budgets: &[Rational],
        bound: &Rational,
        idx: usize,
        used: &Rational,
        coeffs: &mut Vec<u32>,
        out: &mut Vec<CandidateReport>,
    ) {
        if idx == self.rank {
            if coeffs.iter().all(|&c| c == 0) {
                return;
            }
            let lambda = self.weight(coeffs);
            let delta = self.delta(&lambda);
            let witnesses = self.root_pairs_summing_to(&delta);
            if witnesses.is_empty() {
                return;
            }
            out.push(self.report_for(lambda, delta, witnesses));
            return;
        }
        let mut c = 0u32;
        loop {
            let cost = used + &budgets[idx] * rat(c as i64);
            if cost > *bound {
                break;
            }
            coeffs[idx] = c;
            self.enumerate_dominant(budgets, bound, idx + 1, &cost, coeffs, out);
            c += 1;
        }
        coeffs[idx] = 0;
    }

    fn report_for(
        &self,
        lambda: DominantWeight,
        delta: Vec<Rational>,
        witnesses: Vec<(usize, usize)>,
    ) -> CandidateReport {
        let n = self.orbit_dim(&lambda);
        let dim_v = self.weyl_dim(&lambda);
        let m = &dim_v - BigInt::one();
        // m = 3n/2 + 2, compared exactly as 2m = 3n + 4
        let severi = rat(2) * Rational::from_integer(m.clone()) == rat(3 * n as i64 + 4);
        let is_adjoint = self.adjoint_exclusion(&lambda);
        let identification = identify(self.label, self.rank, &lambda.coeffs, is_adjoint);
        let verdict = if is_adjoint {
            String::from("excluded: adjoint orbit, dim Sec(X) = 2 dim X")
        } else if severi {
            String::from("Severi variety")
        } else {
            String::from("excluded: m differs from 3n/2 + 2")
        };
        CandidateReport {
            label: self.label,
            rank: self.rank,
            coeffs: lambda.coeffs.clone(),
            lambda: lambda.ambient,
            delta,
            witnesses,
            orbit_dim: n,
            weyl_dim: dim_v,
            m,
            severi,
            is_adjoint,
            identification,
            verdict,
        }
    }
}

/// A `(root system, highest weight)` record with its witnesses and the
/// Severi verdict.
#[derive(Debug, Clone)]
pub struct CandidateReport {
    pub label: TypeLabel,
    pub rank: usize,
    pub coeffs: Vec<u32>,
    pub lambda: Vec<Rational>,
    pub delta: Vec<Rational>,
    /// Unordered index pairs `(alpha, beta)` into the positive roots.
    pub witnesses: Vec<(usize, usize)>,
    pub orbit_dim: usize,
    pub weyl_dim: BigInt,
    pub m: BigInt,
    pub severi: bool,
    pub is_adjoint: bool,
    pub identification: String,
    pub verdict: String,
}

impl CandidateReport {
    pub fn system(&self) -> String {
        format!("{}{}", self.label, self.rank)
    }

    pub fn lambda_string(&self) -> String {
        lambda_string(&self.coeffs)
    }
}

pub fn lambda_string(coeffs: &[u32]) -> String {
    let mut parts: Vec<String> = Vec::new();
    for (i, &c) in coeffs.iter().enumerate() {
        match c {
            0 => {}
            1 => parts.push(format!("w{}", i + 1)),
            _ => parts.push(format!("{}w{}", c, i + 1)),
        }
    }
    if parts.is_empty() {
        String::from("0")
    } else {
        parts.join("+")
    }
}

fn identify(label: TypeLabel, rank: usize, coeffs: &[u32], is_adjoint: bool) -> String {
    if is_adjoint {
        return format!("adjoint variety of {label}{rank}");
    }
    let single = |i: usize, c: u32| {
        coeffs
            .iter()
            .enumerate()
            .all(|(j, &v)| if j == i { v == c } else { v == 0 })
    };
    match label {
        TypeLabel::A => {
            let n = rank;
            if single(0, 1) || single(n - 1, 1) {
                format!("projective space P^{n}")
            } else if single(0, 2) || single(n - 1, 2) {
                format!("second Veronese of P^{n}")
            } else if n >= 2 && (single(1, 1) || single(n - 2, 1)) {
                format!("Grassmannian G(2,{})", n + 1)
            } else {
                String::from("unidentified orbit")
            }
        }
        TypeLabel::B => {
            if single(0, 1) {
                format!("quadric Q^{}", 2 * rank - 1)
            } else if single(rank - 1, 1) {
                match rank {
                    2 => String::from("projective space P^3 (spin)"),
                    3 => String::from("spinor variety (a quadric Q^6)"),
                    4 => String::from("spinor variety S_10"),
                    _ => String::from("spinor variety"),
                }
            } else {
                String::from("unidentified orbit")
            }
        }
        TypeLabel::C => {
            if single(0, 1) {
                format!("projective space P^{}", 2 * rank - 1)
            } else if single(1, 1) {
                format!("symplectic Grassmannian Gsp(2,{})", 2 * rank)
            } else {
                String::from("unidentified orbit")
            }
        }
        TypeLabel::D => {
            if single(0, 1) {
                format!("quadric Q^{}", 2 * rank - 2)
            } else if single(rank - 2, 1) || single(rank - 1, 1) {
                match rank {
                    4 => String::from("spinor variety (a quadric Q^6)"),
                    5 => String::from("spinor variety S_10"),
                    _ => String::from("spinor variety"),
                }
            } else {
                String::from("unidentified orbit")
            }
        }
        TypeLabel::E => {
            if rank == 6 && (single(0, 1) || single(5, 1)) {
                String::from("minimal E6 orbit")
            } else {
                String::from("unidentified orbit")
            }
        }
        TypeLabel::F => {
            if single(3, 1) {
                String::from("minimal F4 orbit (hyperplane section of the E6 variety)")
            } else {
                String::from("unidentified orbit")
            }
        }
        TypeLabel::G => {
            if single(0, 1) {
                String::from("minimal G2 orbit (a quadric Q^5)")
            } else {
                String::from("unidentified orbit")
            }
        }
    }
}

/// All simple systems up to `max_rank`, in a fixed order.
pub fn all_systems(max_rank: usize) -> Vec<(TypeLabel, usize)> {
    let mut out = Vec::new();
    for r in 1..=max_rank {
        out.push((TypeLabel::A, r));
    }
    for r in 2..=max_rank {
        out.push((TypeLabel::B, r));
    }
    for r in 3..=max_rank {
        out.push((TypeLabel::C, r));
    }
    for r in 4..=max_rank {
        out.push((TypeLabel::D, r));
    }
    for r in 6..=max_rank.min(8) {
        out.push((TypeLabel::E, r));
    }
    if max_rank >= 4 {
        out.push((TypeLabel::F, 4));
    }
    if max_rank >= 2 {
        out.push((TypeLabel::G, 2));
    }
    out
}

/// Candidates over every simple type up to `max_rank`, with identifications.
pub fn deficient_catalog(max_rank: usize) -> Vec<CandidateReport> {
    let mut out = Vec::new();
    for (label, rank) in all_systems(max_rank) {
        let rs = build(label, rank).expect("valid system");
        out.extend(rs.candidate_weights());
    }
    out
}

/// One solution family of the reducible-group equation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonSimpleRecord {
    pub n1: u32,
    pub delta1: u32,
    pub n2: u32,
    pub delta2: u32,
    pub name: String,
    pub accepted: bool,
    pub reason: String,
}

/// Solve the reducible branch: `X = X1 x X2` with `n_i = dim X_i` and
/// `dim V_i = n_i + delta_i` can only be a Severi variety if
///
/// `n1 n2 + (delta2 - 3/2) n1 + (delta1 - 3/2) n2 + (delta1 delta2 - 3) = 0`.
///
/// For `delta1, delta2 >= 2` every term is positive, so a bounded search is
/// complete; products of three or more factors are excluded by the same
/// positivity applied pairwise.
pub fn nonsimple_solve() -> Vec<NonSimpleRecord> {
    let mut out = Vec::new();
    for delta1 in 1u32..=6 {
        for delta2 in 1u32..=delta1 {
            for n1 in 1u32..=16 {
                for n2 in 1u32..=16 {
                    // normalize: delta1 >= delta2, and n1 <= n2 on ties
                    if delta1 == delta2 && n1 > n2 {
                        continue;
                    }
                    let lhs = rat((n1 * n2) as i64)
                        + (rat(delta2 as i64) - frac(3, 2)) * rat(n1 as i64)
                        + (rat(delta1 as i64) - frac(3, 2)) * rat(n2 as i64)
                        + rat((delta1 * delta2) as i64 - 3);
                    if !lhs.is_zero() {
                        continue;
                    }
                    let (name, accepted, reason) = match (n1, delta1, n2, delta2) {
                        (2, 1, 2, 1) => (
                            String::from("P^2 x P^2 (Segre)"),
                            true,
                            String::from("secant spans dimension 8 < 9: a cubic hypersurface"),
                        ),
                        (1, 2, 1, 1) => (
                            String::from("P^1 x v_2(P^1)"),
                            false,
                            String::from("secant fills its 6-dimensional ambient space"),
                        ),
                        (1, 1, 5, 1) | (5, 1, 1, 1) => (
                            String::from("P^1 x P^5"),
                            false,
                            String::from("secant fills its 12-dimensional ambient space"),
                        ),
                        _ => (String::from("unexpected solution"), false, String::new()),
                    };
                    out.push(NonSimpleRecord {
                        n1,
                        delta1,
                        n2,
                        delta2,
                        name,
                        accepted,
                        reason,
                    });
                }
            }
        }
    }
    out.sort_by_key(|r| (r.delta1, r.delta2, r.n1, r.n2));
    out
}

/// A final classification entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeveriEntry {
    pub name: String,
    pub system: String,
    pub lambda: String,
    pub n: usize,
    pub m: u64,
}

/// The full classification: simple candidates filtered by the adjoint
/// exclusion and the exact dimension condition, plus the reducible branch,
/// with dual weights merged. For `max_rank >= 6` the result is exactly the
/// four Severi varieties.
pub fn classify_all(max_rank: usize) -> Vec<SeveriEntry> {
    let mut out = Vec::new();
    for (label, rank) in all_systems(max_rank) {
        let rs = build(label, rank).expect("valid system");
        for report in rs.candidate_weights() {
            if report.is_adjoint || !report.severi {
                continue;
            }
            // keep one representative of each dual pair
            let mut dual = vec![0u32; rs.rank()];
            for (i, &c) in report.coeffs.iter().enumerate() {
                dual[rs.minus_w0_perm()[i]] = c;
            }
            if report.coeffs < dual {
                continue;
            }
            out.push(SeveriEntry {
                name: report.identification.clone(),
                system: report.system(),
                lambda: report.lambda_string(),
                n: report.orbit_dim,
                m: u64::try_from(&report.m).expect("small dimension"),
            });
        }
    }
    for rec in nonsimple_solve() {
        if rec.accepted {
            out.push(SeveriEntry {
                name: rec.name.clone(),
                system: String::from("A2xA2"),
                lambda: String::from("w1(x)w1"),
                n: (rec.n1 + rec.n2) as usize,
                m: ((rec.n1 + rec.delta1) * (rec.n2 + rec.delta2) - 1) as u64,
            });
        }
    }
    out.sort_by_key(|e| e.n);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coeffs(rank: usize, entries: &[(usize, u32)]) -> Vec<u32> {
        let mut c = vec![0u32; rank];
        for &(i, v) in entries {
            c[i] = v;
        }
        c
    }

    #[test]
    fn root_counts_and_coxeter_numbers() {
        let cases = [
            (TypeLabel::A, 2, 3, 3),
            (TypeLabel::A, 5, 15, 6),
            (TypeLabel::B, 4, 16, 8),
            (TypeLabel::C, 3, 9, 6),
            (TypeLabel::D, 5, 20, 8),
            (TypeLabel::E, 6, 36, 12),
            (TypeLabel::E, 7, 63, 18),
            (TypeLabel::E, 8, 120, 30),
            (TypeLabel::F, 4, 24, 12),
            (TypeLabel::G, 2, 6, 6),
        ];
        for (label, rank, count, h) in cases {
            let rs = build(label, rank).unwrap();
            assert_eq!(rs.positive_roots().len(), count, "{label}{rank}");
            assert_eq!(rs.coxeter_number(), h, "{label}{rank}");
        }
    }

    #[test]
    fn invalid_ranks_are_rejected() {
        assert!(build(TypeLabel::D, 3).is_err());
        assert!(build(TypeLabel::E, 5).is_err());
        assert!(build(TypeLabel::G, 3).is_err());
        assert!(build(TypeLabel::C, 2).is_err());
    }

    #[test]
    fn e6_has_16_half_integer_roots() {
        let rs = build(TypeLabel::E, 6).unwrap();
        let halves = rs
            .positive_roots()
            .iter()
            .filter(|r| r.iter().any(|c| !c.denom().is_one()))
            .count();
        assert_eq!(halves, 16);
        assert_eq!(rs.positive_roots().len() - halves, 20);
    }

    #[test]
    fn a5_fundamental_weight_formula() {
        // omega_i = (e_1 + ... + e_i) - i/(n+1) sum_j e_j
        let rs = build(TypeLabel::A, 5).unwrap();
        for i in 0..5 {
            let mut expect = vec![frac(-(i as i64 + 1), 6); 6];
            for e in expect.iter_mut().take(i + 1) {
                *e += rat(1);
            }
            assert_eq!(rs.fundamental_weights()[i], expect, "omega_{}", i + 1);
        }
    }

    #[test]
    fn minus_w0_is_the_diagram_involution() {
        let rs = build(TypeLabel::A, 5).unwrap();
        assert_eq!(rs.minus_w0_perm(), &[4, 3, 2, 1, 0]);
        let rs = build(TypeLabel::D, 5).unwrap();
        assert_eq!(rs.minus_w0_perm(), &[0, 1, 2, 4, 3]);
        let rs = build(TypeLabel::D, 6).unwrap();
        assert_eq!(rs.minus_w0_perm(), &[0, 1, 2, 3, 4, 5]);
        let rs = build(TypeLabel::E, 6).unwrap();
        assert_eq!(rs.minus_w0_perm(), &[5, 1, 4, 3, 2, 0]);
        for (label, rank) in [(TypeLabel::B, 3), (TypeLabel::C, 4), (TypeLabel::E, 7)] {
            let rs = build(label, rank).unwrap();
            let id: Vec<usize> = (0..rank).collect();
            assert_eq!(rs.minus_w0_perm(), &id[..], "{label}{rank}");
        }
    }

    #[test]
    fn b2_minus_w0_is_trivial_so_delta_doubles() {
        let rs = build(TypeLabel::B, 2).unwrap();
        let w1 = rs.weight(&coeffs(2, &[(0, 1)]));
        assert_eq!(rs.delta(&w1), linalg::scale_vec(&w1.ambient, &rat(2)));
    }

    #[test]
    fn e6_delta_table_matches_known_rows() {
        let rs = build(TypeLabel::E, 6).unwrap();
        let expect: [Vec<Rational>; 6] = [
            vec![rat(0), rat(0), rat(0), rat(0), rat(1), rat(-1), rat(-1), rat(1)],
            vec![rat(1), rat(1), rat(1), rat(1), rat(1), rat(-1), rat(-1), rat(1)],
            vec![
                frac(-1, 2),
                frac(1, 2),
                frac(1, 2),
                frac(3, 2),
                frac(3, 2),
                frac(-3, 2),
                frac(-3, 2),
                frac(3, 2),
            ],
            vec![rat(0), rat(0), rat(2), rat(2), rat(2), rat(-2), rat(-2), rat(2)],
            vec![
                frac(-1, 2),
                frac(1, 2),
                frac(1, 2),
                frac(3, 2),
                frac(3, 2),
                frac(-3, 2),
                frac(-3, 2),
                frac(3, 2),
            ],
            vec![rat(0), rat(0), rat(0), rat(0), rat(1), rat(-1), rat(-1), rat(1)],
        ];
        for i in 0..6 {
            let mut c = vec![0u32; 6];
            c[i] = 1;
            let lam = rs.weight(&c);
            assert_eq!(rs.delta(&lam), expect[i], "row {}", i + 1);
        }
        // rows 3 and 5 coincide (the nodes swapped by the involution)
        assert_eq!(expect[2], expect[4]);
    }

    #[test]
    fn delta_is_a_nonnegative_root_combination() {
        for (label, rank) in all_systems(6) {
            let rs = build(label, rank).unwrap();
            let lam = rs.weight(&vec![1; rank]);
            let delta = rs.delta(&lam);
            let c = rs.in_simple_coords(&delta).unwrap();
            for x in &c {
                assert!(x.denom().is_one() && !x.is_negative(), "{label}{rank}");
            }
        }
    }

    #[test]
    fn a_type_candidates_match_the_expected_set() {
        for n in 2..=8usize {
            let rs = build(TypeLabel::A, n).unwrap();
            let got: alloc::collections::BTreeSet<Vec<u32>> = rs
                .candidate_weights()
                .into_iter()
                .map(|r| r.coeffs)
                .collect();
            let mut expect = alloc::collections::BTreeSet::new();
            expect.insert(coeffs(n, &[(0, 1)]));
            expect.insert(coeffs(n, &[(n - 1, 1)]));
            expect.insert(coeffs(n, &[(0, 2)]));
            expect.insert(coeffs(n, &[(n - 1, 2)]));
            expect.insert(coeffs(n, &[(1, 1)]));
            expect.insert(coeffs(n, &[(n - 2, 1)]));
            expect.insert(coeffs(n, &[(0, 1), (n - 1, 1)]));
            assert_eq!(got, expect, "A{n}");
        }
    }

    #[test]
    fn a_type_deltas_satisfy_the_coordinate_bound() {
        // |sum of coordinates| of alpha + beta is at most 4 in type A
        for n in 2..=6usize {
            let rs = build(TypeLabel::A, n).unwrap();
            for rep in rs.candidate_weights() {
                let total: Rational = rep.delta.iter().map(|c| c.abs()).sum();
                assert!(total <= rat(4), "A{n}");
            }
        }
    }

    #[test]
    fn e6_candidates_are_w1_w2_w6() {
        let rs = build(TypeLabel::E, 6).unwrap();
        let got: alloc::collections::BTreeSet<Vec<u32>> = rs
            .candidate_weights()
            .into_iter()
            .map(|r| r.coeffs)
            .collect();
        let expect: alloc::collections::BTreeSet<Vec<u32>> = [
            coeffs(6, &[(0, 1)]),
            coeffs(6, &[(1, 1)]),
            coeffs(6, &[(5, 1)]),
        ]
        .into_iter()
        .collect();
        assert_eq!(got, expect);
    }

    #[test]
    fn witnesses_satisfy_the_equation_exactly() {
        for (label, rank) in all_systems(6) {
            let rs = build(label, rank).unwrap();
            for rep in rs.candidate_weights() {
                assert!(!rep.witnesses.is_empty());
                for &(i, j) in &rep.witnesses {
                    let sum = linalg::add_vec(&rs.positive_roots()[i], &rs.positive_roots()[j]);
                    assert_eq!(sum, rep.delta, "{label}{rank}");
                }
            }
        }
    }

    #[test]
    fn orbit_and_weyl_dimensions() {
        let a5 = build(TypeLabel::A, 5).unwrap();
        let w2 = a5.weight(&coeffs(5, &[(1, 1)]));
        assert_eq!(a5.orbit_dim(&w2), 8);
        assert_eq!(a5.weyl_dim(&w2), BigInt::from(15));

        let e6 = build(TypeLabel::E, 6).unwrap();
        let w1 = e6.weight(&coeffs(6, &[(0, 1)]));
        assert_eq!(e6.orbit_dim(&w1), 16);
        assert_eq!(e6.weyl_dim(&w1), BigInt::from(27));

        let a2 = build(TypeLabel::A, 2).unwrap();
        let two_w1 = a2.weight(&coeffs(2, &[(0, 2)]));
        assert_eq!(a2.orbit_dim(&two_w1), 2);
        assert_eq!(a2.weyl_dim(&two_w1), BigInt::from(6));
    }

    #[test]
    fn adjoint_exclusion_examples() {
        let a2 = build(TypeLabel::A, 2).unwrap();
        let adj = a2.weight(&coeffs(2, &[(0, 1), (1, 1)]));
        assert!(a2.adjoint_exclusion(&adj));
        assert_eq!(a2.root_pairs_summing_to(&a2.delta(&adj)).len(), 1);

        let e6 = build(TypeLabel::E, 6).unwrap();
        assert!(e6.adjoint_exclusion(&e6.weight(&coeffs(6, &[(1, 1)]))));

        let a5 = build(TypeLabel::A, 5).unwrap();
        assert!(!a5.adjoint_exclusion(&a5.weight(&coeffs(5, &[(1, 1)]))));
    }

    #[test]
    fn enumeration_bound_is_sound_on_the_boundary_layer() {
        // max height among positive roots is h - 1, and any dominant weight
        // just past the bound pairs with rho~ strictly too high to admit a
        // witness pair
        for (label, rank) in [
            (TypeLabel::A, 4),
            (TypeLabel::B, 3),
            (TypeLabel::C, 3),
            (TypeLabel::D, 4),
            (TypeLabel::E, 6),
            (TypeLabel::F, 4),
            (TypeLabel::G, 2),
        ] {
            let rs = build(label, rank).unwrap();
            let h = rs.coxeter_number() as i64;
            let max_height: Rational = rs
                .positive_roots()
                .iter()
                .map(|a| rs.rho_check_pairing(a))
                .max()
                .unwrap();
            assert_eq!(max_height, rat(h - 1), "{label}{rank}");

            // boundary layer: dominant weights with h-1 < <lambda, rho~> <= 2h
            // sit just past the search bound and can have no witness
            let budgets: Vec<Rational> = (0..rank)
                .map(|i| rs.rho_check_pairing(&rs.fundamental_weights()[i]))
                .collect();
            let mut stack = vec![(vec![0u32; rank], 0usize)];
            let mut checked = 0;
            while let Some((coeffs, idx)) = stack.pop() {
                if idx == rank {
                    let pairing: Rational = coeffs
                        .iter()
                        .zip(&budgets)
                        .map(|(&c, b)| b * rat(c as i64))
                        .sum();
                    if pairing > rat(h - 1) && pairing <= rat(2 * h) {
                        let lam = rs.weight(&coeffs);
                        assert!(
                            rs.root_pairs_summing_to(&rs.delta(&lam)).is_empty(),
                            "{label}{rank}"
                        );
                        checked += 1;
                    }
                    continue;
                }
                let mut c = 0u32;
                loop {
                    let pairing: Rational = coeffs
                        .iter()
                        .zip(&budgets)
                        .map(|(&cc, b)| b * rat(cc as i64))
                        .sum::<Rational>()
                        + &budgets[idx] * rat(c as i64);
                    if pairing > rat(2 * h) {
                        break;
                    }
                    let mut next = coeffs.clone();
                    next[idx] = c;
                    stack.push((next, idx + 1));
                    c += 1;
                }
            }
            assert!(checked > 0, "{label}{rank}: boundary layer not empty");
        }
    }

    #[test]
    fn nonsimple_branch_has_exactly_three_families() {
        let recs = nonsimple_solve();
        assert_eq!(recs.len(), 3);
        let tuples: Vec<(u32, u32, u32, u32, bool)> = recs
            .iter()
            .map(|r| (r.n1, r.delta1, r.n2, r.delta2, r.accepted))
            .collect();
        assert_eq!(
            tuples,
            vec![
                (1, 1, 5, 1, false),
                (2, 1, 2, 1, true),
                (1, 2, 1, 1, false),
            ]
        );
        // no solutions once both deltas exceed 1: all terms positive
        assert!(recs.iter().all(|r| r.delta2 == 1));
    }

    #[test]
    fn classification_returns_exactly_four_varieties() {
        let got = classify_all(8);
        let brief: Vec<(usize, u64, &str)> =
            got.iter().map(|e| (e.n, e.m, e.system.as_str())).collect();
        assert_eq!(
            brief,
            vec![
                (2, 5, "A2"),
                (4, 8, "A2xA2"),
                (8, 14, "A5"),
                (16, 26, "E6"),
            ]
        );
        // with E6 out of reach only three remain
        assert_eq!(classify_all(5).len(), 3);
    }

    #[test]
    fn catalog_contains_the_known_near_misses() {
        let catalog = deficient_catalog(8);
        let find = |label, rank, cs: &[u32]| {
            catalog
                .iter()
                .find(|r| r.label == label && r.rank == rank && r.coeffs == cs)
                .unwrap_or_else(|| panic!("{label}{rank} candidate missing"))
        };
        let f4 = find(TypeLabel::F, 4, &[0, 0, 0, 1]);
        assert_eq!(f4.orbit_dim, 15);
        assert_eq!(f4.m, BigInt::from(25));
        assert!(!f4.severi); // 3n/2 + 2 = 24.5
        let c3 = find(TypeLabel::C, 3, &[0, 1, 0]);
        assert_eq!(c3.orbit_dim, 7);
        assert_eq!(c3.weyl_dim, BigInt::from(14));
        assert!(!c3.severi);
        let g2 = find(TypeLabel::G, 2, &[1, 0]);
        assert_eq!(g2.orbit_dim, 5);
        assert_eq!(g2.weyl_dim, BigInt::from(7));
        let e7_adjoint = find(TypeLabel::E, 7, &[1, 0, 0, 0, 0, 0, 0]);
        assert!(e7_adjoint.is_adjoint);
    }
}
