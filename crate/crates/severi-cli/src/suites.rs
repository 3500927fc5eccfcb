//! The verification suites behind `verify-algebra` and `verify-geometry`.
//!
//! Every check draws its inputs from a stream keyed by
//! `(suite, section, check, trial)`, so results do not depend on execution
//! order and any failure is reproducible from the seed and trial index
//! alone. Genericity preconditions (a vanishing determinant where one is
//! needed, a tangent-degenerate pair) are handled by bounded resampling
//! inside the trial; exhausting the budget fails the trial loudly.

use num_traits::Zero;
use severi_core::composition::{
    cd_multiply, conjugate, norm_form, AlgebraTag, CompositionElement,
};
use severi_core::cubic::{CubicSpace, ModelKind, Point};
use severi_core::geometry::{self, Diamond, GeoError};
use severi_core::linalg;
use severi_core::rational::{rat, Rational};
use severi_core::rng::{keyed_stream, SplitMix64};
use severi_core::sampling::{self, SampleCfg};
use severi_core::terracini::{self, Family};

use crate::report::{CheckResult, Failure, RunConfig, Section, VerificationReport};

fn sample_cfg(config: &RunConfig) -> SampleCfg {
    SampleCfg {
        bound: config.bound,
        retries: config.retries,
    }
}

fn coords_string(coords: &[Rational]) -> String {
    let inner: Vec<String> = coords.iter().map(|c| c.to_string()).collect();
    format!("[{}]", inner.join(", "))
}

/// Run one check for `trials` trials; the closure returns a failure record
/// body (inputs, note) on failure.
fn run_check(
    suite: &'static str,
    section: &str,
    id: &'static str,
    seed: u64,
    trials: u32,
    mut body: impl FnMut(&mut SplitMix64, u32) -> Result<(), (String, String)>,
) -> CheckResult {
    let mut passed = 0;
    let mut failures = Vec::new();
    for trial in 0..trials {
        let mut rng = keyed_stream(seed, &[suite, section, id], trial as u64);
        match body(&mut rng, trial) {
            Ok(()) => passed += 1,
            Err((inputs, note)) => failures.push(Failure {
                trial,
                inputs,
                note,
            }),
        }
    }
    CheckResult {
        id,
        attempted: trials,
        passed,
        failures,
    }
}

fn fail(inputs: String, note: impl Into<String>) -> (String, String) {
    (inputs, note.into())
}

fn random_element(tag: AlgebraTag, rng: &mut SplitMix64, bound: i64) -> CompositionElement {
    let coords = (0..tag.dimension()).map(|_| rat(rng.int_in(bound))).collect();
    CompositionElement::new(tag, coords).expect("coordinate count")
}

fn random_point(space: &CubicSpace, rng: &mut SplitMix64, bound: i64) -> Point {
    space.point((0..space.dim()).map(|_| rat(rng.int_in(bound))).collect())
}

const ALGEBRA: &str = "verify-algebra";
const GEOMETRY: &str = "verify-geometry";

/// Composition-algebra checks (model independent).
fn composition_section(config: &RunConfig) -> Section {
    let seed = config.seed;
    let trials = config.trials;
    let b = config.bound;
    let mut checks = Vec::new();

    checks.push(run_check(ALGEBRA, "composition", "unit-law", seed, trials, |rng, _| {
        for tag in AlgebraTag::all() {
            let x = random_element(tag, rng, b);
            let one = CompositionElement::one(tag);
            if cd_multiply(&one, &x).unwrap() != x || cd_multiply(&x, &one).unwrap() != x {
                return Err(fail(format!("{:?}", x.coords()), "unit law failed"));
            }
        }
        Ok(())
    }));

    checks.push(run_check(
        ALGEBRA,
        "composition",
        "norm-multiplicative",
        seed,
        trials,
        |rng, _| {
            for tag in AlgebraTag::all() {
                let x = random_element(tag, rng, b);
                let y = random_element(tag, rng, b);
                let xy = cd_multiply(&x, &y).unwrap();
                if norm_form(&xy) != norm_form(&x) * norm_form(&y) {
                    return Err(fail(
                        format!("{:?} * {:?}", x.coords(), y.coords()),
                        format!("norm not multiplicative over {tag}"),
                    ));
                }
            }
            Ok(())
        },
    ));

    checks.push(run_check(
        ALGEBRA,
        "composition",
        "octonion-alternative",
        seed,
        trials,
        |rng, _| {
            let tag = AlgebraTag::O;
            let x = random_element(tag, rng, b);
            let y = random_element(tag, rng, b);
            let xx = cd_multiply(&x, &x).unwrap();
            let left = cd_multiply(&x, &cd_multiply(&x, &y).unwrap()).unwrap();
            let right = cd_multiply(&cd_multiply(&y, &x).unwrap(), &x).unwrap();
            if left != cd_multiply(&xx, &y).unwrap() || right != cd_multiply(&y, &xx).unwrap() {
                return Err(fail(
                    format!("{:?}, {:?}", x.coords(), y.coords()),
                    "alternativity failed",
                ));
            }
            Ok(())
        },
    ));

    checks.push(run_check(
        ALGEBRA,
        "composition",
        "octonion-associator-witness",
        seed,
        1,
        |_, _| {
            let e = |i| CompositionElement::basis_unit(AlgebraTag::O, i);
            let lhs = cd_multiply(&cd_multiply(&e(1), &e(2)).unwrap(), &e(4)).unwrap();
            let rhs = cd_multiply(&e(1), &cd_multiply(&e(2), &e(4)).unwrap()).unwrap();
            if lhs.sub(&rhs).unwrap().is_zero() {
                return Err(fail(
                    "(e1 e2) e4 vs e1 (e2 e4)".to_string(),
                    "octonions appear associative",
                ));
            }
            Ok(())
        },
    ));

    checks.push(run_check(
        ALGEBRA,
        "composition",
        "conjugation-antiautomorphism",
        seed,
        trials,
        |rng, _| {
            for tag in AlgebraTag::all() {
                let x = random_element(tag, rng, b);
                let y = random_element(tag, rng, b);
                let lhs = conjugate(&cd_multiply(&x, &y).unwrap());
                let rhs = cd_multiply(&conjugate(&y), &conjugate(&x)).unwrap();
                if lhs != rhs {
                    return Err(fail(
                        format!("{:?}, {:?}", x.coords(), y.coords()),
                        format!("conj(xy) != conj(y) conj(x) over {tag}"),
                    ));
                }
            }
            Ok(())
        },
    ));

    Section {
        label: "composition".to_string(),
        checks,
    }
}

/// Model section of the algebra suite: the cubic-space structure checks.
fn algebra_model_section(space: &CubicSpace, config: &RunConfig) -> Section {
    let seed = config.seed;
    let trials = config.trials;
    let b = config.bound;
    let cfg = sample_cfg(config);
    let label = space.kind().name().to_string();
    let model: &str = space.kind().name();
    let mut checks = Vec::new();

    checks.push(run_check(ALGEBRA, model, "basepoint-normalization", seed, 1, |_, _| {
        let c = space.basepoint();
        if space.det(c) != rat(1) {
            return Err(fail(coords_string(&c.coords), "det(c) != 1"));
        }
        if &space.sharp(c) != c {
            return Err(fail(coords_string(&c.coords), "sharp(c) != c"));
        }
        if space.trace_form(c, c).unwrap() != rat(3) {
            return Err(fail(coords_string(&c.coords), "T(c,c) != 3"));
        }
        Ok(())
    }));

    checks.push(run_check(ALGEBRA, model, "trace-gram-full-rank", seed, 1, |_, _| {
        let rank = space.gram().rank();
        if rank != space.dim() {
            return Err(fail(format!("rank {rank}"), "trace form is degenerate"));
        }
        Ok(())
    }));

    checks.push(run_check(ALGEBRA, model, "adjoint-identity", seed, trials, |rng, _| {
        let x = random_point(space, rng, b);
        if space.sharp(&space.sharp(&x)) != x.scale(&space.det(&x)) {
            return Err(fail(coords_string(&x.coords), "sharp(sharp(x)) != det(x) x"));
        }
        Ok(())
    }));

    checks.push(run_check(ALGEBRA, model, "det-of-sharp", seed, trials, |rng, _| {
        let x = random_point(space, rng, b);
        let d = space.det(&x);
        if space.det(&space.sharp(&x)) != &d * &d {
            return Err(fail(coords_string(&x.coords), "det(sharp(x)) != det(x)^2"));
        }
        Ok(())
    }));

    checks.push(run_check(
        ALGEBRA,
        model,
        "grad-sharp-compatibility",
        seed,
        trials,
        |rng, _| {
            let x = random_point(space, rng, b);
            let y = random_point(space, rng, b);
            let lhs = space.grad(&x).apply(&y);
            let rhs = space.trace_form(&space.sharp(&x), &y).unwrap() / rat(3);
            if lhs != rhs {
                return Err(fail(
                    format!("{}, {}", coords_string(&x.coords), coords_string(&y.coords)),
                    "grad(x)(y) != T(sharp(x), y)/3",
                ));
            }
            if space.grad(&x).apply(&x) != space.det(&x) {
                return Err(fail(coords_string(&x.coords), "grad(w)(w) != det(w)"));
            }
            Ok(())
        },
    ));

    checks.push(run_check(ALGEBRA, model, "trilinear-symmetry", seed, trials, |rng, _| {
        let u = random_point(space, rng, b);
        let v = random_point(space, rng, b);
        let w = random_point(space, rng, b);
        let f = space.trilinear(&u, &v, &w).unwrap();
        if f != space.trilinear(&v, &u, &w).unwrap() || f != space.trilinear(&w, &v, &u).unwrap() {
            return Err(fail("random triple".to_string(), "trilinear not symmetric"));
        }
        if space.trilinear(&u, &u, &u).unwrap() != space.det(&u) {
            return Err(fail(coords_string(&u.coords), "F(u,u,u) != det(u)"));
        }
        Ok(())
    }));

    if space.kind() == ModelKind::Segre {
        checks.push(run_check(ALGEBRA, model, "matrix-oracle", seed, trials, |rng, _| {
            let x = random_point(space, rng, b);
            let y = random_point(space, rng, b);
            let xm = M3::from_point(&x);
            let ym = M3::from_point(&y);
            if space.sharp(&x) != xm.adjugate().to_point() {
                return Err(fail(coords_string(&x.coords), "sharp != adjugate"));
            }
            if space.trace_form(&x, &y).unwrap() != xm.mul(&ym).trace() {
                return Err(fail("pair".to_string(), "trace form != tr(xy)"));
            }
            if space.u_operator(&x, &y).unwrap() != xm.mul(&ym).mul(&xm).to_point() {
                return Err(fail("pair".to_string(), "U_x(y) != x y x"));
            }
            Ok(())
        }));
    }

    checks.push(run_check(ALGEBRA, model, "sampler-variety", seed, trials, |rng, _| {
        let x = sampling::sample_x(space, rng, &cfg).map_err(|e| fail(String::new(), e.to_string()))?;
        if x.is_zero() || !space.is_on_x(&x) {
            return Err(fail(coords_string(&x.coords), "sample_x output not on X"));
        }
        Ok(())
    }));

    checks.push(run_check(ALGEBRA, model, "sampler-secant", seed, trials, |rng, _| {
        let s = sampling::sample_sec(space, rng, &cfg).map_err(|e| fail(String::new(), e.to_string()))?;
        if !space.det(&s.p).is_zero() || space.sharp(&s.p).is_zero() {
            return Err(fail(coords_string(&s.p.coords), "sample_sec output invalid"));
        }
        if !space.is_on_x(&s.x) || !space.is_on_x(&s.y) {
            return Err(fail(String::new(), "secant feet not on X"));
        }
        Ok(())
    }));

    checks.push(run_check(ALGEBRA, model, "sampler-off-secant", seed, trials, |rng, _| {
        let p = sampling::sample_off_sec(space, rng, &cfg)
            .map_err(|e| fail(String::new(), e.to_string()))?;
        if space.det(&p).is_zero() {
            return Err(fail(coords_string(&p.coords), "sample_off_sec on the cubic"));
        }
        Ok(())
    }));

    Section { label, checks }
}

/// Minimal 3x3 matrix oracle used by the Segre cross-checks.
struct M3([[Rational; 3]; 3]);

impl M3 {
    fn from_point(p: &Point) -> M3 {
        M3(core::array::from_fn(|i| {
            core::array::from_fn(|j| p.coords[3 * i + j].clone())
        }))
    }

    fn to_point(&self) -> Point {
        let mut coords = Vec::with_capacity(9);
        for row in &self.0 {
            for v in row {
                coords.push(v.clone());
            }
        }
        Point::new(ModelKind::Segre, coords)
    }

    fn mul(&self, other: &M3) -> M3 {
        M3(core::array::from_fn(|i| {
            core::array::from_fn(|j| (0..3).map(|k| &self.0[i][k] * &other.0[k][j]).sum())
        }))
    }

    fn trace(&self) -> Rational {
        &self.0[0][0] + &self.0[1][1] + &self.0[2][2]
    }

    fn adjugate(&self) -> M3 {
        let m = &self.0;
        let minor = |r: usize, c: usize| {
            let rs: Vec<usize> = (0..3).filter(|&i| i != r).collect();
            let cs: Vec<usize> = (0..3).filter(|&j| j != c).collect();
            &m[rs[0]][cs[0]] * &m[rs[1]][cs[1]] - &m[rs[0]][cs[1]] * &m[rs[1]][cs[0]]
        };
        M3(core::array::from_fn(|i| {
            core::array::from_fn(|j| {
                let sign = if (i + j) % 2 == 0 { rat(1) } else { rat(-1) };
                sign * minor(j, i)
            })
        }))
    }
}

/// Geometry checks for one model.
fn geometry_model_section(space: &CubicSpace, config: &RunConfig) -> Section {
    let seed = config.seed;
    let trials = config.trials;
    let b = config.bound;
    let cfg = sample_cfg(config);
    let model: &str = space.kind().name();
    let m_dim = space.dim() - 1;
    let mut checks = Vec::new();

    // heavier constructions run at reduced counts; at the default 200 trials
    // this gives 200 / 50 / 20 tiers
    let quarter = (trials / 4).max(1);
    let tenth = (trials / 10).max(1);

    checks.push(run_check(GEOMETRY, model, "secant-on-cubic", seed, trials, |rng, _| {
        let x = sampling::sample_x(space, rng, &cfg).map_err(|e| fail(String::new(), e.to_string()))?;
        let y = sampling::sample_x(space, rng, &cfg).map_err(|e| fail(String::new(), e.to_string()))?;
        if !space.det(&x.add(&y)).is_zero() {
            return Err(fail(
                format!("{}, {}", coords_string(&x.coords), coords_string(&y.coords)),
                "det(x + y) != 0 for x, y on X",
            ));
        }
        Ok(())
    }));

    checks.push(run_check(GEOMETRY, model, "involution", seed, trials, |rng, _| {
        let w0 = sampling::sample_off_sec(space, rng, &cfg)
            .map_err(|e| fail(String::new(), e.to_string()))?;
        match geometry::involution_check(space, &w0) {
            Ok(true) => Ok(()),
            Ok(false) => Err(fail(coords_string(&w0.coords), "involution identity failed")),
            Err(e) => Err(fail(coords_string(&w0.coords), e.to_string())),
        }
    }));

    checks.push(run_check(GEOMETRY, model, "cremona-duality", seed, trials, |rng, _| {
        // x on X and w0 off Sec with w0*(x) != 0
        for _ in 0..cfg.retries {
            let x = sampling::sample_x(space, rng, &cfg)
                .map_err(|e| fail(String::new(), e.to_string()))?;
            let w0 = sampling::sample_off_sec(space, rng, &cfg)
                .map_err(|e| fail(String::new(), e.to_string()))?;
            if space.grad(&w0).apply(&x).is_zero() {
                continue;
            }
            let l = geometry::l_map(space, &w0, &x).map_err(|e| fail(String::new(), e.to_string()))?;
            let s = geometry::second_point(space, &x, &w0)
                .map_err(|e| fail(String::new(), e.to_string()))?;
            if !space.grad(&s).proportional_to(&l) {
                return Err(fail(
                    format!("x {}, w0 {}", coords_string(&x.coords), coords_string(&w0.coords)),
                    "l_map(w0, x) not proportional to grad(second_point)",
                ));
            }
            if !geometry::dual_det(space, &l).is_zero() {
                return Err(fail(coords_string(&l.coords), "dual_det(l_map) != 0"));
            }
            return Ok(());
        }
        Err(fail(String::new(), "no transversal pair found"))
    }));

    checks.push(run_check(GEOMETRY, model, "l-matrix-rank", seed, quarter, |rng, _| {
        let w0 = sampling::sample_off_sec(space, rng, &cfg)
            .map_err(|e| fail(String::new(), e.to_string()))?;
        let lm = geometry::l_matrix(space, &w0).map_err(|e| fail(String::new(), e.to_string()))?;
        let rank = lm.rank();
        if rank != space.dim() {
            return Err(fail(coords_string(&w0.coords), format!("rank {rank}")));
        }
        Ok(())
    }));

    checks.push(run_check(GEOMETRY, model, "diamond-identity", seed, tenth, |rng, _| {
        let w0 = sampling::sample_off_sec(space, rng, &cfg)
            .map_err(|e| fail(String::new(), e.to_string()))?;
        let lmat = geometry::l_matrix(space, &w0).map_err(|e| fail(String::new(), e.to_string()))?;
        let mut diamond = Diamond::new();
        for _ in 0..10 {
            let u = random_point(space, rng, b);
            let v = random_point(space, rng, b);
            let w = random_point(space, rng, b);
            if !diamond
                .check(space, &lmat, &u, &v, &w)
                .map_err(|e| fail(String::new(), e.to_string()))?
            {
                return Err(fail(
                    coords_string(&w0.coords),
                    "no single scalar fits the dual trilinear comparison",
                ));
            }
        }
        // the identity at u = v = w = w0
        let w0s = space.grad(&w0);
        let d = space.det(&w0);
        let lambda = diamond.lambda().expect("lambda fitted").clone();
        let lhs = geometry::dual_trilinear(space, &w0s, &w0s, &w0s).unwrap() * &d * &d * &d;
        if lhs != -&lambda * &d {
            return Err(fail(coords_string(&w0.coords), "closing display identity failed"));
        }
        Ok(())
    }));

    checks.push(run_check(GEOMETRY, model, "total-transform", seed, trials, |rng, _| {
        for _ in 0..cfg.retries {
            let x = sampling::sample_x(space, rng, &cfg)
                .map_err(|e| fail(String::new(), e.to_string()))?;
            let d = random_point(space, rng, b);
            match geometry::total_transform_probe(space, &x, &d) {
                Ok(l) => {
                    if !geometry::dual_det(space, &l).is_zero() {
                        return Err(fail(coords_string(&l.coords), "limit not on dual cubic"));
                    }
                    return Ok(());
                }
                Err(GeoError::DegenerateDirection) => continue,
                Err(e) => return Err(fail(String::new(), e.to_string())),
            }
        }
        Err(fail(String::new(), "no usable probe direction"))
    }));

    checks.push(run_check(GEOMETRY, model, "entry-locus", seed, quarter, |rng, _| {
        let expected = space.variety_dim() / 2 + 2;
        for _ in 0..cfg.retries {
            let decomp = sampling::sample_sec(space, rng, &cfg)
                .map_err(|e| fail(String::new(), e.to_string()))?;
            match geometry::entry_locus(space, &decomp.p) {
                Ok(locus) => {
                    if locus.sigma_basis.len() != expected {
                        return Err(fail(
                            coords_string(&decomp.p.coords),
                            format!("sigma dimension {}", locus.sigma_basis.len()),
                        ));
                    }
                    if locus.quadric_gram.rank() != expected {
                        return Err(fail(
                            coords_string(&decomp.p.coords),
                            "entry-locus quadric is degenerate",
                        ));
                    }
                    // membership: a fresh rational quadric point lies on X
                    let q = locus
                        .quadric_point_from(space, &decomp.x, rng, &cfg)
                        .map_err(|e| fail(String::new(), e.to_string()))?;
                    if !space.is_on_x(&q) {
                        return Err(fail(coords_string(&q.coords), "quadric point off X"));
                    }
                    return Ok(());
                }
                Err(GeoError::RankDeficient { .. }) => continue,
                Err(e) => return Err(fail(String::new(), e.to_string())),
            }
        }
        Err(fail(String::new(), "no generic secant point found"))
    }));

    checks.push(run_check(GEOMETRY, model, "tangent-characterization", seed, quarter, |rng, _| {
        for _ in 0..cfg.retries {
            let decomp = sampling::sample_sec(space, rng, &cfg)
                .map_err(|e| fail(String::new(), e.to_string()))?;
            let locus = match geometry::entry_locus(space, &decomp.p) {
                Ok(l) => l,
                Err(GeoError::RankDeficient { .. }) => continue,
                Err(e) => return Err(fail(String::new(), e.to_string())),
            };
            let inside = locus
                .sigma_point_off_quadric(space, rng, &cfg)
                .map_err(|e| fail(String::new(), e.to_string()))?;
            if !geometry::tangent_char_check(space, &decomp.p, &inside) {
                return Err(fail(
                    coords_string(&inside.coords),
                    "point of Sigma_P - X with a different tangent hyperplane",
                ));
            }
            // a fresh secant point outside Sigma_P must have a different one
            let other = sampling::sample_sec(space, rng, &cfg)
                .map_err(|e| fail(String::new(), e.to_string()))?;
            let span: Vec<Vec<Rational>> = locus
                .sigma_basis
                .iter()
                .map(|p| p.coords.clone())
                .collect();
            if linalg::in_span(&span, &other.p.coords) {
                continue;
            }
            if geometry::tangent_char_check(space, &decomp.p, &other.p) {
                return Err(fail(
                    coords_string(&other.p.coords),
                    "point off Sigma_P sharing the tangent hyperplane",
                ));
            }
            return Ok(());
        }
        Err(fail(String::new(), "no generic configuration found"))
    }));

    checks.push(run_check(GEOMETRY, model, "companion-point", seed, tenth, |rng, _| {
        for _ in 0..cfg.retries {
            let decomp = sampling::sample_sec(space, rng, &cfg)
                .map_err(|e| fail(String::new(), e.to_string()))?;
            let locus = match geometry::entry_locus(space, &decomp.p) {
                Ok(l) => l,
                Err(GeoError::RankDeficient { .. }) => continue,
                Err(e) => return Err(fail(String::new(), e.to_string())),
            };
            let w0 = sampling::sample_off_sec(space, rng, &cfg)
                .map_err(|e| fail(String::new(), e.to_string()))?;
            match geometry::companion_point(space, &locus, &decomp.x, &w0, rng, &cfg) {
                Ok(_) => return Ok(()),
                Err(GeoError::TangentDegenerate) => continue,
                Err(e) => return Err(fail(coords_string(&decomp.p.coords), e.to_string())),
            }
        }
        Err(fail(String::new(), "no transversal w0 found"))
    }));

    checks.push(run_check(GEOMETRY, model, "homogeneity", seed, tenth, |rng, _| {
        let x = sampling::sample_x(space, rng, &cfg).map_err(|e| fail(String::new(), e.to_string()))?;
        let x2 = sampling::sample_x(space, rng, &cfg).map_err(|e| fail(String::new(), e.to_string()))?;
        geometry::homogeneity_map(space, &x, &x2, rng, &cfg)
            .map(|_| ())
            .map_err(|e| {
                fail(
                    format!("x {}, x' {}", coords_string(&x.coords), coords_string(&x2.coords)),
                    e.to_string(),
                )
            })
    }));

    checks.push(run_check(GEOMETRY, model, "secant-transitivity-rank", seed, tenth, |rng, _| {
        let decomp = sampling::sample_sec(space, rng, &cfg)
            .map_err(|e| fail(String::new(), e.to_string()))?;
        let w0 = geometry::good_w0_for(space, &decomp.p, rng, &cfg)
            .map_err(|e| fail(String::new(), e.to_string()))?;
        let (rank, inter) = geometry::sec_transitivity_rank(space, &decomp.p, &w0)
            .map_err(|e| fail(String::new(), e.to_string()))?;
        if rank < m_dim || inter != 0 {
            return Err(fail(
                coords_string(&decomp.p.coords),
                format!("rank {rank}, kernel intersection {inter}"),
            ));
        }
        Ok(())
    }));

    checks.push(run_check(GEOMETRY, model, "gram-invertibility", seed, quarter, |rng, _| {
        let omega = sampling::sample_off_sec(space, rng, &cfg)
            .map_err(|e| fail(String::new(), e.to_string()))?;
        if !geometry::gram_invertibility_check(space, &omega) {
            return Err(fail(coords_string(&omega.coords), "F(omega, ., .) degenerate"));
        }
        Ok(())
    }));

    let kind = space.kind();
    checks.push(run_check(GEOMETRY, model, "terracini-dimension", seed, (trials / 50).max(1), |rng, _| {
        let expected = 3 * kind.variety_dim() / 2 + 2;
        let got = terracini::terracini_dim(Family::Model(kind), rng, &cfg)
            .map_err(|e| fail(String::new(), e.to_string()))?;
        if got != expected {
            return Err(fail(format!("dim {got}"), format!("expected {expected}")));
        }
        Ok(())
    }));

    Section {
        label: model.to_string(),
        checks,
    }
}

pub fn parse_models(selector: &str) -> Result<Vec<ModelKind>, String> {
    match selector {
        "all" => Ok(ModelKind::all().to_vec()),
        "veronese" => Ok(vec![ModelKind::Veronese]),
        "segre" => Ok(vec![ModelKind::Segre]),
        "pfaffian" => Ok(vec![ModelKind::Pfaffian]),
        "exceptional" => Ok(vec![ModelKind::Exceptional]),
        other => Err(format!(
            "unknown model '{other}' (expected all, veronese, segre, pfaffian or exceptional)"
        )),
    }
}

pub fn verify_algebra(config: &RunConfig, models: &[ModelKind]) -> VerificationReport {
    let mut sections = vec![composition_section(config)];
    for &kind in models {
        let space = CubicSpace::new(kind);
        sections.push(algebra_model_section(&space, config));
    }
    VerificationReport {
        suite: ALGEBRA,
        config: config.clone(),
        sections,
    }
}

pub fn verify_geometry(config: &RunConfig, models: &[ModelKind]) -> VerificationReport {
    let mut sections = Vec::new();
    for &kind in models {
        let space = CubicSpace::new(kind);
        sections.push(geometry_model_section(&space, config));
    }
    VerificationReport {
        suite: GEOMETRY,
        config: config.clone(),
        sections,
    }
}
