//! Verification suites for the structural laws of twisted coHom objects.
//!
//! Every suite checks statements degree-wise up to the shared cutoff, so a
//! pass means "verified to degree D". Random twists are diagonal σ-primitives
//! drawn from a seeded generator and kept only when admissible.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cohom::{
    check_in_omega, coevaluation_check, cocomposition, counit, factorize, gauge_equivalence_check, second_admissible, CohomObject, Diagram,
};
use crate::dsl::print_relation;
use crate::error::{Error, Result};
use crate::exactla::{Field, Matrix, Subspace};
use crate::products::{black_product, koszul_dual, require_quadratic, triangle, white_product_explicit};
use crate::qspace::{GradedMap, QuantumSpace};
use crate::report::Report;
use crate::tensorspace::{kron, power};
use crate::twist::{check_admissible, twist_space, Primitive};

pub const DEFAULT_SEED: u64 = 0x0c0_4017;
pub const DEFAULT_SAMPLES: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Theorem1,
    Theorem2,
    Theorem4,
    Prop3,
    Corollary1,
    Corollary2,
    All,
}

impl Suite {
    pub const LAWS: [Suite; 6] = [Suite::Theorem1, Suite::Theorem2, Suite::Theorem4, Suite::Prop3, Suite::Corollary1, Suite::Corollary2];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Theorem1 => "theorem1",
            Suite::Theorem2 => "theorem2",
            Suite::Theorem4 => "theorem4",
            Suite::Prop3 => "prop3",
            Suite::Corollary1 => "corollary1",
            Suite::Corollary2 => "corollary2",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::LAWS
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown suite `{s}`; expected one of theorem1, theorem2, theorem4, prop3, corollary1, corollary2, all")))
    }
}

/// Inputs shared by all suites. `b` and `c` default to `a`.
#[derive(Clone, Debug)]
pub struct SuiteConfig<F: Field> {
    pub a: QuantumSpace<F>,
    pub b: QuantumSpace<F>,
    pub c: QuantumSpace<F>,
    pub sigma_a: Option<Matrix<F>>,
    pub sigma_b: Option<Matrix<F>>,
    pub sigma_c: Option<Matrix<F>>,
    pub seed: u64,
    pub samples: usize,
}

impl<F: Field> SuiteConfig<F> {
    pub fn new(a: QuantumSpace<F>) -> Self {
        SuiteConfig { b: a.clone(), c: a.clone(), a, sigma_a: None, sigma_b: None, sigma_c: None, seed: DEFAULT_SEED, samples: DEFAULT_SAMPLES }
    }

    fn cutoff(&self) -> usize {
        self.a.cutoff().min(self.b.cutoff()).min(self.c.cutoff())
    }

    fn spaces(&self) -> [QuantumSpace<F>; 3] {
        let d = self.cutoff();
        [self.a.truncate(d), self.b.truncate(d), self.c.truncate(d)]
    }
}

pub fn run<F: Field>(suite: Suite, cfg: &SuiteConfig<F>) -> Report {
    let start = Instant::now();
    let mut report = Report::new(format!("verify {suite}"));
    match suite {
        Suite::All => {
            for s in Suite::LAWS {
                let r = run(s, cfg);
                report.checks.extend(r.checks);
            }
        }
        Suite::Theorem1 => theorem1(cfg, &mut report),
        Suite::Theorem2 => theorem2(cfg, &mut report),
        Suite::Theorem4 => theorem4(cfg, &mut report),
        Suite::Prop3 => prop3(cfg, &mut report),
        Suite::Corollary1 => corollary1(cfg, &mut report),
        Suite::Corollary2 => corollary2(cfg, &mut report),
    }
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    report
}

fn suite_rng<F: Field>(cfg: &SuiteConfig<F>, suite: Suite) -> ChaCha8Rng {
    let salt = suite.name().bytes().fold(0u64, |h, b| h.wrapping_mul(131).wrapping_add(b as u64));
    ChaCha8Rng::seed_from_u64(cfg.seed ^ salt)
}

/// A random nonzero scalar; over `Q(q)` it may carry a power of `q`.
fn random_unit<F: Field>(rng: &mut ChaCha8Rng) -> F {
    let mut c = F::from_i64(rng.gen_range(1..=5) * if rng.gen_bool(0.25) { -1 } else { 1 });
    if let Some(q) = F::parameter() {
        if let Some(p) = q.pow_i(rng.gen_range(-1..=1)) {
            c = c.mul_ref(&p);
        }
    }
    c
}

pub fn random_diagonal<F: Field>(n: usize, rng: &mut ChaCha8Rng) -> Matrix<F> {
    let entries: Vec<F> = (0..n).map(|_| random_unit(rng)).collect();
    Matrix::diagonal(&entries)
}

/// A σ-primitive for `space`, drawn until admissible (identity if none is found).
fn random_primitive<F: Field>(space: &QuantumSpace<F>, rng: &mut ChaCha8Rng) -> Result<Primitive<F>> {
    for _ in 0..20 {
        let theta = Primitive::from_sigma(&random_diagonal(space.n(), rng), space.cutoff())?;
        if check_admissible(space, &theta)?.second() {
            return Ok(theta);
        }
    }
    Ok(Primitive::identity(space.n(), space.cutoff()))
}

fn is_diagonal<F: Field>(m: &Matrix<F>) -> bool {
    (0..m.rows()).all(|i| (0..m.cols()).all(|j| i == j || m.get(i, j).is_zero()))
}

/// One twist per space: sample 0 is untwisted, later samples use the given σ's or random ones.
struct TwistSample<F: Field> {
    thetas: [Primitive<F>; 3],
    diagonal: bool,
}

fn samples<F: Field>(cfg: &SuiteConfig<F>, rng: &mut ChaCha8Rng) -> Result<Vec<TwistSample<F>>> {
    let spaces = cfg.spaces();
    let d = cfg.cutoff();
    let given = [&cfg.sigma_a, &cfg.sigma_b, &cfg.sigma_c];
    let mut out = vec![TwistSample { thetas: [0, 1, 2].map(|k| Primitive::identity(spaces[k].n(), d)), diagonal: true }];
    let all_given = given.iter().all(|s| s.is_some());
    let count = if all_given { 2 } else { cfg.samples.max(1) };
    for _ in 1..count {
        let mut thetas = Vec::with_capacity(3);
        let mut diagonal = true;
        for k in 0..3 {
            let theta = match given[k] {
                Some(s) => {
                    diagonal &= is_diagonal(s);
                    Primitive::from_sigma(s, d)?
                }
                None => random_primitive(&spaces[k], rng)?,
            };
            thetas.push(theta);
        }
        let thetas: [Primitive<F>; 3] = thetas.try_into().expect("three primitives");
        out.push(TwistSample { thetas, diagonal });
    }
    Ok(out)
}

fn range(d: usize) -> (usize, usize) {
    (0, d)
}

/// Record the outcome of a fallible check.
fn record(report: &mut Report, name: String, degrees: (usize, usize), outcome: Result<(bool, Option<String>, String)>) {
    match outcome {
        Ok((true, _, detail)) => report.pass(name, degrees, detail),
        Ok((false, witness, detail)) => report.fail(name, degrees, witness, detail),
        Err(e) => report.fail(name, degrees, None, format!("error: {e}")),
    }
}

fn verdict(ok: bool, detail: impl Into<String>) -> Result<(bool, Option<String>, String)> {
    Ok((ok, None, detail.into()))
}

fn first_difference_verdict<F: Field>(x: &QuantumSpace<F>, y: &QuantumSpace<F>, what: &str) -> Result<(bool, Option<String>, String)> {
    Ok(match x.first_difference(y)? {
        None => (true, None, format!("{what}: kernels agree")),
        Some(d) => (false, None, format!("{what}: kernels differ in degree {d}")),
    })
}

fn theorem2<F: Field>(cfg: &SuiteConfig<F>, report: &mut Report) {
    let mut rng = suite_rng(cfg, Suite::Theorem2);
    let [a, b, _] = cfg.spaces();
    let d = cfg.cutoff();
    let samples = match samples(cfg, &mut rng) {
        Ok(s) => s,
        Err(e) => return report.fail("theorem2/setup", range(d), None, e.to_string()),
    };
    for (k, s) in samples.iter().enumerate() {
        let [ta, tb, _] = &s.thetas;
        let tag = format!("theorem2/s{k}");
        let built = CohomObject::build(&b, &a, ta, tb);
        let c = match built {
            Ok(c) => {
                report.pass(format!("{tag}/two-routes"), range(d), "B_θ ▷ A_θ = (B ▷ A)_Θ");
                c
            }
            Err(e) => {
                report.fail(format!("{tag}/two-routes"), range(d), None, e.to_string());
                continue;
            }
        };
        record(
            report,
            format!("{tag}/coevaluation"),
            (2, d),
            coevaluation_check(&c).map(|r| match r.delta_failure {
                None => (true, None, "δ_r(K_A,r) ⊆ K(hom ∘ B)_r".into()),
                Some(deg) => (false, r.witness.map(|w| print_relation(&w, deg, a.labels())), format!("δ fails in degree {deg}")),
            }),
        );
        record(
            report,
            format!("{tag}/untwisting"),
            range(d),
            coevaluation_check(&c).map(|r| match r.untwist_failure {
                None => (true, None, "Ω^-1 K(hom ∘ B) = K((B ▷ A) ∘ B)".into()),
                Some(deg) => (false, None, format!("differs in degree {deg}")),
            }),
        );
        record(
            report,
            format!("{tag}/omega-coevaluation"),
            (2, d),
            check_in_omega(&c.coevaluation_diagram(), ta, tb).map(|r| omega_outcome(&r, a.labels())),
        );
        record(
            report,
            format!("{tag}/factorize-self"),
            range(d),
            factorize(&c, &c.coevaluation_diagram()).map(|m| (m.f1.is_identity(), None, "factorization of δ is the identity".into())),
        );
        if s.diagonal && c.space.n() >= 1 && d >= 2 {
            record(report, format!("{tag}/factorize-quotient"), range(d), quotient_factorization(&c));
        }
        record(report, format!("{tag}/free-target-rejected"), (2, d), free_target_rejected(&c));
        record(
            report,
            format!("{tag}/second-admissible"),
            range(d),
            second_admissible(&b, &a, ta, tb).map(|r| (r.ok(), None, format!("operational: {r:?}"))),
        );
        let unit = QuantumSpace::unit(d);
        let id1 = Primitive::identity(1, d);
        record(
            report,
            format!("{tag}/hom-unit-source"),
            range(d),
            CohomObject::build(&unit, &a, ta, &id1).and_then(|h| first_difference_verdict(&h.space, &twist_space(&a, ta)?, "hom[K, A] vs A_θ")),
        );
    }
    let unit = QuantumSpace::<F>::unit(d);
    let id1 = Primitive::identity(1, d);
    record(
        report,
        "theorem2/hom-unit-unit".into(),
        range(d),
        CohomObject::build(&unit, &unit, &id1, &id1).and_then(|h| first_difference_verdict(&h.space, &unit, "hom[K, K] vs K")),
    );
}

/// Quotient of `hom^Ω` by one monomial relation; the factorization must be the projection.
fn quotient_factorization<F: Field>(c: &CohomObject<F>) -> Result<(bool, Option<String>, String)> {
    let n = c.space.n();
    let z = if c.b.n() > 1 { n / c.b.n() } else { 0 };
    let mut rel = vec![F::zero(); n * n];
    rel[z * n + z] = F::one();
    let h = c.space.quotient(&[(2, rel)])?;
    let d = Diagram::new(c.a.clone(), c.b.clone(), Arc::new(h), Matrix::identity(n))?;
    let map = factorize(c, &d)?;
    let projection = map.f1.is_identity();
    let same = d.functor()?.space.same_filtration(&d.h_space)?;
    let delta = c.coevaluation_matrix();
    let lhs = kron(&[map.f1.clone(), Matrix::identity(c.b.n())]).mul(&delta)?;
    let triangle_ok = lhs == d.phi1();
    Ok((projection && same && triangle_ok, None, format!("projection {projection}, carrier {same}, (f ∘ id) δ = φ {triangle_ok}")))
}

fn free_target_rejected<F: Field>(c: &CohomObject<F>) -> Result<(bool, Option<String>, String)> {
    let n = c.space.n();
    if c.a.generator_degrees()?.is_empty() {
        return verdict(true, "A has no relations; nothing to reject");
    }
    let free = QuantumSpace::free_labeled(c.space.labels().to_vec(), c.cutoff());
    let d = Diagram::new(c.a.clone(), c.b.clone(), Arc::new(free), Matrix::identity(n))?;
    match factorize(c, &d) {
        Err(Error::NotInCategory(why)) => verdict(true, format!("rejected: {why}")),
        Err(e) => Err(e),
        Ok(_) => verdict(false, "free target was accepted"),
    }
}

fn omega_outcome<F: Field>(r: &crate::cohom::OmegaReport<F>, labels: &[String]) -> (bool, Option<String>, String) {
    let witness = r.witness.as_ref().map(|w| print_relation(w, r.relation_failure.unwrap_or(2), labels));
    let detail = format!(
        "verified to degree {}; transport defined {}, identity {}, admissible failure {:?}, relation failure {:?}",
        r.checked_to, r.transport_defined, r.transport_is_identity, r.admissible_failure, r.relation_failure
    );
    (r.ok, witness, detail)
}

fn theorem4<F: Field>(cfg: &SuiteConfig<F>, report: &mut Report) {
    let mut rng = suite_rng(cfg, Suite::Theorem4);
    let [a, _, _] = cfg.spaces();
    let d = cfg.cutoff();
    let samples = match samples(cfg, &mut rng) {
        Ok(s) => s,
        Err(e) => return report.fail("theorem4/setup", range(d), None, e.to_string()),
    };
    for (k, s) in samples.iter().enumerate() {
        let ta = &s.thetas[0];
        let tag = format!("theorem4/s{k}");
        let e = match CohomObject::build(&a, &a, ta, ta) {
            Ok(e) => e,
            Err(err) => {
                report.fail(format!("{tag}/build"), range(d), None, err.to_string());
                continue;
            }
        };
        let eps = counit(&e);
        record(report, format!("{tag}/counit-morphism"), (2, d), eps.as_ref().map(|_| (true, None, "ε passes check_morphism".into())).map_err(Clone::clone));
        record(
            report,
            format!("{tag}/counit-kills-relations"),
            (2, d),
            eps.clone().and_then(|m| m.check_morphism_exhaustive()).map(|r| {
                (r.ok, r.witness.map(|w| print_relation(&w, r.failing_degree.unwrap_or(2), e.space.labels())), "ε^{⊗r}(K_r) = 0 on every basis vector".into())
            }),
        );
        record(report, format!("{tag}/counit-epimorphic"), range(d), eps.clone().and_then(|m| epimorphic(&m)));
        let delta = cocomposition(&e, &e);
        record(report, format!("{tag}/comultiplication-morphism"), (2, d), delta.as_ref().map(|_| (true, None, "Δ passes check_morphism".into())).map_err(Clone::clone));
        let (Ok(eps), Ok((_, delta))) = (eps, delta) else { continue };
        let n2 = e.space.n();
        let id = Matrix::identity(n2);
        record(
            report,
            format!("{tag}/counit-laws"),
            (1, 1),
            (|| {
                let left = kron(&[eps.f1.clone(), id.clone()]).mul(&delta.f1)?;
                let right = kron(&[id.clone(), eps.f1.clone()]).mul(&delta.f1)?;
                verdict(left.is_identity() && right.is_identity(), "(ε ⊗ id)Δ = id = (id ⊗ ε)Δ on generators")
            })(),
        );
        record(
            report,
            format!("{tag}/coassociativity"),
            (1, 1),
            (|| {
                let lhs = kron(&[delta.f1.clone(), id.clone()]).mul(&delta.f1)?;
                let rhs = kron(&[id.clone(), delta.f1.clone()]).mul(&delta.f1)?;
                verdict(lhs == rhs, "(Δ ⊗ id)Δ = (id ⊗ Δ)Δ on generators")
            })(),
        );
        let top = d.min(3);
        record(report, format!("{tag}/comultiplication-monomorphic"), (0, top), monomorphic(&delta, top));
    }
}

/// Images of the standard basis words of `A_d` (free columns of `K_d`) in the target quotient.
fn image_rank<F: Field>(map: &GradedMap<F>, deg: usize) -> Result<(usize, usize)> {
    let k = map.source.ideal_component(deg)?;
    let len = power(map.source.n(), deg);
    let mut rows = Vec::new();
    for w in k.free_columns() {
        let mut e = vec![F::zero(); len];
        e[w] = F::one();
        rows.push(map.target.quotient_coords(deg, &map.apply(deg, &e)?)?);
    }
    let dim_t = map.target.dim(deg);
    Ok((Subspace::from_rows(dim_t, rows)?.dim(), dim_t))
}

fn epimorphic<F: Field>(map: &GradedMap<F>) -> Result<(bool, Option<String>, String)> {
    for deg in 0..=map.cutoff() {
        let (rank, dim_t) = image_rank(map, deg)?;
        if rank != dim_t {
            return verdict(false, format!("not onto in degree {deg}"));
        }
    }
    verdict(true, "onto in every checked degree")
}

fn monomorphic<F: Field>(map: &GradedMap<F>, top: usize) -> Result<(bool, Option<String>, String)> {
    for deg in 0..=top {
        let (rank, _) = image_rank(map, deg)?;
        if rank != map.source.dim(deg) {
            return verdict(false, format!("kernel in degree {deg}"));
        }
    }
    verdict(true, format!("injective to degree {top}"))
}

fn theorem1<F: Field>(cfg: &SuiteConfig<F>, report: &mut Report) {
    let mut rng = suite_rng(cfg, Suite::Theorem1);
    let [a, b, c] = cfg.spaces();
    let d = cfg.cutoff();
    let samples = match samples(cfg, &mut rng) {
        Ok(s) => s,
        Err(e) => return report.fail("theorem1/setup", range(d), None, e.to_string()),
    };
    for (k, s) in samples.iter().enumerate() {
        let [ta, tb, tc] = &s.thetas;
        let tag = format!("theorem1/s{k}");
        let built = CohomObject::build(&b, &a, ta, tb).and_then(|ab| Ok((ab, CohomObject::build(&c, &b, tb, tc)?)));
        let (ab, bc) = match built {
            Ok(x) => x,
            Err(e) => {
                report.fail(format!("{tag}/build"), range(d), None, e.to_string());
                continue;
            }
        };
        let d1 = ab.coevaluation_diagram();
        let d2 = bc.coevaluation_diagram();
        record(
            report,
            format!("{tag}/closure"),
            (2, d),
            d1.compose(&d2).and_then(|dc| check_in_omega(&dc, ta, tc)).map(|r| omega_outcome(&r, a.labels())),
        );
        let unit_a = Diagram::unit(d1.a.clone());
        let unit_b = Diagram::unit(d1.b.clone());
        record(report, format!("{tag}/unit-left"), range(d), unit_a.compose(&d1).and_then(|x| same_diagram(&x, &d1)));
        record(report, format!("{tag}/unit-right"), range(d), d1.compose(&unit_b).and_then(|x| same_diagram(&x, &d1)));
        record(
            report,
            format!("{tag}/unit-omega-identity"),
            range(d),
            check_in_omega(&unit_a, ta, ta).map(|r| (r.ok && r.transport_is_identity, None, format!("{r:?}"))),
        );
    }
}

/// Equal tables and equal carriers; the unit's generator `e` reindexes trivially.
fn same_diagram<F: Field>(x: &Diagram<F>, y: &Diagram<F>) -> Result<(bool, Option<String>, String)> {
    if x.pi != y.pi {
        return verdict(false, "tables differ");
    }
    first_difference_verdict(&x.h_space, &y.h_space, "carrier")
}

fn prop3<F: Field>(cfg: &SuiteConfig<F>, report: &mut Report) {
    let mut rng = suite_rng(cfg, Suite::Prop3);
    let [a, b, _] = cfg.spaces();
    let d = cfg.cutoff();
    let samples = match samples(cfg, &mut rng) {
        Ok(s) => s,
        Err(e) => return report.fail("prop3/setup", range(d), None, e.to_string()),
    };
    let unit = Arc::new(QuantumSpace::<F>::unit(d));
    let id1 = Primitive::identity(1, d);
    for (k, s) in samples.iter().enumerate() {
        let ta = &s.thetas[0];
        let tag = format!("prop3/s{k}");
        let outcome = (|| {
            let hk = CohomObject::build(&unit, &a, ta, &id1)?;
            let d1 = hk.coevaluation_diagram();
            // 𝒦 -> b ∘ 𝒦, e ↦ (first generator of b) ⊗ e
            let mut pi = Matrix::zeros(b.n(), 1);
            pi.set(0, 0, F::one());
            let d2 = Diagram::new(unit.clone(), unit.clone(), Arc::new(b.clone()), pi)?;
            let comp = d1.compose(&d2)?;
            let explicit = white_product_explicit(&d1.h_space, &d2.h_space)?;
            let carrier = first_difference_verdict(&comp.h_space, &explicit, "P(d1 ∘ d2) vs P(d1) ∘ P(d2)")?;
            let omega = check_in_omega(&comp, ta, &id1)?;
            Ok((carrier.0 && omega.ok, None, format!("{}; composite in Ω: {}", carrier.2, omega.ok)))
        })();
        record(report, format!("{tag}/products"), range(d), outcome);
    }
    let unit_diagram = Diagram::unit(Arc::new(a.clone()));
    record(report, "prop3/units".into(), range(d), first_difference_verdict(&unit_diagram.h_space, &unit, "P<ℓ_A, K> vs K"));
}

fn corollary1<F: Field>(cfg: &SuiteConfig<F>, report: &mut Report) {
    let mut rng = suite_rng(cfg, Suite::Corollary1);
    let [a, b, _] = cfg.spaces();
    let d = cfg.cutoff();
    let samples = match samples(cfg, &mut rng) {
        Ok(s) => s,
        Err(e) => return report.fail("corollary1/setup", range(d), None, e.to_string()),
    };
    let plain = triangle(&b, &a).map(|t| t.hilbert());
    for (k, s) in samples.iter().enumerate() {
        let [ta, tb, _] = &s.thetas;
        let tag = format!("corollary1/s{k}");
        record(
            report,
            format!("{tag}/gauge"),
            range(d),
            gauge_equivalence_check(&b, &a, ta, tb).map(|r| match r {
                None => (true, None, "(B ▷ A)_Θ = hom^Ω[B, A]".into()),
                Some(deg) => (false, None, format!("differ in degree {deg}")),
            }),
        );
        record(
            report,
            format!("{tag}/hilbert"),
            range(d),
            CohomObject::build(&b, &a, ta, tb).and_then(|c| {
                let h = c.space.hilbert();
                let p = plain.clone()?;
                verdict(h == p, format!("{h:?} vs untwisted {p:?}"))
            }),
        );
    }
}

/// Quadratic space on `n` generators with one or two random relations.
pub fn random_quadratic<F: Field>(n: usize, cutoff: usize, rng: &mut ChaCha8Rng) -> Result<QuantumSpace<F>> {
    let count = rng.gen_range(1..=2);
    let rels: Vec<(usize, Vec<F>)> = (0..count)
        .map(|_| {
            let mut v: Vec<F> = (0..n * n).map(|_| F::from_i64(rng.gen_range(-2..=2))).collect();
            if v.iter().all(Field::is_zero) {
                v[1] = F::one();
            }
            (2, v)
        })
        .collect();
    let labels = (1..=n).map(|i| format!("x{i}")).collect();
    QuantumSpace::from_presentation(labels, &rels, cutoff)
}

fn corollary2_pair<F: Field>(b: &QuantumSpace<F>, a: &QuantumSpace<F>) -> Result<(bool, Option<String>, String)> {
    let t = triangle(b, a)?;
    let k = black_product(&koszul_dual(b)?, a)?;
    first_difference_verdict(&t, &k, "B ▷ A vs B^! • A")
}

fn corollary2<F: Field>(cfg: &SuiteConfig<F>, report: &mut Report) {
    let mut rng = suite_rng(cfg, Suite::Corollary2);
    let [a, b, _] = cfg.spaces();
    let d = cfg.cutoff();
    if require_quadratic(&a).is_ok() && require_quadratic(&b).is_ok() {
        record(report, "corollary2/input".into(), range(d), corollary2_pair(&b, &a));
        record(
            report,
            "corollary2/double-dual".into(),
            range(d),
            koszul_dual(&a).and_then(|x| koszul_dual(&x)).and_then(|x| first_difference_verdict(&x, &a, "A^!! vs A")),
        );
    } else {
        report.pass("corollary2/input", range(d), "inputs are not quadratic; statement does not apply");
    }
    for k in 0..cfg.samples.max(1) {
        let outcome = (|| {
            let x = random_quadratic::<F>(2, d, &mut rng)?;
            let y = random_quadratic::<F>(2, d, &mut rng)?;
            corollary2_pair(&y, &x)
        })();
        record(report, format!("corollary2/random{k}"), range(d), outcome);
    }
}
