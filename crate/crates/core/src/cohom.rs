//! Diagrams `A -> H ∘ B`, Ω-membership, and the twisted coHom objects.
//!
//! A diagram is stored through its table `h_i^j ∈ H₁`: the column `z(i, j) =
//! j * n_A + i` of `pi` holds the coordinates of `h_i^j`, so that
//! `φ(a_i) = Σ_j h_i^j ⊗ b_j`.

use std::sync::Arc;

use crate::dsl::print_relation;
use crate::error::{Error, Result};
use crate::exactla::{Field, Matrix, Subspace};
use crate::products::{triangle, white_product, white_product_explicit};
use crate::qspace::{closure_rows, GradedMap, MorphismReport, QuantumSpace};
use crate::tensorspace::{kron_apply_transpose, power, power_apply, tensor_vec, Interleaver};
use crate::twist::{build_omega, check_admissible, hom_primitive, twist_space, Admissibility, Primitive};

fn same_space<F: Field>(x: &Arc<QuantumSpace<F>>, y: &Arc<QuantumSpace<F>>) -> Result<bool> {
    Ok(Arc::ptr_eq(x, y) || (x.n() == y.n() && x.cutoff() == y.cutoff() && x.same_filtration(y)?))
}

/// Whether every row lies in `space`, tested against its annihilator.
fn rows_inside<F: Field>(space: &Subspace<F>, rows: &[Vec<F>]) -> bool {
    let ann = space.quotient_rows();
    rows.iter().all(|r| {
        ann.iter().all(|c| {
            let mut acc = F::zero();
            for (x, y) in r.iter().zip(c) {
                if !x.is_zero() && !y.is_zero() {
                    acc = acc.add_ref(&x.mul_ref(y));
                }
            }
            acc.is_zero()
        })
    })
}

fn witness_text<F: Field>(space: &QuantumSpace<F>, degree: usize, v: &[F]) -> String {
    print_relation(v, degree, space.labels())
}

#[derive(Clone, Debug)]
pub struct Diagram<F: Field> {
    pub a: Arc<QuantumSpace<F>>,
    pub b: Arc<QuantumSpace<F>>,
    pub h_space: Arc<QuantumSpace<F>>,
    /// `n_H × (n_B n_A)`; column `j * n_A + i` is `h_i^j`.
    pub pi: Matrix<F>,
}

/// The carrier generated by a diagram together with the coordinates `π'` of
/// each `h_i^j` in the chosen basis of its generator space.
#[derive(Clone, Debug)]
pub struct Functor<F: Field> {
    pub space: QuantumSpace<F>,
    pub pi_prime: Matrix<F>,
}

impl<F: Field> Diagram<F> {
    pub fn new(a: Arc<QuantumSpace<F>>, b: Arc<QuantumSpace<F>>, h_space: Arc<QuantumSpace<F>>, pi: Matrix<F>) -> Result<Self> {
        if pi.rows() != h_space.n() || pi.cols() != a.n() * b.n() {
            return Err(Error::DimensionMismatch { expected: h_space.n() * a.n() * b.n(), found: pi.rows() * pi.cols() });
        }
        Ok(Diagram { a, b, h_space, pi })
    }

    pub fn z(&self, i: usize, j: usize) -> usize {
        j * self.a.n() + i
    }

    /// Coordinates of `h_i^j` in `H₁`.
    pub fn h(&self, i: usize, j: usize) -> Vec<F> {
        self.pi.column(self.z(i, j))
    }

    /// `φ₁: A₁ -> H₁ ⊗ B₁`, the pair letter `(x, j)` having index `x * n_B + j`.
    pub fn phi1(&self) -> Matrix<F> {
        let (na, nb, nh) = (self.a.n(), self.b.n(), self.h_space.n());
        let mut m = Matrix::zeros(nh * nb, na);
        for i in 0..na {
            for j in 0..nb {
                for x in 0..nh {
                    let c = self.pi.get(x, self.z(i, j));
                    if !c.is_zero() {
                        m.set(x * nb + j, i, c.clone());
                    }
                }
            }
        }
        m
    }

    /// The untwisted condition: `φ` is a morphism `A -> H ∘ B`.
    pub fn plain_morphism(&self) -> Result<MorphismReport<F>> {
        let target = white_product(&self.h_space.truncate(self.cutoff()), &self.b.truncate(self.cutoff()))?;
        GradedMap::new(Arc::new(self.a.truncate(self.cutoff())), Arc::new(target), self.phi1())?.check_morphism()
    }

    pub fn cutoff(&self) -> usize {
        self.a.cutoff().min(self.b.cutoff()).min(self.h_space.cutoff())
    }

    /// `⟨ℓ_A, 𝒦⟩`: `a_i ↦ e ⊗ a_i`.
    pub fn unit(a: Arc<QuantumSpace<F>>) -> Self {
        let n = a.n();
        let mut pi = Matrix::zeros(1, n * n);
        for i in 0..n {
            pi.set(0, i * n + i, F::one());
        }
        let k = Arc::new(QuantumSpace::unit(a.cutoff()));
        Diagram { b: a.clone(), a, h_space: k, pi }
    }

    /// `self: A -> H ∘ B` followed by `next: B -> G ∘ C`, giving `A -> (H ∘ G) ∘ C`.
    pub fn compose(&self, next: &Diagram<F>) -> Result<Diagram<F>> {
        if !same_space(&self.b, &next.a)? {
            return Err(Error::EndpointMismatch(format!("target {:?} is not source {:?}", self.b.labels(), next.a.labels())));
        }
        let cutoff = self.h_space.cutoff().min(next.h_space.cutoff());
        let h = white_product(&self.h_space.truncate(cutoff), &next.h_space.truncate(cutoff))?;
        let (na, nb, nc) = (self.a.n(), self.b.n(), next.b.n());
        let mut pi = Matrix::zeros(h.n(), na * nc);
        for i in 0..na {
            for k in 0..nc {
                let mut acc = vec![F::zero(); h.n()];
                for j in 0..nb {
                    let t = tensor_vec(&self.pi.column(j * na + i), &next.pi.column(k * nb + j));
                    for (s, x) in acc.iter_mut().zip(t) {
                        if !x.is_zero() {
                            *s = s.add_ref(&x);
                        }
                    }
                }
                for (x, c) in acc.into_iter().enumerate() {
                    pi.set(x, k * na + i, c);
                }
            }
        }
        Ok(Diagram { a: self.a.clone(), b: next.b.clone(), h_space: Arc::new(h), pi })
    }

    /// `𝔉(d)`: the subalgebra of `H` generated by the `h_i^j`.
    pub fn functor(&self) -> Result<Functor<F>> {
        let span = Subspace::from_rows(self.h_space.n(), (0..self.pi.cols()).map(|c| self.pi.column(c)))?;
        let space = self.h_space.generated(&span)?;
        let pivots = span.pivots();
        let pi_prime = Matrix::from_fn(pivots.len(), self.pi.cols(), |k, c| self.pi.get(pivots[k], c).clone());
        Ok(Functor { space, pi_prime })
    }
}

pub fn functor_f<F: Field>(d: &Diagram<F>) -> Result<QuantumSpace<F>> {
    Ok(d.functor()?.space)
}

/// `Σ_J π'^{⊗r} Θ_r(interleave(b^J ⊗ x)) ⊗ b_J`, the twisted extension of a diagram in degree `r`.
fn twisted_image<F: Field>(r: usize, x: &[F], theta: &Primitive<F>, pi_prime: Option<&Matrix<F>>, na: usize, nb: usize) -> Result<Vec<F>> {
    let nz = na * nb;
    let nf = pi_prime.map_or(nz, Matrix::rows);
    let ilz = Interleaver::new(r, nb, na);
    let ilfb = Interleaver::new(r, nf, nb);
    let nbr = power(nb, r);
    let mut out = vec![F::zero(); ilfb.len()];
    for j in 0..nbr {
        let mut e = vec![F::zero(); nbr];
        e[j] = F::one();
        let w = theta.apply(r, &ilz.tensor(&e, x))?;
        let y = match pi_prime {
            Some(p) => power_apply(p, r, &w)?,
            None => w,
        };
        if y.iter().all(Field::is_zero) {
            continue;
        }
        for (s, t) in out.iter_mut().zip(ilfb.tensor(&y, &e)) {
            if !t.is_zero() {
                *s = s.add_ref(&t);
            }
        }
    }
    Ok(out)
}

/// Outcome of an Ω-membership check, verified to `checked_to`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaReport<F> {
    pub ok: bool,
    pub checked_to: usize,
    /// The transported cocycle is well defined on `𝔉(d)`.
    pub transport_defined: bool,
    /// The transported cocycle acts as the identity.
    pub transport_is_identity: bool,
    /// First degree where the untwisted preimage of `𝔉(d)` fails ideal closure.
    pub admissible_failure: Option<usize>,
    /// First degree where a relation of `A` escapes the twisted target.
    pub relation_failure: Option<usize>,
    pub witness: Option<Vec<F>>,
}

/// Membership of a diagram in `Ω^{A,B}` for the primitives `θ_A`, `θ_B`.
///
/// With `Θ = join(θ_B^!, θ_A)` and `P_r = ker(Q_𝔉 ∘ π'^{⊗r})`, the check requires
/// `Θ` to descend along `π'`, the family `Θ_r^{-1}(P_r)` to be an ideal, and
/// the twisted image of every minimal relation of `A` to lie in `𝔉(d) ∘ B`.
/// Minimal relations suffice: the untwisted coevaluation is multiplicative and
/// the pulled-back target is an ideal once the second condition holds.
pub fn check_in_omega<F: Field>(d: &Diagram<F>, theta_a: &Primitive<F>, theta_b: &Primitive<F>) -> Result<OmegaReport<F>> {
    if theta_a.n() != d.a.n() || theta_b.n() != d.b.n() {
        return Err(Error::DimensionMismatch { expected: d.a.n() * d.b.n(), found: theta_a.n() * theta_b.n() });
    }
    let Functor { space: f, pi_prime } = d.functor()?;
    let theta = hom_primitive(theta_a, theta_b)?;
    let top = d.cutoff().min(theta.cutoff());
    let (na, nb) = (d.a.n(), d.b.n());
    let nz = na * nb;
    let nf = f.n();
    let injective = nf == nz;

    let mut transport_defined = true;
    let mut transport_is_identity = true;
    if !theta.is_identity() {
        let tt = theta.transpose()?;
        let base = pi_prime.row_vecs();
        let mut rows: Vec<Vec<F>> = vec![vec![F::one()]];
        for r in 1..=top {
            rows = rows.iter().flat_map(|x| base.iter().map(move |y| tensor_vec(x, y))).collect();
            let moved = rows.iter().map(|row| tt.apply(r, row)).collect::<Result<Vec<_>>>()?;
            if moved != rows {
                transport_is_identity = false;
                if !injective {
                    let span = Subspace::from_rows(power(nz, r), rows.clone())?;
                    if !span.contains_all(moved.iter())? {
                        transport_defined = false;
                        break;
                    }
                }
            }
        }
    }

    let theta_inv = theta.invert()?;
    let mut admissible_failure = None;
    let mut prev: Option<Subspace<F>> = None;
    for r in 0..=top {
        let maps: Vec<&Matrix<F>> = vec![&pi_prime; r];
        let len_f = power(nf, r);
        let pulled = f.quotient_covectors(r)?.iter().map(|c| kron_apply_transpose(&maps, &c.to_dense(len_f))).collect::<Result<Vec<_>>>()?;
        let p = Subspace::kernel_of(power(nz, r), pulled)?;
        let p = if theta.is_identity() { p } else { Subspace::from_rows(p.ambient_dim(), p.basis().iter().map(|v| theta_inv.apply(r, v)).collect::<Result<Vec<_>>>()?)? };
        if let Some(pr) = &prev {
            if r >= 2 && !rows_inside(&p, &closure_rows(pr, nz)) {
                admissible_failure = Some(r);
                break;
            }
        }
        prev = Some(p);
    }

    let mut relation_failure = None;
    let mut witness = None;
    let target = QuantumSpace::white(Arc::new(f.truncate(top)), Arc::new(d.b.truncate(top)));
    'outer: for r in 2..=top {
        for rel in d.a.generators(r)? {
            let img = twisted_image(r, &rel, &theta, Some(&pi_prime), na, nb)?;
            if !target.contains(r, &img)? {
                relation_failure = Some(r);
                witness = Some(rel);
                break 'outer;
            }
        }
    }
    let ok = transport_defined && admissible_failure.is_none() && relation_failure.is_none();
    Ok(OmegaReport { ok, checked_to: top, transport_defined, transport_is_identity, admissible_failure, relation_failure, witness })
}

/// `hom^Ω[B, A]` with its coevaluation data.
#[derive(Clone, Debug)]
pub struct CohomObject<F: Field> {
    pub space: Arc<QuantumSpace<F>>,
    /// The untwisted carrier `B ▷ A`.
    pub carrier: Arc<QuantumSpace<F>>,
    pub a: Arc<QuantumSpace<F>>,
    pub b: Arc<QuantumSpace<F>>,
    pub theta_a: Primitive<F>,
    pub theta_b: Primitive<F>,
    /// `join(θ_B^!, θ_A)` on the generators `z_i^j`.
    pub theta_hom: Primitive<F>,
}

fn first_failure(adm: &Admissibility) -> Option<usize> {
    match (adm.primal_failure, adm.dual_failure) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, y) => x.or(y),
    }
}

impl<F: Field> CohomObject<F> {
    /// Builds `B_θ ▷ A_θ` and `(B ▷ A)_Θ` and insists they agree.
    pub fn build(b: &QuantumSpace<F>, a: &QuantumSpace<F>, theta_a: &Primitive<F>, theta_b: &Primitive<F>) -> Result<Self> {
        for (space, theta) in [(a, theta_a), (b, theta_b)] {
            if let Some(d) = first_failure(&check_admissible(space, theta)?) {
                return Err(Error::NotAdmissible(d));
            }
        }
        let route1 = triangle(&twist_space(b, theta_b)?, &twist_space(a, theta_a)?)?;
        let carrier = triangle(b, a)?;
        let theta_hom = hom_primitive(theta_a, theta_b)?;
        let route2 = match twist_space(&carrier, &theta_hom) {
            Ok(s) => s,
            Err(Error::NotAdmissible(d)) => return Err(Error::ConstructionMismatch(d)),
            Err(e) => return Err(e),
        };
        if let Some(d) = route1.first_difference(&route2)? {
            return Err(Error::ConstructionMismatch(d));
        }
        Ok(CohomObject {
            space: Arc::new(route1),
            carrier: Arc::new(carrier),
            a: Arc::new(a.clone()),
            b: Arc::new(b.clone()),
            theta_a: theta_a.clone(),
            theta_b: theta_b.clone(),
            theta_hom,
        })
    }

    pub fn cutoff(&self) -> usize {
        self.space.cutoff()
    }

    /// `ω = join(Θ, id_B)` on `B₁*⊗A₁⊗B₁`.
    pub fn omega(&self) -> Result<Primitive<F>> {
        build_omega(&self.theta_a, &self.theta_b)
    }

    /// The diagram `⟨δ, hom^Ω⟩` with `h_i^j = z_i^j`.
    pub fn coevaluation_diagram(&self) -> Diagram<F> {
        let n = self.space.n();
        Diagram { a: self.a.clone(), b: self.b.clone(), h_space: self.space.clone(), pi: Matrix::identity(n) }
    }

    /// Degree-1 coevaluation `a_i ↦ z_i^j ⊗ b_j` as a `(n_z n_B) × n_A` matrix.
    pub fn coevaluation_matrix(&self) -> Matrix<F> {
        self.coevaluation_diagram().phi1()
    }
}

pub fn build_cohom<F: Field>(b: &QuantumSpace<F>, a: &QuantumSpace<F>, theta_a: &Primitive<F>, theta_b: &Primitive<F>) -> Result<CohomObject<F>> {
    CohomObject::build(b, a, theta_a, theta_b)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoevaluationReport<F> {
    pub checked_to: usize,
    /// First degree where `δ_r(K_{A,r}) ⊄ K(hom ∘ B)_r`.
    pub delta_failure: Option<usize>,
    pub witness: Option<Vec<F>>,
    /// First degree where `Ω^{-1}(K(hom ∘ B)) ≠ K((B ▷ A) ∘ B)`.
    pub untwist_failure: Option<usize>,
}

impl<F> CoevaluationReport<F> {
    pub fn ok(&self) -> bool {
        self.delta_failure.is_none() && self.untwist_failure.is_none()
    }
}

/// Largest ambient dimension for which the untwisting identity is also checked on materialized kernels.
const MATERIALIZE_LIMIT: usize = 512;

/// Well-definedness of the twisted coevaluation, plus the untwisting identity.
///
/// The white-product kernel is `K_H ⊗ V + V ⊗ K_B` after de-interleaving and
/// `ω` acts there as `Θ ⊗ id`, so the identity holds at degree `r` exactly when
/// `Θ_r^{-1}(K_{hom,r}) = K_{B▷A,r}` or `B_r = 0`. That reduction is used at
/// every degree; small degrees are additionally compared on the full kernels.
pub fn coevaluation_check<F: Field>(c: &CohomObject<F>) -> Result<CoevaluationReport<F>> {
    let top = c.cutoff().min(c.a.cutoff()).min(c.b.cutoff());
    let (na, nb) = (c.a.n(), c.b.n());
    let target = white_product(&c.space.truncate(top), &c.b.truncate(top))?;
    let mut delta_failure = None;
    let mut witness = None;
    'outer: for r in 2..=top {
        for x in c.a.ideal_component(r)?.basis() {
            let img = twisted_image(r, x, &c.theta_hom, None, na, nb)?;
            if !target.contains(r, &img)? {
                delta_failure = Some(r);
                witness = Some(x.clone());
                break 'outer;
            }
        }
    }

    let inv = c.theta_hom.invert()?;
    let mut untwist_failure = None;
    for r in 0..=top {
        if c.b.dim(r) > 0 {
            let k = c.space.ideal_component(r)?;
            let back = Subspace::from_rows(k.ambient_dim(), k.basis().iter().map(|v| inv.apply(r, v)).collect::<Result<Vec<_>>>()?)?;
            if back != *c.carrier.ideal_component(r)? {
                untwist_failure = Some(r);
                break;
            }
        }
    }
    let n = c.space.n() * nb;
    let small = (0..=top).take_while(|&r| power(n, r) <= MATERIALIZE_LIMIT).last().unwrap_or(0);
    if untwist_failure.is_none() {
        let omega_inv = c.omega()?.invert()?;
        let twisted = white_product_explicit(&c.space.truncate(small), &c.b.truncate(small))?;
        let plain = white_product_explicit(&c.carrier.truncate(small), &c.b.truncate(small))?;
        for r in 0..=small {
            let k = twisted.ideal_component(r)?;
            let back = Subspace::from_rows(k.ambient_dim(), k.basis().iter().map(|v| omega_inv.apply(r, v)).collect::<Result<Vec<_>>>()?)?;
            if back != *plain.ideal_component(r)? {
                untwist_failure = Some(r);
                break;
            }
        }
    }
    Ok(CoevaluationReport { checked_to: top, delta_failure, witness, untwist_failure })
}

fn require_morphism<F: Field>(map: GradedMap<F>) -> Result<GradedMap<F>> {
    let rep = map.check_morphism()?;
    if let (Some(degree), Some(w)) = (rep.failing_degree, rep.witness.as_ref()) {
        return Err(Error::MorphismCheckFailed { degree, witness: witness_text(&map.source, degree, w) });
    }
    Ok(map)
}

/// `ε: end^Ω[A] -> 𝒦`, `z_i^j ↦ δ_i^j e`.
pub fn counit<F: Field>(c: &CohomObject<F>) -> Result<GradedMap<F>> {
    if !same_space(&c.a, &c.b)? || c.theta_a != c.theta_b {
        return Err(Error::EndpointMismatch("counit needs an end object".into()));
    }
    let n = c.a.n();
    let mut f1 = Matrix::zeros(1, n * n);
    for i in 0..n {
        f1.set(0, i * n + i, F::one());
    }
    let unit = Arc::new(QuantumSpace::unit(c.cutoff()));
    require_morphism(GradedMap::new(c.space.clone(), unit, f1)?)
}

/// `Δ: hom^Ω[C, A] -> hom^Ω[B, A] ∘ hom^Ω[C, B]`, `z_i^j ↦ Σ_k z_i^k ⊗ z_k^j`.
///
/// Returns the freshly built `hom^Ω[C, A]` together with the map.
pub fn cocomposition<F: Field>(ab: &CohomObject<F>, bc: &CohomObject<F>) -> Result<(CohomObject<F>, GradedMap<F>)> {
    if !same_space(&ab.b, &bc.a)? || ab.theta_b != bc.theta_a {
        return Err(Error::EndpointMismatch("middle spaces differ".into()));
    }
    let ac = CohomObject::build(&bc.b, &ab.a, &ab.theta_a, &bc.theta_b)?;
    let (na, nb, nc) = (ab.a.n(), ab.b.n(), bc.b.n());
    let target = white_product(&ab.space, &bc.space)?;
    let mut f1 = Matrix::zeros(target.n(), na * nc);
    for i in 0..na {
        for j in 0..nc {
            for k in 0..nb {
                f1.set((k * na + i) * (nb * nc) + (j * nb + k), j * na + i, F::one());
            }
        }
    }
    let map = require_morphism(GradedMap::new(ac.space.clone(), Arc::new(target), f1)?)?;
    Ok((ac, map))
}

/// The unique map `hom^Ω[B, A] -> 𝔉(d)` with `z_i^j ↦ h_i^j`.
pub fn factorize<F: Field>(c: &CohomObject<F>, d: &Diagram<F>) -> Result<GradedMap<F>> {
    if !same_space(&c.a, &d.a)? || !same_space(&c.b, &d.b)? {
        return Err(Error::EndpointMismatch("diagram endpoints differ from the coHom object".into()));
    }
    let rep = check_in_omega(d, &c.theta_a, &c.theta_b)?;
    if !rep.ok {
        let why = match (rep.transport_defined, rep.admissible_failure, rep.relation_failure) {
            (false, _, _) => "transported cocycle is not well defined".to_string(),
            (_, Some(r), _) => format!("twisted carrier is not admissible in degree {r}"),
            (_, _, Some(r)) => format!("relation of degree {r} escapes the twisted target"),
            _ => "unknown".to_string(),
        };
        return Err(Error::NotInCategory(why));
    }
    let Functor { space, pi_prime } = d.functor()?;
    require_morphism(GradedMap::new(c.space.clone(), Arc::new(space), pi_prime)?)
}

pub fn compose_diagrams<F: Field>(d1: &Diagram<F>, d2: &Diagram<F>) -> Result<Diagram<F>> {
    d1.compose(d2)
}

/// First degree where `(B ▷ A)_Θ` and `B_θ ▷ A_θ` differ, if any.
pub fn gauge_equivalence_check<F: Field>(b: &QuantumSpace<F>, a: &QuantumSpace<F>, theta_a: &Primitive<F>, theta_b: &Primitive<F>) -> Result<Option<usize>> {
    let lhs = twist_space(&triangle(b, a)?, &hom_primitive(theta_a, theta_b)?)?;
    let rhs = CohomObject::build(b, a, theta_a, theta_b)?;
    lhs.first_difference(&rhs.space)
}

/// The operational second admissibility: primal and dual closure on both
/// sides together with a well-defined coevaluation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SecondAdmissibility {
    pub a: Admissibility,
    pub b: Admissibility,
    pub coevaluation: bool,
}

impl SecondAdmissibility {
    pub fn ok(&self) -> bool {
        self.a.second() && self.b.second() && self.coevaluation
    }
}

pub fn second_admissible<F: Field>(b: &QuantumSpace<F>, a: &QuantumSpace<F>, theta_a: &Primitive<F>, theta_b: &Primitive<F>) -> Result<SecondAdmissibility> {
    let adm_a = check_admissible(a, theta_a)?;
    let adm_b = check_admissible(b, theta_b)?;
    let coevaluation = if adm_a.second() && adm_b.second() {
        match CohomObject::build(b, a, theta_a, theta_b) {
            Ok(c) => coevaluation_check(&c)?.ok(),
            Err(Error::ConstructionMismatch(_)) => false,
            Err(e) => return Err(e),
        }
    } else {
        false
    };
    Ok(SecondAdmissibility { a: adm_a, b: adm_b, coevaluation })
}
