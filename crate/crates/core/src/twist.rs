//! Primitive 1-cochains and cocycle twists of quantum spaces.
//!
//! A primitive is a family of invertible maps `θ_d` on `V^{⊗d}` with `θ_0 = 1`
//! and `θ_1 = id`; its coboundary `∂θ_{r,s} = θ_{r+s} (θ_r ⊗ θ_s)^{-1}` is the
//! twisting 2-cocycle. Twisting replaces each kernel `K_d` by `θ_d(K_d)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactla::{Field, Matrix, Subspace};
use crate::qspace::QuantumSpace;
use crate::tensorspace::{kron_apply, power, Interleaver};

#[derive(Clone, PartialEq, Eq)]
pub struct Primitive<F> {
    n: usize,
    cutoff: usize,
    kind: Kind<F>,
}

#[derive(Clone, PartialEq, Eq)]
enum Kind<F> {
    Identity,
    /// `θ_d = M_0 ⊗ … ⊗ M_{d-1}`.
    Factorwise(Vec<Matrix<F>>),
    /// `θ_d` given as a matrix on `V^{⊗d}`.
    Blocks(Vec<Matrix<F>>),
    /// `interleave ∘ (θ_left ⊗ θ_right) ∘ interleave^{-1}` on `(X⊗Y)^{⊗d}`.
    Join(Box<Primitive<F>>, Box<Primitive<F>>),
}

/// Apply `f ⊗ g` to `v ∈ X ⊗ Y` laid out as `ix * ny + iy`.
fn apply_pair<F: Field>(
    v: &[F],
    nx: usize,
    ny: usize,
    f: impl Fn(&[F]) -> Result<Vec<F>>,
    g: impl Fn(&[F]) -> Result<Vec<F>>,
) -> Result<Vec<F>> {
    let mut rows: Vec<Vec<F>> = Vec::with_capacity(nx);
    for ix in 0..nx {
        let row = &v[ix * ny..(ix + 1) * ny];
        rows.push(if row.iter().all(Field::is_zero) { row.to_vec() } else { g(row)? });
    }
    let mut out = vec![F::zero(); nx * ny];
    for iy in 0..ny {
        let col: Vec<F> = rows.iter().map(|r| r[iy].clone()).collect();
        if col.iter().all(Field::is_zero) {
            continue;
        }
        for (ix, c) in f(&col)?.into_iter().enumerate() {
            out[ix * ny + iy] = c;
        }
    }
    Ok(out)
}

impl<F: Field> Primitive<F> {
    pub fn identity(n: usize, cutoff: usize) -> Self {
        Primitive { n, cutoff, kind: Kind::Identity }
    }

    /// The σ-primitive `θ_d = σ^0 ⊗ σ^{-1} ⊗ … ⊗ σ^{-(d-1)}`.
    pub fn from_sigma(sigma: &Matrix<F>, cutoff: usize) -> Result<Self> {
        if !sigma.is_square() {
            return Err(Error::BadPrimitive(format!("σ is {}x{}", sigma.rows(), sigma.cols())));
        }
        let inv = sigma.inverse()?;
        let mut factors = Vec::with_capacity(cutoff);
        let mut cur = Matrix::identity(sigma.rows());
        for _ in 0..cutoff {
            factors.push(cur.clone());
            cur = cur.mul(&inv)?;
        }
        Ok(Primitive { n: sigma.rows(), cutoff, kind: Kind::Factorwise(factors) })
    }

    /// Factor-wise primitive `θ_d = M_0 ⊗ … ⊗ M_{d-1}`; `M_0` must be the identity.
    pub fn from_factors(factors: Vec<Matrix<F>>) -> Result<Self> {
        let n = factors.first().map_or(1, Matrix::rows);
        for (k, m) in factors.iter().enumerate() {
            if m.rows() != n || m.cols() != n {
                return Err(Error::BadPrimitive(format!("factor {k} is {}x{}, expected {n}x{n}", m.rows(), m.cols())));
            }
            if !m.is_invertible() {
                return Err(Error::BadPrimitive(format!("factor {k} is singular")));
            }
        }
        if factors.first().is_some_and(|m| !m.is_identity()) {
            return Err(Error::BadPrimitive("θ_1 must be the identity".into()));
        }
        Ok(Primitive { n, cutoff: factors.len(), kind: Kind::Factorwise(factors) })
    }

    /// Primitive from explicit blocks `θ_0..θ_D`.
    pub fn from_blocks(n: usize, blocks: Vec<Matrix<F>>) -> Result<Self> {
        for (d, m) in blocks.iter().enumerate() {
            let len = power(n, d);
            if m.rows() != len || m.cols() != len {
                return Err(Error::BadPrimitive(format!("θ_{d} is {}x{}, expected {len}x{len}", m.rows(), m.cols())));
            }
            if d <= 1 && !m.is_identity() {
                return Err(Error::BadPrimitive(format!("θ_{d} must be the identity")));
            }
            if !m.is_invertible() {
                return Err(Error::BadPrimitive(format!("θ_{d} is singular")));
            }
        }
        if blocks.is_empty() {
            return Err(Error::BadPrimitive("no blocks".into()));
        }
        Ok(Primitive { n, cutoff: blocks.len() - 1, kind: Kind::Blocks(blocks) })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    pub fn is_identity(&self) -> bool {
        match &self.kind {
            Kind::Identity => true,
            Kind::Factorwise(fs) => fs.iter().all(Matrix::is_identity),
            Kind::Blocks(bs) => bs.iter().all(Matrix::is_identity),
            Kind::Join(l, r) => l.is_identity() && r.is_identity(),
        }
    }

    fn check_degree(&self, d: usize) -> Result<()> {
        if d > self.cutoff {
            return Err(Error::AboveCutoff { degree: d, cutoff: self.cutoff });
        }
        Ok(())
    }

    /// `θ_d v`.
    pub fn apply(&self, d: usize, v: &[F]) -> Result<Vec<F>> {
        self.check_degree(d)?;
        let len = power(self.n, d);
        if v.len() != len {
            return Err(Error::DimensionMismatch { expected: len, found: v.len() });
        }
        match &self.kind {
            Kind::Identity => Ok(v.to_vec()),
            Kind::Factorwise(fs) => {
                let maps: Vec<&Matrix<F>> = fs[..d].iter().collect();
                kron_apply(&maps, v)
            }
            Kind::Blocks(bs) => bs[d].apply(v),
            Kind::Join(l, r) => {
                let il = Interleaver::new(d, l.n, r.n);
                let src = il.invert(v);
                let out = apply_pair(&src, il.x_len(), il.y_len(), |x| l.apply(d, x), |y| r.apply(d, y))?;
                Ok(il.apply(&out))
            }
        }
    }

    /// `θ_d` as a matrix.
    pub fn block(&self, d: usize) -> Result<Matrix<F>> {
        self.check_degree(d)?;
        let len = power(self.n, d);
        let mut m = Matrix::zeros(len, len);
        for j in 0..len {
            let mut e = vec![F::zero(); len];
            e[j] = F::one();
            for (i, c) in self.apply(d, &e)?.into_iter().enumerate() {
                m.set(i, j, c);
            }
        }
        Ok(m)
    }

    /// `θ_d^{-1}` for every degree.
    pub fn invert(&self) -> Result<Self> {
        let kind = match &self.kind {
            Kind::Identity => Kind::Identity,
            Kind::Factorwise(fs) => Kind::Factorwise(fs.iter().map(Matrix::inverse).collect::<Result<_>>()?),
            Kind::Blocks(bs) => Kind::Blocks(bs.iter().map(Matrix::inverse).collect::<Result<_>>()?),
            Kind::Join(l, r) => Kind::Join(Box::new(l.invert()?), Box::new(r.invert()?)),
        };
        Ok(Primitive { n: self.n, cutoff: self.cutoff, kind })
    }

    /// Contragredient family `(θ_d^{-1})^T` on the dual tensor powers.
    ///
    /// This is the choice that keeps the pairing invariant,
    /// `<θ^! f, θ x> = <f, x>`, so annihilators twist to annihilators.
    pub fn dualize(&self) -> Result<Self> {
        let kind = match &self.kind {
            Kind::Identity => Kind::Identity,
            Kind::Factorwise(fs) => Kind::Factorwise(fs.iter().map(|m| m.inverse().map(|i| i.transpose())).collect::<Result<_>>()?),
            Kind::Blocks(bs) => Kind::Blocks(bs.iter().map(|m| m.inverse().map(|i| i.transpose())).collect::<Result<_>>()?),
            Kind::Join(l, r) => Kind::Join(Box::new(l.dualize()?), Box::new(r.dualize()?)),
        };
        Ok(Primitive { n: self.n, cutoff: self.cutoff, kind })
    }

    /// Plain transpose family `θ_d^T`.
    pub fn transpose(&self) -> Result<Self> {
        let kind = match &self.kind {
            Kind::Identity => Kind::Identity,
            Kind::Factorwise(fs) => Kind::Factorwise(fs.iter().map(Matrix::transpose).collect()),
            Kind::Blocks(bs) => Kind::Blocks(bs.iter().map(Matrix::transpose).collect()),
            Kind::Join(l, r) => Kind::Join(Box::new(l.transpose()?), Box::new(r.transpose()?)),
        };
        Ok(Primitive { n: self.n, cutoff: self.cutoff, kind })
    }

    /// Primitive on `X ⊗ Y` acting factor-wise through the interleaving.
    pub fn join(left: &Primitive<F>, right: &Primitive<F>) -> Self {
        let cutoff = left.cutoff.min(right.cutoff);
        let n = left.n * right.n;
        if left.is_identity() && right.is_identity() {
            return Primitive::identity(n, cutoff);
        }
        Primitive { n, cutoff, kind: Kind::Join(Box::new(left.clone()), Box::new(right.clone())) }
    }

    /// `other_d ∘ self_d`.
    pub fn then(&self, other: &Primitive<F>) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: other.n });
        }
        let cutoff = self.cutoff.min(other.cutoff);
        let kind = match (&self.kind, &other.kind) {
            (Kind::Identity, _) => return Ok(other.truncated(cutoff)),
            (_, Kind::Identity) => return Ok(self.truncated(cutoff)),
            (Kind::Factorwise(a), Kind::Factorwise(b)) => {
                Kind::Factorwise(a.iter().zip(b).map(|(x, y)| y.mul(x)).collect::<Result<_>>()?)
            }
            _ => Kind::Blocks((0..=cutoff).map(|d| other.block(d)?.mul(&self.block(d)?)).collect::<Result<_>>()?),
        };
        Ok(Primitive { n: self.n, cutoff, kind })
    }

    fn truncated(&self, cutoff: usize) -> Self {
        let kind = match &self.kind {
            Kind::Factorwise(fs) => Kind::Factorwise(fs[..cutoff.min(fs.len())].to_vec()),
            Kind::Blocks(bs) => Kind::Blocks(bs[..=cutoff.min(bs.len() - 1)].to_vec()),
            other => other.clone(),
        };
        Primitive { n: self.n, cutoff: cutoff.min(self.cutoff), kind }
    }

    /// `∂θ_{r,s} = θ_{r+s} ∘ (θ_r ⊗ θ_s)^{-1}` on `V^{⊗(r+s)}`.
    pub fn coboundary(&self, r: usize, s: usize) -> Result<Matrix<F>> {
        self.check_degree(r + s)?;
        let inv = self.invert()?;
        let (nr, ns) = (power(self.n, r), power(self.n, s));
        let len = nr * ns;
        let mut m = Matrix::zeros(len, len);
        for j in 0..len {
            let mut e = vec![F::zero(); len];
            e[j] = F::one();
            let pre = apply_pair(&e, nr, ns, |x| inv.apply(r, x), |y| inv.apply(s, y))?;
            for (i, c) in self.apply(r + s, &pre)?.into_iter().enumerate() {
                m.set(i, j, c);
            }
        }
        Ok(m)
    }
}

impl<F: Field> fmt::Debug for Primitive<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match &self.kind {
            Kind::Identity => "identity".to_string(),
            Kind::Factorwise(fs) => format!("factorwise {:?}", fs.iter().map(ToString::to_string).collect::<Vec<_>>()),
            Kind::Blocks(_) => "blocks".to_string(),
            Kind::Join(l, r) => format!("join({l:?}, {r:?})"),
        };
        write!(f, "Primitive(n={}, D={}, {kind})", self.n, self.cutoff)
    }
}

fn check_fit<F: Field>(a: &QuantumSpace<F>, theta: &Primitive<F>) -> Result<()> {
    if theta.n() != a.n() {
        return Err(Error::DimensionMismatch { expected: a.n(), found: theta.n() });
    }
    if theta.cutoff() < a.cutoff() {
        return Err(Error::CutoffMismatch(a.cutoff(), theta.cutoff()));
    }
    Ok(())
}

/// `K'_d = θ_d(K_d)`; fails with the first degree where the image is not an ideal.
pub fn twist_space<F: Field>(a: &QuantumSpace<F>, theta: &Primitive<F>) -> Result<QuantumSpace<F>> {
    check_fit(a, theta)?;
    if theta.is_identity() {
        return Ok(a.clone());
    }
    let kernels = a.map_kernels(|d, v| theta.apply(d, v))?;
    QuantumSpace::from_kernels(a.labels().to_vec(), kernels)
}

/// Outcome of the admissibility checks for a twist.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Admissibility {
    /// First degree where `{θ_d(K_d)}` fails ideal closure.
    pub primal_failure: Option<usize>,
    /// First degree where `{θ^!_d(K_d^⊥)}` fails to be a subcoalgebra filtration.
    pub dual_failure: Option<usize>,
}

impl Admissibility {
    pub fn primal(&self) -> bool {
        self.primal_failure.is_none()
    }

    /// The operational "second" level: primal and dual closure together.
    /// Coevaluation well-definedness is checked separately on the built object.
    pub fn second(&self) -> bool {
        self.primal_failure.is_none() && self.dual_failure.is_none()
    }
}

pub fn check_admissible<F: Field>(a: &QuantumSpace<F>, theta: &Primitive<F>) -> Result<Admissibility> {
    check_fit(a, theta)?;
    let mut primal_failure = None;
    let mut twisted: Vec<Subspace<F>> = Vec::new();
    let all = a.map_kernels(|d, v| theta.apply(d, v))?;
    for d in 0..=a.cutoff() {
        if d >= 2 && primal_failure.is_none() {
            let prev: &Subspace<F> = &twisted[d - 1];
            let cur = &all[d];
            if crate::qspace::closure_rows(prev, a.n()).iter().any(|r| !cur.contains(r).expect("dims")) {
                primal_failure = Some(d);
            }
        }
        twisted.push(all[d].clone());
    }
    // dual side: C_d = θ^!_d(K_d^⊥) must satisfy C_d ⊆ C_{d-1} ⊗ V* and C_d ⊆ V* ⊗ C_{d-1}
    let dual = theta.dualize()?;
    let n = a.n();
    let mut dual_failure = None;
    let mut prev: Option<Subspace<F>> = None;
    for d in 0..=a.cutoff() {
        let len = power(n, d);
        let rows = a.quotient_covectors(d)?.iter().map(|c| dual.apply(d, &c.to_dense(len))).collect::<Result<Vec<_>>>()?;
        let cur = Subspace::from_rows(len, rows)?;
        if let Some(p) = &prev {
            if d >= 2 && dual_failure.is_none() && !coideal_step(p, &cur, n)? {
                dual_failure = Some(d);
            }
        }
        prev = Some(cur);
    }
    Ok(Admissibility { primal_failure, dual_failure })
}

/// `cur ⊆ (prev ⊗ V) ∩ (V ⊗ prev)`.
fn coideal_step<F: Field>(prev: &Subspace<F>, cur: &Subspace<F>, n: usize) -> Result<bool> {
    let m = prev.ambient_dim();
    let mut left = Vec::new();
    let mut right = Vec::new();
    for b in prev.basis() {
        for i in 0..n {
            let mut l = vec![F::zero(); m * n];
            let mut r = vec![F::zero(); m * n];
            for (j, c) in b.iter().enumerate() {
                if !c.is_zero() {
                    l[j * n + i] = c.clone();
                    r[i * m + j] = c.clone();
                }
            }
            left.push(l);
            right.push(r);
        }
    }
    let l = Subspace::from_rows(m * n, left)?;
    let r = Subspace::from_rows(m * n, right)?;
    Ok(cur.is_subspace_of(&l)? && cur.is_subspace_of(&r)?)
}

/// The primitive `join(join(θ_B^!, θ_A), id_B)` on `B₁*⊗A₁⊗B₁`.
pub fn build_omega<F: Field>(theta_a: &Primitive<F>, theta_b: &Primitive<F>) -> Result<Primitive<F>> {
    let hom = hom_primitive(theta_a, theta_b)?;
    Ok(Primitive::join(&hom, &Primitive::identity(theta_b.n(), theta_b.cutoff())))
}

/// `join(θ_B^!, θ_A)` on the coHom generators `B₁*⊗A₁`.
pub fn hom_primitive<F: Field>(theta_a: &Primitive<F>, theta_b: &Primitive<F>) -> Result<Primitive<F>> {
    Ok(Primitive::join(&theta_b.dualize()?, theta_a))
}
