//! Conic quantum spaces as kernel filtrations.
//!
//! A space on `n` generators is the family `K_d ⊆ V^{⊗d}`, `d = 0..=cutoff`,
//! of homogeneous components of its defining ideal. Spaces are either stored
//! explicitly or, for white products, as the pair of factors: membership and
//! quotient coordinates of a product are computed through the factors, so the
//! `(n m)^d`-dimensional kernels never have to be materialized.

use std::borrow::Cow;
use std::fmt;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exactla::{is_zero_vec, Echelon, Field, Matrix, Subspace};
use crate::tensorspace::{power, power_apply, Interleaver};

#[derive(Clone)]
pub struct QuantumSpace<F> {
    labels: Vec<String>,
    cutoff: usize,
    repr: Repr<F>,
}

#[derive(Clone)]
enum Repr<F> {
    Explicit(Arc<Filtration<F>>),
    White { left: Arc<QuantumSpace<F>>, right: Arc<QuantumSpace<F>>, shuffles: Arc<Vec<Arc<Interleaver>>> },
}

struct Filtration<F> {
    kernels: Vec<Subspace<F>>,
    /// Minimal new relations per degree: a complement of `V⊗K_{d-1} + K_{d-1}⊗V` in `K_d`.
    generators: Vec<Vec<Vec<F>>>,
}

/// A linear functional on `V^{⊗d}` that vanishes on `K_d`.
#[derive(Clone, Debug)]
pub enum Covector<F> {
    Dense(Arc<Vec<F>>),
    Pair { left: Box<Covector<F>>, right: Box<Covector<F>>, shuffle: Arc<Interleaver> },
}

impl<F: Field> Covector<F> {
    pub fn eval(&self, idx: usize) -> F {
        match self {
            Covector::Dense(v) => v[idx].clone(),
            Covector::Pair { left, right, shuffle } => {
                let (ix, iy) = shuffle.split(idx);
                let a = left.eval(ix);
                if a.is_zero() {
                    return a;
                }
                a.mul_ref(&right.eval(iy))
            }
        }
    }

    pub fn eval_sparse(&self, v: &[(usize, F)]) -> F {
        let mut acc = F::zero();
        for (i, c) in v {
            let e = self.eval(*i);
            if !e.is_zero() {
                acc = acc.add_ref(&e.mul_ref(c));
            }
        }
        acc
    }

    pub fn to_dense(&self, len: usize) -> Vec<F> {
        match self {
            Covector::Dense(v) => v.as_ref().clone(),
            _ => (0..len).map(|i| self.eval(i)).collect(),
        }
    }
}

/// Rows `e_i ⊗ k` and `k ⊗ e_i` spanning `V⊗K + K⊗V`.
pub(crate) fn closure_rows<F: Field>(prev: &Subspace<F>, n: usize) -> Vec<Vec<F>> {
    let m = prev.ambient_dim();
    let mut rows = Vec::with_capacity(2 * n * prev.dim());
    for k in prev.basis() {
        for i in 0..n {
            let mut left = vec![F::zero(); m * n];
            left[i * m..(i + 1) * m].clone_from_slice(k);
            rows.push(left);
            let mut right = vec![F::zero(); m * n];
            for (j, c) in k.iter().enumerate() {
                if !c.is_zero() {
                    right[j * n + i] = c.clone();
                }
            }
            rows.push(right);
        }
    }
    rows
}

fn closure_echelon<F: Field>(prev: &Subspace<F>, n: usize) -> Echelon<F> {
    let mut e = Echelon::new(prev.ambient_dim() * n);
    for r in closure_rows(prev, n) {
        e.insert(r);
    }
    e
}

/// Dual generator name: `x <-> x'`.
pub fn dual_label(s: &str) -> String {
    match s.strip_suffix('\'') {
        Some(t) => t.to_string(),
        None => format!("{s}'"),
    }
}

pub fn pair_label(a: &str, b: &str) -> String {
    format!("{a}_{b}")
}

fn default_labels(n: usize, stem: &str) -> Vec<String> {
    (1..=n).map(|i| format!("{stem}{i}")).collect()
}

impl<F: Field> QuantumSpace<F> {
    fn from_filtration(labels: Vec<String>, cutoff: usize, f: Filtration<F>) -> Self {
        QuantumSpace { labels, cutoff, repr: Repr::Explicit(Arc::new(f)) }
    }

    /// Ideal closure of per-degree contributions: `K_d = V⊗K_{d-1} + K_{d-1}⊗V + span(contrib(d))`.
    pub(crate) fn close(labels: Vec<String>, cutoff: usize, mut contrib: impl FnMut(usize) -> Result<Vec<Vec<F>>>) -> Result<Self> {
        let n = labels.len();
        let mut kernels = vec![Subspace::zero(1)];
        let mut generators = vec![Vec::new()];
        if cutoff >= 1 {
            kernels.push(Subspace::zero(n));
            generators.push(Vec::new());
        }
        for d in 2..=cutoff {
            let mut e = closure_echelon(&kernels[d - 1], n);
            let mut gens = Vec::new();
            for r in contrib(d)? {
                if r.len() != power(n, d) {
                    return Err(Error::DimensionMismatch { expected: power(n, d), found: r.len() });
                }
                if e.insert(r.clone()) {
                    gens.push(r);
                }
            }
            kernels.push(e.into_subspace());
            generators.push(gens);
        }
        Ok(Self::from_filtration(labels, cutoff, Filtration { kernels, generators }))
    }

    /// Adopt a family of kernels, verifying ideal closure; the error names the first failing degree.
    pub(crate) fn from_kernels(labels: Vec<String>, kernels: Vec<Subspace<F>>) -> Result<Self> {
        let n = labels.len();
        let cutoff = kernels.len().saturating_sub(1);
        let mut generators = Vec::with_capacity(kernels.len());
        for d in 0..kernels.len() {
            if kernels[d].ambient_dim() != power(n, d) {
                return Err(Error::DimensionMismatch { expected: power(n, d), found: kernels[d].ambient_dim() });
            }
            if d < 2 {
                if !kernels[d].is_zero() {
                    return Err(Error::DegreeTooLow(d));
                }
                generators.push(Vec::new());
                continue;
            }
            let mut e = closure_echelon(&kernels[d - 1], n);
            if e.rows().iter().any(|r| !kernels[d].contains(r).expect("dims")) {
                return Err(Error::NotAdmissible(d));
            }
            let mut gens = Vec::new();
            for b in kernels[d].basis() {
                if e.insert(b.clone()) {
                    gens.push(b.clone());
                }
            }
            generators.push(gens);
        }
        Ok(Self::from_filtration(labels, cutoff, Filtration { kernels, generators }))
    }

    /// Space presented by homogeneous relations `(degree, coordinates)`.
    pub fn from_presentation(labels: Vec<String>, relations: &[(usize, Vec<F>)], cutoff: usize) -> Result<Self> {
        let n = labels.len();
        for (d, v) in relations {
            if *d < 2 {
                return Err(Error::DegreeTooLow(*d));
            }
            if *d > cutoff {
                return Err(Error::AboveCutoff { degree: *d, cutoff });
            }
            if v.len() != power(n, *d) {
                return Err(Error::DimensionMismatch { expected: power(n, *d), found: v.len() });
            }
        }
        Self::close(labels, cutoff, |d| Ok(relations.iter().filter(|(e, _)| *e == d).map(|(_, v)| v.clone()).collect()))
    }

    /// Free algebra on `n` generators.
    pub fn free(n: usize, cutoff: usize) -> Self {
        let labels = default_labels(n, "x");
        Self::free_labeled(labels, cutoff)
    }

    pub fn free_labeled(labels: Vec<String>, cutoff: usize) -> Self {
        Self::close(labels, cutoff, |_| Ok(Vec::new())).expect("no relations")
    }

    /// The unit object: one generator `e`, no relations.
    pub fn unit(cutoff: usize) -> Self {
        Self::free_labeled(vec!["e".to_string()], cutoff)
    }

    /// `k⟨x, y⟩ / (x y - q y x)`.
    pub fn quantum_plane(q: &F, cutoff: usize) -> Self {
        let rel = vec![F::zero(), F::one(), q.neg_ref(), F::zero()];
        Self::from_presentation(vec!["x".into(), "y".into()], &[(2, rel)], cutoff).expect("valid presentation")
    }

    /// Lazily represented white product; see [`crate::products::white_product`].
    pub(crate) fn white(left: Arc<QuantumSpace<F>>, right: Arc<QuantumSpace<F>>) -> Self {
        let cutoff = left.cutoff.min(right.cutoff);
        let labels = left.labels.iter().flat_map(|a| right.labels.iter().map(move |b| pair_label(a, b))).collect();
        let shuffles = (0..=cutoff).map(|d| Arc::new(Interleaver::new(d, left.n(), right.n()))).collect();
        QuantumSpace { labels, cutoff, repr: Repr::White { left, right, shuffles: Arc::new(shuffles) } }
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n() {
            return Err(Error::DimensionMismatch { expected: self.n(), found: labels.len() });
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    pub fn is_explicit(&self) -> bool {
        matches!(self.repr, Repr::Explicit(_))
    }

    /// The factors of a lazily stored white product.
    pub fn white_factors(&self) -> Option<(&QuantumSpace<F>, &QuantumSpace<F>)> {
        match &self.repr {
            Repr::White { left, right, .. } => Some((left, right)),
            Repr::Explicit(_) => None,
        }
    }

    fn check_degree(&self, d: usize) -> Result<()> {
        if d > self.cutoff {
            return Err(Error::AboveCutoff { degree: d, cutoff: self.cutoff });
        }
        Ok(())
    }

    /// `dim A_d`.
    pub fn dim(&self, d: usize) -> usize {
        match &self.repr {
            Repr::Explicit(f) => f.kernels[d].codim(),
            Repr::White { left, right, .. } => left.dim(d) * right.dim(d),
        }
    }

    /// `[dim A_0, ..., dim A_cutoff]`.
    pub fn hilbert(&self) -> Vec<usize> {
        (0..=self.cutoff).map(|d| self.dim(d)).collect()
    }

    /// `K_d`, materialized if the space is stored as a product.
    pub fn ideal_component(&self, d: usize) -> Result<Cow<'_, Subspace<F>>> {
        self.check_degree(d)?;
        match &self.repr {
            Repr::Explicit(f) => Ok(Cow::Borrowed(&f.kernels[d])),
            Repr::White { .. } => {
                let len = power(self.n(), d);
                let covs = self.quotient_covectors(d)?;
                Ok(Cow::Owned(Subspace::kernel_of(len, covs.iter().map(|c| c.to_dense(len)))?))
            }
        }
    }

    /// Minimal relations first appearing in degree `d`.
    pub fn generators(&self, d: usize) -> Result<Vec<Vec<F>>> {
        self.check_degree(d)?;
        match &self.repr {
            Repr::Explicit(f) => Ok(f.generators[d].clone()),
            Repr::White { .. } => {
                if d < 2 {
                    return Ok(Vec::new());
                }
                let prev = self.ideal_component(d - 1)?;
                let mut e = closure_echelon(&prev, self.n());
                let cur = self.ideal_component(d)?;
                Ok(cur.basis().iter().filter(|b| e.insert((*b).clone())).cloned().collect())
            }
        }
    }

    /// Degrees carrying minimal relations.
    pub fn generator_degrees(&self) -> Result<Vec<usize>> {
        let mut out = Vec::new();
        for d in 2..=self.cutoff {
            if !self.generators(d)?.is_empty() {
                out.push(d);
            }
        }
        Ok(out)
    }

    /// Materialize a product-backed space.
    pub fn to_explicit(&self) -> Result<Self> {
        if self.is_explicit() {
            return Ok(self.clone());
        }
        let kernels = (0..=self.cutoff).map(|d| self.ideal_component(d).map(Cow::into_owned)).collect::<Result<Vec<_>>>()?;
        Self::from_kernels(self.labels.clone(), kernels)
    }

    /// Coordinates of `v + K_d` in `A_d`.
    pub fn quotient_coords(&self, d: usize, v: &[F]) -> Result<Vec<F>> {
        self.check_degree(d)?;
        match &self.repr {
            Repr::Explicit(f) => f.kernels[d].quotient_coords(v),
            Repr::White { left, right, shuffles } => {
                let il = &shuffles[d];
                if v.len() != il.len() {
                    return Err(Error::DimensionMismatch { expected: il.len(), found: v.len() });
                }
                let grid = il.to_grid(v);
                let ny = il.y_len();
                let dl = left.dim(d);
                let mut half = Vec::with_capacity(ny);
                for iy in 0..ny {
                    let col: Vec<F> = grid.iter().map(|row| row[iy].clone()).collect();
                    half.push(if is_zero_vec(&col) { vec![F::zero(); dl] } else { left.quotient_coords(d, &col)? });
                }
                let mut out = Vec::with_capacity(dl * right.dim(d));
                for a in 0..dl {
                    let row: Vec<F> = half.iter().map(|h| h[a].clone()).collect();
                    if is_zero_vec(&row) {
                        out.extend(std::iter::repeat_with(F::zero).take(right.dim(d)));
                    } else {
                        out.extend(right.quotient_coords(d, &row)?);
                    }
                }
                Ok(out)
            }
        }
    }

    /// Whether `v ∈ K_d`.
    pub fn contains(&self, d: usize, v: &[F]) -> Result<bool> {
        self.check_degree(d)?;
        match &self.repr {
            Repr::Explicit(f) => f.kernels[d].contains(v),
            Repr::White { .. } => Ok(is_zero_vec(&self.quotient_coords(d, v)?)),
        }
    }

    /// Functionals realizing [`Self::quotient_coords`], one per coordinate of `A_d`.
    pub fn quotient_covectors(&self, d: usize) -> Result<Vec<Covector<F>>> {
        self.check_degree(d)?;
        match &self.repr {
            Repr::Explicit(f) => Ok(f.kernels[d].quotient_rows().into_iter().map(|r| Covector::Dense(Arc::new(r))).collect()),
            Repr::White { left, right, shuffles } => {
                let ls = left.quotient_covectors(d)?;
                let rs = right.quotient_covectors(d)?;
                let mut out = Vec::with_capacity(ls.len() * rs.len());
                for l in &ls {
                    for r in &rs {
                        out.push(Covector::Pair { left: Box::new(l.clone()), right: Box::new(r.clone()), shuffle: shuffles[d].clone() });
                    }
                }
                Ok(out)
            }
        }
    }

    /// First degree at which the two kernel filtrations differ.
    pub fn first_difference(&self, other: &QuantumSpace<F>) -> Result<Option<usize>> {
        if self.n() != other.n() {
            return Ok(Some(1));
        }
        for d in 0..=self.cutoff.min(other.cutoff) {
            if self.dim(d) != other.dim(d) || *self.ideal_component(d)? != *other.ideal_component(d)? {
                return Ok(Some(d));
            }
        }
        Ok(None)
    }

    pub fn same_filtration(&self, other: &QuantumSpace<F>) -> Result<bool> {
        Ok(self.first_difference(other)?.is_none())
    }

    /// Same space with a lower cutoff.
    pub fn truncate(&self, cutoff: usize) -> Self {
        if cutoff >= self.cutoff {
            return self.clone();
        }
        match &self.repr {
            Repr::Explicit(f) => Self::from_filtration(
                self.labels.clone(),
                cutoff,
                Filtration { kernels: f.kernels[..=cutoff].to_vec(), generators: f.generators[..=cutoff].to_vec() },
            ),
            Repr::White { left, right, .. } => {
                Self::white(Arc::new(left.truncate(cutoff)), Arc::new(right.truncate(cutoff))).with_labels(self.labels.clone()).expect("same n")
            }
        }
    }

    /// Quotient by additional homogeneous relations.
    pub fn quotient(&self, extra: &[(usize, Vec<F>)]) -> Result<Self> {
        let base = self.to_explicit()?;
        let Repr::Explicit(f) = &base.repr else { unreachable!() };
        for (d, v) in extra {
            if *d < 2 {
                return Err(Error::DegreeTooLow(*d));
            }
            if *d > self.cutoff {
                return Err(Error::AboveCutoff { degree: *d, cutoff: self.cutoff });
            }
            if v.len() != power(self.n(), *d) {
                return Err(Error::DimensionMismatch { expected: power(self.n(), *d), found: v.len() });
            }
        }
        Self::close(self.labels.clone(), self.cutoff, |d| {
            let mut rows = f.kernels[d].basis().to_vec();
            rows.extend(extra.iter().filter(|(e, _)| *e == d).map(|(_, v)| v.clone()));
            Ok(rows)
        })
    }

    /// Subalgebra generated by the degree-1 elements spanning `gens`.
    ///
    /// The result lives on `dim gens` generators (the basis rows of `gens`); its
    /// `K_d` is the kernel of `gens^{⊗d} -> A_d`.
    pub fn generated(&self, gens: &Subspace<F>) -> Result<Self> {
        if gens.ambient_dim() != self.n() {
            return Err(Error::DimensionMismatch { expected: self.n(), found: gens.ambient_dim() });
        }
        let k = gens.dim();
        let labels = if gens.basis().iter().all(|b| b.iter().filter(|c| !c.is_zero()).count() == 1) {
            gens.pivots().iter().map(|&p| self.labels[p].clone()).collect()
        } else {
            default_labels(k, "h")
        };
        let sparse_gens: Vec<Vec<(usize, F)>> =
            gens.basis().iter().map(|b| b.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect()).collect();
        let n = self.n();
        let mut kernels = vec![Subspace::zero(1)];
        let mut generators = vec![Vec::new()];
        if self.cutoff >= 1 {
            kernels.push(Subspace::zero(k));
            generators.push(Vec::new());
        }
        for d in 2..=self.cutoff {
            let lower = closure_echelon(&kernels[d - 1], k);
            let before = lower.rank();
            let kd = self.pullback_kernel(d, &sparse_gens, n, lower)?;
            // new generators are the basis vectors beyond the closure
            let mut e = closure_echelon(&kernels[d - 1], k);
            let gens_d: Vec<Vec<F>> = if kd.dim() == before { Vec::new() } else { kd.basis().iter().filter(|b| e.insert((*b).clone())).cloned().collect() };
            kernels.push(kd);
            generators.push(gens_d);
        }
        Ok(Self::from_filtration(labels, self.cutoff, Filtration { kernels, generators }))
    }

    /// `{ x ∈ (k-dim)^{⊗d} : G^{⊗d} x ∈ K_d }`, given a subspace `lower` already known to lie in it.
    fn pullback_kernel(&self, d: usize, gens: &[Vec<(usize, F)>], n: usize, lower: Echelon<F>) -> Result<Subspace<F>> {
        let k = gens.len();
        let len = power(k, d);
        let mut is_pivot = vec![false; len];
        for &p in lower.pivots() {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..len).filter(|&w| !is_pivot[w]).collect();
        let target = free.len();
        let lower_space = lower.into_subspace();
        if target == 0 {
            return Ok(lower_space);
        }
        // images of the free words, as sparse vectors in V^{⊗d}
        let columns: Vec<Vec<(usize, F)>> = free
            .iter()
            .map(|&w| {
                let mut acc: Vec<(usize, F)> = vec![(0, F::one())];
                for letter in crate::tensorspace::digits(w, k, d) {
                    let mut next = Vec::with_capacity(acc.len() * gens[letter].len());
                    for (i, a) in &acc {
                        for (j, b) in &gens[letter] {
                            next.push((i * n + j, a.mul_ref(b)));
                        }
                    }
                    acc = next;
                }
                acc
            })
            .collect();
        let mut covs = self.quotient_covectors(d)?;
        if !self.is_explicit() {
            covs.shuffle(&mut ChaCha8Rng::seed_from_u64(0x5eed_0000 + d as u64));
        }
        // kernel_of stops consuming covectors once the rank is full
        let extra = Subspace::kernel_of(target, covs.iter().map(|c| columns.iter().map(|col| c.eval_sparse(col)).collect()))?;
        if extra.is_zero() {
            return Ok(lower_space);
        }
        let lifted = extra.basis().iter().map(|x| {
            let mut v = vec![F::zero(); len];
            for (c, &w) in x.iter().zip(&free) {
                v[w] = c.clone();
            }
            v
        });
        lower_space.extend(lifted)
    }

    /// Twist every `K_d` by a linear map, keeping the generator space.
    pub(crate) fn map_kernels(&self, mut f: impl FnMut(usize, &[F]) -> Result<Vec<F>>) -> Result<Vec<Subspace<F>>> {
        let mut out = Vec::with_capacity(self.cutoff + 1);
        for d in 0..=self.cutoff {
            let k = self.ideal_component(d)?;
            let mut rows = Vec::with_capacity(k.dim());
            for b in k.basis() {
                rows.push(f(d, b)?);
            }
            out.push(Subspace::from_rows(k.ambient_dim(), rows)?);
        }
        Ok(out)
    }

    /// Whether the ideal-closure invariant holds at every degree (first failure otherwise).
    pub fn check_ideal_closure(&self) -> Result<Option<usize>> {
        for d in 2..=self.cutoff {
            let prev = self.ideal_component(d - 1)?;
            let cur = self.ideal_component(d)?;
            for r in closure_rows(&prev, self.n()) {
                if !cur.contains(&r)? {
                    return Ok(Some(d));
                }
            }
        }
        Ok(None)
    }
}

impl<F: Field> fmt::Debug for QuantumSpace<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = if self.is_explicit() { "explicit" } else { "white" };
        write!(f, "QuantumSpace({kind}; gens {:?}; hilbert {:?})", self.labels, self.hilbert())
    }
}

/// Algebra map between conic spaces, determined by its degree-1 block.
#[derive(Clone, Debug)]
pub struct GradedMap<F: Field> {
    pub source: Arc<QuantumSpace<F>>,
    pub target: Arc<QuantumSpace<F>>,
    /// `target.n() × source.n()`.
    pub f1: Matrix<F>,
}

/// Outcome of a morphism check, verified to the shared cutoff.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismReport<F> {
    pub ok: bool,
    pub checked_to: usize,
    pub failing_degree: Option<usize>,
    /// A source relation whose image escapes the target kernel.
    pub witness: Option<Vec<F>>,
}

impl<F: Field> GradedMap<F> {
    pub fn new(source: Arc<QuantumSpace<F>>, target: Arc<QuantumSpace<F>>, f1: Matrix<F>) -> Result<Self> {
        if f1.rows() != target.n() || f1.cols() != source.n() {
            return Err(Error::DimensionMismatch { expected: target.n() * source.n(), found: f1.rows() * f1.cols() });
        }
        Ok(GradedMap { source, target, f1 })
    }

    pub fn identity(space: Arc<QuantumSpace<F>>) -> Self {
        let n = space.n();
        GradedMap { source: space.clone(), target: space, f1: Matrix::identity(n) }
    }

    pub fn cutoff(&self) -> usize {
        self.source.cutoff().min(self.target.cutoff())
    }

    /// Degree-`d` action `f1^{⊗d}` on a vector.
    pub fn apply(&self, d: usize, v: &[F]) -> Result<Vec<F>> {
        power_apply(&self.f1, d, v)
    }

    /// `f1^{⊗d}(K_{source,d}) ⊆ K_{target,d}` for `2 <= d <= cutoff`.
    ///
    /// The target kernels form an ideal and `f1^{⊗}` is multiplicative on the
    /// tensor algebra, so the minimal relations of the source suffice.
    pub fn check_morphism(&self) -> Result<MorphismReport<F>> {
        self.check_with(|d| self.source.generators(d))
    }

    /// Same as [`Self::check_morphism`] but pushes every basis vector of every `K_d`.
    pub fn check_morphism_exhaustive(&self) -> Result<MorphismReport<F>> {
        self.check_with(|d| Ok(self.source.ideal_component(d)?.basis().to_vec()))
    }

    fn check_with(&self, rels: impl Fn(usize) -> Result<Vec<Vec<F>>>) -> Result<MorphismReport<F>> {
        let top = self.cutoff();
        for d in 2..=top {
            for r in rels(d)? {
                let img = self.apply(d, &r)?;
                if !self.target.contains(d, &img)? {
                    return Ok(MorphismReport { ok: false, checked_to: top, failing_degree: Some(d), witness: Some(r) });
                }
            }
        }
        Ok(MorphismReport { ok: true, checked_to: top, failing_degree: None, witness: None })
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &GradedMap<F>) -> Result<GradedMap<F>> {
        if first.target.n() != self.source.n() {
            return Err(Error::EndpointMismatch(format!("{} generators vs {}", first.target.n(), self.source.n())));
        }
        Ok(GradedMap { source: first.source.clone(), target: self.target.clone(), f1: self.f1.mul(&first.f1)? })
    }
}
