//! Koszul dual and the white, black and triangle products.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactla::{Field, Subspace};
use crate::qspace::{dual_label, pair_label, QuantumSpace};
use crate::tensorspace::{power, Interleaver};

fn require_cutoff<F: Field>(a: &QuantumSpace<F>, b: &QuantumSpace<F>) -> Result<usize> {
    if a.cutoff() != b.cutoff() {
        return Err(Error::CutoffMismatch(a.cutoff(), b.cutoff()));
    }
    Ok(a.cutoff())
}

/// Fails with the first degree above 2 carrying a minimal relation.
pub fn require_quadratic<F: Field>(a: &QuantumSpace<F>) -> Result<()> {
    match a.generator_degrees()?.into_iter().find(|&d| d != 2) {
        Some(d) => Err(Error::NotQuadratic(d)),
        None => Ok(()),
    }
}

/// Quadratic dual: relations `K_2^⊥` on the dual generators.
pub fn koszul_dual<F: Field>(a: &QuantumSpace<F>) -> Result<QuantumSpace<F>> {
    require_quadratic(a)?;
    let labels = a.labels().iter().map(|l| dual_label(l)).collect();
    if a.cutoff() < 2 {
        return Ok(QuantumSpace::free_labeled(labels, a.cutoff()));
    }
    let ann = a.ideal_component(2)?.annihilator();
    QuantumSpace::close(labels, a.cutoff(), |d| Ok(if d == 2 { ann.basis().to_vec() } else { Vec::new() }))
}

/// Segre product `(A∘B)_d = A_d ⊗ B_d`, stored through its factors.
pub fn white_product<F: Field>(a: &QuantumSpace<F>, b: &QuantumSpace<F>) -> Result<QuantumSpace<F>> {
    require_cutoff(a, b)?;
    Ok(QuantumSpace::white(Arc::new(a.clone()), Arc::new(b.clone())))
}

/// White product with every kernel computed, `interleave(K_A ⊗ V + V ⊗ K_B)`.
///
/// Only sensible for small carriers; used as an independent route in tests.
pub fn white_product_explicit<F: Field>(a: &QuantumSpace<F>, b: &QuantumSpace<F>) -> Result<QuantumSpace<F>> {
    let cutoff = require_cutoff(a, b)?;
    let labels = a.labels().iter().flat_map(|x| b.labels().iter().map(move |y| pair_label(x, y))).collect();
    let mut kernels = Vec::with_capacity(cutoff + 1);
    for d in 0..=cutoff {
        let il = Interleaver::new(d, a.n(), b.n());
        let ka = a.ideal_component(d)?;
        let kb = b.ideal_component(d)?;
        let mut rows = Vec::new();
        let (na, nb) = (power(a.n(), d), power(b.n(), d));
        for k in ka.basis() {
            for j in 0..nb {
                let mut e = vec![F::zero(); nb];
                e[j] = F::one();
                rows.push(il.tensor(k, &e));
            }
        }
        for k in kb.basis() {
            for i in 0..na {
                let mut e = vec![F::zero(); na];
                e[i] = F::one();
                rows.push(il.tensor(&e, k));
            }
        }
        kernels.push(Subspace::from_rows(il.len(), rows)?);
    }
    QuantumSpace::from_kernels(labels, kernels)
}

/// Labels `z_i^j` for the generator `b^j ⊗ a_i`, ordered with `j` outermost.
pub fn hom_labels<F: Field>(b: &QuantumSpace<F>, a: &QuantumSpace<F>) -> Vec<String> {
    let mut out = Vec::with_capacity(a.n() * b.n());
    for j in 0..b.n() {
        for i in 0..a.n() {
            out.push(format!("z{}_{}", i + 1, j + 1));
        }
    }
    out
}

/// Quadratic product on `Bdual₁ ⊗ A₁` with relations `interleave(R_Bdual ⊗ R_A)`.
pub fn black_product<F: Field>(bdual: &QuantumSpace<F>, a: &QuantumSpace<F>) -> Result<QuantumSpace<F>> {
    let cutoff = require_cutoff(bdual, a)?;
    require_quadratic(bdual)?;
    require_quadratic(a)?;
    let labels = bdual.labels().iter().flat_map(|x| a.labels().iter().map(move |y| pair_label(x, y))).collect();
    if cutoff < 2 {
        return Ok(QuantumSpace::free_labeled(labels, cutoff));
    }
    let il = Interleaver::new(2, bdual.n(), a.n());
    let rb = bdual.ideal_component(2)?;
    let ra = a.ideal_component(2)?;
    let rows: Vec<Vec<F>> = rb.basis().iter().flat_map(|x| ra.basis().iter().map(|y| il.tensor(x, y))).collect();
    QuantumSpace::close(labels, cutoff, |d| Ok(if d == 2 { rows.clone() } else { Vec::new() }))
}

/// The coHom carrier `B ▷ A`: degree-`r` relations `interleave(K_{B,r}^⊥ ⊗ K_{A,r})`.
pub fn triangle<F: Field>(b: &QuantumSpace<F>, a: &QuantumSpace<F>) -> Result<QuantumSpace<F>> {
    let cutoff = require_cutoff(b, a)?;
    let labels = hom_labels(b, a);
    QuantumSpace::close(labels, cutoff, |r| triangle_contribution(b, a, r, |_, v| Ok(v.to_vec()), |_, v| Ok(v.to_vec())))
}

/// Degree-`r` relations `interleave(g(K_{B,r}^⊥) ⊗ f(K_{A,r}))`.
pub(crate) fn triangle_contribution<F: Field>(
    b: &QuantumSpace<F>,
    a: &QuantumSpace<F>,
    r: usize,
    dual_map: impl Fn(usize, &[F]) -> Result<Vec<F>>,
    map: impl Fn(usize, &[F]) -> Result<Vec<F>>,
) -> Result<Vec<Vec<F>>> {
    let ka = a.ideal_component(r)?;
    if ka.is_zero() {
        return Ok(Vec::new());
    }
    let il = Interleaver::new(r, b.n(), a.n());
    let len = power(b.n(), r);
    let ann: Vec<Vec<F>> = b.quotient_covectors(r)?.iter().map(|c| dual_map(r, &c.to_dense(len))).collect::<Result<_>>()?;
    let rel: Vec<Vec<F>> = ka.basis().iter().map(|k| map(r, k)).collect::<Result<_>>()?;
    Ok(ann.iter().flat_map(|x| rel.iter().map(|y| il.tensor(x, y))).collect())
}
