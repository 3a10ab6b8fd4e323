#![allow(dead_code)]

use cohom_core::{Field, Matrix, QuantumSpace, Rat, RatFunc, Subspace};

pub const D: usize = 4;

pub fn q() -> RatFunc {
    RatFunc::q()
}

pub fn int<F: Field>(n: i64) -> F {
    F::from_i64(n)
}

pub fn plane<F: Field>(q: &F) -> QuantumSpace<F> {
    QuantumSpace::quantum_plane(q, D)
}

pub fn plane_q() -> QuantumSpace<RatFunc> {
    plane(&q())
}

pub fn plane_2() -> QuantumSpace<Rat> {
    plane(&Rat::from_i64(2))
}

pub fn diag<F: Field>(entries: &[i64]) -> Matrix<F> {
    Matrix::diagonal(&entries.iter().map(|&e| F::from_i64(e)).collect::<Vec<_>>())
}

/// Coordinate vector of `Σ c · word` in `n^d`, words given by 0-based letters.
pub fn vector<F: Field>(n: usize, terms: &[(F, &[usize])]) -> Vec<F> {
    let d = terms.first().map_or(0, |t| t.1.len());
    let mut v = vec![F::zero(); n.pow(d as u32)];
    for (c, w) in terms {
        assert_eq!(w.len(), d);
        let idx = w.iter().fold(0, |acc, &l| acc * n + l);
        v[idx] = v[idx].add_ref(c);
    }
    v
}

/// `K_d` of the quantum plane from the rewriting rule `y x -> q^{-1} x y`:
/// every word equals `q^{-inv(w)} x^a y^b`, where `inv` counts pairs `y` before `x`.
pub fn plane_kernel_oracle<F: Field>(q: &F, d: usize) -> Subspace<F> {
    let n = 2usize;
    let len = n.pow(d as u32);
    let qi = q.inv().unwrap();
    let mut rows = Vec::new();
    for idx in 0..len {
        let word: Vec<usize> = (0..d).rev().map(|k| (idx / n.pow(k as u32)) % n).collect();
        let mut inv = 0i64;
        let mut ys = 0i64;
        for &l in &word {
            if l == 1 {
                ys += 1;
            } else {
                inv += ys;
            }
        }
        let xs = word.iter().filter(|&&l| l == 0).count();
        let normal: Vec<usize> = std::iter::repeat_n(0, xs).chain(std::iter::repeat_n(1, d - xs)).collect();
        let nidx = normal.iter().fold(0, |acc, &l| acc * n + l);
        if nidx == idx {
            continue;
        }
        let mut v = vec![F::zero(); len];
        v[idx] = F::one();
        v[nidx] = qi.pow_i(inv).unwrap().neg_ref();
        rows.push(v);
    }
    Subspace::from_rows(len, rows).unwrap()
}

/// The three degree-2 relations of `e(plane)` on `a = z₁¹, b = z₂¹, c = z₁², d = z₂²`.
pub fn end_plane_oracle<F: Field>(q: &F) -> Subspace<F> {
    let (a, b, c, d) = (0, 1, 2, 3);
    let one = F::one();
    let qi = q.inv().unwrap();
    let rels = vec![
        vector(4, &[(one.clone(), &[a, b]), (q.neg_ref(), &[b, a])]),
        vector(4, &[(one.clone(), &[c, d]), (q.neg_ref(), &[d, c])]),
        vector(4, &[(one.clone(), &[a, d]), (one.neg_ref(), &[d, a]), (q.neg_ref(), &[b, c]), (qi, &[c, b])]),
    ];
    Subspace::from_rows(16, rels).unwrap()
}
