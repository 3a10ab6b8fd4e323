//! Coordinates on tensor powers.
//!
//! A word `(i_1, ..., i_d)` over per-position alphabets of sizes `dims` is
//! indexed big-endian: the leftmost letter is the most significant digit.
//! Letters are 1-based in the public word API and 0-based everywhere else.

use crate::error::{Error, Result};
use crate::exactla::{dot, Field, Matrix};

/// Index of a 1-based word.
pub fn word_index(word: &[usize], dims: &[usize]) -> Result<usize> {
    if word.len() != dims.len() {
        return Err(Error::DimensionMismatch { expected: dims.len(), found: word.len() });
    }
    let mut idx = 0;
    for (position, (&letter, &dim)) in word.iter().zip(dims).enumerate() {
        if letter == 0 || letter > dim {
            return Err(Error::LetterOutOfRange { letter, dim, position });
        }
        idx = idx * dim + (letter - 1);
    }
    Ok(idx)
}

/// Inverse of [`word_index`].
pub fn index_word(index: usize, dims: &[usize]) -> Result<Vec<usize>> {
    let total: usize = dims.iter().product();
    if index >= total {
        return Err(Error::DimensionMismatch { expected: total, found: index });
    }
    let mut word = vec![0; dims.len()];
    let mut rest = index;
    for (slot, &dim) in word.iter_mut().zip(dims).rev() {
        *slot = rest % dim + 1;
        rest /= dim;
    }
    Ok(word)
}

/// 0-based letters of `index` in `n^degree`.
pub fn digits(index: usize, n: usize, degree: usize) -> Vec<usize> {
    let mut out = vec![0; degree];
    let mut rest = index;
    for slot in out.iter_mut().rev() {
        *slot = rest % n;
        rest /= n;
    }
    out
}

pub fn from_digits(letters: &[usize], n: usize) -> usize {
    letters.iter().fold(0, |acc, &l| acc * n + l)
}

pub fn power(n: usize, d: usize) -> usize {
    n.pow(d as u32)
}

/// Kronecker product in the big-endian convention.
pub fn kron<F: Field>(maps: &[Matrix<F>]) -> Matrix<F> {
    let mut acc = Matrix::identity(1);
    for m in maps {
        let (r1, c1) = (acc.rows(), acc.cols());
        let (r2, c2) = (m.rows(), m.cols());
        acc = Matrix::from_fn(r1 * r2, c1 * c2, |i, j| {
            let a: &F = acc.get(i / r2, j / c2);
            if a.is_zero() {
                return F::zero();
            }
            a.mul_ref(m.get(i % r2, j % c2))
        });
    }
    acc
}

/// `(maps[0] ⊗ ... ⊗ maps[d-1]) v` without forming the Kronecker product.
pub fn kron_apply<F: Field>(maps: &[&Matrix<F>], v: &[F]) -> Result<Vec<F>> {
    let expected: usize = maps.iter().map(|m| m.cols()).product();
    if v.len() != expected {
        return Err(Error::DimensionMismatch { expected, found: v.len() });
    }
    let mut cur = v.to_vec();
    // shape is (out dims of axes < t) x (in dims of axes >= t)
    for t in 0..maps.len() {
        let m = maps[t];
        let left: usize = maps[..t].iter().map(|m| m.rows()).product();
        let right: usize = maps[t + 1..].iter().map(|m| m.cols()).product();
        let (mi, mo) = (m.cols(), m.rows());
        if m.is_identity() {
            continue;
        }
        let mut next = vec![F::zero(); left * mo * right];
        for l in 0..left {
            for a in 0..mi {
                for r in 0..right {
                    let x = &cur[(l * mi + a) * right + r];
                    if x.is_zero() {
                        continue;
                    }
                    for b in 0..mo {
                        let c = m.get(b, a);
                        if !c.is_zero() {
                            let slot = &mut next[(l * mo + b) * right + r];
                            *slot = slot.add_ref(&c.mul_ref(x));
                        }
                    }
                }
            }
        }
        cur = next;
    }
    Ok(cur)
}

/// `v^T (maps[0] ⊗ ... ⊗ maps[d-1])`, the pullback of a covector.
pub fn kron_apply_transpose<F: Field>(maps: &[&Matrix<F>], v: &[F]) -> Result<Vec<F>> {
    let ts: Vec<Matrix<F>> = maps.iter().map(|m| m.transpose()).collect();
    let refs: Vec<&Matrix<F>> = ts.iter().collect();
    kron_apply(&refs, v)
}

/// `d`-fold tensor power of one map applied to `v`.
pub fn power_apply<F: Field>(m: &Matrix<F>, d: usize, v: &[F]) -> Result<Vec<F>> {
    let maps = vec![m; d];
    kron_apply(&maps, v)
}

/// Coordinate shuffle `(x_1..x_r) ⊗ (y_1..y_r) -> (x_1 y_1)..(x_r y_r)`.
///
/// The source index is `ix * dy^r + iy`; the pair letter `(x, y)` has index
/// `x * dy + y`.
#[derive(Clone, Debug)]
pub struct Interleaver {
    r: usize,
    dx: usize,
    dy: usize,
    forward: Vec<usize>,
    backward: Vec<(u32, u32)>,
}

impl Interleaver {
    pub fn new(r: usize, dx: usize, dy: usize) -> Self {
        let nx = power(dx, r);
        let ny = power(dy, r);
        let mut forward = Vec::with_capacity(nx * ny);
        for ix in 0..nx {
            let xs = digits(ix, dx, r);
            for iy in 0..ny {
                let ys = digits(iy, dy, r);
                let idx = xs.iter().zip(&ys).fold(0, |acc, (&x, &y)| acc * (dx * dy) + x * dy + y);
                forward.push(idx);
            }
        }
        let mut backward = vec![(0, 0); forward.len()];
        for (i, &j) in forward.iter().enumerate() {
            backward[j] = ((i / ny) as u32, (i % ny) as u32);
        }
        Interleaver { r, dx, dy, forward, backward }
    }

    pub fn degree(&self) -> usize {
        self.r
    }

    pub fn len(&self) -> usize {
        self.forward.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forward.is_empty()
    }

    /// Number of `y`-words, i.e. the stride of the source layout.
    pub fn y_len(&self) -> usize {
        power(self.dy, self.r)
    }

    pub fn x_len(&self) -> usize {
        power(self.dx, self.r)
    }

    pub fn index(&self, ix: usize, iy: usize) -> usize {
        self.forward[ix * self.y_len() + iy]
    }

    /// `(ix, iy)` for an interleaved index.
    pub fn split(&self, idx: usize) -> (usize, usize) {
        let (ix, iy) = self.backward[idx];
        (ix as usize, iy as usize)
    }

    pub fn apply<F: Field>(&self, v: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); v.len()];
        for (i, x) in v.iter().enumerate() {
            if !x.is_zero() {
                out[self.forward[i]] = x.clone();
            }
        }
        out
    }

    pub fn invert<F: Field>(&self, w: &[F]) -> Vec<F> {
        self.forward.iter().map(|&j| w[j].clone()).collect()
    }

    /// Interleaved image of `x ⊗ y`.
    pub fn tensor<F: Field>(&self, x: &[F], y: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); self.len()];
        let ny = self.y_len();
        for (ix, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (iy, b) in y.iter().enumerate() {
                if !b.is_zero() {
                    out[self.forward[ix * ny + iy]] = a.mul_ref(b);
                }
            }
        }
        out
    }

    /// De-interleave into a `x_len × y_len` grid, row-major.
    pub fn to_grid<F: Field>(&self, w: &[F]) -> Vec<Vec<F>> {
        let ny = self.y_len();
        (0..self.x_len()).map(|ix| (0..ny).map(|iy| w[self.forward[ix * ny + iy]].clone()).collect()).collect()
    }

    pub fn matrix<F: Field>(&self) -> Matrix<F> {
        let n = self.len();
        let mut m = Matrix::zeros(n, n);
        for (i, &j) in self.forward.iter().enumerate() {
            m.set(j, i, F::one());
        }
        m
    }
}

/// Permutation matrix of the shuffle `(x_1..x_r)⊗(y_1..y_r) -> (x_1 y_1)..(x_r y_r)`.
pub fn interleave<F: Field>(r: usize, dim_x: usize, dim_y: usize) -> Matrix<F> {
    Interleaver::new(r, dim_x, dim_y).matrix()
}

/// `<f, x>` between `(V*)^{⊗d}` and `V^{⊗d}` in dual bases, without factor reversal.
pub fn pairing<F: Field>(f: &[F], x: &[F]) -> Result<F> {
    if f.len() != x.len() {
        return Err(Error::DimensionMismatch { expected: f.len(), found: x.len() });
    }
    Ok(dot(f, x))
}

/// Tensor product of two coordinate vectors.
pub fn tensor_vec<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a {
        for y in b {
            out.push(if x.is_zero() || y.is_zero() { F::zero() } else { x.mul_ref(y) });
        }
    }
    out
}
