use std::fmt::{Debug, Display};
use std::hash::Hash;

/// An exact, computable field.
///
/// Arithmetic goes through the `*_ref` methods so that generic code never has
/// to clone operands in inner loops. Every value is kept in canonical form, so
/// `==` is field equality.
pub trait Field: Clone + Eq + Hash + Debug + Display + Send + Sync + 'static {
    /// Tag used in algebra files and reports (`"Q"` or `"Q(q)"`).
    const NAME: &'static str;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;

    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self) -> Option<Self>;

    fn from_i64(v: i64) -> Self;
    /// `num / den`; `None` when `den == 0`.
    fn from_ratio(num: i64, den: i64) -> Option<Self> {
        Self::from_i64(den).inv().map(|d| Self::from_i64(num).mul_ref(&d))
    }

    /// The transcendental parameter `q`, when the field has one.
    fn parameter() -> Option<Self>;

    /// `self - a * b`, the elimination kernel.
    fn sub_mul(&self, a: &Self, b: &Self) -> Self {
        if a.is_zero() || b.is_zero() {
            return self.clone();
        }
        self.sub_ref(&a.mul_ref(b))
    }

    fn div_ref(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.mul_ref(&i))
    }

    fn pow_i(&self, e: i64) -> Option<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Self::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul_ref(&sq);
            }
        }
        Some(acc)
    }

    /// Textual form accepted back by the scalar parser.
    fn to_literal(&self) -> String {
        self.to_string()
    }

    /// Whether `to_literal` can lead a product without parentheses.
    fn is_atomic(&self) -> bool;
}
