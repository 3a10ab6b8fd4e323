//! The relation language: noncommutative polynomials in named generators with
//! scalar coefficients, e.g. `x*y - q*y*x` or `(q^2-1)/(q)*a*d`.
//!
//! Grammar (`^` binds tightest, `/` only divides by scalars):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' integer)?
//! atom   := integer | identifier | '(' expr ')'
//! ```

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exactla::Field;
use crate::tensorspace::{digits, from_digits, power};

/// Noncommutative polynomial: word (0-based letters) to coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NcPoly<F>(BTreeMap<Vec<usize>, F>);

impl<F: Field> NcPoly<F> {
    fn scalar(c: F) -> Self {
        let mut m = BTreeMap::new();
        if !c.is_zero() {
            m.insert(Vec::new(), c);
        }
        NcPoly(m)
    }

    fn letter(i: usize) -> Self {
        let mut m = BTreeMap::new();
        m.insert(vec![i], F::one());
        NcPoly(m)
    }

    fn add(mut self, other: &Self, sign: bool) -> Self {
        for (w, c) in &other.0 {
            let c = if sign { c.clone() } else { c.neg_ref() };
            let e = self.0.entry(w.clone()).or_insert_with(F::zero);
            *e = e.add_ref(&c);
            if e.is_zero() {
                self.0.remove(w);
            }
        }
        self
    }

    fn mul(&self, other: &Self) -> Self {
        let mut out = NcPoly(BTreeMap::new());
        for (w1, c1) in &self.0 {
            for (w2, c2) in &other.0 {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                out = out.add(&NcPoly([(w, c1.mul_ref(c2))].into_iter().collect()), true);
            }
        }
        out
    }

    /// The scalar value if the polynomial has degree 0 only.
    fn as_scalar(&self) -> Option<F> {
        match self.0.len() {
            0 => Some(F::zero()),
            1 => self.0.get(&Vec::new()).cloned(),
            _ => None,
        }
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut ds: Vec<usize> = self.0.keys().map(Vec::len).collect();
        ds.sort_unstable();
        ds.dedup();
        ds
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &F)> {
        self.0.iter()
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    generators: &'a [String],
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr<F: Field>(&mut self) -> Result<NcPoly<F>> {
        let mut acc = self.term()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = acc.add(&rhs, c == b'+');
        }
        Ok(acc)
    }

    fn term<F: Field>(&mut self) -> Result<NcPoly<F>> {
        let mut acc: NcPoly<F> = self.unary()?;
        while let Some(c @ (b'*' | b'/')) = self.peek() {
            self.pos += 1;
            let at = self.pos;
            let rhs = self.unary()?;
            if c == b'*' {
                acc = acc.mul(&rhs);
            } else {
                let Some(s) = rhs.as_scalar() else {
                    return Err(Error::Parse { pos: at, msg: "division by a non-scalar".into() });
                };
                let Some(inv) = s.inv() else {
                    return Err(Error::Parse { pos: at, msg: "division by zero".into() });
                };
                acc = acc.mul(&NcPoly::scalar(inv));
            }
        }
        Ok(acc)
    }

    fn unary<F: Field>(&mut self) -> Result<NcPoly<F>> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            let v = self.unary()?;
            return Ok(NcPoly::scalar(F::zero()).add(&v, false));
        }
        if self.peek() == Some(b'+') {
            self.pos += 1;
            return self.unary();
        }
        self.power()
    }

    fn power<F: Field>(&mut self) -> Result<NcPoly<F>> {
        let base: NcPoly<F> = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let neg = if self.src.get(self.pos) == Some(&b'-') {
                self.pos += 1;
                true
            } else {
                false
            };
            let at = self.pos;
            let e = self.integer()?;
            let e = usize::try_from(e).map_err(|_| Error::Parse { pos: at, msg: "exponent too large".into() })?;
            if neg {
                let Some(s) = base.as_scalar() else {
                    return Err(Error::Parse { pos: at, msg: "negative power of a non-scalar".into() });
                };
                let Some(v) = s.pow_i(-(e as i64)) else {
                    return Err(Error::Parse { pos: at, msg: "division by zero".into() });
                };
                return Ok(NcPoly::scalar(v));
            }
            let mut acc = NcPoly::scalar(F::one());
            for _ in 0..e {
                acc = acc.mul(&base);
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<u64> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an integer");
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        s.parse::<u64>().map_err(|_| Error::Parse { pos: start, msg: "integer too large".into() })
    }

    fn atom<F: Field>(&mut self) -> Result<NcPoly<F>> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let at = self.pos;
                let n = self.integer()?;
                let n = i64::try_from(n).map_err(|_| Error::Parse { pos: at, msg: "integer too large".into() })?;
                Ok(NcPoly::scalar(F::from_i64(n)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_' || self.src[self.pos] == b'\'') {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                if let Some(i) = self.generators.iter().position(|g| g == name) {
                    return Ok(NcPoly::letter(i));
                }
                if name == "q" {
                    if let Some(q) = F::parameter() {
                        return Ok(NcPoly::scalar(q));
                    }
                }
                Err(Error::Parse { pos: start, msg: format!("unknown identifier `{name}` over {}", F::NAME) })
            }
            Some(c) => self.err(format!("unexpected character `{}`", c as char)),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parse an arbitrary polynomial in the given generators.
pub fn parse_poly<F: Field>(text: &str, generators: &[String]) -> Result<NcPoly<F>> {
    if !text.is_ascii() {
        let pos = text.char_indices().find(|(_, c)| !c.is_ascii()).map_or(0, |(i, _)| i);
        return Err(Error::Parse { pos, msg: "non-ASCII character".into() });
    }
    let mut p = Parser { src: text.as_bytes(), pos: 0, generators };
    let v = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(v)
}

/// Parse a scalar literal such as `3/4`, `q^2-1` or `(q^2-1)/(q)`.
pub fn parse_scalar<F: Field>(text: &str) -> Result<F> {
    let v = parse_poly::<F>(text, &[])?;
    v.as_scalar().ok_or_else(|| Error::Parse { pos: 0, msg: "not a scalar".into() })
}

/// Parse a homogeneous relation into `(degree, coordinates in V^{⊗degree})`.
pub fn parse_relation<F: Field>(text: &str, generators: &[String]) -> Result<(usize, Vec<F>)> {
    let v = parse_poly::<F>(text, generators)?;
    let degrees = v.degrees();
    match degrees.as_slice() {
        [] => Err(Error::Invalid(format!("relation `{text}` is zero"))),
        [d] => {
            let n = generators.len();
            let mut out = vec![F::zero(); power(n, *d)];
            for (w, c) in v.terms() {
                out[from_digits(w, n)] = c.clone();
            }
            Ok((*d, out))
        }
        _ => Err(Error::Inhomogeneous(degrees)),
    }
}

/// Render a coordinate vector of `V^{⊗degree}` in the relation language.
pub fn print_relation<F: Field>(v: &[F], degree: usize, generators: &[String]) -> String {
    let n = generators.len();
    let mut out = String::new();
    for (idx, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let word: Vec<&str> = digits(idx, n, degree).into_iter().map(|l| generators[l].as_str()).collect();
        let (neg, mag) = if c.is_atomic() || !c.neg_ref().is_atomic() { (false, c.clone()) } else { (true, c.neg_ref()) };
        let coeff = if mag.is_atomic() { mag.to_literal() } else { format!("({})", mag.to_literal()) };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if word.is_empty() {
            out.push_str(&coeff);
        } else {
            if !mag.is_one() {
                out.push_str(&coeff);
                out.push('*');
            }
            out.push_str(&word.join("*"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{Rat, RatFunc};

    fn gens(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn quantum_plane_relation() {
        let (d, v) = parse_relation::<RatFunc>("x*y - q*y*x", &gens(&["x", "y"])).unwrap();
        assert_eq!(d, 2);
        let q = RatFunc::q();
        assert_eq!(v, vec![RatFunc::zero(), RatFunc::one(), q.neg_ref(), RatFunc::zero()]);
    }

    #[test]
    fn cubic_monomial() {
        let (d, v) = parse_relation::<Rat>("x*x*y", &gens(&["x", "y"])).unwrap();
        assert_eq!(d, 3);
        assert!(v[1].is_one());
        assert_eq!(v.iter().filter(|c| !c.is_zero()).count(), 1);
        let (_, w) = parse_relation::<Rat>("x^2*y", &gens(&["x", "y"])).unwrap();
        assert_eq!(v, w);
    }

    #[test]
    fn inhomogeneous_rejected() {
        let e = parse_relation::<Rat>("x + y*y", &gens(&["x", "y"])).unwrap_err();
        assert_eq!(e, Error::Inhomogeneous(vec![1, 2]));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let g = gens(&["x", "y"]);
        assert!(matches!(parse_relation::<Rat>("x*y +", &g), Err(Error::Parse { pos: 5, .. })));
        assert!(matches!(parse_relation::<Rat>("x*z", &g), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!(parse_relation::<Rat>("q*x*y", &g), Err(Error::Parse { .. })));
        assert!(matches!(parse_relation::<Rat>("x/y", &g), Err(Error::Parse { .. })));
        assert!(matches!(parse_relation::<Rat>("(x*y", &g), Err(Error::Parse { .. })));
    }

    #[test]
    fn scalar_literals() {
        assert_eq!(parse_scalar::<Rat>("3/4").unwrap(), Rat::new(3, 4));
        assert_eq!(parse_scalar::<Rat>("-6/8").unwrap(), Rat::new(-3, 4));
        let f = parse_scalar::<RatFunc>("(q^2-1)/(q)").unwrap();
        let q = RatFunc::q();
        assert_eq!(f, q.mul_ref(&q).sub_ref(&RatFunc::one()).div_ref(&q).unwrap());
        assert_eq!(parse_scalar::<RatFunc>("q^-2").unwrap(), q.pow_i(-2).unwrap());
        assert!(parse_scalar::<Rat>("1/0").is_err());
    }

    #[test]
    fn printed_relations_parse_back() {
        let g = gens(&["a", "b", "c", "d"]);
        for text in ["a*d - d*a - q*b*c + q^-1*c*b", "(q^2-1)/(q)*a*b + 3/2*c*c", "-2*a*a*b", "(1-q)*a*b - (q+1)/(q-2)*b*a"] {
            let (d, v) = parse_relation::<RatFunc>(text, &g).unwrap();
            let printed = print_relation(&v, d, &g);
            let (d2, v2) = parse_relation::<RatFunc>(&printed, &g).unwrap();
            assert_eq!((d, v), (d2, v2), "{printed}");
        }
    }
}
