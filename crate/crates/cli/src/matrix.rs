//! Matrix literals for σ: `diag(1, q, 3/2)` or row-major `[[1, 0], [0, q]]`.

use cohom_core::dsl::parse_scalar;
use cohom_core::{Error, Field, Matrix, Result};

/// Split on commas outside parentheses and brackets.
fn split_commas(s: &str) -> Vec<&str> {
    let (mut out, mut depth, mut start) = (Vec::new(), 0i32, 0);
    for (i, c) in s.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            ',' if depth == 0 => {
                out.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(s[start..].trim());
    out.retain(|t| !t.is_empty());
    out
}

fn scalars<F: Field>(s: &str) -> Result<Vec<F>> {
    split_commas(s).into_iter().map(parse_scalar).collect()
}

pub fn parse_matrix<F: Field>(text: &str) -> Result<Matrix<F>> {
    let t = text.trim();
    if let Some(inner) = t.strip_prefix("diag(").and_then(|r| r.strip_suffix(')')) {
        let d = scalars::<F>(inner)?;
        if d.is_empty() {
            return Err(Error::Invalid("empty diag()".into()));
        }
        return Ok(Matrix::diagonal(&d));
    }
    let inner = t
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| Error::Invalid(format!("matrix literal `{t}`: expected diag(...) or [[..],[..]]")))?;
    let rows = split_commas(inner)
        .into_iter()
        .map(|row| {
            let r = row.strip_prefix('[').and_then(|r| r.strip_suffix(']')).ok_or_else(|| Error::Invalid(format!("row `{row}` is not bracketed")))?;
            scalars::<F>(r)
        })
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use cohom_core::{Rat, RatFunc};

    #[test]
    fn diagonal_and_rows_agree() {
        let a = parse_matrix::<RatFunc>("diag(2, q^-1)").unwrap();
        let b = parse_matrix::<RatFunc>("[[2, 0], [0, 1/q]]").unwrap();
        assert_eq!(a, b);
        let c = parse_matrix::<Rat>("[[1,(1+2)/4],[0,1]]").unwrap();
        assert_eq!(c, Matrix::from_rows(vec![vec![Rat::from_i64(1), Rat::new(3, 4)], vec![Rat::zero(), Rat::one()]]).unwrap());
    }

    #[test]
    fn malformed() {
        assert!(parse_matrix::<Rat>("diag()").is_err());
        assert!(parse_matrix::<Rat>("[[1,2],[3]]").is_err());
        assert!(parse_matrix::<Rat>("[1,2]").is_err());
        assert!(parse_matrix::<Rat>("diag(q)").is_err());
        assert!(parse_matrix::<Rat>("(1,2)").is_err());
    }
}
