//! Parsing of complex literals and class-function value lists.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Parses `a`, `bi`, `a+bi`, `a-bi`, `i`, `-i` with optional spaces.
/// Exponents (`1e-3+2i`) are accepted; `j` is not an alias for `i`.
pub fn parse_complex(s: &str) -> Result<Complex64> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || Error::Parse(format!("malformed complex literal {s:?}"));
    if t.is_empty() {
        return Err(bad());
    }
    let real = |p: &str| p.parse::<f64>().ok().filter(|x| x.is_finite()).ok_or_else(bad);
    let Some(body) = t.strip_suffix('i') else {
        return Ok(Complex64::new(real(&t)?, 0.0));
    };
    // Split before the last sign that is not the leading one and not part of
    // an exponent.
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(k) => (&body[..k], &body[k..]),
        None => ("", body),
    };
    let im = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        other => real(other)?,
    };
    let re = if re.is_empty() { 0.0 } else { real(re)? };
    Ok(Complex64::new(re, im))
}

/// Comma-separated complex literals.
pub fn parse_complex_list(s: &str) -> Result<Vec<Complex64>> {
    s.split(',').map(parse_complex).collect()
}

/// Comma-separated reals, e.g. `-2,2,-2,2`.
pub fn parse_f64_list(s: &str) -> Result<Vec<f64>> {
    s.split(',')
        .map(|p| p.trim().parse::<f64>().map_err(|_| Error::Parse(format!("malformed number {p:?}"))))
        .collect()
}

/// `400x400` or a single `400`.
pub fn parse_resolution(s: &str) -> Result<(usize, usize)> {
    let bad = || Error::Parse(format!("malformed resolution {s:?}"));
    let num = |p: &str| p.trim().parse::<usize>().ok().filter(|&n| n > 0).ok_or_else(bad);
    match s.split_once(['x', 'X']) {
        Some((a, b)) => Ok((num(a)?, num(b)?)),
        None => num(s).map(|n| (n, n)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn literals() {
        assert_eq!(parse_complex("1").unwrap(), c(1.0, 0.0));
        assert_eq!(parse_complex("1+0.1i").unwrap(), c(1.0, 0.1));
        assert_eq!(parse_complex(" 1 - 0.1 i ").unwrap(), c(1.0, -0.1));
        assert_eq!(parse_complex("-i").unwrap(), c(0.0, -1.0));
        assert_eq!(parse_complex("i").unwrap(), c(0.0, 1.0));
        assert_eq!(parse_complex("2.5i").unwrap(), c(0.0, 2.5));
        assert_eq!(parse_complex("-0.5-2i").unwrap(), c(-0.5, -2.0));
        assert_eq!(parse_complex("1e-3+2e+1i").unwrap(), c(1e-3, 20.0));
        assert_eq!(parse_complex("-1e-3").unwrap(), c(-1e-3, 0.0));
    }

    #[test]
    fn malformed() {
        for s in ["", "abc", "1+", "1++2i", "1+2j", "i1", "nan", "inf", "1+2ii"] {
            assert!(parse_complex(s).is_err(), "{s}");
        }
    }

    #[test]
    fn lists() {
        let v = parse_complex_list("1,1,1,1+0.1i,1-0.1i").unwrap();
        assert_eq!(v.len(), 5);
        assert_eq!(v[4], c(1.0, -0.1));
        assert_eq!(parse_f64_list("-2,2,-2,2").unwrap(), vec![-2.0, 2.0, -2.0, 2.0]);
        assert_eq!(parse_resolution("400x300").unwrap(), (400, 300));
        assert_eq!(parse_resolution("64").unwrap(), (64, 64));
        assert!(parse_resolution("0x3").is_err());
        assert!(parse_resolution("ax3").is_err());
    }
}
