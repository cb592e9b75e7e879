//! Text form `a + b*i1 + c*i2 + d*j`.

use std::fmt;
use std::str::FromStr;

use super::Bicomplex;
use crate::error::Error;

/// Shortest decimal that parses back to the same `f64`.
///
/// Plain notation in the usual range, scientific notation for very large
/// or very small magnitudes.
pub fn format_real(x: f64) -> String {
    let a = x.abs();
    if a == 0.0 || (1e-5..1e16).contains(&a) || !x.is_finite() {
        format!("{x}")
    } else {
        format!("{x:e}")
    }
}

impl fmt::Display for Bicomplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_real(self.w0))?;
        for (value, unit) in [(self.w1, "i1"), (self.w2, "i2"), (self.w3, "j")] {
            let sign = if value.is_sign_negative() { '-' } else { '+' };
            write!(f, " {sign} {}*{unit}", format_real(value.abs()))?;
        }
        Ok(())
    }
}

impl FromStr for Bicomplex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty bicomplex literal".into()));
        }
        let bad = |msg: &str| Error::Parse(format!("{msg} in bicomplex literal {s:?}"));

        // Split into signed terms; a sign directly after an exponent marker stays in the number.
        let bytes = compact.as_bytes();
        let mut terms = Vec::new();
        let mut start = 0;
        for i in 1..bytes.len() {
            let c = bytes[i];
            if (c == b'+' || c == b'-') && !matches!(bytes[i - 1], b'e' | b'E' | b'*' | b'+' | b'-') {
                terms.push(&compact[start..i]);
                start = i;
            }
        }
        terms.push(&compact[start..]);

        let mut w = [0.0f64; 4];
        for term in terms {
            let (negative, body) = match term.as_bytes().first() {
                Some(b'+') => (false, &term[1..]),
                Some(b'-') => (true, &term[1..]),
                _ => (false, term),
            };
            if body.is_empty() {
                return Err(bad("dangling sign"));
            }
            let (coeff, unit) = match body.split_once('*') {
                Some((c, u)) => (Some(c), u),
                None if body.ends_with("i1") || body.ends_with("i2") || body.ends_with('j') => {
                    let cut = if body.ends_with('j') { body.len() - 1 } else { body.len() - 2 };
                    let c = &body[..cut];
                    (if c.is_empty() { None } else { Some(c) }, &body[cut..])
                }
                None => (Some(body), ""),
            };
            let slot = match unit {
                "" => 0,
                "i1" => 1,
                "i2" => 2,
                "j" => 3,
                other => return Err(bad(&format!("unknown unit {other:?}"))),
            };
            let mut value = match coeff {
                None => 1.0,
                Some(c) => c.parse::<f64>().map_err(|_| bad(&format!("bad number {c:?}")))?,
            };
            if negative {
                value = -value;
            }
            w[slot] += value;
        }
        Ok(Bicomplex::from_array(w))
    }
}
