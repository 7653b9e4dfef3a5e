//! Text form: `x^3+2x+1 mod 3`. Terms are joined by `+`, coefficients are
//! decimal residues below the modulus, and each degree appears at most once.

use std::str::FromStr;

use super::{ModPolynomial, PolyError};

fn parse_err(token: &str, reason: &str) -> PolyError {
    PolyError::Parse {
        token: token.to_string(),
        reason: reason.to_string(),
    }
}

fn parse_u64(token: &str, what: &str) -> Result<u64, PolyError> {
    if token.is_empty() || !token.bytes().all(|b| b.is_ascii_digit()) {
        return Err(parse_err(token, &format!("{what} must be a decimal integer")));
    }
    token
        .parse()
        .map_err(|_| parse_err(token, &format!("{what} is out of range")))
}

fn parse_term(term: &str, n: u64) -> Result<(usize, u64), PolyError> {
    let Some(x_at) = term.find('x') else {
        let c = parse_u64(term, "coefficient")?;
        return Ok((0, check_residue(term, c, n)?));
    };
    let (coeff_part, rest) = term.split_at(x_at);
    let c = if coeff_part.is_empty() {
        1
    } else {
        check_residue(term, parse_u64(coeff_part, "coefficient")?, n)?
    };
    let rest = &rest[1..];
    let degree = if rest.is_empty() {
        1
    } else if let Some(exp) = rest.strip_prefix('^') {
        parse_u64(exp, "exponent")? as usize
    } else {
        return Err(parse_err(term, "expected '^' after x"));
    };
    Ok((degree, c))
}

fn check_residue(token: &str, c: u64, n: u64) -> Result<u64, PolyError> {
    if c >= n {
        return Err(parse_err(token, &format!("coefficient is not a residue mod {n}")));
    }
    Ok(c)
}

impl ModPolynomial {
    /// Parses the term list alone, with the modulus supplied separately.
    pub fn parse_terms(expr: &str, n: u64) -> Result<Self, PolyError> {
        if n < 2 {
            return Err(PolyError::InvalidModulus(n));
        }
        let expr = expr.trim();
        if expr.is_empty() {
            return Err(parse_err(expr, "empty polynomial"));
        }
        let mut coeffs: Vec<Option<u64>> = Vec::new();
        for raw in expr.split('+') {
            let term = raw.trim();
            if term.is_empty() || term.contains(char::is_whitespace) {
                return Err(parse_err(raw, "malformed term"));
            }
            let (degree, c) = parse_term(term, n)?;
            if coeffs.len() <= degree {
                coeffs.resize(degree + 1, None);
            }
            if coeffs[degree].is_some() {
                return Err(parse_err(term, "degree appears twice"));
            }
            coeffs[degree] = Some(c);
        }
        ModPolynomial::new(n, coeffs.into_iter().map(|c| c.unwrap_or(0)).collect())
    }
}

impl FromStr for ModPolynomial {
    type Err = PolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (expr, modulus) = s
            .rsplit_once(" mod ")
            .ok_or_else(|| parse_err(s, "expected '<terms> mod <n>'"))?;
        let n = parse_u64(modulus.trim(), "modulus")?;
        Self::parse_terms(expr, n)
    }
}
