use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `Σ_k c_k u^k`, stored sparsely with positive coefficients.
///
/// Prints with ascending exponents, e.g. `5 + u + 2u^2 + u^4`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct InDegreePolynomial {
    terms: BTreeMap<usize, usize>,
}

impl InDegreePolynomial {
    /// Counts each degree once.
    pub fn from_degrees(degrees: impl IntoIterator<Item = usize>) -> Self {
        let mut terms = BTreeMap::new();
        for d in degrees {
            *terms.entry(d).or_insert(0) += 1;
        }
        InDegreePolynomial { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut p = InDegreePolynomial::default();
        for (k, c) in terms {
            if c > 0 {
                *p.terms.entry(k).or_insert(0) += c;
            }
        }
        p
    }

    pub fn terms(&self) -> &BTreeMap<usize, usize> {
        &self.terms
    }

    pub fn coefficient(&self, exponent: usize) -> usize {
        self.terms.get(&exponent).copied().unwrap_or(0)
    }

    /// Value at `u = 1`: the number of vertices.
    pub fn at_one(&self) -> usize {
        self.terms.values().sum()
    }

    /// Derivative at `u = 1`: the total in-degree.
    pub fn derivative_at_one(&self) -> usize {
        self.terms.iter().map(|(k, c)| k * c).sum()
    }

    pub fn evaluate(&self, u: f64) -> f64 {
        self.terms.iter().map(|(&k, &c)| c as f64 * u.powi(k as i32)).sum()
    }

    /// Whether the total in-degree equals `|S| · |V|`.
    pub fn satisfies_checksum(&self, endo_count: usize) -> bool {
        self.derivative_at_one() == endo_count * self.at_one()
    }
}

impl fmt::Display for InDegreePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(&k, &c)| {
                let coeff = if c == 1 && k > 0 { String::new() } else { c.to_string() };
                match k {
                    0 => coeff,
                    1 => format!("{coeff}u"),
                    _ => format!("{coeff}u^{k}"),
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl FromStr for InDegreePolynomial {
    type Err = Error;

    /// Accepts the printed form, with or without spaces, and `u^{12}` braces.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |t: &str| Error::Format(format!("cannot read polynomial term `{t}` in `{s}`"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact == "0" {
            return Ok(InDegreePolynomial::default());
        }
        let mut terms = Vec::new();
        for term in compact.split('+') {
            if term.is_empty() {
                return Err(bad(term));
            }
            let (coeff, exp) = match term.find('u') {
                None => (term, None),
                Some(i) => (&term[..i], Some(&term[i + 1..])),
            };
            let c = if coeff.is_empty() { 1 } else { coeff.parse::<usize>().map_err(|_| bad(term))? };
            let k = match exp {
                None => 0,
                Some("") => 1,
                Some(e) => {
                    let e = e.strip_prefix('^').ok_or_else(|| bad(term))?;
                    let e = e.strip_prefix('{').and_then(|e| e.strip_suffix('}')).unwrap_or(e);
                    e.parse::<usize>().map_err(|_| bad(term))?
                }
            };
            terms.push((k, c));
        }
        Ok(InDegreePolynomial::from_terms(terms))
    }
}

impl Serialize for InDegreePolynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for InDegreePolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        let p = InDegreePolynomial::from_degrees([0, 0, 1, 2, 4, 0, 2, 0, 0]);
        assert_eq!(p.to_string(), "5 + u + 2u^2 + u^4");
        assert_eq!(p.at_one(), 9);
        assert_eq!(p.derivative_at_one(), 9);
        assert_eq!(InDegreePolynomial::from_degrees([9, 9, 9]).to_string(), "3u^9");
        assert_eq!(InDegreePolynomial::from_degrees([1]).to_string(), "u");
        assert_eq!(InDegreePolynomial::default().to_string(), "0");
    }

    #[test]
    fn parse_round_trip() {
        for s in ["5 + u + 2u^2 + u^4", "3u^9", "4u^8 + 4u^24", "u", "1", "0", "24u^8 + 4u^24 + 4u^52"] {
            assert_eq!(s.parse::<InDegreePolynomial>().unwrap().to_string(), s);
        }
        assert_eq!("6u^{6}+3u^{12}".parse::<InDegreePolynomial>().unwrap().to_string(), "6u^6 + 3u^12");
        assert!("3x^2".parse::<InDegreePolynomial>().is_err());
        assert!("3u^".parse::<InDegreePolynomial>().is_err());
        assert!("1 + + u".parse::<InDegreePolynomial>().is_err());
    }

    #[test]
    fn checksum() {
        let printed: InDegreePolynomial = "6u^6 + 3u^12".parse().unwrap();
        assert_eq!(printed.derivative_at_one(), 72);
        assert!(!printed.satisfies_checksum(9));
        assert!("6u^6 + 3u^15".parse::<InDegreePolynomial>().unwrap().satisfies_checksum(9));
    }
}
