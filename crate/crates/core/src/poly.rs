//! Laurent polynomials with complex coefficients and finite support in ℤⁿ.
//!
//! The term map is kept in a `BTreeMap` keyed by exponent vector, so two
//! polynomials with the same terms compare equal and serialize identically
//! (exponents ordered lexicographically). Stored coefficients are never zero
//! and the support is never empty.

use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{Cell, LatticePolytope};

#[derive(Clone, Debug, PartialEq)]
pub struct LaurentPolynomial {
    n: usize,
    terms: BTreeMap<Vec<i64>, Complex64>,
}

impl LaurentPolynomial {
    /// Builds a polynomial from raw terms, merging duplicates and dropping
    /// exact zeros. Errors if the result has no terms or an exponent vector
    /// has the wrong length.
    pub fn from_terms<I>(n: usize, raw: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<i64>, Complex64)>,
    {
        if n == 0 {
            return Err(Error::UnsupportedDimension(0));
        }
        let mut terms: BTreeMap<Vec<i64>, Complex64> = BTreeMap::new();
        for (exp, coeff) in raw {
            if exp.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: exp.len(),
                });
            }
            let entry = terms.entry(exp).or_insert(Complex64::new(0.0, 0.0));
            *entry += coeff;
        }
        terms.retain(|_, c| c.re != 0.0 || c.im != 0.0);
        if terms.is_empty() {
            return Err(Error::EmptyPolynomial);
        }
        Ok(Self { n, terms })
    }

    pub fn dimension(&self) -> usize {
        self.n
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Support exponents in lexicographic order.
    pub fn support(&self) -> impl Iterator<Item = &[i64]> {
        self.terms.keys().map(|k| k.as_slice())
    }

    pub fn support_vec(&self) -> Vec<Vec<i64>> {
        self.terms.keys().cloned().collect()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[i64], Complex64)> {
        self.terms.iter().map(|(k, &v)| (k.as_slice(), v))
    }

    pub fn coefficient(&self, exp: &[i64]) -> Option<Complex64> {
        self.terms.get(exp).copied()
    }

    /// Evaluates Σ aₛ xˢ. A zero coordinate is allowed only when every
    /// exponent on that coordinate is nonnegative.
    pub fn evaluate(&self, x: &[Complex64]) -> Result<Complex64> {
        if x.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: x.len(),
            });
        }
        for (i, xi) in x.iter().enumerate() {
            if xi.re == 0.0 && xi.im == 0.0 && self.terms.keys().any(|e| e[i] < 0) {
                return Err(Error::ZeroCoordinate { index: i });
            }
        }
        let mut acc = Complex64::new(0.0, 0.0);
        for (exp, coeff) in &self.terms {
            let mut term = *coeff;
            for (xi, &e) in x.iter().zip(exp.iter()) {
                term *= xi.powi(e as i32);
            }
            acc += term;
        }
        Ok(acc)
    }

    /// Hadamard power f^[r]: every coefficient is raised to the r-th power
    /// coefficient-wise, aₛ ↦ |aₛ|^r · exp(i·r·Arg aₛ) with the principal
    /// argument. The support is unchanged. Rejects r ≤ 0 and any coefficient
    /// whose new modulus leaves the f64 range (below 1e-300 or non-finite);
    /// large-r work should use [`LogPolynomial`] instead.
    pub fn hadamard_power(&self, r: f64) -> Result<Self> {
        if !(r > 0.0) {
            return Err(Error::NonPositivePower(r));
        }
        let mut terms = BTreeMap::new();
        for (exp, coeff) in &self.terms {
            let modulus = coeff.norm().powf(r);
            if !(modulus.is_finite() && modulus >= 1e-300) {
                return Err(Error::CoefficientRange {
                    exp: exp.clone(),
                    modulus,
                });
            }
            let phase = r * coeff.arg();
            terms.insert(exp.clone(), Complex64::from_polar(modulus, phase));
        }
        Ok(Self { n: self.n, terms })
    }

    /// Newton polytope: convex hull of the support.
    pub fn newton_polytope(&self) -> LatticePolytope {
        LatticePolytope::from_points(self.n, &self.support_vec())
            .expect("support is nonempty by invariant")
    }

    /// Truncation to a cell: keeps the terms whose exponents lie in the
    /// convex hull of the cell's vertices.
    pub fn restrict_to_cell(&self, cell: &Cell) -> Result<Self> {
        let kept: Vec<(Vec<i64>, Complex64)> = self
            .terms
            .iter()
            .filter(|(exp, _)| cell.contains_lattice_point(exp))
            .map(|(exp, c)| (exp.clone(), *c))
            .collect();
        if kept.is_empty() {
            return Err(Error::EmptyTruncation);
        }
        Self::from_terms(self.n, kept)
    }

    /// Log-scale view of f^[r]: moduli as logs, phases wrapped. This never
    /// overflows for any r > 0 and is the form all sampling works with.
    pub fn log_view(&self, r: f64) -> LogPolynomial {
        let terms = self
            .terms
            .iter()
            .map(|(exp, c)| LogTerm {
                exp: exp.clone(),
                log_mod: r * c.norm().ln(),
                phase: r * c.arg(),
            })
            .collect();
        LogPolynomial { n: self.n, terms }
    }
}

/// A Laurent polynomial with coefficients carried as (log-modulus, phase)
/// pairs. Hadamard powers act linearly on this data, so arbitrarily large
/// powers stay representable.
#[derive(Clone, Debug)]
pub struct LogPolynomial {
    pub n: usize,
    pub terms: Vec<LogTerm>,
}

#[derive(Clone, Debug)]
pub struct LogTerm {
    pub exp: Vec<i64>,
    pub log_mod: f64,
    pub phase: f64,
}

impl LogPolynomial {
    pub fn exponents(&self) -> Vec<Vec<i64>> {
        self.terms.iter().map(|t| t.exp.clone()).collect()
    }

    pub fn heights(&self) -> Vec<f64> {
        self.terms.iter().map(|t| t.log_mod).collect()
    }
}

// --- serialization ---------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct TermJson {
    exp: Vec<i64>,
    re: f64,
    im: f64,
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    n: usize,
    terms: Vec<TermJson>,
}

impl Serialize for LaurentPolynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyJson {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(exp, c)| TermJson {
                    exp: exp.clone(),
                    re: c.re,
                    im: c.im,
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = PolyJson::deserialize(d)?;
        LaurentPolynomial::from_terms(
            raw.n,
            raw.terms
                .into_iter()
                .map(|t| (t.exp, Complex64::new(t.re, t.im))),
        )
        .map_err(serde::de::Error::custom)
    }
}

// --- printing --------------------------------------------------------------

fn variable_name(i: usize, n: usize) -> String {
    if n <= 3 {
        ["x", "y", "z"][i].to_string()
    } else {
        format!("x{}", i + 1)
    }
}

impl fmt::Display for LaurentPolynomial {
    /// Canonical text form; `parse` of the output reproduces the polynomial
    /// exactly (f64 `Display` round-trips).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, (exp, coeff)) in self.terms.iter().enumerate() {
            let vars: Vec<String> = exp
                .iter()
                .enumerate()
                .filter(|(_, &e)| e != 0)
                .map(|(i, &e)| {
                    let name = variable_name(i, self.n);
                    if e == 1 {
                        name
                    } else {
                        format!("{}^{}", name, e)
                    }
                })
                .collect();
            let mut lead = String::new();
            let mut body = String::new();
            if coeff.im == 0.0 {
                let re = coeff.re;
                if re < 0.0 {
                    lead.push('-');
                }
                let mag = re.abs();
                if vars.is_empty() {
                    body.push_str(&format!("{}", mag));
                } else if mag != 1.0 {
                    body.push_str(&format!("{}*", mag));
                }
            } else if vars.is_empty() {
                body.push_str(&format!("({},{})", coeff.re, coeff.im));
            } else {
                body.push_str(&format!("({},{})*", coeff.re, coeff.im));
            }
            body.push_str(&vars.join("*"));
            if idx == 0 {
                if !lead.is_empty() {
                    write!(f, "-")?;
                }
            } else if lead.is_empty() {
                write!(f, " + ")?;
            } else {
                write!(f, " - ")?;
            }
            write!(f, "{}", body)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn merges_and_drops_zero_terms() {
        let f = LaurentPolynomial::from_terms(
            2,
            vec![
                (vec![1, 0], c(1.0, 0.0)),
                (vec![1, 0], c(2.0, 0.0)),
                (vec![0, 1], c(1.0, 0.0)),
                (vec![0, 1], c(-1.0, 0.0)),
            ],
        )
        .unwrap();
        assert_eq!(f.num_terms(), 1);
        assert_eq!(f.coefficient(&[1, 0]), Some(c(3.0, 0.0)));
    }

    #[test]
    fn empty_after_merge_is_an_error() {
        let r = LaurentPolynomial::from_terms(
            1,
            vec![(vec![0], c(1.0, 0.0)), (vec![0], c(-1.0, 0.0))],
        );
        assert!(matches!(r, Err(Error::EmptyPolynomial)));
    }

    #[test]
    fn evaluate_simple() {
        let f = parse_polynomial("1 + x + y").unwrap();
        let v = f.evaluate(&[c(1.0, 0.0), c(1.0, 0.0)]).unwrap();
        assert_eq!(v, c(3.0, 0.0));

        let g = parse_polynomial("x^-1").unwrap();
        let v = g.evaluate(&[c(2.0, 0.0)]).unwrap();
        assert_eq!(v, c(0.5, 0.0));

        let h = parse_polynomial("x + y + 2*x*y").unwrap();
        let v = h.evaluate(&[c(1.0, 0.0), c(-1.0, 0.0)]).unwrap();
        assert_eq!(v, c(-2.0, 0.0));
    }

    #[test]
    fn evaluate_rejects_zero_with_negative_exponent() {
        let g = parse_polynomial("x^-1 + y").unwrap();
        let r = g.evaluate(&[c(0.0, 0.0), c(1.0, 0.0)]);
        assert!(matches!(r, Err(Error::ZeroCoordinate { index: 0 })));
        // zero is fine when the variable only appears with exponent >= 0
        let h = parse_polynomial("x + y").unwrap();
        assert_eq!(h.evaluate(&[c(0.0, 0.0), c(2.0, 0.0)]).unwrap(), c(2.0, 0.0));
    }

    #[test]
    fn hadamard_power_squares_coefficients() {
        let f = parse_polynomial("x + y + 2*x*y").unwrap();
        let g = f.hadamard_power(2.0).unwrap();
        assert_eq!(g.coefficient(&[1, 1]), Some(c(4.0, 0.0)));
        assert_eq!(g.coefficient(&[1, 0]), Some(c(1.0, 0.0)));

        let f26 = parse_polynomial("x + 30*x*y + 20*x^2*y + x^3*y + y^2").unwrap();
        let g26 = f26.hadamard_power(2.0).unwrap();
        assert_eq!(g26.coefficient(&[1, 1]), Some(c(900.0, 0.0)));
        assert_eq!(g26.coefficient(&[2, 1]), Some(c(400.0, 0.0)));
    }

    #[test]
    fn hadamard_power_identity_and_range() {
        let f = parse_polynomial("x + 30*x*y + 20*x^2*y + x^3*y + y^2").unwrap();
        assert_eq!(f.hadamard_power(1.0).unwrap(), f);
        assert!(matches!(
            f.hadamard_power(-1.0),
            Err(Error::NonPositivePower(_))
        ));
        let tiny = parse_polynomial("0.001*x + y").unwrap();
        assert!(matches!(
            tiny.hadamard_power(200.0),
            Err(Error::CoefficientRange { .. })
        ));
        let huge = parse_polynomial("30*x + y").unwrap();
        assert!(matches!(
            huge.hadamard_power(300.0),
            Err(Error::CoefficientRange { .. })
        ));
    }

    #[test]
    fn restrict_to_cell_keeps_lattice_points_of_the_cell() {
        let f = parse_polynomial("x + y + x^2*y^2 + 2*x*y").unwrap();
        let cell = Cell::new(vec![vec![1, 0], vec![0, 1], vec![1, 1]]).unwrap();
        let g = f.restrict_to_cell(&cell).unwrap();
        assert_eq!(g, parse_polynomial("x + y + 2*x*y").unwrap());

        // full Newton polytope keeps everything
        let np = f.newton_polytope();
        let full = Cell::new(np.vertices().to_vec()).unwrap();
        assert_eq!(f.restrict_to_cell(&full).unwrap(), f);

        // an edge keeps only the lattice points on it
        let f26 = parse_polynomial("x + 30*x*y + 20*x^2*y + x^3*y + y^2").unwrap();
        let edge = Cell::new(vec![vec![1, 0], vec![0, 2]]).unwrap();
        let t = f26.restrict_to_cell(&edge).unwrap();
        assert_eq!(t, parse_polynomial("x + y^2").unwrap());
    }

    #[test]
    fn restrict_can_empty_out() {
        let f = parse_polynomial("x + y").unwrap();
        let cell = Cell::new(vec![vec![5, 5]]).unwrap();
        assert!(matches!(
            f.restrict_to_cell(&cell),
            Err(Error::EmptyTruncation)
        ));
    }

    #[test]
    fn json_round_trip() {
        let f = parse_polynomial("x^-1 + (0.5,-2)*y + 3").unwrap();
        let text = serde_json::to_string(&f).unwrap();
        let back: LaurentPolynomial = serde_json::from_str(&text).unwrap();
        assert_eq!(back, f);
    }
}
