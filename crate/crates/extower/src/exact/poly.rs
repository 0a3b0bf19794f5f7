//! Univariate polynomials over Q(i).

use std::fmt;

use super::scalar::GaussRat;

/// Polynomial with coefficients listed lowest degree first; trailing zeros are trimmed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<GaussRat>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<GaussRat>) -> Self {
        while coeffs.last().is_some_and(GaussRat::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly {
            coeffs: vec![GaussRat::one()],
        }
    }

    /// `c0 + c1·x`.
    pub fn linear(c0: GaussRat, c1: GaussRat) -> Self {
        Poly::new(vec![c0, c1])
    }

    /// `x^k`.
    pub fn monomial(k: usize) -> Self {
        let mut c = vec![GaussRat::zero(); k + 1];
        c[k] = GaussRat::one();
        Poly { coeffs: c }
    }

    /// `Π (x − rᵢ)`.
    pub fn from_roots(roots: &[GaussRat]) -> Self {
        roots.iter().fold(Poly::one(), |acc, r| {
            acc.mul(&Poly::linear(-r, GaussRat::one()))
        })
    }

    pub fn coeffs(&self) -> &[GaussRat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&GaussRat> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &GaussRat) -> GaussRat {
        let mut acc = GaussRat::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let z = GaussRat::zero();
        Poly::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&z) + o.coeffs.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        self.add(&o.scale(&GaussRat::from_int(-1)))
    }

    pub fn scale(&self, c: &GaussRat) -> Poly {
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![GaussRat::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Poly::new(out)
    }

    /// Divide by `(x − r)`, returning quotient and remainder `p(r)`.
    pub fn div_linear(&self, r: &GaussRat) -> (Poly, GaussRat) {
        let Some(n) = self.degree() else {
            return (Poly::zero(), GaussRat::zero());
        };
        if n == 0 {
            return (Poly::zero(), self.coeffs[0].clone());
        }
        let mut q = vec![GaussRat::zero(); n];
        let mut carry = GaussRat::zero();
        for k in (0..=n).rev() {
            let v = &self.coeffs[k] + &(&carry * r);
            if k == 0 {
                return (Poly::new(q), v);
            }
            q[k - 1] = v.clone();
            carry = v;
        }
        unreachable!()
    }

    /// Scale so the leading coefficient is one; the zero polynomial stays zero.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(l) => self.scale(&l.inv().expect("leading coefficient is nonzero")),
        }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let coef = if c.is_real() || c.is_imaginary() {
                c.to_string()
            } else {
                format!("({c})")
            };
            terms.push(match k {
                0 => coef,
                1 => format!("{coef}x"),
                _ => format!("{coef}x^{k}"),
            });
        }
        write!(f, "{}", terms.join(" + "))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
