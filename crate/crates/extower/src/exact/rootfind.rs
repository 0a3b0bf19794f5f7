//! Roots of polynomials that lie in Q(i).
//!
//! The polynomial is rescaled to a monic polynomial with Gaussian-integer
//! coefficients. Its roots in Q(i) are then Gaussian integers dividing the
//! constant term, so candidates are enumerated from the Gaussian prime
//! factorisation of that term, restricted by a root-size bound.

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly::Poly;
use super::scalar::{GaussRat, Rat};

/// Largest prime used when factoring denominators and constant-term norms.
const SIEVE_CAP: u64 = 5_000_000;

/// Result of [`gaussian_rational_roots`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSplit {
    /// Roots with multiplicity, in discovery order.
    pub roots: Vec<GaussRat>,
    /// Monic cofactor left after removing all found linear factors.
    pub remainder: Poly,
}

impl RootSplit {
    /// True iff the polynomial is a product of the returned linear factors.
    pub fn splits(&self) -> bool {
        self.remainder.degree() == Some(0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct GInt {
    re: BigInt,
    im: BigInt,
}

impl GInt {
    fn new(re: BigInt, im: BigInt) -> Self {
        GInt { re, im }
    }

    fn small(re: i64, im: i64) -> Self {
        GInt {
            re: BigInt::from(re),
            im: BigInt::from(im),
        }
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    fn mul(&self, o: &GInt) -> GInt {
        GInt {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }

    fn add(&self, o: &GInt) -> GInt {
        GInt {
            re: &self.re + &o.re,
            im: &self.im + &o.im,
        }
    }

    /// Exact quotient `self / d` when it lies in Z[i].
    fn div_exact(&self, d: &GInt) -> Option<GInt> {
        let n = d.norm();
        let num = self.mul(&GInt {
            re: d.re.clone(),
            im: -&d.im,
        });
        let (qr, rr) = num.re.div_rem(&n);
        let (qi, ri) = num.im.div_rem(&n);
        (rr.is_zero() && ri.is_zero()).then_some(GInt { re: qr, im: qi })
    }
}

fn primes_up_to(n: u64) -> Vec<u64> {
    let n = n as usize;
    if n < 2 {
        return Vec::new();
    }
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if composite[i] {
            continue;
        }
        out.push(i as u64);
        let mut j = i * i;
        while j <= n {
            composite[j] = true;
            j += i;
        }
    }
    out
}

/// Trial division; a cofactor above the sieve range is returned as if it were prime.
fn factor(n: &BigInt, primes: &[u64]) -> Vec<(BigInt, u32)> {
    let mut n = n.abs();
    let mut out = Vec::new();
    for &p in primes {
        if n.is_one() {
            break;
        }
        let bp = BigInt::from(p);
        if &bp * &bp > n {
            break;
        }
        let mut e = 0;
        loop {
            let (q, r) = n.div_rem(&bp);
            if !r.is_zero() {
                break;
            }
            n = q;
            e += 1;
        }
        if e > 0 {
            out.push((bp, e));
        }
    }
    if !n.is_one() && !n.is_zero() {
        out.push((n, 1));
    }
    out
}

/// A Gaussian integer of norm `p` for a rational prime `p ≡ 1 (mod 4)`.
fn two_squares(p: u64) -> Option<GInt> {
    let mut a = 1u64;
    while a * a < p {
        let rest = p - a * a;
        let b = rest.sqrt();
        if b * b == rest {
            return Some(GInt::small(a as i64, b as i64));
        }
        a += 1;
    }
    None
}

fn lcm(a: &BigInt, b: &BigInt) -> BigInt {
    a.lcm(b)
}

/// Smallest-ish integer `d` with `d^(n-k)·aₖ` integral for every coefficient of a monic polynomial.
fn scaling_denominator(monic: &Poly, primes: &[u64]) -> BigInt {
    let c = monic.coeffs();
    let n = c.len() - 1;
    let mut exps: Vec<(BigInt, u32)> = Vec::new();
    for (k, a) in c.iter().enumerate().take(n) {
        let den = lcm(a.re.denom(), a.im.denom());
        if den.is_one() {
            continue;
        }
        let gap = (n - k) as u32;
        for (p, e) in factor(&den, primes) {
            let need = e.div_ceil(gap);
            match exps.iter_mut().find(|(q, _)| *q == p) {
                Some(slot) => slot.1 = slot.1.max(need),
                None => exps.push((p, need)),
            }
        }
    }
    exps.iter()
        .fold(BigInt::one(), |acc, (p, e)| acc * p.pow(*e))
}

/// Fujiwara bound on the absolute value of every root of a monic polynomial.
fn root_bound(q: &[GInt]) -> BigInt {
    let n = q.len() - 1;
    let mut best = BigInt::zero();
    for k in 1..=n {
        let nm = q[n - k].norm();
        if nm.is_zero() {
            continue;
        }
        // ceil(|a|^(1/k)) with |a| = sqrt(norm)
        let mut r = nm.nth_root(2 * k as u32);
        while r.pow(2 * k as u32) < nm {
            r += 1;
        }
        best = best.max(r);
    }
    BigInt::from(2) * best
}

fn horner(q: &[GInt], y: &GInt) -> GInt {
    let mut acc = GInt::small(0, 0);
    for c in q.iter().rev() {
        acc = acc.mul(y).add(c);
    }
    acc
}

fn deflate(q: &[GInt], y: &GInt) -> Vec<GInt> {
    let n = q.len() - 1;
    let mut out = vec![GInt::small(0, 0); n];
    let mut carry = GInt::small(0, 0);
    for k in (1..=n).rev() {
        let v = q[k].add(&carry.mul(y));
        out[k - 1] = v.clone();
        carry = v;
    }
    out
}

/// Gaussian-integer divisors of `c` with norm at most `max_norm`, including unit multiples.
fn divisor_candidates(c: &GInt, max_norm: &BigInt, primes: &[u64]) -> Vec<GInt> {
    let nc = c.norm();
    let mut gprimes: Vec<(GInt, u32)> = Vec::new();
    let mut rest = c.clone();
    for (p, _) in factor(&nc, primes) {
        // a cofactor beyond the sieve cannot be split into Gaussian primes
        let pu = p.to_u64().filter(|&v| v <= SIEVE_CAP);
        let cands: Vec<GInt> = match pu {
            Some(2) => vec![GInt::small(1, 1)],
            Some(v) if v % 4 == 1 => match two_squares(v) {
                Some(pi) => {
                    let conj = GInt {
                        re: pi.re.clone(),
                        im: -&pi.im,
                    };
                    vec![pi, conj]
                }
                None => continue,
            },
            Some(v) if v % 4 == 3 => vec![GInt::new(p.clone(), BigInt::zero())],
            _ => continue,
        };
        for pi in cands {
            let mut e = 0;
            while let Some(q) = rest.div_exact(&pi) {
                rest = q;
                e += 1;
            }
            if e > 0 {
                gprimes.push((pi, e));
            }
        }
    }
    let mut out = vec![GInt::small(1, 0)];
    for (pi, e) in &gprimes {
        let mut next = Vec::new();
        for d in &out {
            let mut cur = d.clone();
            next.push(cur.clone());
            for _ in 0..*e {
                cur = cur.mul(pi);
                if &cur.norm() > max_norm {
                    break;
                }
                next.push(cur.clone());
            }
        }
        out = next;
    }
    let units = [
        GInt::small(1, 0),
        GInt::small(0, 1),
        GInt::small(-1, 0),
        GInt::small(0, -1),
    ];
    let mut all: Vec<GInt> = out
        .iter()
        .flat_map(|d| units.iter().map(move |u| d.mul(u)))
        .collect();
    all.sort_by(|a, b| {
        a.norm()
            .cmp(&b.norm())
            .then(a.re.cmp(&b.re))
            .then(a.im.cmp(&b.im))
    });
    all
}

fn to_gint(z: &GaussRat) -> GInt {
    debug_assert!(z.re.denom().is_one() && z.im.denom().is_one());
    GInt::new(z.re.numer().clone(), z.im.numer().clone())
}

/// Find every root of `p` lying in Q(i), with multiplicity.
///
/// # Panics
/// Panics if `p` is the zero polynomial.
pub fn gaussian_rational_roots(p: &Poly) -> RootSplit {
    assert!(!p.is_zero(), "zero polynomial has no finite root set");
    let mut roots = Vec::new();
    let mut coeffs: Vec<GaussRat> = p.monic().coeffs().to_vec();
    while coeffs.len() > 1 && coeffs[0].is_zero() {
        coeffs.remove(0);
        roots.push(GaussRat::zero());
    }
    let monic = Poly::new(coeffs);
    let n = monic.degree().unwrap_or(0);
    if n == 0 {
        return RootSplit {
            roots,
            remainder: monic,
        };
    }

    let small_primes = primes_up_to(100_000);
    let d = scaling_denominator(&monic, &small_primes);
    let dr = GaussRat::from_rat(Rat::from_integer(d.clone()));
    // q(y) = d^n · p(y/d)
    let mut scale = GaussRat::one();
    let mut q: Vec<GInt> = vec![GInt::small(0, 0); n + 1];
    for k in (0..=n).rev() {
        q[k] = to_gint(&(&monic.coeffs()[k] * &scale));
        scale = &scale * &dr;
    }

    let bound = root_bound(&q);
    let max_norm = &bound * &bound;
    let cap = max_norm.to_u64().map_or(SIEVE_CAP, |m| m.min(SIEVE_CAP));
    let primes = if cap <= 100_000 {
        small_primes
    } else {
        primes_up_to(cap)
    };
    let candidates = divisor_candidates(&q[0], &max_norm, &primes);

    for y in candidates {
        if q.len() == 1 {
            break;
        }
        while q.len() > 1 && horner(&q, &y).is_zero() {
            q = deflate(&q, &y);
            roots.push(GaussRat::new(
                Rat::new(y.re.clone(), d.clone()),
                Rat::new(y.im.clone(), d.clone()),
            ));
        }
    }

    // back to the original variable: r(x) = d^{-m} q(d x), still monic
    let m = q.len() - 1;
    let mut rem = Vec::with_capacity(m + 1);
    let mut pw = Rat::one();
    let dinv = Rat::new(BigInt::one(), d.clone());
    let dpow_m = (0..m).fold(Rat::one(), |acc, _| acc * &dinv);
    for c in &q {
        let f = &dpow_m * &pw;
        rem.push(GaussRat::new(
            Rat::from_integer(c.re.clone()) * &f,
            Rat::from_integer(c.im.clone()) * &f,
        ));
        pw *= Rat::from_integer(d.clone());
    }
    let remainder = Poly::new(rem);
    debug_assert!(remainder.leading().is_some_and(|l| l.is_one()));
    RootSplit { roots, remainder }
}
