//! The 14-dimensional Freudenthal space P = J ⊕ J ⊕ C ⊕ C and the 21-dimensional algebra (e7,R)^C.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::exact::{GaussRat, Mat};
use crate::f4e6::{e6_inner, E6Elem, E6_NAMES};
use crate::jordan::{vee, JordanElem, JordanOp};

/// `P = (X, Y, ξ, η)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct FreudElem {
    pub x: JordanElem,
    pub y: JordanElem,
    pub xi: GaussRat,
    pub eta: GaussRat,
}

pub const FREUD_NAMES: [&str; 14] = [
    "X:E1", "X:E2", "X:E3", "X:F1", "X:F2", "X:F3", "Y:E1", "Y:E2", "Y:E3", "Y:F1", "Y:F2", "Y:F3",
    "xi", "eta",
];

impl FreudElem {
    pub fn zero() -> Self {
        FreudElem {
            x: JordanElem::zero(),
            y: JordanElem::zero(),
            xi: GaussRat::zero(),
            eta: GaussRat::zero(),
        }
    }

    pub fn new(x: JordanElem, y: JordanElem, xi: GaussRat, eta: GaussRat) -> Self {
        FreudElem { x, y, xi, eta }
    }

    /// `Ẋ = (X, 0, 0, 0)`.
    pub fn dot_x(x: JordanElem) -> Self {
        FreudElem {
            x,
            ..FreudElem::zero()
        }
    }

    /// `Y̥ = (0, Y, 0, 0)`.
    pub fn under_y(y: JordanElem) -> Self {
        FreudElem {
            y,
            ..FreudElem::zero()
        }
    }

    /// `1̇ = (0, 0, 1, 0)`.
    pub fn one_dot() -> Self {
        FreudElem {
            xi: GaussRat::one(),
            ..FreudElem::zero()
        }
    }

    /// `1̥ = (0, 0, 0, 1)`.
    pub fn one_under() -> Self {
        FreudElem {
            eta: GaussRat::one(),
            ..FreudElem::zero()
        }
    }

    pub fn basis(k: usize) -> Self {
        let mut c = vec![GaussRat::zero(); 14];
        c[k] = GaussRat::one();
        FreudElem::from_coords(&c)
    }

    pub fn coords(&self) -> Vec<GaussRat> {
        let mut v = self.x.coords();
        v.extend(self.y.coords());
        v.push(self.xi.clone());
        v.push(self.eta.clone());
        v
    }

    pub fn from_coords(c: &[GaussRat]) -> Self {
        assert_eq!(c.len(), 14, "a Freudenthal element has 14 coordinates");
        FreudElem {
            x: JordanElem::from_coords(&c[0..6]),
            y: JordanElem::from_coords(&c[6..12]),
            xi: c[12].clone(),
            eta: c[13].clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.xi.is_zero() && self.eta.is_zero()
    }

    pub fn add(&self, o: &FreudElem) -> FreudElem {
        FreudElem {
            x: self.x.add(&o.x),
            y: self.y.add(&o.y),
            xi: &self.xi + &o.xi,
            eta: &self.eta + &o.eta,
        }
    }

    pub fn sub(&self, o: &FreudElem) -> FreudElem {
        self.add(&o.scale(&GaussRat::from_int(-1)))
    }

    pub fn scale(&self, s: &GaussRat) -> FreudElem {
        FreudElem {
            x: self.x.scale(s),
            y: self.y.scale(s),
            xi: &self.xi * s,
            eta: &self.eta * s,
        }
    }

    /// `(P, Q) = (X, Z) + (Y, W) + ξζ + ηω`.
    pub fn inner(&self, q: &FreudElem) -> GaussRat {
        &(&self.x.inner(&q.x) + &self.y.inner(&q.y))
            + &(&(&self.xi * &q.xi) + &(&self.eta * &q.eta))
    }

    /// `{P, Q} = (X, W) − (Y, Z) + ξω − ηζ`.
    pub fn skew_inner(&self, q: &FreudElem) -> GaussRat {
        &(&self.x.inner(&q.y) - &self.y.inner(&q.x))
            + &(&(&self.xi * &q.eta) - &(&self.eta * &q.xi))
    }

    /// `λ(X, Y, ξ, η) = (Y, −X, η, −ξ)`.
    pub fn lambda(&self) -> FreudElem {
        FreudElem {
            x: self.y.clone(),
            y: self.x.neg(),
            xi: self.eta.clone(),
            eta: -&self.xi,
        }
    }

    /// Coordinatewise conjugation τ.
    pub fn tau(&self) -> FreudElem {
        FreudElem::from_coords(&self.coords().iter().map(GaussRat::conj).collect::<Vec<_>>())
    }

    /// Membership in M: `X∨Y = 0`, `X×X = ηY`, `Y×Y = ξX`, `(X,Y) = 3ξη`, `P ≠ 0`.
    pub fn in_m(&self) -> bool {
        !self.is_zero()
            && vee(&self.x, &self.y).is_zero()
            && self.x.cross(&self.x) == self.y.scale(&self.eta)
            && self.y.cross(&self.y) == self.x.scale(&self.xi)
            && self.x.inner(&self.y) == &GaussRat::from_int(3) * &(&self.xi * &self.eta)
    }
}

/// `Φ(φ, A, B, ν)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct E7Elem {
    pub phi: E6Elem,
    pub a: JordanElem,
    pub b: JordanElem,
    pub nu: GaussRat,
}

pub const E7_DIM: usize = 21;

/// Coordinate names in the order `φ (8), A (6), B (6), ν`.
pub fn e7_names() -> Vec<String> {
    let j = ["E1", "E2", "E3", "F1", "F2", "F3"];
    let mut v: Vec<String> = E6_NAMES.iter().map(|n| format!("phi:{n}")).collect();
    v.extend(j.iter().map(|n| format!("A:{n}")));
    v.extend(j.iter().map(|n| format!("B:{n}")));
    v.push("nu".into());
    v
}

impl E7Elem {
    pub fn zero() -> Self {
        E7Elem {
            phi: E6Elem::zero(),
            a: JordanElem::zero(),
            b: JordanElem::zero(),
            nu: GaussRat::zero(),
        }
    }

    pub fn new(phi: E6Elem, a: JordanElem, b: JordanElem, nu: GaussRat) -> Self {
        E7Elem { phi, a, b, nu }
    }

    /// `Φ(0, 0, 0, 1)`.
    pub fn phi0() -> Self {
        E7Elem {
            nu: GaussRat::one(),
            ..E7Elem::zero()
        }
    }

    /// Cartan element `Φ(T̃₀, 0, 0, ν)`.
    pub fn cartan(tau: &[GaussRat; 3], nu: GaussRat) -> Result<Self> {
        Ok(E7Elem {
            phi: E6Elem::cartan(tau)?,
            nu,
            ..E7Elem::zero()
        })
    }

    pub fn basis(k: usize) -> Self {
        let mut c = vec![GaussRat::zero(); E7_DIM];
        c[k] = GaussRat::one();
        E7Elem::from_coords(&c)
    }

    pub fn coords(&self) -> Vec<GaussRat> {
        let mut v = self.phi.coords();
        v.extend(self.a.coords());
        v.extend(self.b.coords());
        v.push(self.nu.clone());
        v
    }

    pub fn from_coords(c: &[GaussRat]) -> Self {
        assert_eq!(c.len(), E7_DIM, "an e7 element has 21 coordinates");
        E7Elem {
            phi: E6Elem::from_coords(&c[0..8]),
            a: JordanElem::from_coords(&c[8..14]),
            b: JordanElem::from_coords(&c[14..20]),
            nu: c[20].clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords().iter().all(GaussRat::is_zero)
    }

    pub fn add(&self, o: &E7Elem) -> E7Elem {
        E7Elem {
            phi: self.phi.add(&o.phi),
            a: self.a.add(&o.a),
            b: self.b.add(&o.b),
            nu: &self.nu + &o.nu,
        }
    }

    pub fn sub(&self, o: &E7Elem) -> E7Elem {
        self.add(&o.scale(&GaussRat::from_int(-1)))
    }

    pub fn scale(&self, s: &GaussRat) -> E7Elem {
        E7Elem {
            phi: self.phi.scale(s),
            a: self.a.scale(s),
            b: self.b.scale(s),
            nu: &self.nu * s,
        }
    }

    /// `Φ(φ, A, B, ν)P`.
    pub fn apply(&self, p: &FreudElem) -> FreudElem {
        let phi_op = self.phi.operator();
        self.apply_with(&phi_op, &phi_op.transpose(), p)
    }

    fn apply_with(&self, phi_op: &JordanOp, phi_t: &JordanOp, p: &FreudElem) -> FreudElem {
        let third_nu = &self.nu * &GaussRat::frac(1, 3);
        let two = GaussRat::from_int(2);
        let x = phi_op
            .apply(&p.x)
            .sub(&p.x.scale(&third_nu))
            .add(&self.b.cross(&p.y).scale(&two))
            .add(&self.a.scale(&p.eta));
        let y = self
            .a
            .cross(&p.x)
            .scale(&two)
            .sub(&phi_t.apply(&p.y))
            .add(&p.y.scale(&third_nu))
            .add(&self.b.scale(&p.xi));
        let xi = &self.a.inner(&p.y) + &(&self.nu * &p.xi);
        let eta = &self.b.inner(&p.x) - &(&self.nu * &p.eta);
        FreudElem { x, y, xi, eta }
    }

    /// The 14×14 matrix of `Φ` in the basis of [`FREUD_NAMES`].
    pub fn operator(&self) -> Mat {
        let phi_op = self.phi.operator();
        let phi_t = phi_op.transpose();
        let cols: Vec<Vec<GaussRat>> = (0..14)
            .map(|k| {
                self.apply_with(&phi_op, &phi_t, &FreudElem::basis(k))
                    .coords()
            })
            .collect();
        Mat::from_cols(&cols).expect("14 columns")
    }

    /// Recover `(φ, A, B, ν)` from a 14×14 operator.
    pub fn decompose(m: &Mat) -> Result<Self> {
        if (m.rows(), m.cols()) != (14, 14) {
            return Err(Error::Shape("e7 operators are 14x14".into()));
        }
        // Φ1̥ = (A, 0, 0, −ν) and Φ1̇ = (0, B, ν, 0)
        let on_under = FreudElem::from_coords(&m.col(13));
        let on_dot = FreudElem::from_coords(&m.col(12));
        let nu = -&on_under.eta;
        let third_nu = &nu * &GaussRat::frac(1, 3);
        let block = Mat::from_fn(6, 6, |i, j| {
            if i == j {
                &m[(i, j)] + &third_nu
            } else {
                m[(i, j)].clone()
            }
        });
        let phi = E6Elem::decompose(&JordanOp(block)).map_err(|e| Error::NotInE7(e.to_string()))?;
        let f = E7Elem {
            phi,
            a: on_under.x,
            b: on_dot.y,
            nu,
        };
        if f.operator() != *m {
            return Err(Error::NotInE7(
                "residual after projection is nonzero".into(),
            ));
        }
        Ok(f)
    }

    /// τλ acting as `Φ ↦ τλΦλ⁻¹τ`.
    pub fn tau_lambda(&self) -> E7Elem {
        let l = lambda_matrix();
        let linv = l.scale(&GaussRat::from_int(-1));
        E7Elem::decompose(&l.mul(&self.operator()).mul(&linv).conj())
            .expect("e7 is stable under τλ")
    }

    /// Coordinatewise conjugation τ.
    pub fn tau(&self) -> E7Elem {
        E7Elem::from_coords(&self.coords().iter().map(GaussRat::conj).collect::<Vec<_>>())
    }
}

/// The 14×14 matrix of λ.
pub fn lambda_matrix() -> Mat {
    let cols: Vec<Vec<GaussRat>> = (0..14)
        .map(|k| FreudElem::basis(k).lambda().coords())
        .collect();
    Mat::from_cols(&cols).expect("14 columns")
}

/// `X∨W` as an element of (e6,R)^C.
pub fn vee_e6(x: &JordanElem, w: &JordanElem) -> E6Elem {
    E6Elem::decompose(&vee(x, w)).expect("X∨W lies in e6")
}

/// Freudenthal cross `P × Q`.
pub fn p_cross_q(p: &FreudElem, q: &FreudElem) -> E7Elem {
    let (x, y, xi, eta) = (&p.x, &p.y, &p.xi, &p.eta);
    let (z, w, zeta, omega) = (&q.x, &q.y, &q.xi, &q.eta);
    let two = GaussRat::from_int(2);
    let phi = vee_e6(x, w)
        .add(&vee_e6(z, y))
        .scale(&GaussRat::frac(-1, 2));
    let a = y
        .cross(w)
        .scale(&two)
        .sub(&z.scale(xi))
        .sub(&x.scale(zeta))
        .scale(&GaussRat::frac(-1, 4));
    let b = x
        .cross(z)
        .scale(&two)
        .sub(&w.scale(eta))
        .sub(&y.scale(omega))
        .scale(&GaussRat::frac(1, 4));
    let nu = &(&(&x.inner(w) + &z.inner(y))
        - &(&GaussRat::from_int(3) * &(&(xi * omega) + &(zeta * eta))))
        * &GaussRat::frac(1, 8);
    E7Elem { phi, a, b, nu }
}

/// Bracket as the commutator of the 14×14 operators, projected back.
pub fn e7_bracket(f: &E7Elem, g: &E7Elem) -> Result<E7Elem> {
    E7Elem::decompose(&f.operator().commutator(&g.operator()))
}

/// Sparse `[eᵢ, eⱼ]` rows indexed by `i`, then `j`.
pub type StructureTable = Vec<Vec<Vec<(usize, GaussRat)>>>;

/// Structure constants `[eᵢ, eⱼ] = Σ c_ij^k e_k`, computed once from the operator commutator.
pub fn e7_structure() -> &'static StructureTable {
    static TABLE: OnceLock<StructureTable> = OnceLock::new();
    TABLE.get_or_init(|| {
        let ops: Vec<Mat> = (0..E7_DIM).map(|k| E7Elem::basis(k).operator()).collect();
        (0..E7_DIM)
            .map(|i| {
                (0..E7_DIM)
                    .map(|j| {
                        let c = E7Elem::decompose(&ops[i].commutator(&ops[j]))
                            .expect("e7 is closed")
                            .coords();
                        c.into_iter()
                            .enumerate()
                            .filter(|(_, v)| !v.is_zero())
                            .collect()
                    })
                    .collect()
            })
            .collect()
    })
}

/// Bracket by the cached structure constants; agrees with [`e7_bracket`].
pub fn e7_bracket_fast(f: &E7Elem, g: &E7Elem) -> E7Elem {
    let (a, b) = (f.coords(), g.coords());
    let table = e7_structure();
    let mut out = vec![GaussRat::zero(); E7_DIM];
    for (i, ai) in a.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
        for (j, bj) in b.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            let ab = ai * bj;
            for (k, c) in &table[i][j] {
                out[*k] += &ab * c;
            }
        }
    }
    E7Elem::from_coords(&out)
}

/// `(Φ₁, Φ₂)₇ = −2(φ₁,φ₂)₆ − 4(A₁,B₂) − 4(A₂,B₁) − (8/3)ν₁ν₂`.
pub fn e7_inner(f: &E7Elem, g: &E7Elem) -> GaussRat {
    let m = |n: i64, d: i64, x: GaussRat| &GaussRat::frac(n, d) * &x;
    m(-2, 1, e6_inner(&f.phi, &g.phi))
        + m(-4, 1, f.a.inner(&g.b))
        + m(-4, 1, g.a.inner(&f.b))
        + m(-8, 3, &f.nu * &g.nu)
}

/// ad matrix on the 21 coordinates.
pub fn e7_ad(f: &E7Elem) -> Mat {
    let cols: Vec<Vec<GaussRat>> = (0..E7_DIM)
        .map(|k| e7_bracket_fast(f, &E7Elem::basis(k)).coords())
        .collect();
    Mat::from_cols(&cols).expect("21 columns")
}

/// Killing form by ad-trace, `−2(,)₇` and `(8/5) tr`; errors if they disagree.
pub fn e7_killing(f: &E7Elem, g: &E7Elem) -> Result<GaussRat> {
    let by_ad = e7_ad(f).mul(&e7_ad(g)).trace();
    let by_form = &e7_inner(f, g) * &GaussRat::from_int(-2);
    let by_trace = &f.operator().mul(&g.operator()).trace() * &GaussRat::frac(8, 5);
    if by_ad != by_form || by_ad != by_trace {
        return Err(Error::InternalMismatch(format!(
            "e7 Killing: ad-trace {by_ad}, form {by_form}, operator trace {by_trace}"
        )));
    }
    Ok(by_ad)
}

/// `exp(Φ)` for nilpotent `Φ`.
pub fn exp_nilpotent(f: &E7Elem) -> Result<Mat> {
    f.operator().exp_nilpotent()
}

/// Basis of the stabilizer `{Φ | Φ1̥ = 0}` in e7 coordinates.
pub fn stabilizer_of_one_under() -> Vec<Vec<GaussRat>> {
    let cols: Vec<Vec<GaussRat>> = (0..E7_DIM)
        .map(|k| E7Elem::basis(k).apply(&FreudElem::one_under()).coords())
        .collect();
    Mat::from_cols(&cols).expect("21 columns").kernel()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::independent;
    use crate::f4e6::{e6_bracket, lambda_e6, F4Elem};

    fn g(n: i64) -> GaussRat {
        GaussRat::from_int(n)
    }

    fn sample_p() -> FreudElem {
        FreudElem::new(
            JordanElem::from_ints([1, -2, 0, 3, 1, -1]),
            JordanElem::from_ints([0, 2, 1, -1, 0, 2]),
            g(3),
            GaussRat::complex(1, -1, 2),
        )
    }

    #[test]
    fn phi_action_examples() {
        let p = sample_p();
        let img = E7Elem::phi0().apply(&p);
        let third = GaussRat::frac(1, 3);
        assert_eq!(
            img,
            FreudElem::new(
                p.x.scale(&-&third),
                p.y.scale(&third),
                p.xi.clone(),
                -&p.eta
            )
        );
        let a = JordanElem::from_ints([1, 2, 3, 4, 5, 6]);
        let f = E7Elem::new(E6Elem::zero(), a.clone(), JordanElem::zero(), g(0));
        assert_eq!(
            f.apply(&FreudElem::one_under()),
            FreudElem::dot_x(a.clone())
        );
        let f = E7Elem::new(
            E6Elem::basis(4),
            a.clone(),
            JordanElem::from_ints([0, 1, 0, 0, 0, 7]),
            g(5),
        );
        assert_eq!(
            f.apply(&FreudElem::one_under()),
            FreudElem::new(a, JordanElem::zero(), g(0), g(-5))
        );
    }

    #[test]
    fn decompose_round_trip_and_dimension() {
        let ops: Vec<Vec<GaussRat>> = (0..E7_DIM)
            .map(|k| E7Elem::basis(k).operator().entries().to_vec())
            .collect();
        assert!(independent(&ops));
        for k in 0..E7_DIM {
            let b = E7Elem::basis(k);
            assert_eq!(E7Elem::decompose(&b.operator()).unwrap(), b);
        }
        assert!(matches!(
            E7Elem::decompose(&Mat::identity(14)),
            Err(Error::NotInE7(_))
        ));
    }

    #[test]
    fn transpose_of_phi_is_minus_delta_plus_t() {
        for k in 0..8 {
            let b = E6Elem::basis(k);
            let expect = E6Elem {
                delta: b.delta.scale(&g(-1)),
                t: b.t.clone(),
            };
            assert_eq!(b.transpose(), expect);
            assert_eq!(lambda_e6(&b), expect.scale(&g(-1)));
        }
    }

    #[test]
    fn cross_examples() {
        let one = FreudElem::one_dot();
        assert!(p_cross_q(&one, &one).is_zero());
        let c = p_cross_q(&one, &FreudElem::one_under());
        assert_eq!(
            c,
            E7Elem {
                nu: GaussRat::frac(-3, 8),
                ..E7Elem::zero()
            }
        );
        let e1 = JordanElem::e(1);
        let c = p_cross_q(
            &FreudElem::dot_x(e1.clone()),
            &FreudElem::under_y(e1.clone()),
        );
        assert_eq!(c.phi, vee_e6(&e1, &e1).scale(&GaussRat::frac(-1, 2)));
        assert_eq!(c.nu, GaussRat::frac(1, 8));
        assert!(c.a.is_zero() && c.b.is_zero());
    }

    #[test]
    fn bracket_examples() {
        let a = JordanElem::from_ints([1, 0, -1, 2, 0, 1]);
        let b = JordanElem::from_ints([0, 3, 1, 0, -1, 0]);
        let f = E7Elem::new(E6Elem::zero(), a.clone(), b.clone(), g(0));
        let expect = E7Elem::new(
            E6Elem::zero(),
            a.scale(&GaussRat::frac(2, 3)),
            b.scale(&GaussRat::frac(-2, 3)),
            g(0),
        );
        assert_eq!(e7_bracket(&E7Elem::phi0(), &f).unwrap(), expect);

        let tau = [g(2), g(-5), g(3)];
        let nu = GaussRat::frac(3, 2);
        let h = E7Elem::cartan(&tau, nu.clone()).unwrap();
        let a1 = E7Elem::new(E6Elem::zero(), JordanElem::e(1), JordanElem::zero(), g(0));
        let coef = &tau[0] + &(&GaussRat::frac(2, 3) * &nu);
        assert_eq!(e7_bracket(&h, &a1).unwrap(), a1.scale(&coef));
    }

    /// Closed-form bracket used as an independent oracle.
    fn closed_form_bracket(f: &E7Elem, h: &E7Elem) -> E7Elem {
        let two = g(2);
        let twothirds = GaussRat::frac(2, 3);
        let phi = e6_bracket(&f.phi, &h.phi)
            .add(&vee_e6(&f.a, &h.b).scale(&two))
            .sub(&vee_e6(&h.a, &f.b).scale(&two));
        let (o1, o2) = (f.phi.operator(), h.phi.operator());
        let a = o1
            .apply(&h.a)
            .add(&h.a.scale(&(&twothirds * &f.nu)))
            .sub(&o2.apply(&f.a).add(&f.a.scale(&(&twothirds * &h.nu))));
        let b = o2
            .transpose()
            .apply(&f.b)
            .add(&f.b.scale(&(&twothirds * &h.nu)))
            .sub(
                &o1.transpose()
                    .apply(&h.b)
                    .add(&h.b.scale(&(&twothirds * &f.nu))),
            );
        let nu = &f.a.inner(&h.b) - &f.b.inner(&h.a);
        E7Elem { phi, a, b, nu }
    }

    #[test]
    fn bracket_matches_closed_form_and_fast_path() {
        for i in 0..E7_DIM {
            for j in 0..E7_DIM {
                let (x, y) = (E7Elem::basis(i), E7Elem::basis(j));
                let br = e7_bracket(&x, &y).unwrap();
                assert_eq!(br, closed_form_bracket(&x, &y), "basis pair {i},{j}");
                assert_eq!(br, e7_bracket_fast(&x, &y));
            }
        }
    }

    #[test]
    fn killing_examples() {
        let p0 = E7Elem::phi0();
        assert_eq!(e7_inner(&p0, &p0), GaussRat::frac(-8, 3));
        assert_eq!(e7_killing(&p0, &p0).unwrap(), GaussRat::frac(16, 3));
        assert_eq!(
            p0.operator().mul(&p0.operator()).trace(),
            GaussRat::frac(10, 3)
        );
        let f = E7Elem::new(
            E6Elem::from_delta(F4Elem::basis(2)),
            JordanElem::e(1),
            JordanElem::e(2),
            g(1),
        );
        let h = E7Elem::new(E6Elem::basis(6), JordanElem::e(2), JordanElem::e(1), g(-2));
        e7_killing(&f, &h).unwrap();
    }

    #[test]
    fn lambda_and_skew_inner() {
        assert_eq!(
            FreudElem::one_dot().lambda(),
            FreudElem::one_under().scale(&g(-1))
        );
        assert_eq!(
            FreudElem::one_dot().skew_inner(&FreudElem::one_under()),
            g(1)
        );
        for k in 0..14 {
            let b = FreudElem::basis(k);
            assert_eq!(b.lambda().lambda(), b.scale(&g(-1)));
        }
        let (p, q) = (sample_p(), FreudElem::basis(3).add(&FreudElem::basis(12)));
        assert_eq!(p.skew_inner(&q), -&q.skew_inner(&p));
        assert_eq!(p.inner(&q), p.lambda().skew_inner(&q));
    }

    #[test]
    fn in_m_examples() {
        assert!(FreudElem::one_dot().in_m());
        assert!(p_cross_q(&FreudElem::one_dot(), &FreudElem::one_dot()).is_zero());
        assert!(!FreudElem::dot_x(JordanElem::unit()).in_m());
        assert!(!FreudElem::zero().in_m());
    }

    #[test]
    fn exp_examples() {
        let b = JordanElem::e(1).add(&JordanElem::e(2));
        let f = E7Elem::new(E6Elem::zero(), JordanElem::zero(), b.clone(), g(0));
        let ex = exp_nilpotent(&f).unwrap();
        let bb = b.cross(&b);
        let img = FreudElem::from_coords(&ex.mul_vec(&FreudElem::one_dot().coords()));
        let expect = FreudElem::new(
            bb.clone(),
            b.clone(),
            g(1),
            &bb.inner(&b) * &GaussRat::frac(1, 3),
        );
        assert_eq!(img, expect);
        assert!(img.in_m());
        let under = FreudElem::from_coords(&ex.mul_vec(&FreudElem::one_under().coords()));
        assert_eq!(under, FreudElem::one_under());
        assert_eq!(exp_nilpotent(&E7Elem::zero()).unwrap(), Mat::identity(14));
        assert_eq!(exp_nilpotent(&E7Elem::phi0()), Err(Error::NotNilpotent));
    }

    #[test]
    fn stabilizer_dimension() {
        let ker = stabilizer_of_one_under();
        assert_eq!(ker.len(), 14);
        for v in ker {
            let f = E7Elem::from_coords(&v);
            assert!(f.a.is_zero() && f.nu.is_zero());
        }
    }

    #[test]
    fn derivation_law_on_samples() {
        let ps: Vec<FreudElem> = [0, 4, 9, 12, 13]
            .iter()
            .map(|&k| FreudElem::basis(k))
            .collect();
        for f in [
            E7Elem::basis(1),
            E7Elem::basis(5),
            E7Elem::basis(10),
            E7Elem::basis(17),
            E7Elem::phi0(),
        ] {
            for p in &ps {
                for q in &ps {
                    let lhs = e7_bracket(&f, &p_cross_q(p, q)).unwrap();
                    let rhs = p_cross_q(&f.apply(p), q).add(&p_cross_q(p, &f.apply(q)));
                    assert_eq!(lhs, rhs);
                    assert!((&f.apply(p).skew_inner(q) + &p.skew_inner(&f.apply(q))).is_zero());
                }
            }
        }
    }

    #[test]
    fn tau_lambda_on_nu() {
        let f = E7Elem {
            nu: GaussRat::i(),
            ..E7Elem::zero()
        };
        assert_eq!(f.tau_lambda(), f);
        assert_eq!(E7Elem::phi0().tau_lambda(), E7Elem::phi0().scale(&g(-1)));
    }
}
