//! The 52-dimensional algebra (e8,R)^C = e7 ⊕ P ⊕ P ⊕ C ⊕ C ⊕ C.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::exact::{GaussRat, Mat};
use crate::freudenthal::{
    e7_bracket_fast, e7_inner, e7_names, p_cross_q, E7Elem, FreudElem, E7_DIM, FREUD_NAMES,
};
use crate::lie::LieAlgebraData;

pub const E8_DIM: usize = 52;

/// `R = (Φ, P, Q, r, s, t)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct E8Elem {
    pub phi: E7Elem,
    pub p: FreudElem,
    pub q: FreudElem,
    pub r: GaussRat,
    pub s: GaussRat,
    pub t: GaussRat,
}

/// Coordinate names in the order `Φ (21), P (14), Q (14), r, s, t`.
pub fn e8_names() -> Vec<String> {
    let mut v: Vec<String> = e7_names().into_iter().map(|n| format!("Phi:{n}")).collect();
    v.extend(FREUD_NAMES.iter().map(|n| format!("P:{n}")));
    v.extend(FREUD_NAMES.iter().map(|n| format!("Q:{n}")));
    v.extend(["r", "s", "t"].map(String::from));
    v
}

impl E8Elem {
    pub fn zero() -> Self {
        E8Elem {
            phi: E7Elem::zero(),
            p: FreudElem::zero(),
            q: FreudElem::zero(),
            r: GaussRat::zero(),
            s: GaussRat::zero(),
            t: GaussRat::zero(),
        }
    }

    pub fn from_phi(phi: E7Elem) -> Self {
        E8Elem {
            phi,
            ..E8Elem::zero()
        }
    }

    /// `P⁻ = (0, P, 0, 0, 0, 0)`.
    pub fn from_p(p: FreudElem) -> Self {
        E8Elem {
            p,
            ..E8Elem::zero()
        }
    }

    /// `Q₋ = (0, 0, Q, 0, 0, 0)`.
    pub fn from_q(q: FreudElem) -> Self {
        E8Elem {
            q,
            ..E8Elem::zero()
        }
    }

    /// `r̃ = (0, 0, 0, r, 0, 0)`.
    pub fn tilde(r: GaussRat) -> Self {
        E8Elem {
            r,
            ..E8Elem::zero()
        }
    }

    /// `s⁻ = (0, 0, 0, 0, s, 0)`.
    pub fn upper(s: GaussRat) -> Self {
        E8Elem {
            s,
            ..E8Elem::zero()
        }
    }

    /// `t₋ = (0, 0, 0, 0, 0, t)`.
    pub fn lower(t: GaussRat) -> Self {
        E8Elem {
            t,
            ..E8Elem::zero()
        }
    }

    /// `1̃`.
    pub fn one_tilde() -> Self {
        E8Elem::tilde(GaussRat::one())
    }

    /// `1⁻`.
    pub fn one_upper() -> Self {
        E8Elem::upper(GaussRat::one())
    }

    /// `1₋`.
    pub fn one_lower() -> Self {
        E8Elem::lower(GaussRat::one())
    }

    pub fn basis(k: usize) -> Self {
        let mut c = vec![GaussRat::zero(); E8_DIM];
        c[k] = GaussRat::one();
        E8Elem::from_coords(&c)
    }

    pub fn coords(&self) -> Vec<GaussRat> {
        let mut v = self.phi.coords();
        v.extend(self.p.coords());
        v.extend(self.q.coords());
        v.extend([self.r.clone(), self.s.clone(), self.t.clone()]);
        v
    }

    pub fn from_coords(c: &[GaussRat]) -> Self {
        assert_eq!(c.len(), E8_DIM, "an e8 element has 52 coordinates");
        E8Elem {
            phi: E7Elem::from_coords(&c[0..E7_DIM]),
            p: FreudElem::from_coords(&c[21..35]),
            q: FreudElem::from_coords(&c[35..49]),
            r: c[49].clone(),
            s: c[50].clone(),
            t: c[51].clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords().iter().all(GaussRat::is_zero)
    }

    pub fn add(&self, o: &E8Elem) -> E8Elem {
        E8Elem {
            phi: self.phi.add(&o.phi),
            p: self.p.add(&o.p),
            q: self.q.add(&o.q),
            r: &self.r + &o.r,
            s: &self.s + &o.s,
            t: &self.t + &o.t,
        }
    }

    pub fn sub(&self, o: &E8Elem) -> E8Elem {
        self.add(&o.scale(&GaussRat::from_int(-1)))
    }

    pub fn scale(&self, c: &GaussRat) -> E8Elem {
        E8Elem {
            phi: self.phi.scale(c),
            p: self.p.scale(c),
            q: self.q.scale(c),
            r: &self.r * c,
            s: &self.s * c,
            t: &self.t * c,
        }
    }
}

/// The six-component bracket.
pub fn e8_bracket(a: &E8Elem, b: &E8Elem) -> E8Elem {
    let (f1, f2) = (&a.phi, &b.phi);
    let phi = e7_bracket_fast(f1, f2)
        .add(&p_cross_q(&a.p, &b.q))
        .sub(&p_cross_q(&b.p, &a.q));
    let p = f1
        .apply(&b.p)
        .sub(&f2.apply(&a.p))
        .add(&b.p.scale(&a.r))
        .sub(&a.p.scale(&b.r))
        .add(&b.q.scale(&a.s))
        .sub(&a.q.scale(&b.s));
    let q = f1
        .apply(&b.q)
        .sub(&f2.apply(&a.q))
        .sub(&b.q.scale(&a.r))
        .add(&a.q.scale(&b.r))
        .add(&b.p.scale(&a.t))
        .sub(&a.p.scale(&b.t));
    let eighth = GaussRat::frac(1, 8);
    let quarter = GaussRat::frac(1, 4);
    let two = GaussRat::from_int(2);
    let r = &(&(&b.p.skew_inner(&a.q) - &a.p.skew_inner(&b.q)) * &eighth)
        + &(&(&a.s * &b.t) - &(&b.s * &a.t));
    let s = &(&a.p.skew_inner(&b.p) * &quarter) + &(&two * &(&(&a.r * &b.s) - &(&b.r * &a.s)));
    let t = &(&a.q.skew_inner(&b.q) * &-&quarter) - &(&two * &(&(&a.r * &b.t) - &(&b.r * &a.t)));
    E8Elem { phi, p, q, r, s, t }
}

/// `(R₁, R₂)₈ = (Φ₁,Φ₂)₇ − {Q₁,P₂} + {P₁,Q₂} − 8r₁r₂ − 4t₁s₂ − 4s₁t₂`.
pub fn inner8(a: &E8Elem, b: &E8Elem) -> GaussRat {
    let k = |n: i64, x: GaussRat| &GaussRat::from_int(n) * &x;
    e7_inner(&a.phi, &b.phi) - a.q.skew_inner(&b.p)
        + a.p.skew_inner(&b.q)
        + k(-8, &a.r * &b.r)
        + k(-4, &a.t * &b.s)
        + k(-4, &a.s * &b.t)
}

/// `B₈ = −(9/2)(,)₈`.
pub fn killing8(a: &E8Elem, b: &E8Elem) -> GaussRat {
    &inner8(a, b) * &GaussRat::frac(-9, 2)
}

/// Killing form by ad-trace on the structure constants; errors if it disagrees with [`killing8`].
pub fn killing8_checked(a: &E8Elem, b: &E8Elem) -> Result<GaussRat> {
    let data = e8_data();
    let by_ad = data.killing(&a.coords(), &b.coords());
    let by_form = killing8(a, b);
    if by_ad != by_form {
        return Err(Error::InternalMismatch(format!(
            "e8 Killing: ad-trace {by_ad}, form {by_form}"
        )));
    }
    Ok(by_ad)
}

/// Structure constants of the 52 basis elements, computed once.
pub fn e8_data() -> &'static LieAlgebraData {
    static DATA: OnceLock<LieAlgebraData> = OnceLock::new();
    DATA.get_or_init(|| {
        let basis: Vec<E8Elem> = (0..E8_DIM).map(E8Elem::basis).collect();
        LieAlgebraData::from_bracket("e8r", e8_names(), |i, j| {
            e8_bracket(&basis[i], &basis[j]).coords()
        })
    })
}

/// Coefficient of the Killing term in `R × R`; the reciprocal of the dual Coxeter number 9.
pub fn r_cross_coefficient() -> GaussRat {
    GaussRat::frac(1, 9)
}

/// `(R × R)R₁ = [R, [R, R₁]] + c·B₈(R, R₁)R`.
pub fn r_cross_r_with(r: &E8Elem, probe: &E8Elem, c: &GaussRat) -> E8Elem {
    e8_bracket(r, &e8_bracket(r, probe)).add(&r.scale(&(c * &killing8(r, probe))))
}

/// `(R × R)R₁` with coefficient `1/9`.
pub fn r_cross_r(r: &E8Elem, probe: &E8Elem) -> E8Elem {
    r_cross_r_with(r, probe, &r_cross_coefficient())
}

/// `R ≠ 0` and `(R × R)R₁ = 0` for every basis probe `R₁`.
pub fn in_w(r: &E8Elem) -> bool {
    !r.is_zero() && (0..E8_DIM).all(|k| r_cross_r(r, &E8Elem::basis(k)).is_zero())
}

/// Number of membership conditions in [`w_conditions`].
pub const W_CONDITIONS: usize = 13;

/// The thirteen coordinate conditions equivalent to `R × R = 0`.
///
/// Conditions 7 to 13 are quantified over every basis probe `Q₁`, `P₁` or `Φ₁`. Entry `k` of the result
/// is condition `k + 1`.
pub fn w_conditions(x: &E8Elem) -> [bool; W_CONDITIONS] {
    let (phi, p, q, r, s, t) = (&x.phi, &x.p, &x.q, &x.r, &x.s, &x.t);
    let n = |k: i64| GaussRat::from_int(k);
    let st = s * t;
    let r2 = r * r;
    let st_r2 = &st + &r2;
    let phi2 = |v: &FreudElem| phi.apply(&phi.apply(v));
    let b7 = |f: &E7Elem| &e7_inner(phi, f) * &n(-2);
    let probes: Vec<FreudElem> = (0..14).map(FreudElem::basis).collect();
    let phi_probes: Vec<E7Elem> = (0..E7_DIM).map(E7Elem::basis).collect();

    let c1 = phi.scale(&(&n(2) * s)).sub(&p_cross_q(p, p)).is_zero();
    let c2 = phi.scale(&(&n(2) * t)).add(&p_cross_q(q, q)).is_zero();
    let c3 = phi.scale(&(&n(2) * r)).add(&p_cross_q(p, q)).is_zero();
    let c4 = phi
        .apply(p)
        .sub(&p.scale(&(&n(3) * r)))
        .sub(&q.scale(&(&n(3) * s)))
        .is_zero();
    let c5 = phi
        .apply(q)
        .add(&q.scale(&(&n(3) * r)))
        .sub(&p.scale(&(&n(3) * t)))
        .is_zero();
    let c6 = (&p.skew_inner(q) - &(&n(16) * &st_r2)).is_zero();
    let c7 = probes.iter().all(|q1| {
        p_cross_q(&phi.apply(p), q1)
            .add(&p_cross_q(p, &phi.apply(q1)).scale(&n(2)))
            .sub(&p_cross_q(p, q1).scale(r))
            .sub(&p_cross_q(q, q1).scale(s))
            .scale(&n(2))
            .sub(&phi.scale(&p.skew_inner(q1)))
            .is_zero()
    });
    let c8 = probes.iter().all(|p1| {
        p_cross_q(&phi.apply(q), p1)
            .add(&p_cross_q(q, &phi.apply(p1)).scale(&n(2)))
            .add(&p_cross_q(q, p1).scale(r))
            .sub(&p_cross_q(p, p1).scale(t))
            .scale(&n(2))
            .sub(&phi.scale(&q.skew_inner(p1)))
            .is_zero()
    });
    let c9 = probes.iter().all(|q1| {
        p_cross_q(p, q1)
            .apply(q)
            .sub(&q1.scale(&st_r2))
            .sub(&phi2(q1))
            .add(&phi.apply(q1).scale(&(&n(2) * r)))
            .scale(&n(8))
            .add(&q.scale(&(&n(5) * &p.skew_inner(q1))))
            .sub(&p.scale(&(&n(2) * &q.skew_inner(q1))))
            .is_zero()
    });
    let c10 = probes.iter().all(|p1| {
        p_cross_q(q, p1)
            .apply(p)
            .add(&p1.scale(&st_r2))
            .add(&phi2(p1))
            .add(&phi.apply(p1).scale(&(&n(2) * r)))
            .scale(&n(8))
            .add(&p.scale(&(&n(5) * &q.skew_inner(p1))))
            .sub(&q.scale(&(&n(2) * &p.skew_inner(p1))))
            .is_zero()
    });
    let c11 = phi_probes.iter().all(|f1| {
        let ad2 = e7_bracket_fast(phi, &e7_bracket_fast(phi, f1));
        ad2.add(&p_cross_q(q, &f1.apply(p)))
            .sub(&p_cross_q(p, &f1.apply(q)))
            .scale(&n(4))
            .add(&phi.scale(&b7(f1)))
            .is_zero()
    });
    let c12 = phi_probes.iter().all(|f1| {
        f1.apply(&phi.apply(p))
            .sub(&phi.apply(&f1.apply(p)).scale(&n(2)))
            .sub(&f1.apply(p).scale(r))
            .sub(&f1.apply(q).scale(s))
            .scale(&n(4))
            .add(&p.scale(&b7(f1)))
            .is_zero()
    });
    let c13 = phi_probes.iter().all(|f1| {
        f1.apply(&phi.apply(q))
            .sub(&phi.apply(&f1.apply(q)).scale(&n(2)))
            .add(&f1.apply(q).scale(r))
            .sub(&f1.apply(p).scale(t))
            .scale(&n(4))
            .add(&q.scale(&b7(f1)))
            .is_zero()
    });
    [c1, c2, c3, c4, c5, c6, c7, c8, c9, c10, c11, c12, c13]
}

/// Cartan element `(Φ(T̃₀, 0, 0, ν), 0, 0, r, 0, 0)` with `τ₃ = −τ₁ − τ₂`.
pub fn h8_element(tau1: &GaussRat, tau2: &GaussRat, nu: &GaussRat, r: &GaussRat) -> E8Elem {
    let tau3 = -&(tau1 + tau2);
    let phi =
        E7Elem::cartan(&[tau1.clone(), tau2.clone(), tau3], nu.clone()).expect("τ sums to zero");
    E8Elem {
        phi,
        r: r.clone(),
        ..E8Elem::zero()
    }
}

/// `exp(ad N)` on the 52 coordinates for nilpotent `ad N`.
pub fn exp_ad(n: &E8Elem) -> Result<Mat> {
    e8_data().ad(&n.coords()).exp_nilpotent()
}

/// Basis of the centralizer of `1₋`.
pub fn centralizer_of_one_lower() -> Vec<Vec<GaussRat>> {
    let one = E8Elem::one_lower();
    let cols: Vec<Vec<GaussRat>> = (0..E8_DIM)
        .map(|k| e8_bracket(&E8Elem::basis(k), &one).coords())
        .collect();
    Mat::from_cols(&cols).expect("52 columns").kernel()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jordan::JordanElem;

    fn g(n: i64) -> GaussRat {
        GaussRat::from_int(n)
    }

    fn sample() -> E8Elem {
        let p = FreudElem::new(
            JordanElem::from_ints([1, 0, -1, 2, 0, 1]),
            JordanElem::e(2),
            g(1),
            g(0),
        );
        let q = FreudElem::new(
            JordanElem::zero(),
            JordanElem::from_ints([0, 1, 1, 0, -1, 0]),
            g(0),
            g(2),
        );
        E8Elem {
            phi: E7Elem::basis(9).add(&E7Elem::phi0()),
            p,
            q,
            r: g(3),
            s: g(-1),
            t: GaussRat::i(),
        }
    }

    #[test]
    fn bracket_examples() {
        let x = sample();
        let b = e8_bracket(&E8Elem::one_tilde(), &x);
        let expect = E8Elem {
            phi: E7Elem::zero(),
            p: x.p.clone(),
            q: x.q.scale(&g(-1)),
            r: g(0),
            s: &g(2) * &x.s,
            t: &g(-2) * &x.t,
        };
        assert_eq!(b, expect);
        assert_eq!(
            e8_bracket(&E8Elem::one_upper(), &E8Elem::one_lower()),
            E8Elem::one_tilde()
        );
        assert_eq!(
            e8_bracket(&E8Elem::one_tilde(), &E8Elem::one_lower()),
            E8Elem::lower(g(-2))
        );
        let y = E8Elem::basis(30).add(&E8Elem::basis(3));
        assert_eq!(e8_bracket(&x, &y), e8_bracket(&y, &x).scale(&g(-1)));
    }

    #[test]
    fn inner_and_killing_examples() {
        let one = E8Elem::one_tilde();
        assert_eq!(inner8(&one, &one), g(-8));
        assert_eq!(killing8(&one, &one), g(36));
        assert_eq!(killing8_checked(&one, &one).unwrap(), g(36));
        let x = sample();
        let y = E8Elem::basis(40)
            .add(&E8Elem::basis(2))
            .add(&E8Elem::one_upper());
        killing8_checked(&x, &y).unwrap();
    }

    #[test]
    fn cartan_killing_restriction() {
        let a = h8_element(&g(1), &g(2), &g(3), &g(-1));
        let b = h8_element(&g(-2), &g(5), &GaussRat::frac(1, 2), &g(4));
        let (ta, tb) = ([g(1), g(2), g(-3)], [g(-2), g(5), g(-3)]);
        let sum: GaussRat = ta.iter().zip(&tb).map(|(x, y)| x * y).sum();
        let expect =
            &(&(&g(9) * &sum) + &(&g(12) * &(&g(3) * &GaussRat::frac(1, 2)))) + &(&g(36) * &g(-4));
        assert_eq!(killing8(&a, &b), expect);
        assert!(e8_bracket(&a, &b).is_zero());
    }

    #[test]
    fn cartan_eigenvalues() {
        let (t1, t2, nu, r) = (g(1), g(6), g(2), g(17));
        let h = h8_element(&t1, &t2, &nu, &r);
        let pe1 = E8Elem::from_p(FreudElem::dot_x(JordanElem::e(1)));
        let coef = &(&t1 - &(&nu * &GaussRat::frac(1, 3))) + &r;
        assert_eq!(e8_bracket(&h, &pe1), pe1.scale(&coef));
        assert_eq!(
            e8_bracket(&h, &E8Elem::one_upper()),
            E8Elem::upper(&g(2) * &r)
        );
    }

    #[test]
    fn one_lower_is_in_w_and_one_tilde_is_not() {
        let one = E8Elem::one_lower();
        assert!(in_w(&one));
        assert!(w_conditions(&one).iter().all(|&b| b));
        let t = E8Elem::one_tilde();
        assert!(!r_cross_r(&t, &t).is_zero());
        assert!(!in_w(&t));
        assert!(!w_conditions(&t)[5]);
        assert!(!in_w(&E8Elem::zero()));
    }

    #[test]
    fn literal_one_thirtieth_rejects_one_lower() {
        let one = E8Elem::one_lower();
        let probe = E8Elem::one_upper();
        let v = r_cross_r_with(&one, &probe, &GaussRat::frac(1, 30));
        assert_eq!(v, E8Elem::lower(GaussRat::frac(-7, 5)));
    }

    #[test]
    fn centralizer_dimension() {
        let ker = centralizer_of_one_lower();
        assert_eq!(ker.len(), 36);
        for v in ker {
            let x = E8Elem::from_coords(&v);
            assert!(x.p.is_zero() && x.r.is_zero() && x.s.is_zero());
        }
    }

    #[test]
    fn condition_two_on_q_and_t() {
        let x = E8Elem {
            q: FreudElem::one_under(),
            t: g(5),
            ..E8Elem::zero()
        };
        let c = w_conditions(&x);
        assert_eq!(c[1], p_cross_q(&x.q, &x.q).is_zero());
        assert!(c[1]);
    }
}
