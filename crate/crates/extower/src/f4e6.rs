//! The algebras (f4,R)^C (dimension 3) and (e6,R)^C (dimension 8) acting on J(3, R^C).

use crate::error::{Error, Result};
use crate::exact::{GaussRat, Mat};
use crate::jordan::{
    a_tilde, m3_mul, m3_to_mat, m3_transpose, mat_to_m3, t_tilde, JordanElem, JordanOp,
};

/// `c₁Ã₁(1) + c₂Ã₂(1) + c₃Ã₃(1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct F4Elem {
    pub c: [GaussRat; 3],
}

impl F4Elem {
    pub fn zero() -> Self {
        F4Elem {
            c: std::array::from_fn(|_| GaussRat::zero()),
        }
    }

    pub fn new(c1: GaussRat, c2: GaussRat, c3: GaussRat) -> Self {
        F4Elem { c: [c1, c2, c3] }
    }

    /// `Ãᵢ(c)` as an element, with a 1-based, mod-3 index.
    pub fn a(i: i64, c: GaussRat) -> Self {
        let mut z = F4Elem::zero();
        z.c[crate::jordan::axis(i)] = c;
        z
    }

    pub fn basis(k: usize) -> Self {
        F4Elem::a(k as i64 + 1, GaussRat::one())
    }

    pub fn coords(&self) -> Vec<GaussRat> {
        self.c.to_vec()
    }

    pub fn from_coords(c: &[GaussRat]) -> Self {
        F4Elem {
            c: [c[0].clone(), c[1].clone(), c[2].clone()],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(GaussRat::is_zero)
    }

    pub fn add(&self, o: &F4Elem) -> F4Elem {
        F4Elem {
            c: std::array::from_fn(|k| &self.c[k] + &o.c[k]),
        }
    }

    pub fn scale(&self, s: &GaussRat) -> F4Elem {
        F4Elem {
            c: std::array::from_fn(|k| &self.c[k] * s),
        }
    }

    pub fn operator(&self) -> JordanOp {
        (0..3).fold(JordanOp::zero(), |acc, k| {
            acc.add(&a_tilde(k as i64 + 1, &self.c[k]))
        })
    }

    /// Read `δ` back from an operator assumed to be a combination of the `Ãᵢ(1)`.
    fn read(op: &JordanOp) -> F4Elem {
        // Ãᵢ(c)Eᵢ₊₁ = −½Fᵢ(c), so cᵢ = −2·(Fᵢ-coordinate of δEᵢ₊₁)
        F4Elem {
            c: std::array::from_fn(|k| {
                let img = op.apply(&JordanElem::e(k as i64 + 2));
                &img.x[k] * &GaussRat::from_int(-2)
            }),
        }
    }
}

/// Bracket from the rule `[Ãᵢ(a), Ãᵢ₊₁(b)] = −½Ãᵢ₊₂(ab)`.
pub fn f4_bracket(a: &F4Elem, b: &F4Elem) -> F4Elem {
    let h = GaussRat::frac(-1, 2);
    F4Elem {
        c: std::array::from_fn(|k| {
            let (i, j) = ((k + 1) % 3, (k + 2) % 3);
            &h * &(&(&a.c[i] * &b.c[j]) - &(&a.c[j] * &b.c[i]))
        }),
    }
}

/// `(δ, δ')₄ = −2(c₁c₁' + c₂c₂' + c₃c₃')`.
pub fn f4_inner(a: &F4Elem, b: &F4Elem) -> GaussRat {
    &crate::exact::dot(&a.c, &b.c) * &GaussRat::from_int(-2)
}

/// Killing form of (f4,R)^C computed by ad-trace, `¼(,)₄` and `⅕ tr`; errors if they disagree.
pub fn f4_killing(a: &F4Elem, b: &F4Elem) -> Result<GaussRat> {
    let ad = |x: &F4Elem| {
        let cols: Vec<Vec<GaussRat>> = (0..3)
            .map(|k| f4_bracket(x, &F4Elem::basis(k)).coords())
            .collect();
        Mat::from_cols(&cols).expect("3 columns")
    };
    let by_ad = ad(a).mul(&ad(b)).trace();
    let by_form = &f4_inner(a, b) * &GaussRat::frac(1, 4);
    let by_trace = &a.operator().compose(&b.operator()).trace() * &GaussRat::frac(1, 5);
    if by_ad != by_form || by_ad != by_trace {
        return Err(Error::InternalMismatch(format!(
            "f4 Killing: ad-trace {by_ad}, form {by_form}, operator trace {by_trace}"
        )));
    }
    Ok(by_ad)
}

/// `f₄,C(A)X = AXᵗA` for `A ᵗA = E`.
pub fn f4c_group_map(a: &Mat) -> Result<JordanOp> {
    if (a.rows(), a.cols()) != (3, 3) || a.mul(&a.transpose()) != Mat::identity(3) {
        return Err(Error::NotOrthogonal);
    }
    let am = mat_to_m3(a);
    let at = m3_transpose(&am);
    Ok(JordanOp::from_fn(|x| {
        JordanElem::from_matrix(&m3_mul(&m3_mul(&am, &x.to_matrix()), &at))
    }))
}

/// Cayley transform `(E − S)(E + S)⁻¹`, orthogonal whenever `S` is skew and `E + S` invertible.
pub fn cayley(s: &Mat) -> Result<Mat> {
    let e = Mat::identity(s.rows());
    Ok(e.sub(s).mul(&e.add(s).inverse()?))
}

/// The skew matrix `A₁(d₁) + A₂(d₂) + A₃(d₃)`.
pub fn skew_from_d(d: &[GaussRat; 3]) -> Mat {
    let m = (0..3).fold(crate::jordan::m3_zero(), |acc, k| {
        crate::jordan::m3_add(&acc, &crate::jordan::a_matrix(k as i64 + 1, &d[k]))
    });
    m3_to_mat(&m)
}

fn is_skew(m: &Mat) -> bool {
    m.rows() == 3 && m.cols() == 3 && m.add(&m.transpose()).is_zero()
}

/// `f₄,C∗(D)X = DX + XᵗD`, returned in the `Ãᵢ` basis.
pub fn f4cstar(d: &Mat) -> Result<F4Elem> {
    if !is_skew(d) {
        return Err(Error::NotSkew);
    }
    let op = sl3_action(d);
    let delta = F4Elem::read(&op);
    if delta.operator() != op {
        return Err(Error::InternalMismatch("f4cstar image is not in f4".into()));
    }
    Ok(delta)
}

/// The operator `X ↦ SX + XᵗS` on J(3, R^C).
pub fn sl3_action(s: &Mat) -> JordanOp {
    let sm = mat_to_m3(s);
    let st = m3_transpose(&sm);
    JordanOp::from_fn(|x| {
        let xm = x.to_matrix();
        JordanElem::from_matrix(&crate::jordan::m3_add(&m3_mul(&sm, &xm), &m3_mul(&xm, &st)))
    })
}

/// Traceless basis of the `T`-part: `E₁−E₂, E₂−E₃, F₁(1), F₂(1), F₃(1)`.
pub fn traceless_basis(k: usize) -> JordanElem {
    match k {
        0 => JordanElem::e(1).sub(&JordanElem::e(2)),
        1 => JordanElem::e(2).sub(&JordanElem::e(3)),
        2..=4 => JordanElem::f(k as i64 - 1, GaussRat::one()),
        _ => panic!("traceless basis has 5 elements"),
    }
}

/// `φ = δ + T̃` with `tr T = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct E6Elem {
    pub delta: F4Elem,
    pub t: JordanElem,
}

pub const E6_NAMES: [&str; 8] = [
    "A1", "A2", "A3", "T(E1-E2)", "T(E2-E3)", "T(F1)", "T(F2)", "T(F3)",
];

impl E6Elem {
    pub fn zero() -> Self {
        E6Elem {
            delta: F4Elem::zero(),
            t: JordanElem::zero(),
        }
    }

    /// Assemble from parts; `t0` must be traceless.
    pub fn from_parts(delta: F4Elem, t0: JordanElem) -> Result<Self> {
        if !t0.trace().is_zero() {
            return Err(Error::NotTraceless);
        }
        Ok(E6Elem { delta, t: t0 })
    }

    pub fn from_delta(delta: F4Elem) -> Self {
        E6Elem {
            delta,
            t: JordanElem::zero(),
        }
    }

    /// `T̃` for traceless `T`.
    pub fn from_t(t: JordanElem) -> Result<Self> {
        E6Elem::from_parts(F4Elem::zero(), t)
    }

    /// Cartan element `T̃₀`, `T₀ = diag(τ₁, τ₂, τ₃)`, `τ₁ + τ₂ + τ₃ = 0`.
    pub fn cartan(tau: &[GaussRat; 3]) -> Result<Self> {
        let t = JordanElem {
            xi: tau.clone(),
            x: std::array::from_fn(|_| GaussRat::zero()),
        };
        E6Elem::from_t(t)
    }

    pub fn basis(k: usize) -> Self {
        let mut c = vec![GaussRat::zero(); 8];
        c[k] = GaussRat::one();
        E6Elem::from_coords(&c)
    }

    /// Coordinates `(c₁, c₂, c₃, a, b, x₁, x₂, x₃)` with `T = a(E₁−E₂) + b(E₂−E₃) + ΣxᵢFᵢ(1)`.
    pub fn coords(&self) -> Vec<GaussRat> {
        let mut v = self.delta.coords();
        v.push(self.t.xi[0].clone());
        v.push(-&self.t.xi[2]);
        v.extend(self.t.x.iter().cloned());
        v
    }

    pub fn from_coords(c: &[GaussRat]) -> Self {
        assert_eq!(c.len(), 8, "an e6 element has 8 coordinates");
        let (a, b) = (&c[3], &c[4]);
        E6Elem {
            delta: F4Elem::from_coords(&c[0..3]),
            t: JordanElem {
                xi: [a.clone(), b - a, -b],
                x: [c[5].clone(), c[6].clone(), c[7].clone()],
            },
        }
    }

    pub fn is_zero(&self) -> bool {
        self.delta.is_zero() && self.t.is_zero()
    }

    pub fn add(&self, o: &E6Elem) -> E6Elem {
        E6Elem {
            delta: self.delta.add(&o.delta),
            t: self.t.add(&o.t),
        }
    }

    pub fn sub(&self, o: &E6Elem) -> E6Elem {
        self.add(&o.scale(&GaussRat::from_int(-1)))
    }

    pub fn scale(&self, s: &GaussRat) -> E6Elem {
        E6Elem {
            delta: self.delta.scale(s),
            t: self.t.scale(s),
        }
    }

    pub fn operator(&self) -> JordanOp {
        self.delta.operator().add(&t_tilde(&self.t))
    }

    /// Recover `(δ, T)` from an operator: `T = φE`, `δ = φ − T̃`.
    pub fn decompose(op: &JordanOp) -> Result<Self> {
        let t = op.apply(&JordanElem::unit());
        if !t.trace().is_zero() {
            return Err(Error::NotInE6(format!("φE has trace {}", t.trace())));
        }
        let delta_op = op.sub(&t_tilde(&t));
        let delta = F4Elem::read(&delta_op);
        if delta.operator() != delta_op {
            return Err(Error::NotInE6(
                "δ part is not a combination of the Ãᵢ".into(),
            ));
        }
        Ok(E6Elem { delta, t })
    }

    /// `ᵗφ` with respect to the inner product.
    pub fn transpose(&self) -> E6Elem {
        E6Elem::decompose(&self.operator().transpose()).expect("e6 is closed under transpose")
    }

    /// τ acting on coordinates.
    pub fn tau(&self) -> E6Elem {
        E6Elem::from_coords(&self.coords().iter().map(GaussRat::conj).collect::<Vec<_>>())
    }
}

/// Bracket as the operator commutator, projected back onto the basis.
pub fn e6_bracket(a: &E6Elem, b: &E6Elem) -> E6Elem {
    E6Elem::decompose(&a.operator().commutator(&b.operator()))
        .expect("e6 is closed under the bracket")
}

/// `(φ, φ')₆ = (δ, δ')₄ + (T, T')`.
pub fn e6_inner(a: &E6Elem, b: &E6Elem) -> GaussRat {
    &f4_inner(&a.delta, &b.delta) + &a.t.inner(&b.t)
}

/// ad matrix of `x` on the 8-dimensional coordinate space.
pub fn e6_ad(x: &E6Elem) -> Mat {
    let cols: Vec<Vec<GaussRat>> = (0..8)
        .map(|k| e6_bracket(x, &E6Elem::basis(k)).coords())
        .collect();
    Mat::from_cols(&cols).expect("8 columns")
}

/// Killing form of (e6,R)^C by ad-trace, `(3/2)(,)₆` and `(6/5) tr`; errors if they disagree.
pub fn e6_killing(a: &E6Elem, b: &E6Elem) -> Result<GaussRat> {
    let by_ad = e6_ad(a).mul(&e6_ad(b)).trace();
    let by_form = &e6_inner(a, b) * &GaussRat::frac(3, 2);
    let by_trace = &a.operator().compose(&b.operator()).trace() * &GaussRat::frac(6, 5);
    if by_ad != by_form || by_ad != by_trace {
        return Err(Error::InternalMismatch(format!(
            "e6 Killing: ad-trace {by_ad}, form {by_form}, operator trace {by_trace}"
        )));
    }
    Ok(by_ad)
}

/// `f₆,C∗(S)X = SX + XᵗS` for traceless `S`.
pub fn f6cstar(s: &Mat) -> Result<E6Elem> {
    if (s.rows(), s.cols()) != (3, 3) {
        return Err(Error::Shape("f6cstar expects a 3x3 matrix".into()));
    }
    if !s.trace().is_zero() {
        return Err(Error::NotTraceless);
    }
    E6Elem::decompose(&sl3_action(s))
}

/// Basis of sl(3): `E₁₁−E₂₂, E₂₂−E₃₃` and the six off-diagonal units.
pub fn sl3_basis() -> Vec<Mat> {
    let unit = |i: usize, j: usize| {
        let mut m = Mat::zero(3, 3);
        m[(i, j)] = GaussRat::one();
        m
    };
    let mut out = vec![unit(0, 0).sub(&unit(1, 1)), unit(1, 1).sub(&unit(2, 2))];
    for i in 0..3 {
        for j in 0..3 {
            if i != j {
                out.push(unit(i, j));
            }
        }
    }
    out
}

/// `λ∗φ = −ᵗφ`, the differential of `λ(α) = ᵗα⁻¹`.
pub fn lambda_e6(phi: &E6Elem) -> E6Elem {
    phi.transpose().scale(&GaussRat::from_int(-1))
}

/// `τλ∗φ = −τᵗφτ`.
pub fn tau_lambda_e6(phi: &E6Elem) -> E6Elem {
    lambda_e6(phi).tau()
}

/// `(τ-fixed, τλ-fixed)`.
pub fn tau_fixed_check(phi: &E6Elem) -> (bool, bool) {
    (phi.tau() == *phi, tau_lambda_e6(phi) == *phi)
}

/// Basis of su(3): `i(E₁₁−E₂₂), i(E₂₂−E₃₃)`, `E_jk − E_kj`, `i(E_jk + E_kj)` for `j < k`.
pub fn su3_basis() -> Vec<Mat> {
    let unit = |i: usize, j: usize| {
        let mut m = Mat::zero(3, 3);
        m[(i, j)] = GaussRat::one();
        m
    };
    let i = GaussRat::i();
    let mut out = vec![
        unit(0, 0).sub(&unit(1, 1)).scale(&i),
        unit(1, 1).sub(&unit(2, 2)).scale(&i),
    ];
    for (j, k) in [(0, 1), (0, 2), (1, 2)] {
        out.push(unit(j, k).sub(&unit(k, j)));
        out.push(unit(j, k).add(&unit(k, j)).scale(&i));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::independent;

    fn g(n: i64) -> GaussRat {
        GaussRat::from_int(n)
    }

    #[test]
    fn f4_bracket_examples() {
        let (a1, a2, a3) = (F4Elem::basis(0), F4Elem::basis(1), F4Elem::basis(2));
        assert_eq!(f4_bracket(&a1, &a2), a3.scale(&GaussRat::frac(-1, 2)));
        assert!(f4_bracket(&a1, &F4Elem::a(1, g(5))).is_zero());
        assert_eq!(f4_bracket(&a1, &a3), a2.scale(&GaussRat::frac(1, 2)));
        for i in 0..3 {
            for j in 0..3 {
                let (x, y) = (F4Elem::basis(i), F4Elem::basis(j));
                assert_eq!(
                    f4_bracket(&x, &y).operator(),
                    x.operator().commutator(&y.operator())
                );
            }
        }
    }

    #[test]
    fn f4_killing_examples() {
        let a1 = F4Elem::basis(0);
        assert_eq!(f4_killing(&a1, &a1).unwrap(), GaussRat::frac(-1, 2));
        assert_eq!(
            a1.operator().compose(&a1.operator()).trace(),
            GaussRat::frac(-5, 2)
        );
        assert!(f4_killing(&a1, &F4Elem::basis(1)).unwrap().is_zero());
    }

    #[test]
    fn f4c_group_map_examples() {
        assert_eq!(
            f4c_group_map(&Mat::identity(3)).unwrap(),
            JordanOp::identity()
        );
        let (c2, _) = crate::jordan::c2_c3();
        let f = f4c_group_map(&m3_to_mat(&c2)).unwrap();
        assert_eq!(f.apply(&JordanElem::e(1)), JordanElem::e(2));
        let s = skew_from_d(&[g(1), GaussRat::frac(2, 3), g(-2)]);
        let a = cayley(&s).unwrap();
        let x = JordanElem::from_coords(&[g(1), g(-2), g(3), GaussRat::frac(1, 2), g(4), g(-1)]);
        assert_eq!(f4c_group_map(&a).unwrap().apply(&x).det(), x.det());
        assert_eq!(
            f4c_group_map(&Mat::from_ints(&[&[1, 1, 0], &[0, 1, 0], &[0, 0, 1]])),
            Err(Error::NotOrthogonal)
        );
    }

    #[test]
    fn f4cstar_examples() {
        let d = skew_from_d(&[g(1), g(0), g(0)]);
        assert_eq!(f4cstar(&d).unwrap(), F4Elem::basis(0).scale(&g(2)));
        assert!(f4cstar(&Mat::zero(3, 3)).unwrap().is_zero());
        assert_eq!(f4cstar(&Mat::identity(3)), Err(Error::NotSkew));
        // general D = ΣAᵢ(dᵢ) maps to 2ΣÃᵢ(dᵢ)
        let dv = [g(2), GaussRat::i(), g(-3)];
        let img = f4cstar(&skew_from_d(&dv)).unwrap();
        assert_eq!(img, F4Elem { c: dv.clone() }.scale(&g(2)));
    }

    #[test]
    fn e6_decompose_examples() {
        let t = JordanElem::e(1).sub(&JordanElem::e(2));
        let d = E6Elem::decompose(&t_tilde(&t)).unwrap();
        assert!(d.delta.is_zero());
        assert_eq!(d.t, t);
        let d = E6Elem::decompose(&a_tilde(1, &g(1))).unwrap();
        assert_eq!(d.delta, F4Elem::basis(0));
        assert!(d.t.is_zero());
        for k in 0..8 {
            let b = E6Elem::basis(k);
            assert_eq!(E6Elem::decompose(&b.operator()).unwrap(), b);
            assert_eq!(E6Elem::from_coords(&b.coords()), b);
        }
        assert!(matches!(
            E6Elem::decompose(&JordanOp::identity()),
            Err(Error::NotInE6(_))
        ));
    }

    #[test]
    fn e6_dimension_and_uniqueness() {
        let ops: Vec<Vec<GaussRat>> = (0..8)
            .map(|k| E6Elem::basis(k).operator().0.entries().to_vec())
            .collect();
        assert!(independent(&ops));
    }

    #[test]
    fn f6cstar_examples() {
        let d = skew_from_d(&[g(1), g(0), g(0)]);
        assert_eq!(
            f6cstar(&d).unwrap(),
            E6Elem::from_delta(F4Elem::basis(0).scale(&g(2)))
        );
        let s = Mat::diag(&[g(1), g(-1), g(0)]);
        let img = f6cstar(&s).unwrap();
        assert!(img.delta.is_zero());
        assert_eq!(img.t, JordanElem::e(1).sub(&JordanElem::e(2)).scale(&g(2)));
        assert_eq!(f6cstar(&Mat::identity(3)), Err(Error::NotTraceless));
    }

    #[test]
    fn e6_killing_examples() {
        let t = E6Elem::from_t(JordanElem::e(1).sub(&JordanElem::e(2))).unwrap();
        assert_eq!(e6_killing(&t, &t).unwrap(), g(3));
        assert_eq!(
            t.operator().compose(&t.operator()).trace(),
            GaussRat::frac(5, 2)
        );
    }

    #[test]
    fn lambda_examples() {
        let t = E6Elem::from_t(JordanElem::from_ints([1, 1, -2, 3, 0, 1])).unwrap();
        assert_eq!(lambda_e6(&t), t.scale(&g(-1)));
        let a = E6Elem::from_delta(F4Elem::basis(1));
        assert_eq!(lambda_e6(&a), a);
        for k in 0..8 {
            let b = E6Elem::basis(k);
            assert_eq!(lambda_e6(&lambda_e6(&b)), b);
        }
        let s = Mat::diag(&[g(1), g(-1), g(0)]).scale(&GaussRat::i());
        assert_eq!(tau_fixed_check(&f6cstar(&s).unwrap()), (false, true));
    }
}
