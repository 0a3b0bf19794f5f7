//! Complexified quaternions H^C, the algebra sp(3, H^C), and its isomorphism onto (e7,R)^C.
//!
//! The scalar `i` of Q(i) and the quaternion unit `e₁` are kept apart: coefficients are
//! Gaussian rationals on the basis `1, e₁, e₂, e₃`, and `i·e₁` squares to `1`, not `−1`.

use crate::error::{Error, Result};
use crate::exact::{GaussRat, Mat};
use crate::f4e6::f6cstar;
use crate::freudenthal::E7Elem;
use crate::jordan::JordanElem;

/// `c₀ + c₁e₁ + c₂e₂ + c₃e₃` with Gaussian rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct QuatC {
    pub c: [GaussRat; 4],
}

impl QuatC {
    pub fn zero() -> Self {
        QuatC {
            c: std::array::from_fn(|_| GaussRat::zero()),
        }
    }

    pub fn new(c0: GaussRat, c1: GaussRat, c2: GaussRat, c3: GaussRat) -> Self {
        QuatC {
            c: [c0, c1, c2, c3],
        }
    }

    pub fn scalar(s: GaussRat) -> Self {
        let mut q = QuatC::zero();
        q.c[0] = s;
        q
    }

    pub fn one() -> Self {
        QuatC::scalar(GaussRat::one())
    }

    /// The unit `e_k`, `k ∈ {1, 2, 3}`.
    pub fn unit(k: usize) -> Self {
        let mut q = QuatC::zero();
        q.c[k] = GaussRat::one();
        q
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(GaussRat::is_zero)
    }

    /// True when the element lies in `C^C = span{1, e₁}`.
    pub fn in_cc(&self) -> bool {
        self.c[2].is_zero() && self.c[3].is_zero()
    }

    pub fn add(&self, o: &QuatC) -> QuatC {
        QuatC {
            c: std::array::from_fn(|k| &self.c[k] + &o.c[k]),
        }
    }

    pub fn sub(&self, o: &QuatC) -> QuatC {
        QuatC {
            c: std::array::from_fn(|k| &self.c[k] - &o.c[k]),
        }
    }

    pub fn neg(&self) -> QuatC {
        QuatC {
            c: std::array::from_fn(|k| -&self.c[k]),
        }
    }

    pub fn scale(&self, s: &GaussRat) -> QuatC {
        QuatC {
            c: std::array::from_fn(|k| &self.c[k] * s),
        }
    }

    pub fn mul(&self, o: &QuatC) -> QuatC {
        let [a0, a1, a2, a3] = &self.c;
        let [b0, b1, b2, b3] = &o.c;
        QuatC {
            c: [
                &(&(a0 * b0) - &(a1 * b1)) - &(&(a2 * b2) + &(a3 * b3)),
                &(&(a0 * b1) + &(a1 * b0)) + &(&(a2 * b3) - &(a3 * b2)),
                &(&(a0 * b2) - &(a1 * b3)) + &(&(a2 * b0) + &(a3 * b1)),
                &(&(a0 * b3) + &(a1 * b2)) + &(&(a3 * b0) - &(a2 * b1)),
            ],
        }
    }

    /// Quaternion conjugation: negates `e₁, e₂, e₃`.
    pub fn conj(&self) -> QuatC {
        QuatC {
            c: [self.c[0].clone(), -&self.c[1], -&self.c[2], -&self.c[3]],
        }
    }

    /// The overline: the automorphism fixing `1, e₂, i` and negating `e₁` (hence `e₃`).
    pub fn bar(&self) -> QuatC {
        QuatC {
            c: [
                self.c[0].clone(),
                -&self.c[1],
                self.c[2].clone(),
                -&self.c[3],
            ],
        }
    }

    /// Scalar value when the element is a multiple of `1`.
    pub fn as_scalar(&self) -> Option<GaussRat> {
        self.c[1..]
            .iter()
            .all(GaussRat::is_zero)
            .then(|| self.c[0].clone())
    }
}

/// `(ι, ῑ)` with `ι = ½(1 + i·e₁)`.
pub fn iota_pair() -> (QuatC, QuatC) {
    let iota = QuatC::new(
        GaussRat::frac(1, 2),
        GaussRat::complex(0, 1, 2),
        GaussRat::zero(),
        GaussRat::zero(),
    );
    let bar = iota.bar();
    (iota, bar)
}

/// 3×3 matrix over H^C.
pub type QMat = [[QuatC; 3]; 3];

fn qmat_zero() -> QMat {
    std::array::from_fn(|_| std::array::from_fn(|_| QuatC::zero()))
}

fn qmat_from(f: impl Fn(usize, usize) -> QuatC) -> QMat {
    std::array::from_fn(|i| std::array::from_fn(|j| f(i, j)))
}

pub fn qmat_mul(a: &QMat, b: &QMat) -> QMat {
    qmat_from(|i, j| (0..3).fold(QuatC::zero(), |acc, k| acc.add(&a[i][k].mul(&b[k][j]))))
}

pub fn qmat_add(a: &QMat, b: &QMat) -> QMat {
    qmat_from(|i, j| a[i][j].add(&b[i][j]))
}

pub fn qmat_sub(a: &QMat, b: &QMat) -> QMat {
    qmat_from(|i, j| a[i][j].sub(&b[i][j]))
}

/// `D* = conj(ᵗD)`.
pub fn qmat_star(a: &QMat) -> QMat {
    qmat_from(|i, j| a[j][i].conj())
}

/// Element of `sp(3, H^C) = {D | D + D* = 0}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Sp3HCElem {
    entries: QMat,
}

impl Sp3HCElem {
    pub fn new(entries: QMat) -> Result<Self> {
        if !qmat_add(&entries, &qmat_star(&entries))
            .iter()
            .flatten()
            .all(QuatC::is_zero)
        {
            return Err(Error::NotSp3("D + D* is nonzero".into()));
        }
        Ok(Sp3HCElem { entries })
    }

    pub fn zero() -> Self {
        Sp3HCElem {
            entries: qmat_zero(),
        }
    }

    pub fn entries(&self) -> &QMat {
        &self.entries
    }

    pub fn add(&self, o: &Sp3HCElem) -> Sp3HCElem {
        Sp3HCElem {
            entries: qmat_add(&self.entries, &o.entries),
        }
    }

    pub fn scale(&self, s: &GaussRat) -> Sp3HCElem {
        Sp3HCElem {
            entries: qmat_from(|i, j| self.entries[i][j].scale(s)),
        }
    }

    pub fn bracket(&self, o: &Sp3HCElem) -> Sp3HCElem {
        Sp3HCElem {
            entries: qmat_sub(
                &qmat_mul(&self.entries, &o.entries),
                &qmat_mul(&o.entries, &self.entries),
            ),
        }
    }
}

/// `D = B + L(e₂E) + sE` with `B ∈ su(3, C^C)`, `L` symmetric over `C^C`, `s ∈ C·e₁`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Sp3Decomp {
    pub b: QMat,
    pub l: QMat,
    /// Coefficient of `e₁` in the scalar part.
    pub s: GaussRat,
}

impl Sp3Decomp {
    pub fn reassemble(&self) -> Sp3HCElem {
        let e2 = QuatC::unit(2);
        let s = QuatC::unit(1).scale(&self.s);
        let entries = qmat_from(|i, j| {
            let mut q = self.b[i][j].add(&self.l[i][j].mul(&e2));
            if i == j {
                q = q.add(&s);
            }
            q
        });
        Sp3HCElem { entries }
    }
}

pub fn decompose_sp3(d: &Sp3HCElem) -> Sp3Decomp {
    let e = &d.entries;
    // q = (c₀ + c₁e₁) + (c₂ + c₃e₁)e₂
    let da = qmat_from(|i, j| {
        QuatC::new(
            e[i][j].c[0].clone(),
            e[i][j].c[1].clone(),
            GaussRat::zero(),
            GaussRat::zero(),
        )
    });
    let l = qmat_from(|i, j| {
        QuatC::new(
            e[i][j].c[2].clone(),
            e[i][j].c[3].clone(),
            GaussRat::zero(),
            GaussRat::zero(),
        )
    });
    let s = &(0..3).map(|k| da[k][k].c[1].clone()).sum::<GaussRat>() * &GaussRat::frac(1, 3);
    let b = qmat_from(|i, j| {
        if i == j {
            da[i][j].sub(&QuatC::unit(1).scale(&s))
        } else {
            da[i][j].clone()
        }
    });
    Sp3Decomp { b, l, s }
}

/// True when `b` is skew-hermitian for the overline, traceless, and has entries in `C^C`.
pub fn is_su3_cc(b: &QMat) -> bool {
    let entries_ok = b.iter().flatten().all(QuatC::in_cc);
    let skew = (0..3).all(|i| (0..3).all(|j| b[i][j].add(&b[j][i].bar()).is_zero()));
    let tr = b[0][0].add(&b[1][1]).add(&b[2][2]);
    entries_ok && skew && tr.is_zero()
}

fn scalar_entry(q: &QuatC, what: &str) -> Result<GaussRat> {
    q.as_scalar()
        .ok_or_else(|| Error::InternalMismatch(format!("{what} has a non-scalar entry {q:?}")))
}

/// `g(B) = ιB − ῑᵗB`, a traceless 3×3 matrix over Q(i).
pub fn g_map(b: &QMat) -> Result<Mat> {
    if !is_su3_cc(b) {
        return Err(Error::NotSu3(
            "expected a traceless skew-hermitian matrix over C^C".into(),
        ));
    }
    let (iota, iota_bar) = iota_pair();
    let mut m = Mat::zero(3, 3);
    for i in 0..3 {
        for j in 0..3 {
            m[(i, j)] = scalar_entry(&iota.mul(&b[i][j]).sub(&iota_bar.mul(&b[j][i])), "g(B)")?;
        }
    }
    Ok(m)
}

/// Inverse of [`g_map`] on traceless matrices over Q(i).
pub fn g_inverse(m: &Mat) -> Result<QMat> {
    if (m.rows(), m.cols()) != (3, 3) || !m.trace().is_zero() {
        return Err(Error::NotTraceless);
    }
    let basis = su3_cc_basis();
    let images: Vec<Vec<GaussRat>> = basis
        .iter()
        .map(|b| Ok(g_map(b)?.entries().to_vec()))
        .collect::<Result<_>>()?;
    let coeffs = Mat::from_cols(&images)?.solve(m.entries())?;
    Ok(basis.iter().zip(&coeffs).fold(qmat_zero(), |acc, (b, c)| {
        qmat_add(&acc, &qmat_from(|i, j| b[i][j].scale(c)))
    }))
}

fn unit_q(i: usize, j: usize, q: &QuatC) -> QMat {
    let mut m = qmat_zero();
    m[i][j] = q.clone();
    m
}

fn sym_q(i: usize, j: usize, q: &QuatC) -> QMat {
    if i == j {
        unit_q(i, i, q)
    } else {
        qmat_add(&unit_q(i, j, q), &unit_q(j, i, q))
    }
}

/// Basis of `su(3, C^C)`: `e₁(E₁₁−E₂₂), e₁(E₂₂−E₃₃)`, then `E_jk − E_kj`, `e₁(E_jk + E_kj)` for `j < k`.
pub fn su3_cc_basis() -> Vec<QMat> {
    let (one, e1) = (QuatC::one(), QuatC::unit(1));
    let mut out = vec![
        qmat_sub(&unit_q(0, 0, &e1), &unit_q(1, 1, &e1)),
        qmat_sub(&unit_q(1, 1, &e1), &unit_q(2, 2, &e1)),
    ];
    for (j, k) in [(0, 1), (0, 2), (1, 2)] {
        out.push(qmat_sub(&unit_q(j, k, &one), &unit_q(k, j, &one)));
        out.push(sym_q(j, k, &e1));
    }
    out
}

/// Rational basis of `sp(3)`: 8 from `su(3)`, 12 of the form `L(e₂E)` with `L` symmetric with entries in
/// `{1, e₁}`, and `e₁E`.
pub fn sp3_real_basis() -> Vec<Sp3HCElem> {
    let mut out: Vec<QMat> = su3_cc_basis();
    let e2 = QuatC::unit(2);
    for (j, k) in [(0, 0), (1, 1), (2, 2), (0, 1), (0, 2), (1, 2)] {
        for c in [QuatC::one(), QuatC::unit(1)] {
            out.push(sym_q(j, k, &c.mul(&e2)));
        }
    }
    out.push(qmat_from(|i, j| {
        if i == j {
            QuatC::unit(1)
        } else {
            QuatC::zero()
        }
    }));
    out.into_iter()
        .map(|m| Sp3HCElem::new(m).expect("basis elements are in sp(3)"))
        .collect()
}

/// `f₇,C∗(B + L(e₂E) + sE) = Φ(f₆,C∗(g(B)), −(ιL + ῑL̄), ῑL + ιL̄, 3(ι − ῑ)s)`.
pub fn f7cstar(d: &Sp3HCElem) -> Result<E7Elem> {
    let dec = decompose_sp3(d);
    let phi = f6cstar(&g_map(&dec.b)?)?;
    let (iota, iota_bar) = iota_pair();
    let mut a: [[GaussRat; 3]; 3] = Default::default();
    let mut b = a.clone();
    for i in 0..3 {
        for j in 0..3 {
            let l = &dec.l[i][j];
            a[i][j] = scalar_entry(&iota.mul(l).add(&iota_bar.mul(&l.bar())).neg(), "A")?;
            b[i][j] = scalar_entry(&iota_bar.mul(l).add(&iota.mul(&l.bar())), "B")?;
        }
    }
    let s = QuatC::unit(1).scale(&dec.s);
    let nu = scalar_entry(
        &iota.sub(&iota_bar).mul(&s).scale(&GaussRat::from_int(3)),
        "nu",
    )?;
    Ok(E7Elem::new(
        phi,
        JordanElem::from_matrix(&a),
        JordanElem::from_matrix(&b),
        nu,
    ))
}
