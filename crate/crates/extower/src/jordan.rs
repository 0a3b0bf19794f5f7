//! The Jordan algebra J(3, R^C) of complex symmetric 3×3 matrices.
//!
//! Coordinates are taken in the fixed basis `E₁, E₂, E₃, F₁(1), F₂(1), F₃(1)`,
//! where `Fᵢ(x)` carries `x` in the two off-diagonal slots not touching row/column `i`.

use std::fmt;

use crate::exact::{GaussRat, Mat, Rat};

/// 3×3 matrix over Q(i), used as the matrix model of Jordan elements.
pub type M3 = [[GaussRat; 3]; 3];

/// Zero-based position of the `Fᵢ` slot for the zero-based axis `k`.
const F_SLOT: [(usize, usize); 3] = [(1, 2), (0, 2), (0, 1)];

/// Reduce a 1-based axis index (any integer, taken mod 3) to `0..3`.
pub fn axis(i: i64) -> usize {
    (i - 1).rem_euclid(3) as usize
}

pub fn m3_zero() -> M3 {
    std::array::from_fn(|_| std::array::from_fn(|_| GaussRat::zero()))
}

pub fn m3_identity() -> M3 {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            if i == j {
                GaussRat::one()
            } else {
                GaussRat::zero()
            }
        })
    })
}

pub fn m3_mul(a: &M3, b: &M3) -> M3 {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let mut acc = GaussRat::zero();
            for (k, bk) in b.iter().enumerate() {
                if !a[i][k].is_zero() && !bk[j].is_zero() {
                    acc += &a[i][k] * &bk[j];
                }
            }
            acc
        })
    })
}

pub fn m3_add(a: &M3, b: &M3) -> M3 {
    std::array::from_fn(|i| std::array::from_fn(|j| &a[i][j] + &b[i][j]))
}

pub fn m3_sub(a: &M3, b: &M3) -> M3 {
    std::array::from_fn(|i| std::array::from_fn(|j| &a[i][j] - &b[i][j]))
}

pub fn m3_scale(a: &M3, c: &GaussRat) -> M3 {
    std::array::from_fn(|i| std::array::from_fn(|j| &a[i][j] * c))
}

pub fn m3_transpose(a: &M3) -> M3 {
    std::array::from_fn(|i| std::array::from_fn(|j| a[j][i].clone()))
}

pub fn m3_trace(a: &M3) -> GaussRat {
    &(&a[0][0] + &a[1][1]) + &a[2][2]
}

pub fn m3_to_mat(a: &M3) -> Mat {
    Mat::from_fn(3, 3, |i, j| a[i][j].clone())
}

pub fn mat_to_m3(m: &Mat) -> M3 {
    assert_eq!((m.rows(), m.cols()), (3, 3), "expected a 3x3 matrix");
    std::array::from_fn(|i| std::array::from_fn(|j| m[(i, j)].clone()))
}

fn half() -> GaussRat {
    GaussRat::frac(1, 2)
}

/// Element of J(3, R^C): diagonal `ξ₁, ξ₂, ξ₃` and off-diagonal `x₁, x₂, x₃` (the `Fᵢ` coordinates).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct JordanElem {
    pub xi: [GaussRat; 3],
    pub x: [GaussRat; 3],
}

impl JordanElem {
    pub fn zero() -> Self {
        JordanElem {
            xi: std::array::from_fn(|_| GaussRat::zero()),
            x: std::array::from_fn(|_| GaussRat::zero()),
        }
    }

    /// The unit `E`.
    pub fn unit() -> Self {
        JordanElem {
            xi: std::array::from_fn(|_| GaussRat::one()),
            x: std::array::from_fn(|_| GaussRat::zero()),
        }
    }

    /// `Eᵢ` with a 1-based, mod-3 index.
    pub fn e(i: i64) -> Self {
        let mut z = JordanElem::zero();
        z.xi[axis(i)] = GaussRat::one();
        z
    }

    /// `Fᵢ(x)` with a 1-based, mod-3 index.
    pub fn f(i: i64, x: GaussRat) -> Self {
        let mut z = JordanElem::zero();
        z.x[axis(i)] = x;
        z
    }

    /// Basis vector `k` in the order `E₁, E₂, E₃, F₁(1), F₂(1), F₃(1)`.
    pub fn basis(k: usize) -> Self {
        let mut c = vec![GaussRat::zero(); 6];
        c[k] = GaussRat::one();
        JordanElem::from_coords(&c)
    }

    pub fn from_coords(c: &[GaussRat]) -> Self {
        assert_eq!(c.len(), 6, "a Jordan element has 6 coordinates");
        JordanElem {
            xi: [c[0].clone(), c[1].clone(), c[2].clone()],
            x: [c[3].clone(), c[4].clone(), c[5].clone()],
        }
    }

    pub fn from_ints(c: [i64; 6]) -> Self {
        JordanElem::from_coords(&c.map(GaussRat::from_int))
    }

    pub fn coords(&self) -> Vec<GaussRat> {
        self.xi.iter().chain(self.x.iter()).cloned().collect()
    }

    pub fn to_matrix(&self) -> M3 {
        let mut m = m3_zero();
        for k in 0..3 {
            m[k][k] = self.xi[k].clone();
            let (a, b) = F_SLOT[k];
            m[a][b] = self.x[k].clone();
            m[b][a] = self.x[k].clone();
        }
        m
    }

    /// Read coordinates from a matrix assumed symmetric.
    pub fn from_matrix(m: &M3) -> Self {
        JordanElem {
            xi: std::array::from_fn(|k| m[k][k].clone()),
            x: std::array::from_fn(|k| {
                let (a, b) = F_SLOT[k];
                m[a][b].clone()
            }),
        }
    }

    pub fn is_symmetric_matrix(m: &M3) -> bool {
        (0..3).all(|i| (0..3).all(|j| m[i][j] == m[j][i]))
    }

    pub fn is_zero(&self) -> bool {
        self.xi.iter().chain(self.x.iter()).all(GaussRat::is_zero)
    }

    pub fn add(&self, o: &JordanElem) -> JordanElem {
        JordanElem {
            xi: std::array::from_fn(|k| &self.xi[k] + &o.xi[k]),
            x: std::array::from_fn(|k| &self.x[k] + &o.x[k]),
        }
    }

    pub fn sub(&self, o: &JordanElem) -> JordanElem {
        JordanElem {
            xi: std::array::from_fn(|k| &self.xi[k] - &o.xi[k]),
            x: std::array::from_fn(|k| &self.x[k] - &o.x[k]),
        }
    }

    pub fn scale(&self, c: &GaussRat) -> JordanElem {
        JordanElem {
            xi: std::array::from_fn(|k| &self.xi[k] * c),
            x: std::array::from_fn(|k| &self.x[k] * c),
        }
    }

    pub fn neg(&self) -> JordanElem {
        self.scale(&GaussRat::from_int(-1))
    }

    pub fn trace(&self) -> GaussRat {
        &(&self.xi[0] + &self.xi[1]) + &self.xi[2]
    }

    /// The Jordan product `X∘Y = ½(XY + YX)`.
    pub fn jordan_mul(&self, o: &JordanElem) -> JordanElem {
        let (a, b) = (self.to_matrix(), o.to_matrix());
        JordanElem::from_matrix(&m3_scale(
            &m3_add(&m3_mul(&a, &b), &m3_mul(&b, &a)),
            &half(),
        ))
    }

    /// `(X, Y) = tr(X∘Y)`.
    pub fn inner(&self, o: &JordanElem) -> GaussRat {
        self.jordan_mul(o).trace()
    }

    /// Freudenthal multiplication
    /// `X×Y = ½(2X∘Y − tr(X)Y − tr(Y)X + (tr(X)tr(Y) − (X,Y))E)`.
    pub fn cross(&self, o: &JordanElem) -> JordanElem {
        let (tx, ty) = (self.trace(), o.trace());
        let s = &(&tx * &ty) - &self.inner(o);
        self.jordan_mul(o)
            .scale(&GaussRat::from_int(2))
            .sub(&o.scale(&tx))
            .sub(&self.scale(&ty))
            .add(&JordanElem::unit().scale(&s))
            .scale(&half())
    }

    /// `(X, Y, Z) = (X, Y×Z)`.
    pub fn trilinear(&self, y: &JordanElem, z: &JordanElem) -> GaussRat {
        self.inner(&y.cross(z))
    }

    /// `det X = ⅓(X, X, X)`.
    pub fn det(&self) -> GaussRat {
        &self.trilinear(self, self) * &GaussRat::frac(1, 3)
    }

    /// Complex conjugation τ of every coordinate.
    pub fn tau(&self) -> JordanElem {
        JordanElem {
            xi: std::array::from_fn(|k| self.xi[k].conj()),
            x: std::array::from_fn(|k| self.x[k].conj()),
        }
    }
}

impl fmt::Debug for JordanElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c: Vec<String> = self.coords().iter().map(ToString::to_string).collect();
        write!(f, "J[{}]", c.join(", "))
    }
}

/// Determinant of a 3×3 matrix by cofactor expansion, used as an oracle.
pub fn m3_det(m: &M3) -> GaussRat {
    let t = |a: usize, b: usize, c: usize| &(&m[0][a] * &m[1][b]) * &m[2][c];
    &(&(&t(0, 1, 2) + &t(1, 2, 0)) + &t(2, 0, 1)) - &(&(&t(2, 1, 0) + &t(0, 2, 1)) + &t(1, 0, 2))
}

/// Linear operator on J(3, R^C) as a 6×6 matrix acting on coordinate columns.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct JordanOp(pub Mat);

impl JordanOp {
    pub fn zero() -> Self {
        JordanOp(Mat::zero(6, 6))
    }

    pub fn identity() -> Self {
        JordanOp(Mat::identity(6))
    }

    /// Tabulate a linear map on the basis.
    pub fn from_fn(f: impl Fn(&JordanElem) -> JordanElem) -> Self {
        let cols: Vec<Vec<GaussRat>> = (0..6).map(|k| f(&JordanElem::basis(k)).coords()).collect();
        JordanOp(Mat::from_cols(&cols).expect("six columns of length six"))
    }

    pub fn apply(&self, x: &JordanElem) -> JordanElem {
        JordanElem::from_coords(&self.0.mul_vec(&x.coords()))
    }

    pub fn add(&self, o: &JordanOp) -> JordanOp {
        JordanOp(self.0.add(&o.0))
    }

    pub fn sub(&self, o: &JordanOp) -> JordanOp {
        JordanOp(self.0.sub(&o.0))
    }

    pub fn scale(&self, c: &GaussRat) -> JordanOp {
        JordanOp(self.0.scale(c))
    }

    pub fn compose(&self, o: &JordanOp) -> JordanOp {
        JordanOp(self.0.mul(&o.0))
    }

    pub fn commutator(&self, o: &JordanOp) -> JordanOp {
        JordanOp(self.0.commutator(&o.0))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn trace(&self) -> GaussRat {
        self.0.trace()
    }

    /// Transpose with respect to the inner product: `G⁻¹ dᵀ G`, `G = diag(1,1,1,2,2,2)`.
    pub fn transpose(&self) -> JordanOp {
        let g = gram();
        let ginv = Mat::diag(
            &[1, 1, 1, 2, 2, 2].map(|d| GaussRat::from_rat(Rat::new(1.into(), d.into()))),
        );
        JordanOp(ginv.mul(&self.0.transpose()).mul(&g))
    }

    /// Entrywise conjugation, i.e. `τ d τ` (the basis is real).
    pub fn tau_conj(&self) -> JordanOp {
        JordanOp(self.0.conj())
    }

    /// True when the operator is a derivation of the Jordan product on all basis pairs.
    pub fn is_derivation(&self) -> bool {
        (0..6).all(|a| {
            (0..6).all(|b| {
                let (x, y) = (JordanElem::basis(a), JordanElem::basis(b));
                self.apply(&x.jordan_mul(&y))
                    == self
                        .apply(&x)
                        .jordan_mul(&y)
                        .add(&x.jordan_mul(&self.apply(&y)))
            })
        })
    }
}

impl fmt::Debug for JordanOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "JordanOp({:?})", self.0)
    }
}

/// Gram matrix of the inner product on the fixed basis.
pub fn gram() -> Mat {
    Mat::diag(&[1, 1, 1, 2, 2, 2].map(GaussRat::from_int))
}

/// The matrices `Aᵢ(c)`.
pub fn a_matrix(i: i64, c: &GaussRat) -> M3 {
    let mut m = m3_zero();
    let k = axis(i);
    let (a, b) = F_SLOT[k];
    // A1: (2,3)=c, (3,2)=-c; A2: (1,3)=-c, (3,1)=c; A3: (1,2)=c, (2,1)=-c
    let sign_first = if k == 1 { -c } else { c.clone() };
    m[a][b] = sign_first.clone();
    m[b][a] = -&sign_first;
    m
}

/// `Ãᵢ(c)X = ½(Aᵢ(c)X − XAᵢ(c))`.
pub fn a_tilde(i: i64, c: &GaussRat) -> JordanOp {
    let a = a_matrix(i, c);
    JordanOp::from_fn(|x| {
        let xm = x.to_matrix();
        JordanElem::from_matrix(&m3_scale(
            &m3_sub(&m3_mul(&a, &xm), &m3_mul(&xm, &a)),
            &half(),
        ))
    })
}

/// Multiplication operator `T̃X = T∘X`.
pub fn t_tilde(t: &JordanElem) -> JordanOp {
    JordanOp::from_fn(|x| t.jordan_mul(x))
}

/// `X∨W = [X̃, W̃] + (X∘W − ⅓(X,W)E)~`.
pub fn vee(x: &JordanElem, w: &JordanElem) -> JordanOp {
    let comm = t_tilde(x).commutator(&t_tilde(w));
    let t = x
        .jordan_mul(w)
        .sub(&JordanElem::unit().scale(&(&x.inner(w) * &GaussRat::frac(1, 3))));
    comm.add(&t_tilde(&t))
}

/// The constant matrices `C₂`, `C₃` conjugating `E₁ ↦ E₂` and `E₂ ↦ E₃`.
pub fn c2_c3() -> (M3, M3) {
    let p = |perm: [usize; 3]| -> M3 {
        std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                if perm[i] == j {
                    GaussRat::one()
                } else {
                    GaussRat::zero()
                }
            })
        })
    };
    (p([1, 0, 2]), p([0, 2, 1]))
}

/// True when every coordinate is real.
pub fn is_real(x: &JordanElem) -> bool {
    x.coords().iter().all(GaussRat::is_real)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: i64) -> GaussRat {
        GaussRat::from_int(n)
    }

    #[test]
    fn jordan_mul_examples() {
        assert_eq!(
            JordanElem::e(1).jordan_mul(&JordanElem::e(1)),
            JordanElem::e(1)
        );
        let f1 = JordanElem::f(1, g(1));
        assert_eq!(f1.jordan_mul(&f1), JordanElem::e(2).add(&JordanElem::e(3)));
        let (x, y) = (GaussRat::complex(2, 1, 3), GaussRat::complex(-1, 4, 1));
        let lhs = JordanElem::f(1, x.clone())
            .jordan_mul(&JordanElem::f(2, y.clone()))
            .scale(&g(2));
        assert_eq!(lhs, JordanElem::f(3, &x * &y));
    }

    #[test]
    fn inner_examples_and_gram() {
        assert_eq!(JordanElem::e(1).inner(&JordanElem::e(1)), g(1));
        let f1 = JordanElem::f(1, g(1));
        assert_eq!(f1.inner(&f1), f1.jordan_mul(&f1).trace());
        assert_eq!(f1.inner(&f1), g(2));
        let d = JordanElem::e(1).sub(&JordanElem::e(2));
        assert_eq!(d.inner(&d), g(2));
        let gm = Mat::from_fn(6, 6, |a, b| {
            JordanElem::basis(a).inner(&JordanElem::basis(b))
        });
        assert_eq!(gm, gram());
    }

    #[test]
    fn cross_examples() {
        let e = JordanElem::unit();
        assert_eq!(e.cross(&e), e);
        assert_eq!(
            JordanElem::e(1).cross(&JordanElem::e(2)),
            JordanElem::e(3).scale(&GaussRat::frac(1, 2))
        );
        let s = JordanElem::e(1).add(&JordanElem::e(2));
        assert_eq!(s.cross(&s), JordanElem::e(3));
    }

    #[test]
    fn det_examples() {
        assert_eq!(JordanElem::unit().det(), g(1));
        assert!(JordanElem::e(1).det().is_zero());
        let x = JordanElem::from_coords(&[
            g(2),
            g(-1),
            GaussRat::complex(0, 3, 2),
            g(5),
            GaussRat::i(),
            g(-2),
        ]);
        assert_eq!(x.det(), m3_det(&x.to_matrix()));
    }

    #[test]
    fn a_tilde_table() {
        let c = GaussRat::complex(3, -2, 5);
        let x = GaussRat::complex(1, 7, 2);
        let h = GaussRat::frac(1, 2);
        for i in 1..=3i64 {
            let a = a_tilde(i, &c);
            assert!(a.apply(&JordanElem::e(i)).is_zero());
            assert_eq!(a.apply(&JordanElem::e(i + 1)), JordanElem::f(i, -(&h * &c)));
            assert_eq!(a.apply(&JordanElem::e(i + 2)), JordanElem::f(i, &h * &c));
            assert_eq!(
                a.apply(&JordanElem::f(i, x.clone())),
                JordanElem::e(i + 1)
                    .sub(&JordanElem::e(i + 2))
                    .scale(&(&c * &x))
            );
            assert_eq!(
                a.apply(&JordanElem::f(i + 1, x.clone())),
                JordanElem::f(i + 2, &h * &(&c * &x))
            );
            assert_eq!(
                a.apply(&JordanElem::f(i + 2, x.clone())),
                JordanElem::f(i + 1, -(&h * &(&c * &x)))
            );
            assert!(a.is_derivation());
        }
    }

    #[test]
    fn t_tilde_examples() {
        assert_eq!(t_tilde(&JordanElem::unit()), JordanOp::identity());
        let t = JordanElem::e(1).sub(&JordanElem::e(2));
        assert!(t_tilde(&t).apply(&JordanElem::f(3, g(1))).is_zero());
        assert_eq!(t_tilde(&t).apply(&JordanElem::unit()), t);
    }

    #[test]
    fn vee_examples() {
        let e = JordanElem::unit();
        assert!(vee(&e, &e).is_zero());
        let e1 = JordanElem::e(1);
        let expect = t_tilde(&e1.sub(&e.scale(&GaussRat::frac(1, 3))));
        assert_eq!(vee(&e1, &e1), expect);
    }

    #[test]
    fn transpose_examples() {
        let t = t_tilde(&JordanElem::from_ints([1, 2, -3, 4, 0, 1]));
        assert_eq!(t.transpose(), t);
        assert_eq!(
            a_tilde(1, &g(1)).transpose(),
            a_tilde(1, &g(1)).scale(&g(-1))
        );
        let d = a_tilde(2, &g(3))
            .add(&t)
            .compose(&a_tilde(3, &GaussRat::i()));
        assert_eq!(d.transpose().transpose(), d);
        // (ᵗd X, Y) = (X, d Y)
        let (x, y) = (
            JordanElem::from_ints([1, 0, 2, -1, 3, 1]),
            JordanElem::from_ints([0, 5, 1, 2, -2, 1]),
        );
        assert_eq!(d.transpose().apply(&x).inner(&y), x.inner(&d.apply(&y)));
    }

    #[test]
    fn tau_examples() {
        let ie1 = JordanElem::e(1).scale(&GaussRat::i());
        assert_eq!(ie1.tau(), ie1.neg());
        assert_eq!(JordanElem::unit().tau(), JordanElem::unit());
    }

    #[test]
    fn c2_c3_conjugations() {
        let (c2, c3) = c2_c3();
        let conj = |c: &M3, x: &JordanElem| {
            JordanElem::from_matrix(&m3_mul(&m3_mul(&m3_transpose(c), &x.to_matrix()), c))
        };
        assert_eq!(conj(&c2, &JordanElem::e(1)), JordanElem::e(2));
        assert_eq!(conj(&c3, &JordanElem::e(2)), JordanElem::e(3));
    }
}
