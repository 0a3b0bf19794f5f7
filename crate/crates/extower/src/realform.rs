//! Real forms cut out by conjugate-linear involutions.

use crate::exact::{GaussRat, Mat};
use crate::f4e6::{f6cstar, su3_basis, tau_lambda_e6, E6Elem};
use crate::freudenthal::{E7Elem, E7_DIM};
use crate::quaternion::{f7cstar, sp3_real_basis};

/// Matrix `A` with `σ(z) = A·conj(z)` for a conjugate-linear `σ` on `Q(i)ⁿ`.
pub fn conj_linear_matrix(n: usize, sigma: impl Fn(&[GaussRat]) -> Vec<GaussRat>) -> Mat {
    let cols: Vec<Vec<GaussRat>> = (0..n)
        .map(|k| {
            let mut e = vec![GaussRat::zero(); n];
            e[k] = GaussRat::one();
            sigma(&e)
        })
        .collect();
    Mat::from_cols(&cols).expect("n columns of length n")
}

/// Real dimension of `{z : A·conj(z) = z}`.
///
/// With `A = P + iQ` and `z = u + iv` the condition is `[[P, Q], [Q, −P]]·(u, v) = (u, v)`.
pub fn fixed_real_dim(a: &Mat) -> usize {
    let n = a.rows();
    let m = Mat::from_fn(2 * n, 2 * n, |i, j| {
        let (p, q) = (&a[(i % n, j % n)].re, &a[(i % n, j % n)].im);
        let v = match (i < n, j < n) {
            (true, true) => p.clone(),
            (false, false) => -p.clone(),
            _ => q.clone(),
        };
        GaussRat::from_rat(v)
    });
    m.sub(&Mat::identity(2 * n)).kernel().len()
}

/// Real span dimension of vectors in `Q(i)ⁿ`, viewing each as `(re, im) ∈ Q²ⁿ`.
pub fn real_span_dim(vectors: &[Vec<GaussRat>]) -> usize {
    let real: Vec<Vec<GaussRat>> = vectors
        .iter()
        .map(|v| {
            v.iter()
                .map(|x| GaussRat::from_rat(x.re.clone()))
                .chain(v.iter().map(|x| GaussRat::from_rat(x.im.clone())))
                .collect()
        })
        .collect();
    if real.is_empty() {
        0
    } else {
        Mat::from_cols(&real).expect("equal lengths").rank()
    }
}

/// `τλ` on e6 coordinates.
pub fn tau_lambda_e6_matrix() -> Mat {
    conj_linear_matrix(8, |c| tau_lambda_e6(&E6Elem::from_coords(c)).coords())
}

/// `τλ` on e7 coordinates.
pub fn tau_lambda_e7_matrix() -> Mat {
    conj_linear_matrix(E7_DIM, |c| E7Elem::from_coords(c).tau_lambda().coords())
}

/// Images of the rational su(3) basis under `f₆,C∗`.
pub fn su3_images() -> Vec<E6Elem> {
    su3_basis()
        .iter()
        .map(|s| f6cstar(s).expect("su(3) is traceless"))
        .collect()
}

/// Images of the rational sp(3) basis under `f₇,C∗`.
pub fn sp3_images() -> Vec<E7Elem> {
    sp3_real_basis()
        .iter()
        .map(|d| f7cstar(d).expect("basis elements map into e7"))
        .collect()
}

/// Real dimension of the fixed space, whether every image is fixed, and the real rank of the images.
pub fn e6_compact_form() -> (usize, bool, usize) {
    let imgs = su3_images();
    let fixed = imgs.iter().all(|x| tau_lambda_e6(x) == *x);
    let coords: Vec<Vec<GaussRat>> = imgs.iter().map(E6Elem::coords).collect();
    (
        fixed_real_dim(&tau_lambda_e6_matrix()),
        fixed,
        real_span_dim(&coords),
    )
}

/// As [`e6_compact_form`] for e7 and sp(3).
pub fn e7_compact_form() -> (usize, bool, usize) {
    let imgs = sp3_images();
    let fixed = imgs.iter().all(|x| x.tau_lambda() == *x);
    let coords: Vec<Vec<GaussRat>> = imgs.iter().map(E7Elem::coords).collect();
    (
        fixed_real_dim(&tau_lambda_e7_matrix()),
        fixed,
        real_span_dim(&coords),
    )
}
