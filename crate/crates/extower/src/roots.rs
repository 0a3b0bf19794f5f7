//! Exact root-space decomposition, simple roots, Cartan matrices and Dynkin classification.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{gaussian_rational_roots, rat_to_string, GaussRat, Mat, Rat};
use crate::lie::LieAlgebraData;

/// Cartan generators in algebra coordinates and the coefficients of a generic element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CartanDatum {
    pub generators: Vec<Vec<GaussRat>>,
    pub generic: Vec<GaussRat>,
}

impl CartanDatum {
    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    /// `Σ cⱼ Hⱼ`.
    pub fn generic_element(&self) -> Vec<GaussRat> {
        let n = self.generators.first().map_or(0, Vec::len);
        let mut h = vec![GaussRat::zero(); n];
        for (c, g) in self.generic.iter().zip(&self.generators) {
            for (hk, gk) in h.iter_mut().zip(g) {
                *hk += c * gk;
            }
        }
        h
    }
}

/// A root: its values `α(Hⱼ)` on the Cartan generators and a root vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Root {
    pub values: Vec<GaussRat>,
    pub vector: Vec<GaussRat>,
}

/// Lexicographic order on value vectors, comparing `(re, im)` entry by entry.
pub fn lex_cmp(a: &[GaussRat], b: &[GaussRat]) -> Ordering {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.lex_cmp(y))
        .find(|o| o.is_ne())
        .unwrap_or(Ordering::Equal)
}

pub fn is_positive(values: &[GaussRat]) -> bool {
    values
        .iter()
        .find(|v| !v.is_zero())
        .is_some_and(GaussRat::lex_positive)
}

fn neg(v: &[GaussRat]) -> Vec<GaussRat> {
    v.iter().map(|x| -x).collect()
}

fn vadd(a: &[GaussRat], b: &[GaussRat]) -> Vec<GaussRat> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Roots of a split Lie algebra relative to a Cartan subalgebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystem {
    pub algebra: String,
    pub dim: usize,
    pub rank: usize,
    pub roots: Vec<Root>,
    /// Killing form on the Cartan generators.
    pub cartan_gram: Mat,
}

impl RootSystem {
    /// `t_α` in generator coefficients: `B(t_α, Hⱼ) = α(Hⱼ)`.
    pub fn coroot(&self, values: &[GaussRat]) -> Result<Vec<GaussRat>> {
        self.cartan_gram
            .solve(values)
            .map_err(|_| Error::DegenerateCartanForm)
    }

    /// `(α, β) = B(t_α, t_β) = β(t_α)`.
    pub fn root_inner(&self, a: &[GaussRat], b: &[GaussRat]) -> Result<GaussRat> {
        let ta = self.coroot(a)?;
        Ok(crate::exact::dot(&ta, b))
    }

    pub fn contains(&self, values: &[GaussRat]) -> bool {
        self.roots.iter().any(|r| r.values == values)
    }

    pub fn find(&self, values: &[GaussRat]) -> Option<&Root> {
        self.roots.iter().find(|r| r.values == values)
    }

    /// Positive roots in lexicographic order.
    pub fn positive(&self) -> Vec<&Root> {
        let mut v: Vec<&Root> = self
            .roots
            .iter()
            .filter(|r| is_positive(&r.values))
            .collect();
        v.sort_by(|a, b| lex_cmp(&a.values, &b.values));
        v
    }

    /// Checks `α ∈ Δ ⇒ −α ∈ Δ`.
    pub fn check_pairing(&self) -> Result<()> {
        for r in &self.roots {
            if !self.contains(&neg(&r.values)) {
                return Err(Error::UnpairedRoot(fmt_values(&r.values)));
            }
        }
        Ok(())
    }

    /// Positive roots that are not the sum of two positive roots, in lexicographic order.
    pub fn simple_roots(&self) -> Result<Vec<Vec<GaussRat>>> {
        self.check_pairing()?;
        let pos: Vec<Vec<GaussRat>> = self
            .positive()
            .into_iter()
            .map(|r| r.values.clone())
            .collect();
        let simple = pos
            .iter()
            .filter(|a| !pos.iter().any(|b| pos.iter().any(|c| vadd(b, c) == **a)))
            .cloned()
            .collect();
        Ok(simple)
    }

    /// Gram matrix `(αᵢ, αⱼ)` of a list of roots.
    pub fn gram(&self, roots: &[Vec<GaussRat>]) -> Result<Mat> {
        let n = roots.len();
        let mut g = Mat::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                g[(i, j)] = self.root_inner(&roots[i], &roots[j])?;
            }
        }
        Ok(g)
    }

    /// Coefficients of `values` in terms of `basis` (which must be linearly independent of full rank).
    pub fn expand(&self, basis: &[Vec<GaussRat>], values: &[GaussRat]) -> Result<Vec<GaussRat>> {
        Mat::from_cols(basis)?.solve(values)
    }
}

fn fmt_values(v: &[GaussRat]) -> String {
    format!(
        "({})",
        v.iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(", ")
    )
}

/// Root-space decomposition of `alg` relative to `cartan`.
pub fn decompose(alg: &LieAlgebraData, cartan: &CartanDatum) -> Result<RootSystem> {
    let n = alg.dim();
    let rank = cartan.rank();
    if cartan.generic.len() != rank || cartan.generators.iter().any(|g| g.len() != n) {
        return Err(Error::Shape(
            "Cartan datum does not match the algebra".into(),
        ));
    }
    for (i, a) in cartan.generators.iter().enumerate() {
        for b in &cartan.generators[i + 1..] {
            if alg.bracket(a, b).iter().any(|x| !x.is_zero()) {
                return Err(Error::NonGenericCartanElement(
                    "Cartan generators do not commute".into(),
                ));
            }
        }
    }
    let ads: Vec<Mat> = cartan.generators.iter().map(|g| alg.ad(g)).collect();
    let h = alg.ad(&cartan.generic_element());
    let split = gaussian_rational_roots(&h.char_poly()?);
    if !split.splits() {
        return Err(Error::NonSplitSpectrum);
    }
    let mut mult: BTreeMap<Vec<u8>, (GaussRat, usize)> = BTreeMap::new();
    for r in split.roots {
        // keyed by the canonical string so equal values collect together
        let key = format!("{}|{}", rat_to_string(&r.re), rat_to_string(&r.im)).into_bytes();
        mult.entry(key).or_insert((r, 0)).1 += 1;
    }

    let zero_mult = mult
        .values()
        .find(|(v, _)| v.is_zero())
        .map_or(0, |(_, m)| *m);
    if zero_mult != rank {
        return Err(Error::NonGenericCartanElement(format!(
            "eigenvalue 0 has multiplicity {zero_mult}, expected rank {rank}"
        )));
    }
    let zero_space = h.kernel();
    let mut span = zero_space.clone();
    span.extend(cartan.generators.iter().cloned());
    if zero_space.len() != rank || Mat::from_cols(&span)?.rank() != rank {
        return Err(Error::NonGenericCartanElement(
            "zero eigenspace is not the Cartan span".into(),
        ));
    }

    let mut roots = Vec::new();
    for (lambda, m) in mult.values().filter(|(v, _)| !v.is_zero()) {
        if *m != 1 {
            return Err(Error::NonGenericCartanElement(format!(
                "eigenvalue {lambda} has multiplicity {m}"
            )));
        }
        let shifted = h.sub(&Mat::identity(n).scale(lambda));
        let ker = shifted.kernel();
        let [v] = ker.as_slice() else {
            return Err(Error::NonGenericCartanElement(format!(
                "eigenvalue {lambda} is not semisimple"
            )));
        };
        let pivot = v
            .iter()
            .position(|x| !x.is_zero())
            .expect("kernel vectors are nonzero");
        let mut values = Vec::with_capacity(rank);
        for ad in &ads {
            let w = ad.mul_vec(v);
            let c = w[pivot].checked_div(&v[pivot])?;
            if w.iter().zip(v).any(|(wi, vi)| *wi != &c * vi) {
                return Err(Error::NonGenericCartanElement(format!(
                    "eigenvector for {lambda} is not a simultaneous eigenvector"
                )));
            }
            values.push(c);
        }
        roots.push(Root {
            values,
            vector: v.clone(),
        });
    }
    roots.sort_by(|a, b| lex_cmp(&b.values, &a.values));

    let mut gram = Mat::zero(rank, rank);
    for i in 0..rank {
        for j in 0..rank {
            gram[(i, j)] = ads[i].mul(&ads[j]).trace();
        }
    }
    if gram.rank() != rank {
        return Err(Error::DegenerateCartanForm);
    }
    Ok(RootSystem {
        algebra: alg.name.clone(),
        dim: n,
        rank,
        roots,
        cartan_gram: gram,
    })
}

/// True when `[v_α, v_β]` is a nonzero multiple of `v_{α+β}` for `α+β ∈ Δ`, and zero when `α+β ∉ Δ ∪ {0}`.
pub fn root_vectors_consistent(alg: &LieAlgebraData, rs: &RootSystem) -> bool {
    rs.roots.iter().all(|a| {
        rs.roots.iter().all(|b| {
            let sum = vadd(&a.values, &b.values);
            let br = alg.bracket(&a.vector, &b.vector);
            if sum.iter().all(GaussRat::is_zero) {
                return true;
            }
            match rs.find(&sum) {
                Some(c) => {
                    let m = Mat::from_cols(&[c.vector.clone(), br.clone()]).expect("equal lengths");
                    br.iter().any(|x| !x.is_zero()) && m.rank() == 1
                }
                None => br.iter().all(GaussRat::is_zero),
            }
        })
    })
}

/// `Aᵢⱼ = 2(αᵢ, αⱼ)/(αⱼ, αⱼ)`; errors if any entry is not an integer.
pub fn cartan_matrix(gram: &Mat) -> Result<Vec<Vec<i64>>> {
    let n = gram.rows();
    let mut a = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            let q = (&GaussRat::from_int(2) * &gram[(i, j)]).checked_div(&gram[(j, j)])?;
            if !q.is_real() || !q.re.is_integer() {
                return Err(Error::NotCrystallographic(q.to_string()));
            }
            a[i][j] =
                q.re.to_integer()
                    .try_into()
                    .map_err(|_| Error::NotCrystallographic(q.to_string()))?;
        }
    }
    Ok(a)
}

/// True when a real rational Gram matrix has all leading principal minors positive.
pub fn positive_definite(gram: &Mat) -> bool {
    let n = gram.rows();
    (1..=n).all(|k| {
        let sub = Mat::from_fn(k, k, |i, j| gram[(i, j)].clone());
        let det = determinant(&sub);
        det.is_real() && det.re > Rat::from_integer(0.into())
    })
}

fn determinant(m: &Mat) -> GaussRat {
    let p = m.char_poly().expect("square");
    let c0 = p.coeffs().first().cloned().unwrap_or_else(GaussRat::zero);
    if m.rows().is_multiple_of(2) {
        c0
    } else {
        -&c0
    }
}

/// Standard Cartan matrix of a connected type, in the convention `Aᵢⱼ = 2(αᵢ,αⱼ)/(αⱼ,αⱼ)`.
pub fn standard_cartan(series: char, n: usize) -> Option<Vec<Vec<i64>>> {
    let path = |n: usize| {
        let mut a = vec![vec![0i64; n]; n];
        for i in 0..n {
            a[i][i] = 2;
            if i + 1 < n {
                a[i][i + 1] = -1;
                a[i + 1][i] = -1;
            }
        }
        a
    };
    let mut a = match (series, n) {
        ('A', 1..) => path(n),
        ('B', 2..) | ('C', 3..) | ('F', 4) | ('G', 2) => path(n),
        ('D', 4..) => {
            let mut a = path(n);
            a[n - 2][n - 1] = 0;
            a[n - 1][n - 2] = 0;
            a[n - 3][n - 1] = -1;
            a[n - 1][n - 3] = -1;
            a
        }
        ('E', 6..=8) => {
            // chain 1-3-4-5-..., with node 2 attached to node 4
            let mut a = vec![vec![0i64; n]; n];
            for i in 0..n {
                a[i][i] = 2;
            }
            let mut link = |i: usize, j: usize| {
                a[i][j] = -1;
                a[j][i] = -1;
            };
            link(0, 2);
            link(1, 3);
            for i in 2..n - 1 {
                link(i, i + 1);
            }
            a
        }
        _ => return None,
    };
    match series {
        'B' => {
            a[n - 2][n - 1] = -2;
        }
        'C' => {
            a[n - 1][n - 2] = -2;
        }
        'F' => {
            a[1][2] = -2;
        }
        'G' => {
            a[1][0] = -3;
        }
        _ => {}
    }
    Some(a)
}

/// Find a permutation `p` with `a[p i][p j] = b[i][j]`.
fn match_perm(a: &[Vec<i64>], b: &[Vec<i64>]) -> Option<Vec<usize>> {
    fn go(a: &[Vec<i64>], b: &[Vec<i64>], perm: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let k = perm.len();
        if k == a.len() {
            return true;
        }
        for c in 0..a.len() {
            if used[c] || a[c][c] != b[k][k] {
                continue;
            }
            if (0..k).all(|j| a[c][perm[j]] == b[k][j] && a[perm[j]][c] == b[j][k]) {
                used[c] = true;
                perm.push(c);
                if go(a, b, perm, used) {
                    return true;
                }
                perm.pop();
                used[c] = false;
            }
        }
        false
    }
    if a.len() != b.len() {
        return None;
    }
    let mut perm = Vec::new();
    let mut used = vec![false; a.len()];
    go(a, b, &mut perm, &mut used).then_some(perm)
}

/// Classified Dynkin diagram.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DynkinDiagram {
    pub nodes: usize,
    /// `(i, j, multiplicity)` for `i < j` with `Aᵢⱼ Aⱼᵢ = multiplicity`.
    pub edges: Vec<(usize, usize, i64)>,
    /// Type label such as `F4` or `A1+A1`.
    pub label: String,
    /// ASCII rendering, nodes numbered from 1 in simple-root order.
    pub ascii: String,
}

impl fmt::Display for DynkinDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}  [{}]", self.ascii, self.label)
    }
}

const SERIES: [(char, usize, usize); 7] = [
    ('A', 1, 8),
    ('B', 2, 8),
    ('C', 3, 8),
    ('D', 4, 8),
    ('E', 6, 8),
    ('F', 4, 4),
    ('G', 2, 2),
];

fn components(a: &[Vec<i64>]) -> Vec<Vec<usize>> {
    let n = a.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut comp = vec![s];
        seen[s] = true;
        let mut k = 0;
        while k < comp.len() {
            let i = comp[k];
            for j in 0..n {
                if !seen[j] && a[i][j] != 0 {
                    seen[j] = true;
                    comp.push(j);
                }
            }
            k += 1;
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Classify a Cartan matrix (positive-definiteness is checked separately with [`positive_definite`]).
pub fn classify_dynkin(a: &[Vec<i64>]) -> Result<DynkinDiagram> {
    let mut labels = Vec::new();
    for comp in components(a) {
        let sub: Vec<Vec<i64>> = comp
            .iter()
            .map(|&i| comp.iter().map(|&j| a[i][j]).collect())
            .collect();
        let k = comp.len();
        let label = SERIES
            .iter()
            .filter(|(_, lo, hi)| (*lo..=*hi).contains(&k))
            .find(|(s, _, _)| {
                standard_cartan(*s, k).is_some_and(|std| match_perm(&sub, &std).is_some())
            })
            .map(|(s, _, _)| format!("{s}{k}"))
            .ok_or_else(|| Error::UnknownType(format!("{sub:?}")))?;
        labels.push(label);
    }
    labels.sort();
    let n = a.len();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if a[i][j] != 0 {
                edges.push((i, j, a[i][j] * a[j][i]));
            }
        }
    }
    Ok(DynkinDiagram {
        nodes: n,
        edges,
        label: labels.join("+"),
        ascii: render(a),
    })
}

/// ASCII rendering: a path as `o-o=>o-o` (arrow toward the shorter root), otherwise an edge list.
pub fn render(a: &[Vec<i64>]) -> String {
    let n = a.len();
    if n == 0 {
        return String::new();
    }
    let degree = |i: usize| (0..n).filter(|&j| j != i && a[i][j] != 0).count();
    let is_path = components(a).len() == 1
        && (0..n).all(|i| degree(i) <= 2)
        && (n == 1 || (0..n).any(|i| degree(i) == 1));
    if !is_path {
        let mut parts = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if a[i][j] != 0 {
                    parts.push(format!("{}-{}(x{})", i + 1, j + 1, a[i][j] * a[j][i]));
                }
            }
        }
        return format!("{n} nodes; edges {}", parts.join(", "));
    }
    let start = (0..n).find(|&i| degree(i) <= 1).expect("a path has an end");
    let mut order = vec![start];
    while order.len() < n {
        let last = *order.last().expect("nonempty");
        let next = (0..n)
            .find(|&j| j != last && a[last][j] != 0 && !order.contains(&j))
            .expect("path continues");
        order.push(next);
    }
    let mut s = format!("o{}", order[0] + 1);
    for w in order.windows(2) {
        let (i, j) = (w[0], w[1]);
        let bond = match a[i][j] * a[j][i] {
            1 => "-".to_string(),
            m => {
                let bar = if m == 2 { "=" } else { "≡" };
                // aᵢⱼ = −m when αⱼ is the shorter root
                if a[i][j].abs() > 1 {
                    format!("{bar}>")
                } else {
                    format!("<{bar}")
                }
            }
        };
        s.push_str(&format!("{bond}o{}", j + 1));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_types_classify_to_themselves() {
        for (s, lo, hi) in SERIES {
            for k in lo..=hi {
                let a = standard_cartan(s, k).unwrap();
                assert_eq!(classify_dynkin(&a).unwrap().label, format!("{s}{k}"));
            }
        }
    }

    #[test]
    fn classification_is_permutation_invariant() {
        let f4 = standard_cartan('F', 4).unwrap();
        let p = [2, 0, 3, 1];
        let shuffled: Vec<Vec<i64>> = (0..4)
            .map(|i| (0..4).map(|j| f4[p[i]][p[j]]).collect())
            .collect();
        assert_eq!(classify_dynkin(&shuffled).unwrap().label, "F4");
        let mut two = vec![vec![0i64; 2]; 2];
        two[0][0] = 2;
        two[1][1] = 2;
        assert_eq!(classify_dynkin(&two).unwrap().label, "A1+A1");
    }

    #[test]
    fn rendering() {
        assert_eq!(render(&standard_cartan('F', 4).unwrap()), "o1-o2=>o3-o4");
        assert_eq!(render(&standard_cartan('C', 3).unwrap()), "o1-o2<=o3");
        assert_eq!(render(&standard_cartan('A', 1).unwrap()), "o1");
        assert!(render(&standard_cartan('D', 4).unwrap()).starts_with("4 nodes; edges"));
    }

    #[test]
    fn non_crystallographic_is_rejected() {
        let g = Mat::from_ints(&[&[2, -1], &[-1, 3]]);
        assert!(matches!(
            cartan_matrix(&g),
            Err(Error::NotCrystallographic(_))
        ));
        assert!(positive_definite(&g));
        assert!(!positive_definite(&Mat::from_ints(&[&[1, 2], &[2, 1]])));
    }
}
