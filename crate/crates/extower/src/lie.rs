//! Finite-dimensional Lie algebras given by sparse structure constants.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{GaussRat, Mat};

/// `[eᵢ, eⱼ] = Σₖ c_ij^k e_k`, stored as the nonzero `(k, c_ij^k)` for each ordered pair.
pub type Structure = Vec<Vec<Vec<(usize, GaussRat)>>>;

/// A Lie algebra over Q(i) presented by a basis and structure constants.
///
/// JSON form: `{"name", "basis": [..], "constants": [[i, j, k, {"re", "im"}], ..]}`; ingestion
/// checks shape, antisymmetry and the Jacobi identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "LieAlgebraJson", try_from = "LieAlgebraJson")]
pub struct LieAlgebraData {
    pub name: String,
    pub basis: Vec<String>,
    pub structure: Structure,
}

#[derive(Serialize, Deserialize)]
struct LieAlgebraJson {
    #[serde(default)]
    name: String,
    basis: Vec<String>,
    constants: Vec<(usize, usize, usize, GaussRat)>,
}

impl From<LieAlgebraData> for LieAlgebraJson {
    fn from(d: LieAlgebraData) -> Self {
        let mut constants = Vec::new();
        for (i, row) in d.structure.into_iter().enumerate() {
            for (j, terms) in row.into_iter().enumerate() {
                constants.extend(terms.into_iter().map(|(k, c)| (i, j, k, c)));
            }
        }
        LieAlgebraJson {
            name: d.name,
            basis: d.basis,
            constants,
        }
    }
}

impl TryFrom<LieAlgebraJson> for LieAlgebraData {
    type Error = Error;

    fn try_from(j: LieAlgebraJson) -> Result<Self> {
        let n = j.basis.len();
        let mut structure: Structure = vec![vec![Vec::new(); n]; n];
        for (a, b, k, c) in j.constants {
            if a >= n || b >= n || k >= n {
                return Err(Error::InvalidAlgebra(format!(
                    "constant index ({a}, {b}, {k}) out of range"
                )));
            }
            if structure[a][b].iter().any(|(m, _)| *m == k) {
                return Err(Error::InvalidAlgebra(format!(
                    "duplicate constant ({a}, {b}, {k})"
                )));
            }
            if !c.is_zero() {
                structure[a][b].push((k, c));
            }
        }
        for row in &mut structure {
            for terms in row {
                terms.sort_by_key(|(k, _)| *k);
            }
        }
        let d = LieAlgebraData {
            name: j.name,
            basis: j.basis,
            structure,
        };
        d.validate()?;
        if let Some((a, b)) = d.antisymmetry_violation() {
            return Err(Error::InvalidAlgebra(format!(
                "[e{a}, e{b}] + [e{b}, e{a}] != 0"
            )));
        }
        if let Some((a, b, c)) = d.jacobi_violation() {
            return Err(Error::InvalidAlgebra(format!(
                "Jacobi identity fails on (e{a}, e{b}, e{c})"
            )));
        }
        Ok(d)
    }
}

fn add_scaled(out: &mut [GaussRat], terms: &[(usize, GaussRat)], c: &GaussRat) {
    for (k, v) in terms {
        out[*k] += c * v;
    }
}

impl LieAlgebraData {
    /// Tabulate structure constants from a bracket on coordinate vectors.
    pub fn from_bracket(
        name: &str,
        basis: Vec<String>,
        bracket: impl Fn(usize, usize) -> Vec<GaussRat>,
    ) -> Self {
        let n = basis.len();
        let structure = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        bracket(i, j)
                            .into_iter()
                            .enumerate()
                            .filter(|(_, v)| !v.is_zero())
                            .collect()
                    })
                    .collect()
            })
            .collect();
        LieAlgebraData {
            name: name.to_string(),
            basis,
            structure,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Shape checks on deserialized data.
    pub fn validate(&self) -> Result<()> {
        let n = self.dim();
        if self.structure.len() != n || self.structure.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidAlgebra(format!(
                "structure table is not {n}x{n}"
            )));
        }
        if self
            .structure
            .iter()
            .flatten()
            .flatten()
            .any(|(k, _)| *k >= n)
        {
            return Err(Error::InvalidAlgebra(
                "structure constant index out of range".into(),
            ));
        }
        Ok(())
    }

    pub fn bracket(&self, a: &[GaussRat], b: &[GaussRat]) -> Vec<GaussRat> {
        let mut out = vec![GaussRat::zero(); self.dim()];
        for (i, ai) in a.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (j, bj) in b.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                add_scaled(&mut out, &self.structure[i][j], &(ai * bj));
            }
        }
        out
    }

    /// Bracket of two basis elements.
    pub fn basis_bracket(&self, i: usize, j: usize) -> Vec<GaussRat> {
        let mut out = vec![GaussRat::zero(); self.dim()];
        add_scaled(&mut out, &self.structure[i][j], &GaussRat::one());
        out
    }

    /// A coordinate vector written in basis names, e.g. `-1/2 A3 + T(F1)`.
    pub fn expansion(&self, v: &[GaussRat]) -> String {
        let parts: Vec<String> = v
            .iter()
            .zip(&self.basis)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, n)| term(c, n))
            .collect();
        if parts.is_empty() {
            return "0".into();
        }
        parts.join(" + ").replace("+ -", "- ")
    }

    /// Matrix of `ad x` acting on coordinate columns.
    pub fn ad(&self, x: &[GaussRat]) -> Mat {
        let n = self.dim();
        let mut m = Mat::zero(n, n);
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for j in 0..n {
                for (k, c) in &self.structure[i][j] {
                    m[(*k, j)] += xi * c;
                }
            }
        }
        m
    }

    /// Killing form Gram matrix `K_ij = tr(ad eᵢ ad eⱼ) = Σ c_il^k c_jk^l`.
    pub fn killing_gram(&self) -> Mat {
        let n = self.dim();
        // dense slices c_i[l][k] keep the double sum cheap
        let dense: Vec<Vec<Vec<GaussRat>>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|l| {
                        let mut row = vec![GaussRat::zero(); n];
                        for (k, c) in &self.structure[i][l] {
                            row[*k] = c.clone();
                        }
                        row
                    })
                    .collect()
            })
            .collect();
        let mut g = Mat::zero(n, n);
        for i in 0..n {
            for j in i..n {
                let mut acc = GaussRat::zero();
                for l in 0..n {
                    for (k, c) in &self.structure[i][l] {
                        let d = &dense[j][*k][l];
                        if !d.is_zero() {
                            acc += c * d;
                        }
                    }
                }
                g[(i, j)] = acc.clone();
                g[(j, i)] = acc;
            }
        }
        g
    }

    /// Killing form of two coordinate vectors.
    pub fn killing(&self, a: &[GaussRat], b: &[GaussRat]) -> GaussRat {
        self.ad(a).mul(&self.ad(b)).trace()
    }

    /// First ordered pair violating `[eᵢ, eⱼ] = −[eⱼ, eᵢ]`.
    pub fn antisymmetry_violation(&self) -> Option<(usize, usize)> {
        let n = self.dim();
        for i in 0..n {
            for j in i..n {
                let mut v = vec![GaussRat::zero(); n];
                add_scaled(&mut v, &self.structure[i][j], &GaussRat::one());
                add_scaled(&mut v, &self.structure[j][i], &GaussRat::one());
                if v.iter().any(|x| !x.is_zero()) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// Jacobiator `[[eᵢ,eⱼ],e_k] + [[eⱼ,e_k],eᵢ] + [[e_k,eᵢ],eⱼ]`.
    pub fn jacobiator(&self, i: usize, j: usize, k: usize) -> Vec<GaussRat> {
        let n = self.dim();
        let mut out = vec![GaussRat::zero(); n];
        for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
            for (m, v) in &self.structure[a][b] {
                add_scaled(&mut out, &self.structure[*m][c], v);
            }
        }
        out
    }

    /// First basis triple, over all ordered triples, whose Jacobiator is nonzero.
    pub fn jacobi_violation(&self) -> Option<(usize, usize, usize)> {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if self.jacobiator(i, j, k).iter().any(|x| !x.is_zero()) {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }
}

/// `c·name` with the coefficient omitted when it is ±1.
fn term(c: &GaussRat, name: &str) -> String {
    if *c == GaussRat::one() {
        name.to_string()
    } else if *c == -&GaussRat::one() {
        format!("-{name}")
    } else if c.is_real() {
        format!("{c} {name}")
    } else {
        format!("({c}) {name}")
    }
}
