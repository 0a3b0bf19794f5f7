//! The four algebras as structure-constant tables, their Cartan data and reference root formulas.
//!
//! Root formulas are linear forms in the Cartan parameters: `a` for f4r, and
//! `(τ₁, τ₂, τ₃, ν, r)` with `τ₁ + τ₂ + τ₃ = 0` for the others (e6r uses only `τ`, e7r no `r`).

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::e8::e8_data;
use crate::error::{Error, Result};
use crate::exact::GaussRat;
use crate::f4e6::{e6_bracket, f4_bracket, E6Elem, F4Elem, E6_NAMES};
use crate::freudenthal::{e7_names, e7_structure};
use crate::lie::LieAlgebraData;
use crate::roots::CartanDatum;

/// The algebras the crate constructs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algebra {
    F4r,
    E6r,
    E7r,
    E8r,
}

impl Algebra {
    pub const ALL: [Algebra; 4] = [Algebra::F4r, Algebra::E6r, Algebra::E7r, Algebra::E8r];

    pub fn name(self) -> &'static str {
        match self {
            Algebra::F4r => "f4r",
            Algebra::E6r => "e6r",
            Algebra::E7r => "e7r",
            Algebra::E8r => "e8r",
        }
    }

    pub fn dim(self) -> usize {
        match self {
            Algebra::F4r => 3,
            Algebra::E6r => 8,
            Algebra::E7r => 21,
            Algebra::E8r => 52,
        }
    }

    pub fn rank(self) -> usize {
        match self {
            Algebra::F4r => 1,
            Algebra::E6r => 2,
            Algebra::E7r => 3,
            Algebra::E8r => 4,
        }
    }

    /// Expected Dynkin type.
    pub fn dynkin_type(self) -> &'static str {
        match self {
            Algebra::F4r => "A1",
            Algebra::E6r => "A2",
            Algebra::E7r => "C3",
            Algebra::E8r => "F4",
        }
    }

    /// Structure constants, built once per process.
    pub fn data(self) -> &'static LieAlgebraData {
        static F4: OnceLock<LieAlgebraData> = OnceLock::new();
        static E6: OnceLock<LieAlgebraData> = OnceLock::new();
        static E7: OnceLock<LieAlgebraData> = OnceLock::new();
        match self {
            Algebra::F4r => F4.get_or_init(|| {
                let names = ["A1", "A2", "A3"].map(String::from).to_vec();
                LieAlgebraData::from_bracket("f4r", names, |i, j| {
                    f4_bracket(&F4Elem::basis(i), &F4Elem::basis(j)).coords()
                })
            }),
            Algebra::E6r => E6.get_or_init(|| {
                let names = E6_NAMES.map(String::from).to_vec();
                LieAlgebraData::from_bracket("e6r", names, |i, j| {
                    e6_bracket(&E6Elem::basis(i), &E6Elem::basis(j)).coords()
                })
            }),
            Algebra::E7r => E7.get_or_init(|| LieAlgebraData {
                name: "e7r".into(),
                basis: e7_names(),
                structure: e7_structure().clone(),
            }),
            Algebra::E8r => e8_data(),
        }
    }

    /// Names of the Cartan parameters.
    pub fn params(self) -> &'static [&'static str] {
        match self {
            Algebra::F4r => &["a"],
            _ => &["t1", "t2", "t3", "nu", "r"],
        }
    }

    /// Cartan generators in algebra coordinates.
    pub fn cartan_generators(self) -> Vec<Vec<GaussRat>> {
        let unit = |k: usize| {
            let mut v = vec![GaussRat::zero(); self.dim()];
            v[k] = GaussRat::one();
            v
        };
        match self {
            // Ã₁(−i), the point a = 1
            Algebra::F4r => vec![F4Elem::a(1, -&GaussRat::i()).coords()],
            // (E₁−E₂)~ and (E₂−E₃)~; then Φ(0,0,0,1); then 1̃
            Algebra::E6r => vec![unit(3), unit(4)],
            Algebra::E7r => vec![unit(3), unit(4), unit(20)],
            Algebra::E8r => vec![unit(3), unit(4), unit(20), unit(49)],
        }
    }

    /// Parameter point of each Cartan generator.
    pub fn generator_params(self) -> Vec<Vec<GaussRat>> {
        let p = |v: [i64; 5]| v.iter().map(|&x| GaussRat::from_int(x)).collect::<Vec<_>>();
        let gens = vec![
            p([1, -1, 0, 0, 0]),
            p([0, 1, -1, 0, 0]),
            p([0, 0, 0, 1, 0]),
            p([0, 0, 0, 0, 1]),
        ];
        match self {
            Algebra::F4r => vec![vec![GaussRat::one()]],
            _ => gens.into_iter().take(self.rank()).collect(),
        }
    }

    /// Default generic element coefficients: f4r `a = 2`; e6r `τ = (1,2,−3)`;
    /// e7r `τ = (1,2,−3), ν = 5`; e8r `τ = (1,5,−6), ν = 2, r = 17`.
    pub fn generic_coefficients(self) -> Vec<GaussRat> {
        let c: &[i64] = match self {
            Algebra::F4r => &[2],
            Algebra::E6r => &[1, 3],
            Algebra::E7r => &[1, 3, 5],
            Algebra::E8r => &[1, 6, 2, 17],
        };
        c.iter().map(|&x| GaussRat::from_int(x)).collect()
    }

    pub fn cartan_datum(self) -> CartanDatum {
        CartanDatum {
            generators: self.cartan_generators(),
            generic: self.generic_coefficients(),
        }
    }

    /// Values `α(Hⱼ)` of a linear form on each Cartan generator.
    pub fn evaluate(self, form: &Form) -> Vec<GaussRat> {
        self.generator_params()
            .iter()
            .map(|p| form.eval(p))
            .collect()
    }

    /// Value of a form at the generic element.
    pub fn evaluate_generic(self, form: &Form) -> GaussRat {
        let vals = self.evaluate(form);
        crate::exact::dot(&vals, &self.generic_coefficients())
    }

    /// Reference root list.
    pub fn reference_roots(self) -> Vec<Form> {
        let mut out = Vec::new();
        let mut pm = |f: Form| {
            out.push(f.neg());
            out.push(f);
        };
        if self == Algebra::F4r {
            pm(Form::new(&[(1, 2)]));
            return out;
        }
        // ½(τⱼ − τₖ) for the cyclic pairs
        for (j, k) in [(1, 2), (2, 0), (0, 1)] {
            let mut c = [0; 5];
            c[j] = 3;
            c[k] = -3;
            pm(Form::sixths(c));
        }
        if self == Algebra::E6r {
            return out;
        }
        for i in 0..3 {
            let with = |ti: i64, nu: i64, r: i64| {
                let mut c = [0, 0, 0, nu, r];
                c[i] = ti;
                Form::sixths(c)
            };
            pm(with(6, 4, 0));
            pm(with(3, -4, 0));
            if self == Algebra::E8r {
                pm(with(6, -2, 6));
                pm(with(-3, -2, 6));
                pm(with(3, 2, 6));
                pm(with(-6, 2, 6));
            }
        }
        if self == Algebra::E8r {
            pm(Form::sixths([0, 0, 0, 6, 6]));
            pm(Form::sixths([0, 0, 0, -6, 6]));
            pm(Form::sixths([0, 0, 0, 0, 12]));
        }
        out
    }

    /// Reference fundamental system.
    pub fn reference_simple(self) -> Vec<Form> {
        match self {
            Algebra::F4r => vec![Form::new(&[(1, 2)])],
            Algebra::E6r => vec![
                Form::sixths([0, 3, -3, 0, 0]),
                Form::sixths([-3, 0, 3, 0, 0]),
            ],
            Algebra::E7r => vec![
                Form::sixths([-3, 0, 3, 0, 0]),
                Form::sixths([0, 0, -3, 4, 0]),
                Form::sixths([0, -6, 0, -4, 0]),
            ],
            Algebra::E8r => vec![
                Form::sixths([-6, 0, 0, 2, 6]),
                Form::sixths([0, 0, 0, 0, -12]),
                Form::sixths([0, -3, 0, -2, 6]),
                Form::sixths([0, 0, -3, 4, 0]),
            ],
        }
    }

    /// Reference inner products `((i, j), (αᵢ, αⱼ))`.
    pub fn reference_simple_inner(self) -> Vec<((usize, usize), GaussRat)> {
        let v: &[(usize, usize, i64, i64)] = match self {
            Algebra::F4r => &[],
            Algebra::E6r => &[(0, 0, 1, 3), (0, 1, -1, 6)],
            Algebra::E7r => &[
                (0, 0, 1, 8),
                (0, 1, -1, 16),
                (0, 2, 0, 1),
                (1, 1, 1, 8),
                (1, 2, -1, 8),
                (2, 2, 1, 4),
            ],
            Algebra::E8r => &[
                (0, 0, 1, 9),
                (0, 1, -1, 18),
                (0, 2, 0, 1),
                (0, 3, 0, 1),
                (1, 1, 1, 9),
                (1, 2, -1, 18),
                (1, 3, 0, 1),
                (2, 2, 1, 18),
                (2, 3, -1, 36),
                (3, 3, 1, 18),
            ],
        };
        v.iter()
            .map(|&(i, j, n, d)| ((i, j), GaussRat::frac(n, d)))
            .collect()
    }

    /// Reference coroots `(simple-root index, algebra coordinates)`.
    pub fn reference_coroots(self) -> Vec<(usize, Vec<GaussRat>)> {
        let at = |entries: &[(usize, i64, i64)]| {
            let mut v = vec![GaussRat::zero(); self.dim()];
            for &(k, n, d) in entries {
                v[k] = GaussRat::frac(n, d);
            }
            v
        };
        match self {
            Algebra::F4r => vec![],
            Algebra::E6r => vec![(0, at(&[(4, 1, 3)]))],
            Algebra::E7r => vec![
                (0, at(&[(3, -1, 8), (4, -1, 8)])),
                (1, at(&[(3, 1, 24), (4, 2, 24), (20, 3, 24)])),
                (2, at(&[(3, 2, 24), (4, -2, 24), (20, -3, 24)])),
            ],
            Algebra::E8r => vec![(1, at(&[(49, -2, 36)]))],
        }
    }

    /// Listed expansions of non-simple positive roots in the reference fundamental system.
    pub fn reference_expansions(self) -> Vec<(Form, Vec<i64>)> {
        let s = Form::sixths;
        match self {
            Algebra::F4r => vec![],
            Algebra::E6r => vec![(s([-3, 3, 0, 0, 0]), vec![1, 1])],
            Algebra::E7r => vec![
                (s([0, -3, 3, 0, 0]), vec![1, 1, 1]),
                (s([3, -3, 0, 0, 0]), vec![0, 1, 1]),
                (s([6, 0, 0, 4, 0]), vec![0, 2, 1]),
                (s([0, 0, 6, 4, 0]), vec![2, 2, 1]),
                (s([-3, 0, 0, 4, 0]), vec![1, 1, 0]),
                (s([0, -3, 0, 4, 0]), vec![1, 2, 1]),
            ],
            Algebra::E8r => vec![
                (s([0, -3, 3, 0, 0]), vec![1, 2, 3, 1]),
                (s([-3, 0, 3, 0, 0]), vec![1, 1, 1, 0]),
                (s([3, -3, 0, 0, 0]), vec![0, 1, 2, 1]),
                (s([6, 0, 0, 4, 0]), vec![0, 1, 2, 2]),
                (s([0, -6, 0, -4, 0]), vec![0, 1, 2, 0]),
                (s([0, 0, 6, 4, 0]), vec![2, 3, 4, 2]),
                (s([-3, 0, 0, 4, 0]), vec![1, 1, 1, 1]),
                (s([0, -3, 0, 4, 0]), vec![1, 2, 3, 2]),
                (s([-6, 0, 0, 2, -6]), vec![1, 1, 0, 0]),
                (s([0, -6, 0, 2, -6]), vec![1, 3, 4, 2]),
                (s([0, 0, 6, -2, 6]), vec![1, 1, 2, 0]),
                (s([3, 0, 0, 2, -6]), vec![0, 1, 1, 1]),
                (s([0, 0, 3, 2, -6]), vec![1, 2, 2, 1]),
                (s([3, 0, 0, 2, 6]), vec![0, 0, 1, 1]),
                (s([0, -3, 0, -2, -6]), vec![0, 1, 1, 0]),
                (s([0, 0, 3, 2, 6]), vec![1, 1, 2, 1]),
                (s([0, -6, 0, 2, 6]), vec![1, 2, 4, 2]),
                (s([0, 0, 6, -2, -6]), vec![1, 2, 2, 0]),
                (s([0, 0, 0, 6, 6]), vec![1, 1, 2, 2]),
                (s([0, 0, 0, 6, -6]), vec![1, 2, 2, 2]),
            ],
        }
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algebra {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Algebra::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::UnknownAlgebra(s.to_string()))
    }
}

/// A linear form in the Cartan parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Form(pub Vec<GaussRat>);

impl Form {
    pub fn new(coeffs: &[(i64, i64)]) -> Self {
        Form(coeffs.iter().map(|&(n, d)| GaussRat::frac(n, d)).collect())
    }

    /// Coefficients of `(τ₁, τ₂, τ₃, ν, r)` given in sixths.
    pub fn sixths(c: [i64; 5]) -> Self {
        Form(c.iter().map(|&x| GaussRat::frac(x, 6)).collect())
    }

    pub fn neg(&self) -> Form {
        Form(self.0.iter().map(|x| -x).collect())
    }

    pub fn eval(&self, point: &[GaussRat]) -> GaussRat {
        crate::exact::dot(&self.0, point)
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: &[&str] = if self.0.len() == 1 {
            &["a"]
        } else {
            &["t1", "t2", "t3", "nu", "r"]
        };
        let terms: Vec<String> = self
            .0
            .iter()
            .zip(names)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, n)| format!("({c}){n}"))
            .collect();
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Mat;
    use crate::roots::{
        cartan_matrix, classify_dynkin, decompose, positive_definite, root_vectors_consistent,
    };

    fn check(alg: Algebra, roots: usize) {
        let rs = decompose(alg.data(), &alg.cartan_datum()).unwrap();
        assert_eq!(rs.roots.len(), roots);
        assert_eq!(rs.rank + rs.roots.len(), alg.dim());
        let mut expect: Vec<Vec<GaussRat>> = alg
            .reference_roots()
            .iter()
            .map(|f| alg.evaluate(f))
            .collect();
        let mut got: Vec<Vec<GaussRat>> = rs.roots.iter().map(|r| r.values.clone()).collect();
        expect.sort_by(|a, b| crate::roots::lex_cmp(a, b));
        got.sort_by(|a, b| crate::roots::lex_cmp(a, b));
        assert_eq!(got, expect);
        let simple = rs.simple_roots().unwrap();
        assert_eq!(simple.len(), alg.rank());
        let gram = rs.gram(&simple).unwrap();
        assert!(positive_definite(&gram));
        let d = classify_dynkin(&cartan_matrix(&gram).unwrap()).unwrap();
        assert_eq!(d.label, alg.dynkin_type());
        assert!(root_vectors_consistent(alg.data(), &rs));

        let refs: Vec<Vec<GaussRat>> = alg
            .reference_simple()
            .iter()
            .map(|f| alg.evaluate(f))
            .collect();
        let g = rs.gram(&refs).unwrap();
        for ((i, j), v) in alg.reference_simple_inner() {
            assert_eq!(g[(i, j)], v, "{alg}: ({i}, {j})");
        }
        for (k, coords) in alg.reference_coroots() {
            let x = rs.coroot(&refs[k]).unwrap();
            let gens = Mat::from_cols(&alg.cartan_generators()).unwrap();
            assert_eq!(gens.mul_vec(&x), coords);
        }
    }

    #[test]
    fn f4r_roots() {
        check(Algebra::F4r, 2);
        let rs = decompose(Algebra::F4r.data(), &Algebra::F4r.cartan_datum()).unwrap();
        let generic: Vec<GaussRat> = rs
            .roots
            .iter()
            .map(|r| &r.values[0] * &GaussRat::from_int(2))
            .collect();
        assert_eq!(generic, vec![GaussRat::from_int(1), GaussRat::from_int(-1)]);
    }

    #[test]
    fn e6r_roots() {
        check(Algebra::E6r, 6);
    }

    #[test]
    fn e7r_roots() {
        check(Algebra::E7r, 18);
    }

    #[test]
    fn reference_roots_are_distinct_at_generic_point() {
        for alg in Algebra::ALL {
            let v: Vec<GaussRat> = alg
                .reference_roots()
                .iter()
                .map(|f| alg.evaluate_generic(f))
                .collect();
            for (i, a) in v.iter().enumerate() {
                assert!(!a.is_zero());
                assert!(
                    v[i + 1..].iter().all(|b| b != a),
                    "{alg}: repeated root value {a}"
                );
            }
        }
    }

    #[test]
    fn names_parse() {
        for alg in Algebra::ALL {
            assert_eq!(alg.name().parse::<Algebra>().unwrap(), alg);
        }
        assert!("bogus".parse::<Algebra>().is_err());
    }
}
