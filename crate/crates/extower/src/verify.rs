//! Verification suites: named exact checks grouped by algebra, with a serializable report.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::algebras::Algebra;
use crate::e8::{inner8, killing8, w_conditions, r_cross_r, E8Elem, E8_DIM};
use crate::error::Error;
use crate::exact::{independent, GaussRat, Mat};
use crate::f4e6::{
    cayley, e6_killing, f4_bracket, f4_killing, f4c_group_map, f4cstar, f6cstar, skew_from_d,
    sl3_basis, E6Elem, F4Elem,
};
use crate::freudenthal::{exp_nilpotent, E7Elem, FreudElem, E7_DIM};
use crate::jordan::{JordanElem, JordanOp};
use crate::lie::LieAlgebraData;
use crate::quaternion::{f7cstar, g_map, qmat_mul, qmat_sub, sp3_real_basis, su3_cc_basis};
use crate::realform::{e6_compact_form, e7_compact_form};
use crate::roots::{
    cartan_matrix, classify_dynkin, decompose, lex_cmp, positive_definite, root_vectors_consistent,
    RootSystem,
};

/// Seed for every randomized check, so reports are reproducible.
pub const SEED: u64 = 0x5eed_e8f4;

/// Number of random basis triples in the default e8 Jacobi check.
pub const E8_JACOBI_SAMPLES: usize = 2000;

/// A named group of checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    All,
    F4,
    E6,
    E7,
    E8,
    Roots,
    Maps,
}

impl Suite {
    pub const NAMES: [&'static str; 7] = ["all", "f4", "e6", "e7", "e8", "roots", "maps"];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::F4 => "f4",
            Suite::E6 => "e6",
            Suite::E7 => "e7",
            Suite::E8 => "e8",
            Suite::Roots => "roots",
            Suite::Maps => "maps",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let all = [
            Suite::All,
            Suite::F4,
            Suite::E6,
            Suite::E7,
            Suite::E8,
            Suite::Roots,
            Suite::Maps,
        ];
        all.into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

/// Run-time switches.
#[derive(Clone, Copy, Debug, Default)]
pub struct Options {
    /// Run the exhaustive e8 Jacobi sweep instead of the random sample.
    pub deep: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Outcome of one check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub id: String,
    /// The mathematical statement being checked.
    pub claim: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Totals {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub checks: Vec<CheckResult>,
    pub totals: Totals,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.totals.failed == 0
    }

    pub fn find(&self, id: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.id == id)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
            };
            writeln!(f, "{tag}  {:<36} {}", c.id, c.claim)?;
            if let Some(w) = &c.witness {
                writeln!(f, "      witness: {w}")?;
            }
        }
        write!(
            f,
            "suite {}: {} checks, {} passed, {} failed",
            self.suite, self.totals.total, self.totals.passed, self.totals.failed
        )
    }
}

type Outcome = Result<(), String>;
type CheckFn = fn(&Options) -> Outcome;

struct Check {
    suite: Suite,
    id: String,
    claim: String,
    run: Box<dyn Fn(&Options) -> Outcome + Send + Sync>,
}

fn check(suite: Suite, id: &str, claim: &str, run: CheckFn) -> Check {
    Check {
        suite,
        id: id.into(),
        claim: claim.into(),
        run: Box::new(run),
    }
}

fn ensure(cond: bool, witness: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(witness())
    }
}

/// Every registered check in report order.
fn registry() -> Vec<Check> {
    let mut v = vec![
        check(
            Suite::F4,
            "f4_dimension",
            "the 3 operators Ãᵢ(1) on J are linearly independent",
            f4_dimension,
        ),
        check(
            Suite::F4,
            "f4_lie_algebra",
            "antisymmetry and Jacobi on all basis triples of f4r",
            |_| lie_axioms(Algebra::F4r.data()),
        ),
        check(
            Suite::F4,
            "f4_bracket_rule",
            "[Ãᵢ(a), Ãᵢ₊₁(b)] = −½Ãᵢ₊₂(ab) equals the operator commutator",
            f4_bracket_rule,
        ),
        check(
            Suite::F4,
            "killing_f4_constants",
            "B₄ = ¼(,)₄ = ⅕tr on all basis pairs; B₄(Ã₁(1),Ã₁(1)) = −1/2, tr = −5/2",
            killing_f4,
        ),
        check(
            Suite::F4,
            "f4_derivations",
            "each Ãᵢ(1) is a derivation of the Jordan product",
            f4_derivations,
        ),
        check(
            Suite::F4,
            "jordan_cross_det",
            "X∘(X×X) = det(X)E on 100 random X",
            jordan_cross_det,
        ),
        check(
            Suite::E6,
            "e6_dimension",
            "the 8 e6 operators on J are linearly independent",
            e6_dimension,
        ),
        check(
            Suite::E6,
            "e6_lie_algebra",
            "antisymmetry and Jacobi on all basis triples of e6r",
            |_| lie_axioms(Algebra::E6r.data()),
        ),
        check(
            Suite::E6,
            "killing_e6_constants",
            "B₆ = (3/2)(,)₆ = (6/5)tr on all basis pairs; B₆(Ẽ₁−Ẽ₂,Ẽ₁−Ẽ₂) = 3, tr = 5/2",
            killing_e6,
        ),
        check(
            Suite::E6,
            "e6_bracket_sample",
            "[(E₁−E₂)~, Ã₁(1)] = −½F̃₁(1)",
            e6_bracket_sample,
        ),
        check(
            Suite::E6,
            "e6_compact_real_form",
            "the τλ-fixed real subspace has dimension 8 and contains f₆,C∗(su(3))",
            |_| compact_form(e6_compact_form(), 8),
        ),
        check(
            Suite::E7,
            "e7_dimension",
            "the 21 e7 operators on 𝔓 are linearly independent",
            e7_dimension,
        ),
        check(
            Suite::E7,
            "e7_lie_algebra",
            "antisymmetry and Jacobi on all basis triples of e7r",
            |_| lie_axioms(Algebra::E7r.data()),
        ),
        check(
            Suite::E7,
            "killing_e7_constants",
            "B₇ = −2(,)₇ = (8/5)tr on all basis pairs; (Φ₀,Φ₀)₇ = −8/3, B₇ = 16/3, tr = 10/3",
            killing_e7,
        ),
        check(
            Suite::E7,
            "e7_orbit_formula",
            "exp Φ(0,0,B,0) maps 1̇ to (B×B, B, 1, ⅓(B×B,B)) and fixes 1̥, for 20 random B",
            e7_orbit_formula,
        ),
        check(
            Suite::E7,
            "e7_tau_lambda",
            "τλ is a conjugate-linear involutive automorphism of e7r",
            e7_tau_lambda,
        ),
        check(
            Suite::E7,
            "e7_compact_real_form",
            "the τλ-fixed real subspace has dimension 21 and contains f₇,C∗(sp(3))",
            |_| compact_form(e7_compact_form(), 21),
        ),
        check(
            Suite::E8,
            "e8_dimension",
            "the 52 operators ad(eᵢ) are linearly independent",
            e8_dimension,
        ),
        check(
            Suite::E8,
            "e8_antisymmetry",
            "[eᵢ, eⱼ] = −[eⱼ, eᵢ] on all basis pairs of e8r",
            |_| {
                ensure(
                    Algebra::E8r.data().antisymmetry_violation().is_none(),
                    || "antisymmetry fails".into(),
                )
            },
        ),
        check(
            Suite::E8,
            "e8_jacobi",
            "Jacobi on 2,000 random basis triples (all 140,608 with --deep)",
            e8_jacobi,
        ),
        check(
            Suite::E8,
            "killing_e8_constants",
            "B₈ = −(9/2)(,)₈ on all basis pairs; (1̃,1̃)₈ = −8, B₈(1̃,1̃) = 36",
            killing_e8,
        ),
        check(
            Suite::E8,
            "e8_inner_ad_invariance",
            "([H,X],Y)₈ + (X,[H,Y])₈ = 0 for the 4 Cartan generators H and all basis X, Y",
            e8_inner_invariance,
        ),
        check(
            Suite::E8,
            "e8_w_membership",
            "1₋ satisfies all 13 conditions and R×R annihilates every probe; 1̃ fails condition 6",
            e8_w_membership,
        ),
        check(
            Suite::Maps,
            "f4cstar_homomorphism",
            "f₄,C∗ preserves brackets on all 3² basis pairs of so(3) and is injective",
            f4cstar_hom,
        ),
        check(
            Suite::Maps,
            "f6cstar_homomorphism",
            "f₆,C∗ preserves brackets on all 8² basis pairs of sl(3) and is injective",
            f6cstar_hom,
        ),
        check(
            Suite::Maps,
            "f7cstar_homomorphism",
            "f₇,C∗ preserves brackets on all 21² basis pairs of sp(3) and is injective",
            f7cstar_hom,
        ),
        check(
            Suite::Maps,
            "g_homomorphism",
            "g preserves brackets on all 8² basis pairs of su(3)",
            g_hom,
        ),
        check(
            Suite::Maps,
            "f4c_cayley_multiplicative",
            "f₄,C(AB) = f₄,C(A)f₄,C(B) on 20 random pairs of Cayley transforms",
            f4c_multiplicative,
        ),
    ];
    for alg in Algebra::ALL {
        v.extend(root_checks(alg));
    }
    v
}

fn root_checks(alg: Algebra) -> Vec<Check> {
    let mk =
        |id: String, claim: String, run: Box<dyn Fn(&Options) -> Outcome + Send + Sync>| Check {
            suite: Suite::Roots,
            id,
            claim,
            run,
        };
    let n = alg.dim() - alg.rank();
    let ty = alg.dynkin_type();
    let mut v = vec![
        mk(
            format!("{alg}_root_count"),
            format!("{n} roots, rank {} + {n} = dim {}", alg.rank(), alg.dim()),
            Box::new(move |_| {
                let rs = root_system(alg)?;
                ensure(
                    rs.roots.len() == n && rs.rank + rs.roots.len() == alg.dim(),
                    || format!("{} roots", rs.roots.len()),
                )
            }),
        ),
        mk(
            format!("{alg}_roots_match_reference"),
            "the computed roots equal the closed-form root list as a multiset".into(),
            Box::new(move |_| roots_match(alg)),
        ),
        mk(
            format!("{alg}_dynkin_is_{ty}"),
            format!("simple roots give a positive-definite integral Cartan matrix of type {ty}"),
            Box::new(move |_| dynkin(alg)),
        ),
        mk(
            format!("{alg}_reference_fundamental_system"),
            "every root is an integral, single-signed combination of the reference simple roots"
                .into(),
            Box::new(move |_| reference_fundamental(alg)),
        ),
        mk(
            format!("{alg}_root_vectors"),
            "[v_α, v_β] spans v_{α+β} when α+β is a root and vanishes otherwise".into(),
            Box::new(move |_| {
                let rs = root_system(alg)?;
                ensure(root_vectors_consistent(alg.data(), rs), || {
                    "inconsistent root vectors".into()
                })
            }),
        ),
    ];
    if alg != Algebra::F4r {
        v.push(mk(
            format!("{alg}_simple_inner_products"),
            "reference simple roots have the stated Killing inner products and coroots".into(),
            Box::new(move |_| simple_inner(alg)),
        ));
    }
    v
}

/// Run a suite. Checks run concurrently on native targets; report order is registry order.
pub fn run(suite: Suite, opts: &Options) -> VerificationReport {
    let checks: Vec<Check> = registry()
        .into_iter()
        .filter(|c| suite == Suite::All || c.suite == suite)
        .collect();
    let outcomes = execute(&checks, opts);
    let results: Vec<CheckResult> = checks
        .into_iter()
        .zip(outcomes)
        .map(|(c, o)| CheckResult {
            id: c.id,
            claim: c.claim,
            status: if o.is_ok() {
                Status::Pass
            } else {
                Status::Fail
            },
            witness: o.err(),
        })
        .collect();
    let passed = results.iter().filter(|c| c.status == Status::Pass).count();
    VerificationReport {
        suite: suite.name().into(),
        totals: Totals {
            total: results.len(),
            passed,
            failed: results.len() - passed,
        },
        checks: results,
    }
}

#[cfg(not(target_arch = "wasm32"))]
fn execute(checks: &[Check], opts: &Options) -> Vec<Outcome> {
    std::thread::scope(|s| {
        let handles: Vec<_> = checks
            .iter()
            .map(|c| {
                std::thread::Builder::new()
                    .stack_size(64 << 20)
                    .spawn_scoped(s, move || (c.run)(opts))
                    .expect("spawn check thread")
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().unwrap_or_else(|_| Err("check panicked".into())))
            .collect()
    })
}

/// No threads on wasm32; checks run in order.
#[cfg(target_arch = "wasm32")]
fn execute(checks: &[Check], opts: &Options) -> Vec<Outcome> {
    checks.iter().map(|c| (c.run)(opts)).collect()
}

/// Ids of the checks a suite runs, in report order.
pub fn check_ids(suite: Suite) -> Vec<String> {
    registry()
        .into_iter()
        .filter(|c| suite == Suite::All || c.suite == suite)
        .map(|c| c.id)
        .collect()
}

// ---------- helpers ----------

fn g(n: i64) -> GaussRat {
    GaussRat::from_int(n)
}

/// A small random element of Q(i).
pub fn random_scalar(rng: &mut StdRng) -> GaussRat {
    let re = GaussRat::frac(rng.gen_range(-4..=4), rng.gen_range(1..=3));
    let im = GaussRat::frac(rng.gen_range(-4..=4), rng.gen_range(1..=3));
    &re + &(&im * &GaussRat::i())
}

pub fn random_jordan(rng: &mut StdRng) -> JordanElem {
    let c: Vec<GaussRat> = (0..6).map(|_| random_scalar(rng)).collect();
    JordanElem::from_coords(&c)
}

fn cached_root_system(alg: Algebra) -> &'static Result<RootSystem, String> {
    static CACHE: [OnceLock<Result<RootSystem, String>>; 4] = [
        OnceLock::new(),
        OnceLock::new(),
        OnceLock::new(),
        OnceLock::new(),
    ];
    let idx = Algebra::ALL.iter().position(|a| *a == alg).expect("listed");
    CACHE[idx].get_or_init(|| decompose(alg.data(), &alg.cartan_datum()).map_err(|e| e.to_string()))
}

/// Root system of `alg` at its default Cartan datum, computed once.
pub fn root_system(alg: Algebra) -> Result<&'static RootSystem, String> {
    cached_root_system(alg).as_ref().map_err(Clone::clone)
}

fn lie_axioms(d: &LieAlgebraData) -> Outcome {
    if let Some((i, j)) = d.antisymmetry_violation() {
        return Err(format!(
            "antisymmetry fails on ({}, {})",
            d.basis[i], d.basis[j]
        ));
    }
    match d.jacobi_violation() {
        Some((i, j, k)) => Err(format!(
            "Jacobi fails on ({}, {}, {})",
            d.basis[i], d.basis[j], d.basis[k]
        )),
        None => Ok(()),
    }
}

fn flat(ops: impl Iterator<Item = Mat>) -> Vec<Vec<GaussRat>> {
    ops.map(|m| m.entries().to_vec()).collect()
}

// ---------- f4 ----------

fn f4_dimension(_: &Options) -> Outcome {
    let ops = flat((0..3).map(|k| F4Elem::basis(k).operator().0));
    ensure(independent(&ops), || "dependent operators".into())
}

fn f4_bracket_rule(_: &Options) -> Outcome {
    for i in 0..3 {
        for j in 0..3 {
            let (x, y) = (F4Elem::basis(i), F4Elem::basis(j));
            if f4_bracket(&x, &y).operator() != x.operator().commutator(&y.operator()) {
                return Err(format!("pair ({i}, {j})"));
            }
        }
    }
    let (a1, a2, a3) = (F4Elem::basis(0), F4Elem::basis(1), F4Elem::basis(2));
    ensure(
        f4_bracket(&a1, &a2) == a3.scale(&GaussRat::frac(-1, 2)),
        || "[Ã₁, Ã₂]".into(),
    )
}

fn killing_f4(_: &Options) -> Outcome {
    for i in 0..3 {
        for j in 0..3 {
            f4_killing(&F4Elem::basis(i), &F4Elem::basis(j))
                .map_err(|e| format!("({i}, {j}): {e}"))?;
        }
    }
    let a1 = F4Elem::basis(0);
    let b = f4_killing(&a1, &a1).map_err(|e| e.to_string())?;
    let tr = a1.operator().compose(&a1.operator()).trace();
    ensure(
        b == GaussRat::frac(-1, 2) && tr == GaussRat::frac(-5, 2),
        || format!("B₄ = {b}, tr = {tr}"),
    )
}

fn f4_derivations(_: &Options) -> Outcome {
    (0..3).try_for_each(|k| {
        ensure(F4Elem::basis(k).operator().is_derivation(), || {
            format!("Ã{}(1)", k + 1)
        })
    })
}

fn jordan_cross_det(_: &Options) -> Outcome {
    let mut rng = StdRng::seed_from_u64(SEED);
    for _ in 0..100 {
        let x = random_jordan(&mut rng);
        let lhs = x.jordan_mul(&x.cross(&x));
        let rhs = JordanElem::unit().scale(&x.det());
        if lhs != rhs {
            return Err(format!(
                "X = {:?}",
                x.coords()
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
            ));
        }
    }
    Ok(())
}

// ---------- e6 ----------

fn e6_dimension(_: &Options) -> Outcome {
    let ops = flat((0..8).map(|k| E6Elem::basis(k).operator().0));
    ensure(independent(&ops), || "dependent operators".into())
}

fn killing_e6(_: &Options) -> Outcome {
    for i in 0..8 {
        for j in 0..8 {
            e6_killing(&E6Elem::basis(i), &E6Elem::basis(j))
                .map_err(|e| format!("({i}, {j}): {e}"))?;
        }
    }
    let t = E6Elem::from_t(JordanElem::e(1).sub(&JordanElem::e(2))).map_err(|e| e.to_string())?;
    let b = e6_killing(&t, &t).map_err(|e| e.to_string())?;
    let tr = t.operator().compose(&t.operator()).trace();
    ensure(b == g(3) && tr == GaussRat::frac(5, 2), || {
        format!("B₆ = {b}, tr = {tr}")
    })
}

fn e6_bracket_sample(_: &Options) -> Outcome {
    let t = E6Elem::basis(3);
    let a = E6Elem::basis(0);
    let got = crate::f4e6::e6_bracket(&t, &a);
    let want = E6Elem::basis(5).scale(&GaussRat::frac(-1, 2));
    ensure(got == want, || {
        format!(
            "got {:?}",
            got.coords()
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
        )
    })
}

fn compact_form((dim, fixed, span): (usize, bool, usize), want: usize) -> Outcome {
    ensure(dim == want && fixed && span == want, || {
        format!("fixed dim {dim}, images fixed {fixed}, image span {span}")
    })
}

// ---------- e7 ----------

fn e7_dimension(_: &Options) -> Outcome {
    let ops = flat((0..E7_DIM).map(|k| E7Elem::basis(k).operator()));
    ensure(independent(&ops), || "dependent operators".into())
}

fn killing_e7(_: &Options) -> Outcome {
    let ads: Vec<Mat> = (0..E7_DIM)
        .map(|k| crate::freudenthal::e7_ad(&E7Elem::basis(k)))
        .collect();
    let ops: Vec<Mat> = (0..E7_DIM).map(|k| E7Elem::basis(k).operator()).collect();
    for i in 0..E7_DIM {
        for j in 0..E7_DIM {
            let by_ad = ads[i].mul(&ads[j]).trace();
            let by_form =
                &crate::freudenthal::e7_inner(&E7Elem::basis(i), &E7Elem::basis(j)) * &g(-2);
            let by_tr = &ops[i].mul(&ops[j]).trace() * &GaussRat::frac(8, 5);
            if by_ad != by_form || by_ad != by_tr {
                return Err(format!(
                    "({i}, {j}): ad {by_ad}, form {by_form}, trace {by_tr}"
                ));
            }
        }
    }
    let p0 = E7Elem::phi0();
    let form = crate::freudenthal::e7_inner(&p0, &p0);
    let b = crate::freudenthal::e7_killing(&p0, &p0).map_err(|e| e.to_string())?;
    let tr = p0.operator().mul(&p0.operator()).trace();
    ensure(
        form == GaussRat::frac(-8, 3) && b == GaussRat::frac(16, 3) && tr == GaussRat::frac(10, 3),
        || format!("(Φ₀,Φ₀)₇ = {form}, B₇ = {b}, tr = {tr}"),
    )
}

fn e7_orbit_formula(_: &Options) -> Outcome {
    let mut rng = StdRng::seed_from_u64(SEED ^ 7);
    for _ in 0..20 {
        let b = random_jordan(&mut rng);
        let f = E7Elem::new(E6Elem::zero(), JordanElem::zero(), b.clone(), g(0));
        let ex = exp_nilpotent(&f).map_err(|e| e.to_string())?;
        let img = FreudElem::from_coords(&ex.mul_vec(&FreudElem::one_dot().coords()));
        let bb = b.cross(&b);
        let want = FreudElem::new(
            bb.clone(),
            b.clone(),
            g(1),
            &bb.inner(&b) * &GaussRat::frac(1, 3),
        );
        let under = FreudElem::from_coords(&ex.mul_vec(&FreudElem::one_under().coords()));
        if img != want || under != FreudElem::one_under() {
            return Err(format!(
                "B = {:?}",
                b.coords()
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
            ));
        }
    }
    Ok(())
}

fn e7_tau_lambda(_: &Options) -> Outcome {
    let basis: Vec<E7Elem> = (0..E7_DIM).map(E7Elem::basis).collect();
    let images: Vec<E7Elem> = basis.iter().map(E7Elem::tau_lambda).collect();
    for (k, (x, y)) in basis.iter().zip(&images).enumerate() {
        if y.tau_lambda() != *x {
            return Err(format!("(τλ)² ≠ 1 on basis {k}"));
        }
    }
    let d = Algebra::E7r.data();
    for i in 0..E7_DIM {
        for j in 0..E7_DIM {
            let lhs = E7Elem::from_coords(&d.bracket(&basis[i].coords(), &basis[j].coords()))
                .tau_lambda();
            let rhs = E7Elem::from_coords(&d.bracket(&images[i].coords(), &images[j].coords()));
            if lhs != rhs {
                return Err(format!("bracket not preserved on ({i}, {j})"));
            }
        }
    }
    Ok(())
}

// ---------- e8 ----------

fn e8_dimension(_: &Options) -> Outcome {
    let d = Algebra::E8r.data();
    let ads = flat((0..E8_DIM).map(|k| d.ad(&E8Elem::basis(k).coords())));
    ensure(ads.len() == 52 && independent(&ads), || {
        "dependent ad operators".into()
    })
}

fn e8_jacobi(opts: &Options) -> Outcome {
    let d = Algebra::E8r.data();
    let bad = |(i, j, k): (usize, usize, usize)| d.jacobiator(i, j, k).iter().any(|x| !x.is_zero());
    if opts.deep {
        return match d.jacobi_violation() {
            Some(t) => Err(format!("triple {t:?}")),
            None => Ok(()),
        };
    }
    let mut rng = StdRng::seed_from_u64(SEED ^ 8);
    for _ in 0..E8_JACOBI_SAMPLES {
        let t = (
            rng.gen_range(0..E8_DIM),
            rng.gen_range(0..E8_DIM),
            rng.gen_range(0..E8_DIM),
        );
        if bad(t) {
            return Err(format!("triple {t:?}"));
        }
    }
    Ok(())
}

fn killing_e8(_: &Options) -> Outcome {
    let d = Algebra::E8r.data();
    let gram = d.killing_gram();
    let basis: Vec<E8Elem> = (0..E8_DIM).map(E8Elem::basis).collect();
    for i in 0..E8_DIM {
        for j in 0..E8_DIM {
            let form = killing8(&basis[i], &basis[j]);
            if gram[(i, j)] != form {
                return Err(format!(
                    "({}, {}): ad {} vs form {form}",
                    d.basis[i],
                    d.basis[j],
                    gram[(i, j)]
                ));
            }
        }
    }
    let one = E8Elem::one_tilde();
    let (f, b) = (inner8(&one, &one), killing8(&one, &one));
    ensure(f == g(-8) && b == g(36), || {
        format!("(1̃,1̃)₈ = {f}, B₈ = {b}")
    })
}

fn e8_inner_invariance(_: &Options) -> Outcome {
    let d = Algebra::E8r.data();
    let basis: Vec<E8Elem> = (0..E8_DIM).map(E8Elem::basis).collect();
    for h in Algebra::E8r.cartan_generators() {
        let ad = d.ad(&h);
        let images: Vec<E8Elem> = (0..E8_DIM)
            .map(|k| E8Elem::from_coords(&ad.col(k)))
            .collect();
        for i in 0..E8_DIM {
            for j in 0..E8_DIM {
                let s = &inner8(&images[i], &basis[j]) + &inner8(&basis[i], &images[j]);
                if !s.is_zero() {
                    return Err(format!("({}, {})", d.basis[i], d.basis[j]));
                }
            }
        }
    }
    Ok(())
}

fn e8_w_membership(_: &Options) -> Outcome {
    let one = E8Elem::one_lower();
    let c = w_conditions(&one);
    if let Some(k) = c.iter().position(|b| !b) {
        return Err(format!("1₋ fails condition {}", k + 1));
    }
    if let Some(k) = (0..E8_DIM).find(|&k| !r_cross_r(&one, &E8Elem::basis(k)).is_zero()) {
        return Err(format!("(1₋×1₋) does not annihilate probe {k}"));
    }
    ensure(!w_conditions(&E8Elem::one_tilde())[5], || {
        "1̃ passes condition 6".into()
    })
}

// ---------- maps ----------

fn so3_basis() -> Vec<Mat> {
    (0..3)
        .map(|k| {
            let mut d: [GaussRat; 3] = std::array::from_fn(|_| GaussRat::zero());
            d[k] = GaussRat::one();
            skew_from_d(&d)
        })
        .collect()
}

fn hom_check<S, T: PartialEq>(
    basis: &[S],
    map: impl Fn(&S) -> Result<T, Error>,
    src_bracket: impl Fn(&S, &S) -> S,
    dst_bracket: impl Fn(&T, &T) -> T,
    coords: impl Fn(&T) -> Vec<GaussRat>,
) -> Outcome {
    let images: Vec<T> = basis
        .iter()
        .map(&map)
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    for i in 0..basis.len() {
        for j in 0..basis.len() {
            let lhs = map(&src_bracket(&basis[i], &basis[j])).map_err(|e| e.to_string())?;
            if lhs != dst_bracket(&images[i], &images[j]) {
                return Err(format!("bracket not preserved on basis pair ({i}, {j})"));
            }
        }
    }
    let flat: Vec<Vec<GaussRat>> = images.iter().map(coords).collect();
    ensure(independent(&flat), || {
        "images are linearly dependent".into()
    })
}

fn f4cstar_hom(_: &Options) -> Outcome {
    hom_check(
        &so3_basis(),
        f4cstar,
        |a, b| a.commutator(b),
        f4_bracket,
        F4Elem::coords,
    )
}

fn f6cstar_hom(_: &Options) -> Outcome {
    hom_check(
        &sl3_basis(),
        f6cstar,
        |a, b| a.commutator(b),
        crate::f4e6::e6_bracket,
        E6Elem::coords,
    )
}

fn f7cstar_hom(_: &Options) -> Outcome {
    let d = Algebra::E7r.data();
    hom_check(
        &sp3_real_basis(),
        f7cstar,
        |a, b| a.bracket(b),
        |x: &E7Elem, y: &E7Elem| E7Elem::from_coords(&d.bracket(&x.coords(), &y.coords())),
        E7Elem::coords,
    )
}

fn g_hom(_: &Options) -> Outcome {
    let basis = su3_cc_basis();
    hom_check(
        &basis,
        g_map,
        |a, b| qmat_sub(&qmat_mul(a, b), &qmat_mul(b, a)),
        |x: &Mat, y: &Mat| x.commutator(y),
        |m: &Mat| m.entries().to_vec(),
    )
}

fn f4c_multiplicative(_: &Options) -> Outcome {
    let mut rng = StdRng::seed_from_u64(SEED ^ 4);
    let random_orthogonal = |rng: &mut StdRng| loop {
        let d: [GaussRat; 3] = std::array::from_fn(|_| random_scalar(rng));
        if let Ok(a) = cayley(&skew_from_d(&d)) {
            return a;
        }
    };
    for _ in 0..20 {
        let a = random_orthogonal(&mut rng);
        let b = random_orthogonal(&mut rng);
        let fa = f4c_group_map(&a).map_err(|e| e.to_string())?;
        let fb = f4c_group_map(&b).map_err(|e| e.to_string())?;
        let fab: JordanOp = f4c_group_map(&a.mul(&b)).map_err(|e| e.to_string())?;
        if fab != fa.compose(&fb) {
            return Err("f₄,C(AB) ≠ f₄,C(A)f₄,C(B)".into());
        }
    }
    Ok(())
}

// ---------- roots ----------

fn roots_match(alg: Algebra) -> Outcome {
    let rs = root_system(alg)?;
    let mut got: Vec<_> = rs.roots.iter().map(|r| r.values.clone()).collect();
    let mut want: Vec<_> = alg
        .reference_roots()
        .iter()
        .map(|f| alg.evaluate(f))
        .collect();
    got.sort_by(|a, b| lex_cmp(a, b));
    want.sort_by(|a, b| lex_cmp(a, b));
    ensure(got == want, || {
        format!(
            "{} computed vs {} reference roots differ",
            got.len(),
            want.len()
        )
    })
}

/// Cartan matrix and type label of the engine's own simple roots.
pub fn dynkin_of(alg: Algebra) -> Result<(Vec<Vec<i64>>, crate::roots::DynkinDiagram), String> {
    let rs = root_system(alg)?;
    let simple = rs.simple_roots().map_err(|e| e.to_string())?;
    let gram = rs.gram(&simple).map_err(|e| e.to_string())?;
    if !positive_definite(&gram) {
        return Err("simple-root Gram matrix is not positive definite".into());
    }
    let a = cartan_matrix(&gram).map_err(|e| e.to_string())?;
    let d = classify_dynkin(&a).map_err(|e| e.to_string())?;
    Ok((a, d))
}

fn dynkin(alg: Algebra) -> Outcome {
    let (_, d) = dynkin_of(alg)?;
    ensure(d.label == alg.dynkin_type(), || format!("type {}", d.label))
}

fn reference_fundamental(alg: Algebra) -> Outcome {
    let rs = root_system(alg)?;
    let basis: Vec<Vec<GaussRat>> = alg
        .reference_simple()
        .iter()
        .map(|f| alg.evaluate(f))
        .collect();
    let zero = GaussRat::zero();
    for r in &rs.roots {
        let c = rs.expand(&basis, &r.values).map_err(|e| e.to_string())?;
        let integral = c.iter().all(|x| x.is_real() && x.re.is_integer());
        let nonneg = c.iter().all(|x| x.re >= zero.re);
        let nonpos = c.iter().all(|x| x.re <= zero.re);
        if !(integral && (nonneg || nonpos)) {
            return Err(format!(
                "root {:?}",
                c.iter().map(ToString::to_string).collect::<Vec<_>>()
            ));
        }
    }
    for (form, coeffs) in alg.reference_expansions() {
        let mut sum = vec![GaussRat::zero(); alg.rank()];
        for (c, b) in coeffs.iter().zip(&basis) {
            for (s, x) in sum.iter_mut().zip(b) {
                *s += &g(*c) * x;
            }
        }
        if alg.evaluate(&form) != sum {
            return Err(format!("{form} ≠ {coeffs:?}"));
        }
    }
    Ok(())
}

fn simple_inner(alg: Algebra) -> Outcome {
    let rs = root_system(alg)?;
    let refs: Vec<Vec<GaussRat>> = alg
        .reference_simple()
        .iter()
        .map(|f| alg.evaluate(f))
        .collect();
    let gram = rs.gram(&refs).map_err(|e| e.to_string())?;
    for ((i, j), v) in alg.reference_simple_inner() {
        if gram[(i, j)] != v {
            return Err(format!("(α{}, α{}) = {} ≠ {v}", i + 1, j + 1, gram[(i, j)]));
        }
    }
    let gens = Mat::from_cols(&alg.cartan_generators()).map_err(|e| e.to_string())?;
    for (k, want) in alg.reference_coroots() {
        let got = gens.mul_vec(&rs.coroot(&refs[k]).map_err(|e| e.to_string())?);
        if got != want {
            return Err(format!("coroot of α{}", k + 1));
        }
    }
    Ok(())
}
