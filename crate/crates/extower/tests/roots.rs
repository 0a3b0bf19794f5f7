use extower::algebras::Algebra;
use extower::exact::{GaussRat, Mat};
use extower::roots::{
    cartan_matrix, classify_dynkin, decompose, lex_cmp, positive_definite, RootSystem,
};

fn combo(alg: Algebra, coeffs: &[i64]) -> Vec<GaussRat> {
    let simple = alg.reference_simple();
    let mut v = vec![GaussRat::zero(); alg.rank()];
    for (c, f) in coeffs.iter().zip(&simple) {
        for (vi, x) in v.iter_mut().zip(alg.evaluate(f)) {
            *vi += &GaussRat::from_int(*c) * &x;
        }
    }
    v
}

fn failing_expansions(alg: Algebra) -> Vec<String> {
    alg.reference_expansions()
        .iter()
        .filter(|(f, c)| alg.evaluate(f) != combo(alg, c))
        .map(|(f, c)| format!("{f} = {c:?}"))
        .collect()
}

fn reexpands_in_reference_system(alg: Algebra, rs: &RootSystem) -> bool {
    let basis: Vec<Vec<GaussRat>> = alg
        .reference_simple()
        .iter()
        .map(|f| alg.evaluate(f))
        .collect();
    rs.roots.iter().all(|r| {
        let c = rs.expand(&basis, &r.values).unwrap();
        let integral = c.iter().all(|x| x.is_real() && x.re.is_integer());
        let nonneg = c
            .iter()
            .all(|x| x.re >= num_rational::BigRational::from_integer(0.into()));
        let nonpos = c
            .iter()
            .all(|x| x.re <= num_rational::BigRational::from_integer(0.into()));
        integral && (nonneg || nonpos)
    })
}

fn full_check(alg: Algebra) {
    let rs = decompose(alg.data(), &alg.cartan_datum()).unwrap();
    assert_eq!(rs.roots.len() + rs.rank, alg.dim());
    let mut got: Vec<_> = rs.roots.iter().map(|r| r.values.clone()).collect();
    let mut want: Vec<_> = alg
        .reference_roots()
        .iter()
        .map(|f| alg.evaluate(f))
        .collect();
    got.sort_by(|a, b| lex_cmp(a, b));
    want.sort_by(|a, b| lex_cmp(a, b));
    assert_eq!(got, want, "{alg} root multiset");

    let simple = rs.simple_roots().unwrap();
    let gram = rs.gram(&simple).unwrap();
    assert!(positive_definite(&gram));
    assert_eq!(
        classify_dynkin(&cartan_matrix(&gram).unwrap())
            .unwrap()
            .label,
        alg.dynkin_type()
    );

    let refs: Vec<Vec<GaussRat>> = alg
        .reference_simple()
        .iter()
        .map(|f| alg.evaluate(f))
        .collect();
    let rg = rs.gram(&refs).unwrap();
    for ((i, j), v) in alg.reference_simple_inner() {
        assert_eq!(rg[(i, j)], v, "{alg} ({i},{j})");
    }
    assert_eq!(
        classify_dynkin(&cartan_matrix(&rg).unwrap()).unwrap().label,
        alg.dynkin_type()
    );
    let gens = Mat::from_cols(&alg.cartan_generators()).unwrap();
    for (k, coords) in alg.reference_coroots() {
        assert_eq!(
            gens.mul_vec(&rs.coroot(&refs[k]).unwrap()),
            coords,
            "{alg} coroot {k}"
        );
    }
    assert!(
        reexpands_in_reference_system(alg, &rs),
        "{alg} reference system is not fundamental"
    );
}

#[test]
fn f4r_e6r_e7r_match_reference() {
    for alg in [Algebra::F4r, Algebra::E6r, Algebra::E7r] {
        full_check(alg);
        assert_eq!(failing_expansions(alg), Vec::<String>::new());
    }
}

#[test]
fn e8r_matches_reference() {
    full_check(Algebra::E8r);
    assert_eq!(failing_expansions(Algebra::E8r), Vec::<String>::new());
}

#[test]
fn expansions_cover_the_positive_roots() {
    for alg in [Algebra::E6r, Algebra::E7r, Algebra::E8r] {
        let roots: Vec<Vec<GaussRat>> = alg
            .reference_roots()
            .iter()
            .map(|f| alg.evaluate(f))
            .collect();
        let mut listed: Vec<Vec<GaussRat>> = alg
            .reference_simple()
            .iter()
            .map(|f| alg.evaluate(f))
            .collect();
        listed.extend(
            alg.reference_expansions()
                .iter()
                .map(|(f, _)| alg.evaluate(f)),
        );
        assert_eq!(listed.len(), roots.len() / 2, "{alg}");
        for (i, v) in listed.iter().enumerate() {
            assert!(roots.contains(v), "{alg}: listed form {i} is not a root");
            assert!(
                !listed[i + 1..].contains(v),
                "{alg}: listed form {i} repeats"
            );
        }
    }
}

#[test]
fn generic_point_with_repeated_value_is_rejected() {
    let alg = Algebra::E6r;
    let mut c = alg.cartan_datum();
    // τ = (1, 1, −2) makes ½(τ₁ − τ₂) vanish
    c.generic = vec![GaussRat::from_int(1), GaussRat::from_int(2)];
    assert!(decompose(alg.data(), &c).is_err());
}
