use lacunary::binomial::FactorClass;
use lacunary::dense::{factor_bivariate, from_sparse, DensePoly2};
use lacunary::engine::{check_divides, factor};
use lacunary::gap::{compute_c, delta_rational, GapPolicy};
use lacunary::SparsePolynomial;
use num_bigint::BigUint;

fn s(t: &str) -> SparsePolynomial {
    t.parse().unwrap()
}

fn dense(t: &str) -> DensePoly2 {
    from_sparse(&s(t), 100).unwrap().poly.primitive()
}

fn run(f: &SparsePolynomial, d: usize) -> Vec<(DensePoly2, usize, FactorClass)> {
    let out = factor(f, d, &GapPolicy::default()).unwrap();
    assert!(out.untested.is_empty(), "{:?}", out.untested);
    assert_eq!(out.conflicts, 0);
    out.factors
        .into_iter()
        .map(|f| (f.poly, f.multiplicity, f.class))
        .collect()
}

#[test]
fn general_and_binomial_factors_behind_huge_gaps() {
    let f = s("(x - 2*y)*(x^3 + x*y + 2)")
        * s("x^1208925819614629174706176*y + x*y^1208925819614629174706176 + 5");
    let got = run(&f, 3);
    assert_eq!(
        got,
        vec![
            (dense("x - 2*y"), 1, FactorClass::Binomial),
            (dense("x^3 + x*y + 2"), 1, FactorClass::General),
        ]
    );
}

#[test]
fn monomial_only() {
    let out = factor(&s("x^5*y^3"), 2, &GapPolicy::default()).unwrap();
    assert_eq!(out.x_multiplicity, BigUint::from(5u32));
    assert_eq!(out.y_multiplicity, BigUint::from(3u32));
    assert!(out.factors.is_empty());
}

#[test]
fn squared_linear_factor() {
    let f = s("(x + y + 1)^2") * s("y^1000000000 + x + 1");
    assert_eq!(run(&f, 1), vec![(dense("x + y + 1"), 2, FactorClass::General)]);
}

#[test]
fn divisibility_through_pieces() {
    let f = s("x + y + 1") * s("x^1000000 + y^1000000 + 3");
    let delta = delta_rational(1, &compute_c(&f).unwrap());
    assert!(check_divides(&f, &dense("x + y + 1"), &delta, 2000).unwrap());
    assert!(!check_divides(&f, &dense("x - y"), &delta, 2000).unwrap());
    assert!(!check_divides(&f, &dense("x - y + 1"), &delta, 2000).unwrap());
    let p = s("x^2 + 3*x*y - 1");
    assert!(check_divides(&p, &dense("x^2 + 3*x*y - 1"), &BigUint::from(3u32), 2000).unwrap());
}

#[test]
fn torsion_factors_with_multiplicity() {
    let f = s("(x^5 - y^5)^2*(x + 2)") * s("x^100000000 + y^3 + 1");
    let got = run(&f, 4);
    let mut expect = vec![
        (dense("x - y"), 2, FactorClass::Cyclotomic),
        (dense("x + 2"), 1, FactorClass::Binomial),
        (dense("x^4 + x^3*y + x^2*y^2 + x*y^3 + y^4"), 2, FactorClass::Cyclotomic),
    ];
    expect.sort();
    assert_eq!(got, expect);
}

#[test]
fn zero_and_bad_degree_are_rejected() {
    assert!(factor(&SparsePolynomial::zero(), 1, &GapPolicy::default()).is_err());
    assert!(factor(&s("x + 1"), 0, &GapPolicy::default()).is_err());
}

#[test]
fn dense_limit_is_reported() {
    let policy = GapPolicy {
        dense_limit: 20,
        heuristic_delta: None,
    };
    let f = s("x + y + 1") * s("x^30 + y^29 + 3");
    let out = factor(&f, 1, &policy).unwrap();
    assert!(!out.untested.is_empty());
}

#[test]
fn heuristic_gap_finds_sound_factors() {
    let policy = GapPolicy {
        dense_limit: 2000,
        heuristic_delta: Some(BigUint::from(100u32)),
    };
    let f = s("(x + 3*y + 1)*(2*x - y + 5)") * s("x^500 + y^700 + 11");
    let out = factor(&f, 1, &policy).unwrap();
    assert!(out.heuristic);
    let polys: Vec<_> = out.factors.iter().map(|f| f.poly.clone()).collect();
    let mut expect = vec![dense("x + 3*y + 1"), dense("2*x - y + 5")];
    expect.sort();
    assert_eq!(polys, expect);
}

#[test]
fn agrees_with_dense_factorization_on_small_inputs() {
    let inputs = [
        "(x^2 + y)*(x - 3)^2*(y + 1)*x^2",
        "(x*y - 2)^2*(x + y + 1)*(x^3 - y^2)",
        "(x^2 + x*y + y^2)*(x - 7*y)*(x^4 + 3)",
        "6*x^3*y - 4*x*y^2 + 9*x^2 - 6*y",
    ];
    for t in inputs {
        let f = s(t);
        let d = 3;
        let mut expect: Vec<(DensePoly2, usize)> = factor_bivariate(&from_sparse(&f, 100).unwrap().poly)
            .unwrap()
            .factors
            .into_iter()
            .filter(|(p, _)| p.total_degree() <= d)
            .collect();
        expect.sort();
        let got: Vec<(DensePoly2, usize)> = run(&f, d).into_iter().map(|(p, e, _)| (p, e)).collect();
        assert_eq!(got, expect, "{t}");
    }
}
