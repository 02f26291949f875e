use super::*;
use crate::arith::{Polynomial, Rational};
use crate::matrix::{build_matrix, determinant, ShiftSpec};

fn d(s: i64, t: i64, n: i64) -> RationalFunction {
    determinant(&build_matrix(&ShiftSpec::new(s, t, n as usize))).unwrap()
}

fn b(s: i64, t: i64, n: i64) -> RationalFunction {
    determinant(&build_matrix(&ShiftSpec::binomial_only(s, t, n as usize))).unwrap()
}

fn quot(a: RationalFunction, b: RationalFunction) -> RationalFunction {
    a.checked_div(&b).unwrap()
}

fn eval(f: Formula, p: Params) -> RationalFunction {
    evaluate(&FormulaId::new(f, p)).unwrap_or_else(|e| panic!("{f}({p}): {e}"))
}

#[test]
fn registry_names_round_trip() {
    for e in registry() {
        assert_eq!(e.name.parse::<Formula>().unwrap(), e.formula);
        assert_eq!(e.formula.name(), e.name);
    }
    assert!(matches!("nope".parse::<Formula>(), Err(Error::UnknownFormula(_))));
}

#[test]
fn spec_examples() {
    assert_eq!(eval(Formula::Kt, Params::new().n(1)), RationalFunction::from(Polynomial::mu_plus(2)));
    let r = eval(Formula::R00Odd, Params::new().n(1));
    assert_eq!(r, RationalFunction::from(Polynomial::mu_plus(3).scale(&rat(1, 2))));
    assert!(eval(Formula::Fam0, Params::new().s(1).t(-1).n(3)).is_zero());
    assert_eq!(eval(Formula::Aprime, Params::new().r(3).n(2)), RationalFunction::one());
    assert_eq!(eval(Formula::Bindet, Params::new().s(0).t(1).n(1)), RationalFunction::from(Polynomial::mu_plus(-1)));
    assert_eq!(eval(Formula::PropD00, Params::new().n(1)), RationalFunction::int(2));
    for n in 1..=5 {
        assert_eq!(
            eval(Formula::FamAEven, Params::new().r(0).n(n)),
            eval(Formula::R00Even, Params::new().n(n))
        );
    }
}

#[test]
fn range_violations() {
    let bad = [
        FormulaId::new(Formula::Kt, Params::new().n(0)),
        FormulaId::new(Formula::FamELeft, Params::new().r(2).n(1)),
        FormulaId::new(Formula::Bindet, Params::new().s(0).t(-1).n(2)),
        FormulaId::new(Formula::Dst2DtsFactor, Params::new().s(2).t(1).n(2)),
        FormulaId::new(Formula::Fam0, Params::new().s(0).t(0).n(2)),
        FormulaId::new(Formula::FamB, Params::new().r(0).n(1)),
        FormulaId::new(Formula::Kt, Params::new()),
    ];
    for id in bad {
        assert!(matches!(evaluate(&id), Err(Error::ParameterRange { .. })), "{id}");
    }
    let wrong_kind = FormulaId::new(Formula::PropD00, Params::new().n(2));
    assert!(ratio_formula(&wrong_kind).is_err());
    assert!(det_formula(&wrong_kind).is_ok());
}

#[test]
fn kt_forms_agree_with_quotients() {
    for n in 1..=5 {
        let q = quot(d(1, 1, 2 * n), d(1, 1, 2 * n - 1));
        for f in [Formula::Kt, Formula::KtSign, Formula::KtFloor] {
            assert_eq!(eval(f, Params::new().n(n)), q, "{f} n={n}");
        }
    }
}

#[test]
fn three_corner_quotients() {
    for n in 1..=4 {
        let p = Params::new().n(n);
        assert_eq!(eval(Formula::R00Odd, p), quot(d(0, 0, 2 * n), d(0, 0, 2 * n - 1)));
        assert_eq!(eval(Formula::R00Even, p), quot(d(0, 0, 2 * n + 1), d(0, 0, 2 * n)));
        assert_eq!(eval(Formula::R20, p), quot(d(2, 0, 2 * n), d(2, 0, 2 * n - 1)));
        assert_eq!(eval(Formula::R02, p), quot(d(0, 2, 2 * n), d(0, 2, 2 * n - 1)));
        assert_eq!(eval(Formula::R10, p), quot(d(1, 0, 2 * n + 1), d(1, 0, 2 * n - 1)));
        assert_eq!(eval(Formula::R01, p), quot(d(0, 1, 2 * n + 1), d(0, 1, 2 * n - 1)));
        assert_eq!(eval(Formula::Dm11, p), quot(d(-1, 1, 2 * n + 1), d(-1, 1, 2 * n)));
    }
}

#[test]
fn products_match_determinants() {
    for n in 1..=7 {
        let p = Params::new().n(n);
        assert_eq!(eval(Formula::PropD00, p), d(0, 0, n), "d00 n={n}");
        assert_eq!(eval(Formula::PropD10, p), d(1, 0, n), "d10 n={n}");
        assert_eq!(eval(Formula::PropD01, p), d(0, 1, n), "d01 n={n}");
    }
}

#[test]
fn telescoping_d00() {
    for n in 1..=8 {
        let ratio = quot(eval(Formula::PropD00, Params::new().n(n + 1)), eval(Formula::PropD00, Params::new().n(n)));
        let (f, k) = if n % 2 == 0 { (Formula::R00Even, n / 2) } else { (Formula::R00Odd, (n + 1) / 2) };
        assert_eq!(ratio, eval(f, Params::new().n(k)), "n={n}");
    }
}

#[test]
fn binomial_only_products() {
    for s in -1..=3 {
        for t in 0..=3 {
            for n in 1..=4 {
                assert_eq!(eval(Formula::Bindet, Params::new().s(s).t(t).n(n)), b(s, t, n), "s={s} t={t} n={n}");
            }
        }
    }
}

#[test]
fn families_a_and_b() {
    for r in 0..=2 {
        for n in 1..=2 * r + 5 {
            assert_eq!(eval(Formula::FamADet, Params::new().r(r).n(n)), d(2 * r, 0, n), "A r={r} n={n}");
        }
    }
    for r in 1..=2 {
        for n in 1..=2 * r + 4 {
            assert_eq!(eval(Formula::FamBDet, Params::new().r(r).n(n)), d(2 * r - 1, 0, n), "B r={r} n={n}");
        }
    }
}

#[test]
fn conjectured_families() {
    for r in 1..=2 {
        for n in 1..=4 {
            assert_eq!(eval(Formula::FamCDet, Params::new().r(r).n(n)), d(2 * r, 1, 2 * n), "C r={r} n={n}");
        }
    }
    for r in 0..=2 {
        for n in 1..=4 {
            assert_eq!(eval(Formula::FamDDet, Params::new().r(r).n(n)), d(-1, 2 * r, 2 * n), "D r={r} n={n}");
        }
    }
}

#[test]
fn families_e_and_f() {
    for r in 1..=2 {
        for n in r..=r + 2 {
            let p = Params::new().r(r).n(n);
            assert_eq!(eval(Formula::FamELeft, p), quot(d(2 * r - 1, 1, 2 * n), d(2 * r - 1, 1, 2 * n - 1)));
            assert_eq!(eval(Formula::FamERight, p), quot(d(1, 2 * r - 1, 2 * n), d(1, 2 * r - 1, 2 * n - 1)));
            assert_eq!(eval(Formula::FamF, p), quot(d(-1, 2 * r - 1, 2 * n + 1), d(-1, 2 * r - 1, 2 * n)));
        }
    }
}

#[test]
fn aprime_and_switch() {
    for r in 0..=3 {
        for n in 1..=5 {
            assert_eq!(eval(Formula::Aprime, Params::new().r(r).n(n)), d(-r, -r, n));
        }
    }
    for s in 0..=2 {
        for t in s..=3 {
            for n in 1..=4 {
                let f = eval(Formula::Dst2DtsFactor, Params::new().s(s).t(t).n(n));
                assert_eq!(d(s, t, n), &f * &d(t, s, n));
            }
        }
    }
}

#[test]
fn d11_sums_match_determinant() {
    for n in 1..=7 {
        let want = d(1, 1, n);
        assert_eq!(eval(Formula::D11Sum, Params::new().n(n)), want, "sum n={n}");
        assert_eq!(eval(Formula::D11Cf1, Params::new().n(n)), want, "cf1 n={n}");
    }
}

#[test]
fn split_product_identity() {
    for n in 1..=8 {
        let c = eval(Formula::FactorC, Params::new().n(n));
        let f = eval(Formula::FactorF, Params::new().n(n));
        let q = eval(Formula::Sec5Quotient, Params::new().n(n));
        assert_eq!(&(&c * &f) * &q, d(1, 1, n), "n={n}");
    }
}

#[test]
fn no_poles_at_integer_mu() {
    let ids = [
        FormulaId::new(Formula::FamC, Params::new().r(1).n(2)),
        FormulaId::new(Formula::FamD, Params::new().r(2).n(3)),
        FormulaId::new(Formula::R02, Params::new().n(3)),
        FormulaId::new(Formula::KtSign, Params::new().n(4)),
    ];
    for id in ids {
        let f = evaluate(&id).unwrap();
        for mu in 2..=12 {
            assert!(f.eval(&Rational::from_integer(mu.into())).is_ok(), "{id} at {mu}");
        }
    }
}
