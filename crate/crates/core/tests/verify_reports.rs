use centstab::linalg::{PrimeField, Rationals};
use centstab::report::{specht_report, stabilize_report, SpechtReport, StabilizeReport};
use centstab::verify::{case_ids, verify, Bounds, SuiteSelection, VerifyConfig, VerifyReport, SCHEMA};
use centstab::{Error, Partition, Seed};

fn small() -> VerifyConfig {
    VerifyConfig { bounds: Bounds { max_n: 3, max_k: 2, max_m: 6 }, ..Default::default() }
}

#[test]
fn every_suite_passes_at_small_bounds() {
    for suite in ["chain", "resolution", "restriction", "duality", "dimpoly"] {
        let sel: SuiteSelection = suite.parse().unwrap();
        let report = verify(sel, &Rationals, &small()).unwrap();
        assert!(report.pass, "{}", report.to_text());
        assert!(!report.cases.is_empty(), "{suite}");
        assert!(report.cases.iter().all(|c| c.case_id.starts_with(suite)));
    }
}

#[test]
fn empty_bounds_give_a_vacuous_pass() {
    let config = VerifyConfig { bounds: Bounds { max_n: 0, max_k: 3, max_m: 9 }, ..Default::default() };
    let report = verify("chain".parse().unwrap(), &Rationals, &config).unwrap();
    assert!(report.pass);
    assert!(report.cases.is_empty());
}

#[test]
fn reports_round_trip_and_are_deterministic() {
    let sel: SuiteSelection = "all".parse().unwrap();
    let a = verify(sel, &PrimeField::new(7).unwrap(), &small()).unwrap();
    let b = verify(sel, &PrimeField::new(7).unwrap(), &small()).unwrap();
    let ja = serde_json::to_string_pretty(&a).unwrap();
    assert_eq!(ja, serde_json::to_string_pretty(&b).unwrap());
    let back: VerifyReport = serde_json::from_str(&ja).unwrap();
    assert_eq!(back, a);
    assert_eq!(a.schema, SCHEMA);
    assert_eq!(a.field, "Fp:7");
    let ids: Vec<String> = a.cases.iter().map(|c| c.case_id.clone()).collect();
    assert_eq!(ids, case_ids(sel, &small()));
}

#[test]
fn filters_and_seeds_select_cases() {
    let mut config = small();
    config.filter = Some("resolution/exact/*".into());
    let report = verify("all".parse().unwrap(), &Rationals, &config).unwrap();
    assert!(!report.cases.is_empty());
    assert!(report.cases.iter().all(|c| c.case_id.starts_with("resolution/exact/")));
    assert!(report.cases.iter().all(|c| c.homology.iter().all(|&h| h == 0)));

    let mut config = small();
    config.filter = Some("dimpoly/width/*".into());
    config.seed = Some(Seed::Permutation);
    let report = verify("dimpoly".parse().unwrap(), &Rationals, &config).unwrap();
    assert!(report.cases.iter().all(|c| c.case_id.contains("/perm/")));

    config.filter = Some("[".into());
    assert!(matches!(verify("dimpoly".parse().unwrap(), &Rationals, &config), Err(Error::Parse(_))));
}

#[test]
fn semisimple_suites_refuse_small_primes() {
    let f = PrimeField::new(3).unwrap();
    assert!(matches!(verify("restriction".parse().unwrap(), &f, &small()), Err(Error::SemisimplicityViolation { .. })));
    // The chain suite works in any characteristic.
    assert!(verify("chain".parse().unwrap(), &f, &small()).unwrap().pass);
    assert!("cube".parse::<SuiteSelection>().is_err());
}

#[test]
fn specht_and_stabilize_reports() {
    let mu: Partition = "2,1".parse().unwrap();
    let r = specht_report(&mu, &Rationals);
    assert_eq!(r.rep.dim, 2);
    let json = serde_json::to_string(&r).unwrap();
    assert_eq!(serde_json::from_str::<SpechtReport>(&json).unwrap(), r);

    let s = stabilize_report(&"specht:1,1".parse().unwrap(), 2, 3, true, &Rationals).unwrap();
    assert_eq!(s.dims(), vec![1, 2, 3, 4]);
    for (k, t) in s.terms.iter().enumerate() {
        let c = t.constituents.as_ref().unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].partition, Partition::new(vec![k + 1, 1]).unwrap());
    }
    let json = serde_json::to_string(&s).unwrap();
    assert_eq!(serde_json::from_str::<StabilizeReport>(&json).unwrap(), s);

    let p = stabilize_report(&Seed::Permutation, 2, 4, true, &Rationals).unwrap();
    assert_eq!(p.dims(), vec![1, 2, 3, 4, 5]);
    let t = stabilize_report(&Seed::Trivial, 2, 4, false, &PrimeField::new(2).unwrap()).unwrap();
    assert_eq!(t.dims(), vec![1; 5]);
    assert!(stabilize_report(&Seed::Trivial, 2, 4, true, &PrimeField::new(2).unwrap()).is_err());
}
