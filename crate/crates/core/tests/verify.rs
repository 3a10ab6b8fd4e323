mod common;

use cohom_core::report::Report;
use cohom_core::verify::{random_quadratic, run, Suite, SuiteConfig};
use cohom_core::{Rat, RatFunc};
use common::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn small_cfg() -> SuiteConfig<RatFunc> {
    let mut cfg = SuiteConfig::new(plane_q());
    cfg.samples = 2;
    cfg
}

#[test]
fn suite_names_round_trip() {
    for s in Suite::LAWS.into_iter().chain([Suite::All]) {
        assert_eq!(s.name().parse::<Suite>().unwrap(), s);
    }
    assert!("theorem3".parse::<Suite>().is_err());
}

#[test]
fn theorem1_passes_and_is_deterministic() {
    let cfg = small_cfg();
    let a = run(Suite::Theorem1, &cfg);
    assert!(a.passed(), "{}", a.render());
    let b = run(Suite::Theorem1, &cfg);
    let names = |r: &Report| r.checks.iter().map(|c| (c.name.clone(), c.passed, c.detail.clone())).collect::<Vec<_>>();
    assert_eq!(names(&a), names(&b));
}

#[test]
fn corollary_suites_pass() {
    let cfg = small_cfg();
    for s in [Suite::Corollary1, Suite::Corollary2, Suite::Prop3] {
        let r = run(s, &cfg);
        assert!(r.passed(), "{}", r.render());
        assert!(!r.checks.is_empty());
    }
}

#[test]
fn report_json_round_trip() {
    let r = run(Suite::Prop3, &small_cfg());
    let json = serde_json::to_string(&r).unwrap();
    let back: Report = serde_json::from_str(&json).unwrap();
    assert_eq!(back.render(), r.render());
}

#[test]
fn failing_checks_render_as_fail() {
    let mut r = Report::new("x");
    r.pass("good", (1, 4), "");
    r.fail("bad", (2, 2), Some("w".into()), "broken");
    assert!(!r.passed());
    assert_eq!(r.failures().count(), 1);
    let text = r.render();
    assert!(text.contains("PASS good") && text.contains("FAIL bad"));
}

#[test]
fn random_quadratic_is_seeded() {
    let mut r1 = ChaCha8Rng::seed_from_u64(7);
    let mut r2 = ChaCha8Rng::seed_from_u64(7);
    let a = random_quadratic::<Rat>(2, D, &mut r1).unwrap();
    let b = random_quadratic::<Rat>(2, D, &mut r2).unwrap();
    assert!(a.same_filtration(&b).unwrap());
    assert_eq!(a.cutoff(), D);
}
