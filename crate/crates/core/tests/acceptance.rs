//! Acceptance gate: one line per criterion, non-zero exit if any fails.

use std::process::ExitCode;
use std::time::Instant;

use worms::ordinal::Ordinal;
use worms::selftest::{self, Failure, Outcome, WordDomain};

const SEED: u64 = 20_261_016;

struct Gate {
    failed: usize,
}

impl Gate {
    fn check(&mut self, id: u32, title: &str, budget_secs: Option<f64>, f: impl FnOnce() -> Outcome) {
        let start = Instant::now();
        let outcome = f();
        let secs = start.elapsed().as_secs_f64();
        let over = budget_secs.is_some_and(|b| secs > b);
        let budget = budget_secs.map_or(String::new(), |b| format!(", budget {b:.0}s"));
        match outcome {
            Ok(cases) if !over => {
                println!("PASS [{id:>2}] {title} ({cases} cases, {secs:.1}s{budget})");
            }
            Ok(cases) => {
                self.failed += 1;
                println!("FAIL [{id:>2}] {title}: over budget ({cases} cases, {secs:.1}s{budget})");
            }
            Err(f) => {
                self.failed += 1;
                println!("FAIL [{id:>2}] {title}: {} violated at {}", f.invariant, f.counterexample);
            }
        }
    }
}

fn all(parts: impl IntoIterator<Item = Outcome>) -> Outcome {
    parts.into_iter().try_fold(0, |acc, o| Ok(acc + o?))
}

fn expect_len(what: &'static str, got: usize, want: usize) -> Outcome {
    if got == want {
        Ok(0)
    } else {
        Err(Failure { invariant: what, counterexample: format!("{got} instead of {want}") })
    }
}

fn main() -> ExitCode {
    let mut gate = Gate { failed: 0 };
    let mut small: Option<WordDomain> = None;
    let mut large: Option<WordDomain> = None;

    gate.check(1, "preorder laws on {0..3}, length <= 5; 10^6 random triples", Some(60.0), || {
        let d = small.insert(WordDomain::new(3, 5));
        all([
            expect_len("domain size", d.words().len(), 1365),
            selftest::preorder_laws(d),
            selftest::transitivity_sampled(d, 1_000_000, SEED),
        ])
    });

    gate.check(2, "greedy and exhaustive comparators agree on {0..3}, length <= 6", Some(120.0), || {
        let d = large.insert(WordDomain::new(3, 6));
        selftest::oracle_agreement(d)
    });

    gate.check(3, "concatenated collections, 10^5 random pairs over {0..3}", None, || {
        selftest::concat_agreement(3, 6, 100_000, SEED)
    });

    let small = small.expect("built by the first check");
    gate.check(4, "congruence and monotonicity on {0..3}, length <= 5, k <= 4", None, || {
        all([selftest::congruence(&small, 4), selftest::monotonicity(3, 5)])
    });

    let large = large.expect("built by the second check");
    gate.check(5, "normal forms on {0..3}, length <= 6", None, || selftest::normal_form_laws(&large));
    drop(large);

    gate.check(6, "isomorphism onto ordinals, {0..2} length <= 7; round trips", None, || {
        all([selftest::isomorphism(2, 7), selftest::ordinal_round_trip(6, 3)])
    });

    gate.check(7, "multiset model on normal {0..3} words, length <= 6", None, || {
        selftest::multiset_model(3, 6)
    });

    gate.check(8, "psi bridge on {1..3}, length <= 6; psi as second R-successor", None, || {
        all([selftest::psi_bridge(3, 6), selftest::psi_second_successor(4, 10)])
    });

    let limits = selftest::limits_below_omega_omega_squared(4, 4);
    let segment = selftest::below_omega_cubed(3);
    gate.check(9, "fundamental sequences below w^(w^2); R closure on 0..w^(2)*3", None, || {
        all([
            expect_len("segment size", segment.len(), 20),
            selftest::fundamental_sequences(&limits, 5),
            selftest::r_closure(&segment),
        ])
    });

    gate.check(10, "slices, K and L words, u-sequences, biorder round trip", Some(180.0), || {
        all([
            selftest::slice_characterization(6),
            selftest::k_and_l_words(6, 5),
            selftest::u_sequence_identity(4, 4),
            selftest::biorder_round_trip(4, 5, 20, SEED),
        ])
    });

    gate.check(11, "definability of words over {0..3}", None, || {
        selftest::w3_definability(5, 5, 5, (4, 6))
    });

    let sample: Vec<Ordinal> = limits.iter().chain(&segment).cloned().collect();
    gate.check(12, "omega-tail of towers and of ordinals below w^w", None, || {
        selftest::omega_tail_laws(&[3, 4, 5], &sample)
    });

    if gate.failed == 0 {
        println!("acceptance: all criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {} criteria failed", gate.failed);
        ExitCode::FAILURE
    }
}
