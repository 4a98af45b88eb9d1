// Running the invariant suites from code.

use std::error::Error;

use worms::selftest;

pub fn run() -> Result<(), Box<dyn Error>> {
    let reports = selftest::run(2, 4);
    for r in &reports {
        match &r.failure {
            None => println!("ok   {:<28} {:>9} cases", r.suite, r.cases),
            Some(f) => println!("FAIL {:<28} {} at {}", r.suite, f.invariant, f.counterexample),
        }
    }
    if reports.iter().all(|r| r.passed()) {
        Ok(())
    } else {
        Err("self-test failed".into())
    }
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
