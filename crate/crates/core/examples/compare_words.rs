// Comparing words, and the two ways of finding maximal subsequences.

use std::error::Error;

use worms::order::{compare, max_index_collection, NaiveOracle};
use worms::Word;

pub fn run() -> Result<(), Box<dyn Error>> {
    let pairs = [("0", "1"), ("1 1 2", "2"), ("1 1", "2"), ("4", "3 3 3"), ("2 0 2", "2 0 1 0 2")];
    for (a, b) in pairs {
        let (a, b): (Word, Word) = (a.parse()?, b.parse()?);
        let naive = NaiveOracle::default().compare(&a, &b)?;
        println!("{:>10} vs {:<10} {:?} (naive: {naive:?})", a.to_string(), b.to_string(), compare(&a, &b));
    }

    let parts: Vec<Word> = ["1", "2", "1", "0"].iter().map(|s| s.parse()).collect::<Result<_, _>>()?;
    let greedy = max_index_collection(&parts)?;
    let naive = NaiveOracle::default().max_index_collection(&parts)?;
    println!("maximal subsequence of (1)(2)(1)(0): greedy {greedy}, naive {naive}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
