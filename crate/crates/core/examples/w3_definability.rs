// Words over 0..3 are exactly the words below the one-letter word 4. The
// word 4 is closed under ◇3, while no non-empty word over 0..3 is.

use std::error::Error;

use worms::gadget::{w3_by_comparison, w3_gate, W3Verdict};
use worms::NormalWord;

pub fn run() -> Result<(), Box<dyn Error>> {
    for text in ["e", "3", "3 3", "3 2 3", "4", "4 0", "5"] {
        let x = NormalWord::new(text.parse()?)?;
        let below = w3_by_comparison(&x);
        let gate = w3_gate(&x, 4, 5);
        let verdict = match &gate {
            W3Verdict::Holds => "closed under ◇3".to_string(),
            W3Verdict::Refuted { witness: None } => "empty".to_string(),
            W3Verdict::Refuted { witness: Some(y) } => format!("◇3({y}) is not below it"),
        };
        println!("{:>6}  over 0..3: {:<5}  below 4: {below:<5}  {verdict}", x.to_string(), x.in_w(3));
        if below != x.in_w(3) || (below && gate == W3Verdict::Holds) {
            return Err(format!("{x}: characterization fails").into());
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
