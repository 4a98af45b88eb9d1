// Normal words and the ordinals they denote.

use std::error::Error;

use worms::correspondence::{o_map, word_of};
use worms::normal::enumerate_normal;
use worms::Ordinal;

pub fn run() -> Result<(), Box<dyn Error>> {
    let mut words = enumerate_normal(2, 3);
    words.sort_by(|a, b| a.compare(b));
    for a in &words {
        println!("{:>8}  ->  {}", a.to_string(), o_map(a, 0)?);
    }

    for text in ["w+2", "w^(w*2)", "w^(w^(2))+w"] {
        let alpha: Ordinal = text.parse()?;
        for base in 0..=1 {
            println!("word_of({alpha}, {base}) = {}", word_of(&alpha, base));
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
