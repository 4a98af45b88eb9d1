// Normal forms and the diamond operators.

use std::error::Error;

use worms::normal::{enumerate_normal, normalize};
use worms::{NormalWord, Word};

pub fn run() -> Result<(), Box<dyn Error>> {
    for text in ["0 1", "1 1 2", "2 0 1 0 2", "3 2 1 3 2 3"] {
        let w: Word = text.parse()?;
        println!("nf({w}) = {}", normalize(&w));
    }

    let a = NormalWord::new("3 2 1 3 2".parse()?)?;
    for n in 0..=3 {
        println!("◇{n}({a}) = {}", a.diamond(n));
    }

    for len in 0..=6 {
        println!("normal words over 0..3 of length <= {len}: {}", enumerate_normal(3, len).len());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
