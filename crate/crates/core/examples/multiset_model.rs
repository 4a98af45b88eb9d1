// Reading normal words as finite multisets of ordinals.

use std::error::Error;

use worms::correspondence::{ms_compare, ms_diamond0, ms_diamond1, ms_diamond2, word_to_multiset};
use worms::NormalWord;

pub fn run() -> Result<(), Box<dyn Error>> {
    let words = ["1 0 1", "2 0 1", "0", "3 1 0 2 0 2"];
    for text in words {
        let a = NormalWord::new(text.parse()?)?;
        let m = word_to_multiset(&a);
        println!("{:>12}  ->  {m}", a.to_string());
        println!("    ◇0 {} / {}", word_to_multiset(&a.diamond(0)), ms_diamond0(&m));
        println!("    ◇1 {} / {}", word_to_multiset(&a.diamond(1)), ms_diamond1(&m));
        println!("    ◇2 {} / {}", word_to_multiset(&a.diamond(2)), ms_diamond2(&m));
    }

    let x = word_to_multiset(&NormalWord::new("1 0 1".parse()?)?);
    let y = word_to_multiset(&NormalWord::new("2".parse()?)?);
    println!("{x} vs {y}: {:?}", ms_compare(&x, &y));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
